"""The compiled kernel and the pure-Python fallback must be drop-ins."""

import pytest

from picount import backend

try:
    compiled = backend.kernel_by_name("c")
except ImportError:
    compiled = None

pure = backend.kernel_by_name("python")

needs_compiled = pytest.mark.skipif(compiled is None,
                                    reason="compiled extension not built")

SAMPLE_N = list(range(120)) + [144, 400, 1000, 1600]

# the pure-Python set walk carries real set objects; keep its n small
SAMPLE_N_SETS = list(range(120)) + [144, 400]


@needs_compiled
@pytest.mark.parametrize("func", ["pruned_literal", "pruned_collapse"])
def test_kernels_identical(func):
    for n in SAMPLE_N:
        assert getattr(compiled, func)(n) == getattr(pure, func)(n), (func, n)


@needs_compiled
def test_set_model_kernels_identical():
    for n in SAMPLE_N_SETS:
        assert compiled.set_model_ie(n) == pure.set_model_ie(n), n


@needs_compiled
def test_naive_kernels_identical():
    for n in SAMPLE_N:
        if n >= 676:
            continue  # 2^25+ tuples: exhaustive walk too slow in pure Python
        assert compiled.naive_full(n) == pure.naive_full(n), n


@needs_compiled
def test_compiled_naive_refuses_lcm_overflow_range():
    # isqrt(1849) = 43: subset lcms may not fit in 64 bits
    with pytest.raises(OverflowError):
        compiled.naive_full(1849)


def test_backend_name_is_reported():
    assert backend.backend_name() in ("c", "python")
    with pytest.raises(ValueError):
        backend.kernel_by_name("fortran")
