# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels (hot inner loops).

Mirrors picount._pykernel exactly; see that module for the contracts.
All quantities fit in signed 64-bit: n is capped at 2^62 upstream and the
lcm guard divides before it multiplies.
"""

from libc.stdlib cimport free, malloc

cdef extern from "math.h":
    double sqrt(double) nogil


cdef struct Stats:
    long long visited
    long long nonzero
    long long pruned
    long long max_lcm


cdef inline long long c_gcd(long long a, long long b) noexcept nogil:
    cdef long long t
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef inline long long c_isqrt(long long n) noexcept nogil:
    cdef long long r = <long long> sqrt(<double> n)
    while r > 0 and r * r > n:
        r -= 1
    while (r + 1) * (r + 1) <= n:
        r += 1
    return r


cdef long long _literal_walk(long long n, long long r, long long lcm,
                             long long start, long long sign,
                             long long *ndivc, long long *csq_less,
                             Stats *st) noexcept nogil:
    cdef long long acc = 0, c, q, child, value
    for c in range(start, r + 1):
        q = lcm // c_gcd(c, lcm % c)
        if q > ndivc[c]:         # child lcm would exceed n: prune subtree
            st.pruned += 1
            continue
        child = q * c
        value = n // child - csq_less[c] // child
        st.visited += 1
        if value:
            st.nonzero += 1
        if child > st.max_lcm:
            st.max_lcm = child
        acc += sign * value
        acc += _literal_walk(n, r, child, c + 1, -sign, ndivc, csq_less, st)
    return acc


cdef _make_tables(long long n, long long r, long long **ndivc, long long **csq_less):
    cdef long long c
    ndivc[0] = <long long *> malloc((r + 2) * sizeof(long long))
    csq_less[0] = <long long *> malloc((r + 2) * sizeof(long long))
    if ndivc[0] == NULL or csq_less[0] == NULL:
        raise MemoryError()
    for c in range(2, r + 1):
        ndivc[0][c] = n // c
        csq_less[0][c] = c * c - 1


def pruned_literal(long long n):
    cdef Stats st
    st.visited = st.nonzero = st.pruned = st.max_lcm = 0
    cdef long long acc = 0
    cdef long long r = c_isqrt(n)
    cdef long long *ndivc = NULL
    cdef long long *csq_less = NULL
    if r < 2:
        return 0, 0, 0, 0, 0
    try:
        _make_tables(n, r, &ndivc, &csq_less)
        with nogil:
            acc = _literal_walk(n, r, 1, 2, -1, ndivc, csq_less, &st)
    finally:
        free(ndivc)
        free(csq_less)
    return acc, st.visited, st.nonzero, st.pruned, st.max_lcm


cdef long long _collapse_walk(long long n, long long r, long long lcm,
                              long long start, long long sign,
                              long long *ndivc, long long *csq_less,
                              Stats *st) noexcept nogil:
    cdef long long acc = 0, c, g, q, child, value
    for c in range(start, r + 1):
        g = c_gcd(c, lcm % c)
        if g == c:               # c divides lcm: the rest cancels in pairs
            value = n // lcm - csq_less[c] // lcm
            st.visited += 1
            if value:
                st.nonzero += 1
            return acc + sign * value
        q = lcm // g
        if q > ndivc[c]:
            st.pruned += 1
            continue
        child = q * c
        value = n // child - csq_less[c] // child
        st.visited += 1
        if value:
            st.nonzero += 1
        if child > st.max_lcm:
            st.max_lcm = child
        acc += sign * value
        acc += _collapse_walk(n, r, child, c + 1, -sign, ndivc, csq_less, st)
    return acc


def pruned_collapse(long long n):
    cdef Stats st
    st.visited = st.nonzero = st.pruned = st.max_lcm = 0
    cdef long long acc = 0
    cdef long long r = c_isqrt(n)
    cdef long long *ndivc = NULL
    cdef long long *csq_less = NULL
    if r < 2:
        return 0, 0, 0, 0, 0
    try:
        _make_tables(n, r, &ndivc, &csq_less)
        with nogil:
            acc = _collapse_walk(n, r, 1, 2, -1, ndivc, csq_less, &st)
    finally:
        free(ndivc)
        free(csq_less)
    return acc, st.visited, st.nonzero, st.pruned, st.max_lcm


cdef long long _naive_walk(long long n, long long r, long long lcm,
                           long long start, long long sign,
                           Stats *st) noexcept nogil:
    cdef long long acc = 0, c, child, value
    for c in range(start, r + 1):
        child = lcm // c_gcd(lcm, c) * c
        value = n // child - (c * c - 1) // child
        st.visited += 1
        if value:
            st.nonzero += 1
        if child <= n and child > st.max_lcm:
            st.max_lcm = child
        acc += sign * value
        acc += _naive_walk(n, r, child, c + 1, -sign, st)
    return acc


def naive_full(long long n):
    cdef long long r = c_isqrt(n)
    if r > 42:
        # lcm of a subset of [2..r] can pass 2^63 beyond this; the pure
        # Python kernel (arbitrary precision) handles such calls.
        raise OverflowError("naive kernel limited to isqrt(n) <= 42")
    cdef Stats st
    st.visited = st.nonzero = st.pruned = st.max_lcm = 0
    cdef long long acc
    with nogil:
        acc = _naive_walk(n, r, 1, 2, -1, &st)
    return acc, st.visited, st.nonzero, st.pruned, st.max_lcm


# --- set-model inclusion-exclusion over explicit column arrays ----------

cdef long long _bsearch(long long *arr, long long length, long long x) noexcept nogil:
    cdef long long lo = 0, hi = length - 1, mid
    while lo <= hi:
        mid = (lo + hi) >> 1
        if arr[mid] == x:
            return 1
        if arr[mid] < x:
            lo = mid + 1
        else:
            hi = mid - 1
    return 0


cdef long long _ie_walk(long long n, long long r, long long lcm,
                        long long *cur, long long cur_len,
                        long long start, long long sign,
                        long long **cols, long long *col_len,
                        long long **bufs, int depth, int max_depth,
                        long long *visited) noexcept nogil:
    cdef long long acc = 0, c, q, k, m, x
    cdef long long *child_buf
    cdef long long child_len
    for c in range(start, r + 1):
        q = lcm // c_gcd(lcm, c)
        if q > n // c:
            continue
        if depth >= max_depth:
            return acc  # unreachable: depth bounded by divisor counts
        # literal intersection: members of cur also present in column c
        child_buf = bufs[depth]
        child_len = 0
        if cur == NULL:
            for k in range(col_len[c]):
                child_buf[child_len] = cols[c][k]
                child_len += 1
        elif cur_len <= col_len[c]:
            for k in range(cur_len):
                x = cur[k]
                if _bsearch(cols[c], col_len[c], x):
                    child_buf[child_len] = x
                    child_len += 1
        else:
            for k in range(col_len[c]):
                x = cols[c][k]
                if _bsearch(cur, cur_len, x):
                    child_buf[child_len] = x
                    child_len += 1
        visited[0] += 1
        acc += sign * child_len
        acc += _ie_walk(n, r, q * c, child_buf, child_len, c + 1, -sign,
                        cols, col_len, bufs, depth + 1, max_depth, visited)
    return acc


def set_model_ie(long long n):
    cdef long long r = c_isqrt(n)
    cdef int max_depth = 130  # > max divisor count of any lcm <= 2^62 cap use
    cdef long long i, j, m
    cdef long long **cols = NULL
    cdef long long *col_len = NULL
    cdef long long **bufs = NULL
    cdef long long visited = 0
    cdef long long acc = 0
    cdef long long row = n // 2 + 1
    cdef int d
    if r < 2:
        return 0, 0
    try:
        cols = <long long **> malloc((r + 1) * sizeof(long long *))
        col_len = <long long *> malloc((r + 1) * sizeof(long long))
        bufs = <long long **> malloc(max_depth * sizeof(long long *))
        if cols == NULL or col_len == NULL or bufs == NULL:
            raise MemoryError()
        for i in range(r + 1):
            cols[i] = NULL
        for d in range(max_depth):
            bufs[d] = NULL
        for i in range(2, r + 1):
            m = n // i - i + 1  # count of i*j with j in [i, n//i]
            if m < 0:
                m = 0
            col_len[i] = m
            cols[i] = <long long *> malloc((m if m > 0 else 1) * sizeof(long long))
            if cols[i] == NULL:
                raise MemoryError()
            for j in range(m):
                cols[i][j] = i * (i + j)
        for d in range(max_depth):
            bufs[d] = <long long *> malloc(row * sizeof(long long))
            if bufs[d] == NULL:
                raise MemoryError()
        with nogil:
            acc = _ie_walk(n, r, 1, NULL, 0, 2, +1, cols, col_len,
                           bufs, 0, max_depth, &visited)
        return acc, visited
    finally:
        if cols != NULL:
            for i in range(2, r + 1):
                if cols[i] != NULL:
                    free(cols[i])
            free(cols)
        if col_len != NULL:
            free(col_len)
        if bufs != NULL:
            for d in range(max_depth):
                if bufs[d] != NULL:
                    free(bufs[d])
            free(bufs)


BACKEND_NAME = "c"
