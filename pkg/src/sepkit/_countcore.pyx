# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled lattice-point counting kernel.

Mirrors ``_countpure.count_range`` exactly: integer points with zero sum,
coordinates in [-k, k], and <lam, x> <= k for every facet row, first
coordinate restricted to [x0_lo, x0_hi].  All arithmetic is C int64; the
quantities involved (dots, partial sums) are bounded by 2 * k * n, far from
overflow.  The search releases the GIL so callers can thread over ranges of
the first coordinate.
"""

from libc.stdlib cimport calloc, free

ctypedef long long i64


cdef i64 _search(int k, int n, int nf, i64 *fac, i64 *suffix,
                 int x0_lo, int x0_hi) noexcept nogil:
    # fac is row-major nf x n; suffix is nf x (n+1);
    # dots is (n+1) x nf, sums/xs are per-position scratch.
    cdef i64 total = 0
    cdef i64 *dots = <i64 *> calloc((n + 1) * nf, sizeof(i64))
    cdef i64 *sums = <i64 *> calloc(n + 1, sizeof(i64))
    cdef i64 *xs = <i64 *> calloc(n, sizeof(i64))
    if dots == NULL or sums == NULL or xs == NULL:
        if dots != NULL: free(dots)
        if sums != NULL: free(sums)
        if xs != NULL: free(xs)
        return -1
    cdef int pos = 0
    cdef int f
    cdef i64 x, s2, d, xl, hi
    cdef bint feasible, good
    cdef i64 lo0 = x0_lo if x0_lo > -k else -k

    if n == 1:
        free(dots); free(sums); free(xs)
        return 1 if (x0_lo <= 0 and 0 <= x0_hi) else 0

    xs[0] = lo0 - 1
    while pos >= 0:
        xs[pos] += 1
        hi = (x0_hi if x0_hi < k else k) if pos == 0 else k
        if xs[pos] > hi:
            pos -= 1
            continue
        x = xs[pos]
        s2 = sums[pos] + x
        if s2 > (n - pos - 1) * <i64> k or -s2 > (n - pos - 1) * <i64> k:
            continue
        feasible = True
        for f in range(nf):
            d = dots[pos * nf + f] + fac[f * n + pos] * x
            if d - k * suffix[f * (n + 1) + pos + 1] > k:
                feasible = False
                break
            dots[(pos + 1) * nf + f] = d
        if not feasible:
            continue
        if pos == n - 2:
            xl = -s2
            if -k <= xl and xl <= k:
                good = True
                for f in range(nf):
                    if dots[(pos + 1) * nf + f] + fac[f * n + (n - 1)] * xl > k:
                        good = False
                        break
                if good:
                    total += 1
            continue
        sums[pos + 1] = s2
        pos += 1
        xs[pos] = -k - 1

    free(dots); free(sums); free(xs)
    return total


def count_range(int k, int n, facets, int x0_lo, int x0_hi):
    """Count constrained lattice points with x_0 in [x0_lo, x0_hi]."""
    if n == 0:
        return 1 if k >= 0 else 0
    cdef int nf = len(facets)
    cdef i64 *fac = <i64 *> calloc(max(nf * n, 1), sizeof(i64))
    cdef i64 *suffix = <i64 *> calloc(max(nf * (n + 1), 1), sizeof(i64))
    if fac == NULL or suffix == NULL:
        if fac != NULL: free(fac)
        if suffix != NULL: free(suffix)
        raise MemoryError
    cdef int f, pos
    for f in range(nf):
        row = facets[f]
        for pos in range(n):
            fac[f * n + pos] = row[pos]
        for pos in range(n - 1, -1, -1):
            suffix[f * (n + 1) + pos] = suffix[f * (n + 1) + pos + 1] + fac[f * n + pos]
    cdef i64 result
    with nogil:
        result = _search(k, n, nf, fac, suffix, x0_lo, x0_hi)
    free(fac)
    free(suffix)
    if result < 0:
        raise MemoryError
    return result
