# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled binary-channel capacity kernels.

A 2x2 row-stochastic channel is passed as (p00, p10): the probabilities of
output 0 under inputs 0 and 1. All information quantities are in nats.
Mirrors chancap._kernels_py; keep the two implementations in lockstep.
"""

from libc.float cimport DBL_MIN
from libc.math cimport exp, log

DEF GRID_BLOCK = 4096

# Search tolerances for capacity_ternary: value comparisons are reliable
# down to ~1e-8 interval widths; the derivative bisection takes over below.
DEF TERNARY_WIDTH = 1e-8
DEF POLISH_HALFWIDTH = 1e-4
DEF POLISH_WIDTH = 1e-13


cdef inline double _h2(double p) nogil:
    cdef double h = 0.0
    if p > 0.0:
        h -= p * log(p)
    if p < 1.0:
        h -= (1.0 - p) * log(1.0 - p)
    return h


cdef inline double _mi(double p00, double p10, double h0, double h1, double q) nogil:
    cdef double y0 = q * p00 + (1.0 - q) * p10
    cdef double y1 = 1.0 - y0
    cdef double hy = 0.0
    if y0 > 0.0:
        hy -= y0 * log(y0)
    if y1 > 0.0:
        hy -= y1 * log(y1)
    return hy - q * h0 - (1.0 - q) * h1


cdef inline double _mi_slope(double p00, double p10, double h0, double h1, double q) nogil:
    # d/dq of _mi: (p00 - p10) * ln(y1/y0) - (h0 - h1); decreasing in q.
    cdef double y0 = q * p00 + (1.0 - q) * p10
    cdef double y1 = 1.0 - y0
    if y0 < DBL_MIN:
        y0 = DBL_MIN
    if y1 < DBL_MIN:
        y1 = DBL_MIN
    return (p00 - p10) * log(y1 / y0) - (h0 - h1)


def mi_binary(double p00, double p10, double q):
    """I(X;Y) in nats for input distribution (q, 1-q)."""
    return _mi(p00, p10, _h2(p00), _h2(p10), q)


def capacity_ternary(double p00, double p10):
    """Maximize the mutual information over the input prior.

    Ternary search on the concave objective down to the width where value
    comparisons drown in rounding noise, then bisection on the sign of the
    derivative to pin the optimizer. Returns (capacity_nats, q, iterations).
    """
    cdef double h0 = _h2(p00)
    cdef double h1 = _h2(p10)
    if p00 == p10:
        return 0.0, 0.5, 0

    cdef double lo = 0.0, hi = 1.0
    cdef double m1, m2, f1, f2
    cdef long iters = 0
    while hi - lo > TERNARY_WIDTH:
        m1 = lo + (hi - lo) / 3.0
        m2 = hi - (hi - lo) / 3.0
        f1 = _mi(p00, p10, h0, h1, m1)
        f2 = _mi(p00, p10, h0, h1, m2)
        iters += 1
        if f1 < f2:
            lo = m1
        elif f1 > f2:
            hi = m2
        else:
            lo = m1
            hi = m2

    cdef double mid = 0.5 * (lo + hi)
    cdef double blo = mid - POLISH_HALFWIDTH
    cdef double bhi = mid + POLISH_HALFWIDTH
    if blo < 1e-15:
        blo = 1e-15
    if bhi > 1.0 - 1e-15:
        bhi = 1.0 - 1e-15
    if not (_mi_slope(p00, p10, h0, h1, blo) > 0.0 > _mi_slope(p00, p10, h0, h1, bhi)):
        blo = 1e-15
        bhi = 1.0 - 1e-15
    while bhi - blo > POLISH_WIDTH:
        mid = 0.5 * (blo + bhi)
        iters += 1
        if _mi_slope(p00, p10, h0, h1, mid) > 0.0:
            blo = mid
        else:
            bhi = mid
    mid = 0.5 * (blo + bhi)

    cdef double cap = _mi(p00, p10, h0, h1, mid)
    if cap < 0.0:
        cap = 0.0
    return cap, mid, iters


def capacity_grid(double p00, double p10, double step):
    """Brute-force capacity: scan the input prior on a uniform grid.

    Evaluates the mutual information at q = i/n for n = round(1/step) and
    returns (capacity_nats, q_argmax, evaluations). Ties keep the lowest q.
    """
    if step <= 0.0 or step > 1.0:
        raise ValueError(f"step must lie in (0, 1], got {step}")
    cdef long n = <long>(1.0 / step + 0.5)
    cdef double h0 = _h2(p00)
    cdef double h1 = _h2(p10)
    cdef double inv_n = 1.0 / n
    cdef double mi[GRID_BLOCK]
    cdef double best = -1.0
    cdef long best_i = 0
    cdef long start, j, m
    cdef double q, y0, y1, a, b
    with nogil:
        start = 0
        while start <= n:
            m = n + 1 - start
            if m > GRID_BLOCK:
                m = GRID_BLOCK
            for j in range(m):
                q = (start + j) * inv_n
                y0 = q * p00 + (1.0 - q) * p10
                y1 = 1.0 - y0
                a = y0 if y0 > DBL_MIN else DBL_MIN
                b = y1 if y1 > DBL_MIN else DBL_MIN
                mi[j] = -a * log(a) - b * log(b) - q * h0 - (1.0 - q) * h1
            for j in range(m):
                if mi[j] > best:
                    best = mi[j]
                    best_i = start + j
            start += m
    if best < 0.0:
        best = 0.0
    return best, best_i * inv_n, n + 1


def ba_binary(double p00, double p10, double tol, long max_iter):
    """Alternating-maximization capacity of a 2x2 channel.

    Iterates the multiplicative prior update and stops once the standard
    capacity bounds pinch to within tol: max_x D_x - sum_x q_x D_x < tol
    with D_x = KL(p(.|x) || output marginal). Returns
    (capacity_nats, q, iterations, converged); capacity is the lower bound.
    """
    if tol <= 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    if max_iter < 1:
        raise ValueError(f"max_iter must be >= 1, got {max_iter}")
    cdef double p01 = 1.0 - p00
    cdef double p11 = 1.0 - p10
    cdef double lp00 = log(p00) if p00 > 0.0 else 0.0
    cdef double lp01 = log(p01) if p01 > 0.0 else 0.0
    cdef double lp10 = log(p10) if p10 > 0.0 else 0.0
    cdef double lp11 = log(p11) if p11 > 0.0 else 0.0
    cdef double q0 = 0.5, q1 = 0.5
    cdef double r0, r1, lr0, lr1, d0, d1, il, iu, w0, w1, s
    cdef long it = 0
    cdef bint converged = False
    cdef double cap = 0.0
    while it < max_iter:
        it += 1
        r0 = q0 * p00 + q1 * p10
        r1 = 1.0 - r0
        lr0 = log(r0) if r0 > 0.0 else 0.0
        lr1 = log(r1) if r1 > 0.0 else 0.0
        d0 = 0.0
        if p00 > 0.0:
            d0 += p00 * (lp00 - lr0)
        if p01 > 0.0:
            d0 += p01 * (lp01 - lr1)
        d1 = 0.0
        if p10 > 0.0:
            d1 += p10 * (lp10 - lr0)
        if p11 > 0.0:
            d1 += p11 * (lp11 - lr1)
        il = q0 * d0 + q1 * d1
        iu = d0 if d0 > d1 else d1
        cap = il
        if iu - il < tol:
            converged = True
            break
        w0 = q0 * exp(d0 - iu)
        w1 = q1 * exp(d1 - iu)
        s = w0 + w1
        q0 = w0 / s
        q1 = w1 / s
    if cap < 0.0:
        cap = 0.0
    return cap, q0, it, converged
