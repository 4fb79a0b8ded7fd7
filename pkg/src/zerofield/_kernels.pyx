# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled integer-order Bessel kernels.

Same algorithms and same call signatures as ``_kernels_py``.
"""

from libc.math cimport fabs, log, pow
from libc.stdlib cimport malloc, free

EULER_GAMMA = 0.57721566490153286060651209008240243
TWO_OVER_PI = 0.63661977236758134307553505349005745

cdef double _GAMMA = 0.57721566490153286060651209008240243
cdef double _2PI = 0.63661977236758134307553505349005745
cdef double _RESCALE = 1.0e250


cdef inline void _two_sum(double a, double b, double* s, double* e) nogil:
    cdef double ss = a + b
    cdef double bb = ss - a
    s[0] = ss
    e[0] = (a - (ss - bb)) + (b - bb)


cdef inline void _quick_two_sum(double a, double b, double* s, double* e) nogil:
    cdef double ss = a + b
    s[0] = ss
    e[0] = b - (ss - a)


cdef inline void _two_prod(double a, double b, double* p, double* e) nogil:
    cdef double pp = a * b
    cdef double t = 134217729.0 * a
    cdef double ah = t - (t - a)
    cdef double al = a - ah
    t = 134217729.0 * b
    cdef double bh = t - (t - b)
    cdef double bl = b - bh
    p[0] = pp
    e[0] = ((ah * bh - pp) + ah * bl + al * bh) + al * bl


cdef inline void _dd_mul(double ah, double al, double bh, double bl, double* rh, double* rl) nogil:
    cdef double p, e
    _two_prod(ah, bh, &p, &e)
    e += ah * bl + al * bh
    _quick_two_sum(p, e, rh, rl)


cdef inline void _dd_div_d(double ah, double al, double d, double* rh, double* rl) nogil:
    cdef double q1 = ah / d
    cdef double p, e, s, f
    _two_prod(q1, d, &p, &e)
    _two_sum(ah, -p, &s, &f)
    f = f - e + al
    _quick_two_sum(q1, (s + f) / d, rh, rl)


cdef inline void _dd_add(double ah, double al, double bh, double bl, double* rh, double* rl) nogil:
    cdef double s, e
    _two_sum(ah, bh, &s, &e)
    e += al + bl
    _quick_two_sum(s, e, rh, rl)


cdef double _j_series(int n, double x, double rtol, int max_terms) nogil:
    cdef double half = 0.5 * x
    cdef double th = 1.0, tl = 0.0, sh, sl, qh, ql, mh, ml
    cdef int j, m
    for j in range(1, n + 1):
        _dd_mul(th, tl, half, 0.0, &mh, &ml)
        _dd_div_d(mh, ml, <double>j, &th, &tl)
    sh = th
    sl = tl
    _two_prod(half, half, &qh, &ql)
    qh = -qh
    ql = -ql
    for m in range(1, max_terms):
        _dd_mul(th, tl, qh, ql, &mh, &ml)
        _dd_div_d(mh, ml, <double>(m * (m + n)), &th, &tl)
        _dd_add(sh, sl, th, tl, &sh, &sl)
        if fabs(th) <= rtol * fabs(sh):
            break
    return sh + sl


cdef int _miller_start(double x, int n) nogil:
    cdef double top = x if x > n else <double>n
    cdef int start = <int>(top + 12.0 * pow(top, 1.0 / 3.0) + 30.0)
    return start + (start & 1)


cdef int _fill_table(double x, int start, double* vals) nogil:
    cdef double nxt = 0.0
    cdef double cur = 1e-300
    cdef double prev, norm
    cdef int k, i
    vals[start] = cur
    for k in range(start, 0, -1):
        prev = (2.0 * k / x) * cur - nxt
        nxt = cur
        cur = prev
        vals[k - 1] = cur
        if fabs(cur) > _RESCALE:
            for i in range(k - 1, start + 1):
                vals[i] /= _RESCALE
            cur /= _RESCALE
            nxt /= _RESCALE
    norm = vals[0]
    for k in range(2, start + 1, 2):
        norm += 2.0 * vals[k]
    for k in range(start + 1):
        vals[k] /= norm
    return 0


cdef void _y01_series(double x, double rtol, int max_terms, double* y0, double* y1) nogil:
    cdef double half = 0.5 * x
    cdef double lg = log(half) + _GAMMA
    cdef double q = -half * half
    cdef double t = 1.0, j0 = 1.0, h = 0.0, corr = 0.0
    cdef double j1, hm, w
    cdef int m
    for m in range(1, max_terms):
        t *= q / (m * m)
        h += 1.0 / m
        j0 += t
        corr += h * t
        if fabs(t) * (h + 1.0) <= rtol * (fabs(j0) + fabs(corr)):
            break
    y0[0] = _2PI * (lg * j0 - corr)

    t = half
    j1 = half
    hm = 0.0
    corr = half
    for m in range(1, max_terms):
        t *= q / (m * (m + 1))
        hm += 1.0 / m
        j1 += t
        w = 2.0 * hm + 1.0 / (m + 1)
        corr += w * t
        if fabs(t) * w <= rtol * (fabs(j1) + fabs(corr)):
            break
    y1[0] = -_2PI / x + _2PI * lg * j1 - 0.5 * _2PI * corr


cdef void _y01_neumann(double x, double* table, int top, double* y0, double* y1) nogil:
    cdef double lg = log(0.5 * x) + _GAMMA
    cdef double s0 = 0.0, s1 = 0.0, sign = -1.0
    cdef int k = 1
    while 2 * k + 1 < top:
        s0 += sign * table[2 * k] / k
        s1 += sign * (2 * k + 1) * table[2 * k + 1] / (<double>k * (k + 1))
        sign = -sign
        k += 1
    y0[0] = _2PI * (lg * table[0] - 2.0 * s0)
    y1[0] = _2PI * (-table[0] / x + (lg - 1.0) * table[1] - s1)


cdef double _y_forward(int n, double x, double y0, double y1) nogil:
    cdef double prev, cur, nxt
    cdef int k
    if n == 0:
        return y0
    prev = y0
    cur = y1
    for k in range(1, n):
        nxt = (2.0 * k / x) * cur - prev
        prev = cur
        cur = nxt
    return cur


cdef void _jy(int n, double x, double crossover, double rtol, int max_terms,
              double* jv, double* yv) nogil:
    cdef double y0, y1
    cdef int start, nn
    cdef double* table
    if x <= crossover:
        _y01_series(x, rtol, max_terms, &y0, &y1)
        jv[0] = _j_series(n, x, rtol, max_terms)
        yv[0] = _y_forward(n, x, y0, y1)
        return
    nn = n if n > 1 else 1
    start = _miller_start(x, nn)
    table = <double*>malloc((start + 2) * sizeof(double))
    _fill_table(x, start, table)
    _y01_neumann(x, table, start + 1, &y0, &y1)
    jv[0] = table[n]
    yv[0] = _y_forward(n, x, y0, y1)
    free(table)


def j_series(int n, double x, double rtol=1e-16, int max_terms=60):
    return _j_series(n, x, rtol, max_terms)


def miller_start(double x, int n):
    return _miller_start(x, n)


def j_miller_table(double x, int n_top):
    cdef int start = _miller_start(x, n_top)
    cdef double* table = <double*>malloc((start + 2) * sizeof(double))
    cdef int k
    try:
        _fill_table(x, start, table)
        return [table[k] for k in range(start + 1)]
    finally:
        free(table)


def y01_series(double x, double rtol=1e-16, int max_terms=60):
    cdef double y0, y1
    _y01_series(x, rtol, max_terms, &y0, &y1)
    return y0, y1


def y01_neumann(double x, table):
    cdef int top = len(table)
    cdef double* buf = <double*>malloc((top + 1) * sizeof(double))
    cdef double y0, y1
    cdef int k
    try:
        for k in range(top):
            buf[k] = table[k]
        _y01_neumann(x, buf, top, &y0, &y1)
        return y0, y1
    finally:
        free(buf)


def y_forward(int n, double x, double y0, double y1):
    return _y_forward(n, x, y0, y1)


def jn(int n, double x, double crossover=12.0, double rtol=1e-16, int max_terms=60):
    cdef double jv, yv
    if x == 0.0:
        return 1.0 if n == 0 else 0.0
    if x <= crossover:
        return _j_series(n, x, rtol, max_terms)
    _jy(n, x, crossover, rtol, max_terms, &jv, &yv)
    return jv


def yn(int n, double x, double crossover=12.0, double rtol=1e-16, int max_terms=60):
    cdef double jv, yv
    _jy(n, x, crossover, rtol, max_terms, &jv, &yv)
    return yv


def jy(int n, double x, double crossover=12.0, double rtol=1e-16, int max_terms=60):
    cdef double jv, yv
    _jy(n, x, crossover, rtol, max_terms, &jv, &yv)
    return jv, yv


def h0_many(xs, double crossover=12.0, double rtol=1e-16, int max_terms=60):
    cdef Py_ssize_t i, count = len(xs)
    cdef double jv, yv
    re = [0.0] * count
    im = [0.0] * count
    for i in range(count):
        _jy(0, xs[i], crossover, rtol, max_terms, &jv, &yv)
        re[i] = jv
        im[i] = -yv
    return re, im
