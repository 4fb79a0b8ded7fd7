"""Pure-Python integer-order Bessel kernels.

Reference implementation of the hot loops; ``_kernels.pyx`` mirrors it line
for line and is preferred when the extension has been built.
"""

import math

EULER_GAMMA = 0.57721566490153286060651209008240243
TWO_OVER_PI = 0.63661977236758134307553505349005745

_RESCALE = 1.0e250


def _two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _quick_two_sum(a, b):
    s = a + b
    return s, b - (s - a)


def _split(a):
    t = 134217729.0 * a
    hi = t - (t - a)
    return hi, a - hi


def _two_prod(a, b):
    p = a * b
    ah, al = _split(a)
    bh, bl = _split(b)
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def _dd_mul(ah, al, bh, bl):
    p, e = _two_prod(ah, bh)
    e += ah * bl + al * bh
    return _quick_two_sum(p, e)


def _dd_div_d(ah, al, d):
    q1 = ah / d
    p, e = _two_prod(q1, d)
    s, f = _two_sum(ah, -p)
    f = f - e + al
    return _quick_two_sum(q1, (s + f) / d)


def _dd_add(ah, al, bh, bl):
    s, e = _two_sum(ah, bh)
    e += al + bl
    return _quick_two_sum(s, e)


def j_series(n, x, rtol=1e-16, max_terms=60):
    """Ascending power series for J_n(x), n >= 0.

    Summed in double-double arithmetic: near the crossover the terms reach
    ~1e3 while the sum is O(1e-2), which costs plain doubles three digits.
    """
    half = 0.5 * x
    th, tl = 1.0, 0.0
    for j in range(1, n + 1):
        th, tl = _dd_div_d(*_dd_mul(th, tl, half, 0.0), float(j))
    sh, sl = th, tl
    qh, ql = _two_prod(half, half)
    qh, ql = -qh, -ql
    for m in range(1, max_terms):
        th, tl = _dd_div_d(*_dd_mul(th, tl, qh, ql), float(m * (m + n)))
        sh, sl = _dd_add(sh, sl, th, tl)
        if abs(th) <= rtol * abs(sh):
            break
    return sh + sl


def miller_start(x, n):
    top = max(float(n), x)
    start = int(top + 12.0 * top ** (1.0 / 3.0) + 30.0)
    return start + (start & 1)


def j_miller_table(x, n_top):
    """J_0..J_{n_top} by normalised backward recurrence.

    The returned list is longer than ``n_top + 1``; the tail entries are
    needed by the Neumann series for Y_0 and Y_1.
    """
    start = miller_start(x, n_top)
    vals = [0.0] * (start + 2)
    nxt = 0.0
    cur = 1e-300
    vals[start] = cur
    for k in range(start, 0, -1):
        prev = (2.0 * k / x) * cur - nxt
        nxt = cur
        cur = prev
        vals[k - 1] = cur
        if abs(cur) > _RESCALE:
            for i in range(k - 1, start + 1):
                vals[i] /= _RESCALE
            cur /= _RESCALE
            nxt /= _RESCALE
    norm = vals[0]
    for k in range(2, start + 1, 2):
        norm += 2.0 * vals[k]
    return [v / norm for v in vals[: start + 1]]


def y01_series(x, rtol=1e-16, max_terms=60):
    """Y_0 and Y_1 from their logarithmic ascending series."""
    half = 0.5 * x
    lg = math.log(half) + EULER_GAMMA
    q = -half * half

    # Y_0: (2/pi)[(ln(x/2)+C) J_0 - sum_{m>=1} (-1)^m H_m (x/2)^{2m} / (m!)^2]
    t = 1.0
    j0 = 1.0
    h = 0.0
    corr = 0.0
    for m in range(1, max_terms):
        t *= q / (m * m)
        h += 1.0 / m
        j0 += t
        corr += h * t
        if abs(t) * (h + 1.0) <= rtol * (abs(j0) + abs(corr)):
            break
    y0 = TWO_OVER_PI * (lg * j0 - corr)

    # Y_1: -2/(pi x) + (2/pi)(ln(x/2)+C) J_1 - (1/pi) sum (-1)^m (H_m + H_{m+1}) (x/2)^{2m+1} / (m!(m+1)!)
    t = half
    j1 = half
    hm = 0.0
    corr = half  # m = 0: H_0 + H_1 = 1
    for m in range(1, max_terms):
        t *= q / (m * (m + 1))
        hm += 1.0 / m
        j1 += t
        w = 2.0 * hm + 1.0 / (m + 1)
        corr += w * t
        if abs(t) * w <= rtol * (abs(j1) + abs(corr)):
            break
    y1 = -TWO_OVER_PI / x + TWO_OVER_PI * lg * j1 - 0.5 * TWO_OVER_PI * corr
    return y0, y1


def y01_neumann(x, table):
    """Y_0 and Y_1 from Neumann series over a normalised J table."""
    lg = math.log(0.5 * x) + EULER_GAMMA
    s0 = 0.0
    s1 = 0.0
    sign = -1.0
    top = len(table)
    k = 1
    while 2 * k + 1 < top:
        s0 += sign * table[2 * k] / k
        s1 += sign * (2 * k + 1) * table[2 * k + 1] / (k * (k + 1))
        sign = -sign
        k += 1
    y0 = TWO_OVER_PI * (lg * table[0] - 2.0 * s0)
    y1 = TWO_OVER_PI * (-table[0] / x + (lg - 1.0) * table[1] - s1)
    return y0, y1


def jn(n, x, crossover=12.0, rtol=1e-16, max_terms=60):
    if x == 0.0:
        return 1.0 if n == 0 else 0.0
    if x <= crossover:
        return j_series(n, x, rtol, max_terms)
    return j_miller_table(x, n)[n]


def y_forward(n, x, y0, y1):
    if n == 0:
        return y0
    prev, cur = y0, y1
    for k in range(1, n):
        prev, cur = cur, (2.0 * k / x) * cur - prev
    return cur


def yn(n, x, crossover=12.0, rtol=1e-16, max_terms=60):
    if x <= crossover:
        y0, y1 = y01_series(x, rtol, max_terms)
    else:
        y0, y1 = y01_neumann(x, j_miller_table(x, 1))
    return y_forward(n, x, y0, y1)


def jy(n, x, crossover=12.0, rtol=1e-16, max_terms=60):
    """(J_n(x), Y_n(x)) sharing one Miller table above the crossover."""
    if x <= crossover:
        y0, y1 = y01_series(x, rtol, max_terms)
        return j_series(n, x, rtol, max_terms), y_forward(n, x, y0, y1)
    table = j_miller_table(x, max(n, 1))
    y0, y1 = y01_neumann(x, table)
    return table[n], y_forward(n, x, y0, y1)


def h0_many(xs, crossover=12.0, rtol=1e-16, max_terms=60):
    """H_0^(2) at every x in ``xs`` as two lists (real, imag)."""
    re = []
    im = []
    for x in xs:
        j, y = jy(0, x, crossover, rtol, max_terms)
        re.append(j)
        im.append(-y)
    return re, im
