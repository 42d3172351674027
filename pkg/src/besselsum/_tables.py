"""Numeric coefficient tables shared by the pure-Python and compiled kernels.

Everything here is generated deterministically at import time from exact
integer/rational arithmetic, so both backends see bit-identical constants.
"""
from __future__ import annotations

import math

# Euler-Mascheroni constant, correctly rounded to binary64
EULER = 0.5772156649015329

# Lanczos approximation, g = 7, 9 terms (classic double-precision set)
LANCZOS_G = 7.0
LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

# Stirling series coefficients B_{2n}/(2n(2n-1)) for ln Gamma, n = 1..9
_B2N = (
    (1, 6), (-1, 30), (1, 42), (-1, 30), (5, 66),
    (-691, 2730), (7, 6), (-3617, 510), (43867, 798),
)
STIRLING_LNG = tuple(
    num / (den * (2 * n) * (2 * n - 1)) for n, (num, den) in enumerate(_B2N, start=1)
)
# and B_{2n}/(2n) for the digamma series, n = 1..9
DIGAMMA_B2N = tuple(num / (den * 2 * n) for n, (num, den) in enumerate(_B2N, start=1))

# threshold above which the Stirling series is applied directly
STIRLING_MIN_X = 12.0


def _borwein_d(n: int) -> tuple:
    """Exact integers d_k of the alternating-series acceleration scheme."""
    d = []
    acc = 0
    for k in range(n + 1):
        acc += (math.factorial(n + k - 1) * 4 ** k) // (
            math.factorial(n - k) * math.factorial(2 * k)
        )
        d.append(n * acc)
    return tuple(float(v) for v in d)


ZETA_BORWEIN_N = 50
ZETA_BORWEIN_D = _borwein_d(ZETA_BORWEIN_N)


def _zeta_pos_int(k: int) -> float:
    """zeta(k) for integer k >= 2 via the Borwein-accelerated eta series."""
    n = ZETA_BORWEIN_N
    d = ZETA_BORWEIN_D
    s = 0.0
    c = 0.0
    for j in range(n):
        term = ((-1.0) ** j) * (d[j] - d[n]) / float(j + 1) ** k
        y = term - c
        t = s + y
        c = (t - s) - y
        s = t
    eta = -s / d[n]
    return eta / -math.expm1((1.0 - k) * math.log(2.0))


# zeta(k), k = 2..64, for the ln Gamma(1+u) power series (|u| <= 0.5)
ZETA_INT = tuple(_zeta_pos_int(k) for k in range(2, 65))
