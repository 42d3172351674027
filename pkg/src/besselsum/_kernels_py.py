"""Pure-Python scalar kernels.

This is the reference implementation of the numeric core: gamma-family
functions, Riemann zeta, the exponentially scaled Bessel K, complex erfc,
the compensated direct-summation loops and the Mellin-Barnes line
quadrature.  The compiled twin in ``_kernels_cy`` mirrors these routines
operation for operation; any algorithmic change here must be replicated
there to keep the two backends bit-identical.

All complex elementary operations used in twinned code are spelled out via
the helpers below (same formulas as the C side) rather than ``cmath``.
"""
from __future__ import annotations

import math

from ._tables import (
    DIGAMMA_B2N,
    EULER,
    LANCZOS_COEF,
    LANCZOS_G,
    STIRLING_LNG,
    STIRLING_MIN_X,
    ZETA_BORWEIN_D,
    ZETA_BORWEIN_N,
    ZETA_INT,
    _B2N,
)
from .errors import OracleError, OutOfRegimeError

EPS = 2.220446049250313e-16
SQRT_TWO_PI = 2.5066282746310002
LN_SQRT_TWO_PI = 0.9189385332046727
INV_SQRT_PI = 0.5641895835477563

BACKEND_NAME = "python"


# ---------------------------------------------------------------------------
# complex helpers (kept trivial so the compiled twin matches bit for bit)

def _cexp(z: complex) -> complex:
    m = math.exp(z.real)
    return complex(m * math.cos(z.imag), m * math.sin(z.imag))


def _clog(z: complex) -> complex:
    return complex(0.5 * math.log(z.real * z.real + z.imag * z.imag),
                   math.atan2(z.imag, z.real))


def _csin(z: complex) -> complex:
    return complex(math.sin(z.real) * math.cosh(z.imag),
                   math.cos(z.real) * math.sinh(z.imag))


def _sinpi(x: float) -> float:
    """sin(pi x) with exact argument reduction."""
    y = math.fmod(x, 2.0)
    if y > 1.0:
        y -= 2.0
    elif y < -1.0:
        y += 2.0
    if y > 0.5:
        y = 1.0 - y
    elif y < -0.5:
        y = -1.0 - y
    return math.sin(math.pi * y)


# ---------------------------------------------------------------------------
# gamma family

def gamma_real(x: float) -> float:
    """Gamma(x) by the Lanczos approximation; caller excludes the poles."""
    if x < 0.5:
        # reflection through sin(pi x)
        return math.pi / (_sinpi(x) * gamma_real(1.0 - x))
    acc = LANCZOS_COEF[0]
    for k in range(1, 9):
        acc += LANCZOS_COEF[k] / (x - 1.0 + k)
    t = x + (LANCZOS_G - 0.5)
    if x <= 140.0:
        return SQRT_TWO_PI * acc * (t ** (x - 0.5)) * math.exp(-t)
    half = t ** (0.5 * (x - 0.5))
    return SQRT_TWO_PI * acc * (half * math.exp(-t)) * half


def _stirling_lng_real(x: float) -> float:
    # x >= STIRLING_MIN_X
    s = (x - 0.5) * math.log(x) - x + LN_SQRT_TWO_PI
    r = 1.0 / x
    r2 = r * r
    p = r
    for c in STIRLING_LNG:
        s += c * p
        p *= r2
    return s


def lgamma_real(x: float) -> float:
    """ln Gamma(x) for x > 0."""
    if x >= STIRLING_MIN_X:
        return _stirling_lng_real(x)
    shift = 1.0
    y = x
    while y < STIRLING_MIN_X:
        shift *= y
        y += 1.0
    return _stirling_lng_real(y) - math.log(shift)


def lgamma_1p(u: float) -> float:
    """ln Gamma(1+u) for |u| <= 0.5 via the zeta power series."""
    acc = -EULER * u
    comp = 0.0
    pw = u
    sign = 1.0
    for k in range(2, 65):
        pw *= u
        sign = -sign
        term = sign * ZETA_INT[k - 2] * pw / k
        y = term - comp
        t = acc + y
        comp = (t - acc) - y
        acc = t
        if abs(term) <= 1e-18 * abs(acc):
            break
    return acc


def clgamma(z: complex) -> complex:
    """Principal ln Gamma(z) for Re z > 0 (Stirling plus recurrence)."""
    if z.real >= STIRLING_MIN_X:
        s = (z - 0.5) * _clog(z) - z + LN_SQRT_TWO_PI
        r = 1.0 / z
        r2 = r * r
        p = r
        for c in STIRLING_LNG:
            s += c * p
            p *= r2
        return s
    m = int(STIRLING_MIN_X - z.real) + 1
    acc = 0j
    w = z
    for _ in range(m):
        acc += _clog(w)
        w += 1.0
    return clgamma(w) - acc


def digamma_real(x: float) -> float:
    """psi(x) for x > 0."""
    acc = 0.0
    y = x
    while y < STIRLING_MIN_X:
        acc -= 1.0 / y
        y += 1.0
    s = math.log(y) - 0.5 / y
    r2 = 1.0 / (y * y)
    p = r2
    for c in DIGAMMA_B2N:
        s -= c * p
        p *= r2
    return s + acc


# ---------------------------------------------------------------------------
# Riemann zeta

def zeta_real(s: float) -> float:
    """zeta(s), s != 1; accelerated eta series, reflection for s < 0."""
    if s < 0.0:
        n = round(s)
        if s == n and n % 2 == 0:
            return 0.0
        return ((2.0 ** s) * math.pi ** (s - 1.0) * _sinpi(0.5 * s)
                * gamma_real(1.0 - s) * zeta_real(1.0 - s))
    d = ZETA_BORWEIN_D
    n = ZETA_BORWEIN_N
    acc = 0.0
    comp = 0.0
    sign = 1.0
    for k in range(n):
        term = sign * (d[k] - d[n]) / (k + 1.0) ** s
        y = term - comp
        t = acc + y
        comp = (t - acc) - y
        acc = t
        sign = -sign
    eta = -acc / d[n]
    return eta / -math.expm1((1.0 - s) * 0.6931471805599453)


# ---------------------------------------------------------------------------
# modified Bessel K, exponentially scaled

def _zeta_series_odd(u: float) -> float:
    # odd part of -lnGamma(1+u), divided by u:  EULER + zeta(3)u^2/3 + ...
    acc = EULER
    u2 = u * u
    pw = u2
    for k in range(3, 64, 2):
        term = ZETA_INT[k - 2] * pw / k
        acc += term
        if term <= 1e-18 * acc:
            break
        pw *= u2
    return acc


def _zeta_series_even(u: float) -> float:
    # even part of -lnGamma(1+u):  -(zeta(2)u^2/2 + zeta(4)u^4/4 + ...)
    acc = 0.0
    u2 = u * u
    pw = u2
    for k in range(2, 65, 2):
        term = ZETA_INT[k - 2] * pw / k
        acc += term
        if term <= 1e-18 * acc:
            break
        pw *= u2
    return -acc


def _sinhc(t: float) -> float:
    if t == 0.0:
        return 1.0
    return math.sinh(t) / t


def _besselk_pair_series(mu: float, x: float) -> tuple:
    """(e^x K_mu, e^x K_{mu+1}) for |mu| <= 0.5, 0 < x <= 2 (Temme's series)."""
    x2 = 0.5 * x
    dlog = -math.log(x2)
    sigma = mu * dlog
    o_over = _zeta_series_odd(mu)
    o_val = o_over * mu
    e_val = _zeta_series_even(mu)
    gam1 = -math.exp(e_val) * o_over * _sinhc(o_val)
    gam2 = math.exp(e_val) * math.cosh(o_val)
    if mu == 0.0:
        fact = 1.0
    else:
        fact = math.pi * mu / math.sin(math.pi * mu)
    ff = fact * (gam1 * math.cosh(sigma) + gam2 * dlog * _sinhc(sigma))
    ssum = ff
    p = 0.5 * math.exp(sigma - o_val - e_val)
    q = 0.5 * math.exp(-sigma + o_val - e_val)
    c = 1.0
    d2 = x2 * x2
    sum1 = p
    for i in range(1, 1001):
        ff = (i * ff + p + q) / (i * i - mu * mu)
        c *= d2 / i
        p /= (i - mu)
        q /= (i + mu)
        dl = c * ff
        ssum += dl
        sum1 += c * (p - i * ff)
        if abs(dl) < abs(ssum) * EPS:
            break
    ex = math.exp(x)
    return ssum * ex, sum1 * (2.0 / x) * ex


def _besselk_pair_cf2(mu: float, x: float) -> tuple:
    """(e^x K_mu, e^x K_{mu+1}) for |mu| <= 0.5, x > 2 (Steed's CF2)."""
    b = 2.0 * (1.0 + x)
    d = 1.0 / b
    h = d
    delh = d
    q1 = 0.0
    q2 = 1.0
    a1 = 0.25 - mu * mu
    q = a1
    c = a1
    a = -a1
    s = 1.0 + q * delh
    for i in range(2, 7001):
        a -= 2 * (i - 1)
        c = -a * c / i
        qnew = (q1 - b * q2) / a
        q1 = q2
        q2 = qnew
        q += c * qnew
        b += 2.0
        d = 1.0 / (b + a * d)
        delh = (b * d - 1.0) * delh
        h += delh
        dels = q * delh
        s += dels
        if abs(dels / s) < EPS:
            break
    else:
        raise OracleError("Bessel K continued fraction did not converge")
    h = a1 * h
    rkmu = math.sqrt(math.pi / (2.0 * x)) / s
    rk1 = rkmu * (mu + x + 0.5 - h) / x
    return rkmu, rk1


def besselk_scaled(nu: float, x: float) -> float:
    """e^x K_nu(x) for 0 <= nu < 1, x > 0."""
    if nu <= 0.5:
        mu = nu
        want_next = False
    else:
        mu = nu - 1.0
        want_next = True
    if x <= 2.0:
        k0, k1 = _besselk_pair_series(mu, x)
    else:
        k0, k1 = _besselk_pair_cf2(mu, x)
    return k1 if want_next else k0


# ---------------------------------------------------------------------------
# complex erfc

def _erf_taylor(w: complex) -> complex:
    term = w
    acc_re = w.real
    acc_im = w.imag
    comp_re = 0.0
    comp_im = 0.0
    w2 = w * w
    for k in range(1, 301):
        term *= w2 / k
        val = term / (2 * k + 1)
        if k & 1:
            val = -val
        y = val.real - comp_re
        t = acc_re + y
        comp_re = (t - acc_re) - y
        acc_re = t
        y = val.imag - comp_im
        t = acc_im + y
        comp_im = (t - acc_im) - y
        acc_im = t
        if abs(val.real) + abs(val.imag) <= 1e-18 * (abs(acc_re) + abs(acc_im)):
            break
    else:
        raise OracleError("erfc Taylor series did not converge")
    return complex(acc_re, acc_im) * (2.0 * INV_SQRT_PI)


def _erfc_cf_gamma(w: complex) -> complex:
    # erfc(w) = w exp(-w^2)/sqrt(pi) * CF for Gamma(1/2, w^2); needs Re w^2 > 0
    x = w * w
    fpmin = 1e-300
    b = x + 0.5
    c = 1.0 / fpmin
    d = 1.0 / b
    h = d
    for i in range(1, 501):
        an = -i * (i - 0.5)
        b += 2.0
        d = an * d + b
        if abs(d.real) + abs(d.imag) < fpmin:
            d = complex(fpmin, 0.0)
        c = b + an / c
        if abs(c.real) + abs(c.imag) < fpmin:
            c = complex(fpmin, 0.0)
        d = 1.0 / d
        delt = d * c
        h *= delt
        if abs(delt.real - 1.0) + abs(delt.imag) < EPS:
            break
    else:
        raise OracleError("erfc continued fraction did not converge")
    return w * _cexp(-x) * INV_SQRT_PI * h


def _erfc_cf_faddeeva(w: complex) -> complex:
    # erfc(w) = exp(-w^2) fad(i w); backward continued fraction of fixed depth
    zeta = complex(-w.imag, w.real)
    f = 0j
    for k in range(64, 0, -1):
        f = (0.5 * k) / (zeta - f)
    fad = complex(0.0, INV_SQRT_PI) / (zeta - f)
    return _cexp(-w * w) * fad


def erfc_cplx(z: complex) -> complex:
    """erfc(z) on the region map A/B/C; raises OutOfRegimeError where the
    arbitrary-precision fallback is required."""
    if z.real < 0.0:
        return 2.0 - erfc_cplx(-z)
    absz = math.hypot(z.real, z.imag)
    if absz <= 2.0 or (z.real <= 1.4 and absz <= 6.0):
        return 1.0 - _erf_taylor(z)
    w2 = z * z
    if w2.real >= 2.0:
        return _erfc_cf_gamma(z)
    if z.real >= 1.4:
        return _erfc_cf_faddeeva(z)
    raise OutOfRegimeError("erfc argument in the high-precision fallback region")


# ---------------------------------------------------------------------------
# compensated summation loops

def direct_sum_loop(nu: float, p: int, a: float, rel_tol: float,
                    n_cap: int) -> tuple:
    """Ascending compensated sum of (a n^p/2)^(-nu) K_nu(a n^p).

    Returns (value, terms_used, tail_bound, converged).  The tail bound is
    the integral-comparison envelope with a safety factor of two.
    """
    acc = 0.0
    comp = 0.0
    n = 0
    while n < n_cap:
        n += 1
        x = a * float(n) ** p
        if x <= 700.0:
            term = besselk_scaled(nu, x) * math.exp(-x) * (0.5 * x) ** (-nu)
            y = term - comp
            t = acc + y
            comp = (t - acc) - y
            acc = t
        # envelope bound on the tail starting at m = n+1
        m = n + 1.0
        xm = a * m ** p
        expo = -xm - (nu + 0.5) * math.log(0.5 * xm)
        if expo < -745.0:
            return acc, n, 0.0, True
        ratio = math.exp(-a * p * m ** (p - 1))
        bound = 2.0 * 0.8862269254527580 * math.exp(expo) / (1.0 - ratio)
        if bound <= 0.5 * rel_tol * abs(acc):
            return acc, n, bound, True
    return acc, n, bound, False


def ej_sum_loop(p: int, w: float, a: float, rel_tol: float, n_cap: int) -> tuple:
    """Ascending compensated sum of exp(-a n^p)/n^w with a rigorous tail bound."""
    acc = 0.0
    comp = 0.0
    n = 0
    while n < n_cap:
        n += 1
        x = a * float(n) ** p
        if x <= 700.0:
            term = math.exp(-x) / float(n) ** w
            y = term - comp
            t = acc + y
            comp = (t - acc) - y
            acc = t
        m = n + 1.0
        xm = a * m ** p
        if xm > 745.0:
            return acc, n, 0.0, True
        ratio = math.exp(-a * p * m ** (p - 1))
        bound = math.exp(-xm) / m ** w / (1.0 - ratio)
        if bound <= 0.5 * rel_tol * abs(acc):
            return acc, n, bound, True
    return acc, n, bound, False


# ---------------------------------------------------------------------------
# Mellin-Barnes vertical-line quadrature

def _log_sin_pi_line(c: float, t: float) -> complex:
    # log sin(pi s) on s = -c + i t
    if abs(t) <= 20.0:
        return _clog(_csin(complex(-math.pi * c, math.pi * t)))
    if t > 0.0:
        # sin(pi s) ~ (i/2) e^{i pi c} e^{pi t}
        return complex(math.pi * t - 0.6931471805599453,
                       math.pi * c + 1.5707963267948966)
    return complex(-math.pi * t - 0.6931471805599453,
                   -math.pi * c - 1.5707963267948966)


def mb_quadrature(omega: float, kappa: int, lnr: float, theta: float) -> tuple:
    """(1/2pi) Integral dt of Gamma(kappa s + omega)/sin(pi s) z^{-kappa s}
    on s = -c + i t, z = exp(lnr + i theta).

    Returns (mantissa: complex, log_scale: float); value = mantissa*e^scale.
    """
    delta = kappa * math.pi / 2.0 + math.pi - kappa * abs(theta)
    if delta <= 0.05:
        raise OutOfRegimeError("arg z too close to the convergence boundary")
    c = 0.5 if omega >= kappa else omega / (2.0 * kappa)
    h = c / 5.0

    def g(t: float) -> complex:
        s_re = -c
        s_im = t
        gz = clgamma(complex(kappa * s_re + omega, kappa * s_im))
        ls = _log_sin_pi_line(c, t)
        # -kappa * s * (lnr + i theta)
        pw = complex(-(kappa * s_re * lnr - kappa * s_im * theta),
                     -(kappa * s_re * theta + kappa * s_im * lnr))
        return gz - ls + pw

    # scan each side outward for the decayed endpoint
    peak = g(0.0).real
    t_hi = 0.0
    t = 1.0
    while True:
        v = g(t).real
        if v > peak:
            peak = v
        if v < peak - 50.0:
            t_hi = t
            break
        t += 1.0
        if t > 2e5:
            raise OracleError("Mellin-Barnes integrand does not decay")
    t_lo = 0.0
    t = -1.0
    while True:
        v = g(t).real
        if v > peak:
            peak = v
        if v < peak - 50.0:
            t_lo = t
            break
        t -= 1.0
        if t < -2e5:
            raise OracleError("Mellin-Barnes integrand does not decay")

    n_lo = int(math.ceil(-t_lo / h)) + 2
    n_hi = int(math.ceil(t_hi / h)) + 2
    acc_re = 0.0
    comp_re = 0.0
    acc_im = 0.0
    comp_im = 0.0
    for j in range(-n_lo, n_hi + 1):
        val = _cexp(g(j * h) - peak)
        y = val.real - comp_re
        t2 = acc_re + y
        comp_re = (t2 - acc_re) - y
        acc_re = t2
        y = val.imag - comp_im
        t2 = acc_im + y
        comp_im = (t2 - acc_im) - y
        acc_im = t2
    scale = h / (2.0 * math.pi)
    return complex(acc_re * scale, acc_im * scale), peak
