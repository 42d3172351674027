"""Scalar special-function surface.

Thin contract layer over the selected kernel backend: domain validation,
typed errors, and the arbitrary-precision fallback for the one erfc corner
the double kernels do not cover.  Accuracy contracts (relative error unless
stated):

==================  ======================================
gamma_real          1e-13 for |x| <= 170
log_gamma_real      ~2 ulp (absolute 1e-12 for moderate x)
log_gamma_complex   1e-11 of exp(result), |z| <= 200
digamma_real        absolute 1e-12
zeta_real           1e-13 on [-10, 60]
bessel_k_scaled     1e-13 for x in (0, 1e4]
erfc_complex        1e-11 for |z| <= 50
==================  ======================================
"""
from __future__ import annotations

import math

from ._backend import kernels
from .errors import DomainError, PoleError, ScaledResultError


def gamma_real(x: float) -> float:
    """Gamma(x); x must not be a non-positive integer."""
    if x <= 0.0 and x == math.floor(x):
        raise DomainError(f"gamma pole at x={x}")
    return kernels.gamma_real(x)


def log_gamma_real(x: float) -> float:
    """ln Gamma(x) for x > 0."""
    if x <= 0.0:
        raise DomainError(f"log_gamma_real requires x > 0, got {x}")
    return kernels.lgamma_real(x)


def log_gamma_complex(z: complex) -> complex:
    """Principal branch of ln Gamma(z) for Re z > 0."""
    z = complex(z)
    if z.real <= 0.0:
        raise DomainError("log_gamma_complex requires Re z > 0; "
                          "use the recurrence externally")
    return kernels.clgamma(z)


def digamma_real(x: float) -> float:
    """psi(x) = d/dx ln Gamma(x) for x > 0."""
    if x <= 0.0:
        raise DomainError(f"digamma_real requires x > 0, got {x}")
    return kernels.digamma_real(x)


def zeta_real(s: float) -> float:
    """Riemann zeta on the real line, s != 1."""
    if s == 1.0:
        raise PoleError("zeta(1) pole")
    return kernels.zeta_real(s)


def bessel_k_scaled(nu: float, x: float) -> float:
    """e^x K_nu(x) for order nu in [0, 1) and x > 0."""
    if not 0.0 <= nu < 1.0:
        raise DomainError(f"bessel_k_scaled requires 0 <= nu < 1, got {nu}")
    if not x > 0.0:
        raise DomainError(f"bessel_k_scaled requires x > 0, got {x}")
    return kernels.besselk_scaled(nu, x)


def sinpi(x: float) -> float:
    """sin(pi x) with exact argument reduction."""
    return kernels._sinpi(x)


def _erfc_mp(z: complex) -> complex:
    # near-imaginary-axis corner with |z| > 6: delegate to mpmath
    import mpmath as mp

    with mp.workdps(30):
        val = mp.erfc(mp.mpc(z.real, z.imag))
        mag = mp.mag(val)
        if mag > 1020:  # beyond binary64 even after the 2^e split
            ln_abs = mp.log(abs(val))
            mant = val / mp.exp(mp.floor(ln_abs))
            raise ScaledResultError(
                "erfc overflows binary64 for this argument",
                mantissa=complex(mant),
                log_scale=float(mp.floor(ln_abs)),
            )
        return complex(val)


def erfc_complex(z: complex) -> complex:
    """Complementary error function of a complex argument."""
    z = complex(z)
    # overflow screen: |erfc(z)| ~ exp(Im(z)^2 - Re(z)^2) off the real axis
    if z.imag * z.imag - z.real * z.real > 706.0:
        return _erfc_mp(z)
    try:
        return kernels.erfc_cplx(z)
    except Exception as exc:
        from .errors import OutOfRegimeError

        if isinstance(exc, OutOfRegimeError):
            return _erfc_mp(z)
        raise
