"""Terminant functions: the packaged remainder of an optimally truncated
factorial series.

The standard terminant is T_w(z) = Gamma(w) Gamma(1-w, z) / (2 pi), defined
for |arg z| < 3 pi/2 through the vertical-line integral

    -2 z^w e^z T_w(kappa; z)
        = (1/(2 pi i)) Int Gamma(kappa s + w)/sin(pi s) z^(-kappa s) ds

on Re s = -c, 0 < c < 1; kappa = 1 recovers T_w(z) and even kappa gives the
generalised form used by the remainder assembly (|arg z| < p pi/kappa,
p = kappa/2 + 1).  Three evaluation routes are provided:

* oracle: direct quadrature of the line integral, log-scaled (optionally in
  arbitrary precision);
* decomposition: even-kappa reduction to kappa standard terminants rotated
  by the angles pi - (2r+1) pi/kappa;
* asymptotic: the large-w branches for w ~ |z| (endpoint form away from the
  negative axis, error-function smoothing across it).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from . import special
from ._backend import kernels
from .accum import NeumaierSum
from .errors import DomainError, OracleError, OutOfRegimeError

_TWO_PI = 2.0 * math.pi
# switch from the endpoint branch to the smoothed branch this far before pi
_BRANCH_SWITCH = 0.35


class TerminantMethod(str, Enum):
    ASYMPTOTIC = "asymptotic"
    ORACLE = "oracle"


@dataclass(frozen=True)
class TerminantQuery:
    omega: float
    kappa: int
    z_mod: float
    z_arg: float
    method: TerminantMethod = TerminantMethod.ASYMPTOTIC

    def __post_init__(self):
        if not self.omega > 0.0:
            raise DomainError(f"omega must be positive, got {self.omega}")
        if self.kappa < 1:
            raise DomainError(f"kappa must be >= 1, got {self.kappa}")
        if self.kappa > 1 and self.kappa % 2:
            raise DomainError("kappa must be 1 or even")
        if not self.z_mod > 0.0:
            raise DomainError("z_mod must be positive")
        if not abs(self.z_arg) < 1.5 * math.pi:
            raise DomainError("|z_arg| must be below 3 pi/2")


@dataclass(frozen=True)
class SmoothingPoint:
    theta: float
    c_val: complex


def c_theta(theta: float) -> complex:
    """Root c(theta) of c^2/2 = 1 + i(theta-pi) - e^{i(theta-pi)} on the
    branch through c(pi) = 0 with c(pi + d) ~ d."""
    if not 0.0 < theta < _TWO_PI:
        raise DomainError(f"theta must be in (0, 2 pi), got {theta}")
    phi_full = theta - math.pi
    if phi_full == 0.0:
        return 0j
    steps = max(1, int(abs(phi_full) / 0.25) + 1)
    c = 0j
    for k in range(1, steps + 1):
        phi = phi_full * k / steps
        rhs = 1.0 + 1j * phi - complex(math.cos(phi), math.sin(phi))
        if k == 1:
            c = complex(phi, phi * phi / 6.0)
        for _ in range(80):
            f = 0.5 * c * c - rhs
            if abs(f) < 1e-16 * max(1.0, abs(c) * abs(c)):
                break
            c = c - f / c
        else:
            raise OracleError(f"c(theta) Newton iteration stalled at theta={theta}")
    return c


def smoothing_point(theta: float) -> SmoothingPoint:
    return SmoothingPoint(theta, c_theta(theta))


def fourier_roots(mode: str, p_or_kappa: int) -> tuple[float, ...]:
    """Angle sets of the two finite Fourier identities.

    mode='phi': sin(pi p s)/sin(pi s) = sum_r exp(-i kappa s phi_r),
    phi_r = pi/2 - 2 pi r / kappa for r < p (kappa = 2(p-1)).
    mode='psi': sin(pi kappa s)/sin(pi s) = sum_r exp(-i kappa s psi_r),
    psi_r = pi - (2r+1) pi / kappa for r < kappa.
    """
    if mode == "phi":
        p = p_or_kappa
        if p < 2:
            raise DomainError(f"p must be >= 2, got {p}")
        kappa = 2 * (p - 1)
        return tuple(0.5 * math.pi - _TWO_PI * r / kappa for r in range(p))
    if mode == "psi":
        kappa = p_or_kappa
        if kappa < 2 or kappa % 2:
            raise DomainError(f"kappa must be even >= 2, got {kappa}")
        return tuple(math.pi - (2 * r + 1) * math.pi / kappa for r in range(kappa))
    raise DomainError(f"unknown mode {mode!r}")


def h_factor(m: int, theta: float, kappa: int) -> complex:
    """h_m(theta) = sum_{r>=m} 1/(1 - lambda_r e^{-i theta}),
    lambda_r = exp((2r+1) pi i / kappa)."""
    acc = 0j
    eit = complex(math.cos(-theta), math.sin(-theta))
    for r in range(m, kappa):
        lam = complex(math.cos((2 * r + 1) * math.pi / kappa),
                      math.sin((2 * r + 1) * math.pi / kappa))
        acc += 1.0 / (1.0 - lam * eit)
    return acc


# ---------------------------------------------------------------------------
# asymptotic branches (w ~ |z|)

def _check_band(omega: float, z_mod: float) -> None:
    if z_mod < 5.0:
        raise OutOfRegimeError(f"|z| = {z_mod} below the asymptotic range")
    band = omega / z_mod
    if not 0.5 <= band <= 2.0:
        raise OutOfRegimeError(
            f"omega/|z| = {band:.3f} outside the supported band [0.5, 2]")


def _std_scaled_asym(omega: float, z_mod: float, z_arg: float) -> complex:
    """e^z T_omega(z) by the large-omega branches; |arg z| < 3 pi/2."""
    if z_arg < 0.0:
        return _std_scaled_asym(omega, z_mod, -z_arg).conjugate()
    if z_arg <= math.pi - _BRANCH_SWITCH:
        phase = complex(math.cos(-omega * z_arg), math.sin(-omega * z_arg))
        den = 1.0 + complex(math.cos(-z_arg), math.sin(-z_arg))
        return (phase / den) * math.exp(-z_mod) / math.sqrt(_TWO_PI * z_mod)
    # smoothed branch across the negative axis, with the subleading
    # Stokes-line correction 2/3 + |z| - omega damped by exp(-|z| c^2/2)
    c = c_theta(z_arg)
    root = c * math.sqrt(0.5 * z_mod)
    erf_val = 1.0 - special.erfc_complex(root)
    b0 = (2.0 / 3.0 + z_mod - omega) / math.sqrt(_TWO_PI * z_mod)
    damp_arg = -0.5 * z_mod * c * c
    damp = (math.exp(damp_arg.real)
            * complex(math.cos(damp_arg.imag), math.sin(damp_arg.imag)))
    body = 1j * (0.5 + 0.5 * erf_val + b0 * damp)
    phase = complex(math.cos(-math.pi * omega), math.sin(-math.pi * omega))
    zre = z_mod * math.cos(z_arg)
    zim = z_mod * math.sin(z_arg)
    ez = math.exp(zre) * complex(math.cos(zim), math.sin(zim))
    return ez * phase * body


def terminant_std(omega: float, z: complex | None = None, *,
                  z_mod: float | None = None, z_arg: float | None = None) -> complex:
    """Standard terminant T_omega(z) by the asymptotic branches.

    Enforced regime: 0.5 <= omega/|z| <= 2 and |z| >= 5; declared accuracy
    is O(1/|z|) relative against the oracle.
    """
    z_mod, z_arg = _polar(z, z_mod, z_arg)
    _check_band(omega, z_mod)
    scaled = _std_scaled_asym(omega, z_mod, z_arg)
    mzre = -z_mod * math.cos(z_arg)
    mzim = -z_mod * math.sin(z_arg)
    return scaled * math.exp(mzre) * complex(math.cos(mzim), math.sin(mzim))


# ---------------------------------------------------------------------------
# oracle quadrature

def _gen_oracle_scaled(omega: float, kappa: int, z_mod: float,
                       z_arg: float) -> complex:
    """e^z T_omega(kappa; z) by Mellin-Barnes quadrature (double precision)."""
    mant, log_scale = kernels.mb_quadrature(omega, kappa, math.log(z_mod), z_arg)
    expo_re = log_scale - omega * math.log(z_mod)
    expo_im = -omega * z_arg
    return -0.5 * mant * math.exp(expo_re) * complex(math.cos(expo_im),
                                                     math.sin(expo_im))


def _gen_oracle_scaled_mp(omega: float, kappa: int, z_mod: float,
                          z_arg: float, dps: int):
    """Arbitrary-precision twin of the line quadrature (returns mpc)."""
    import mpmath as mp

    with mp.workdps(dps):
        om = mp.mpf(omega)
        lnr = mp.log(mp.mpf(z_mod))
        th = mp.mpf(z_arg)
        c = mp.mpf(0.5) if om >= kappa else om / (2 * kappa)
        h = _TWO_PI * c / ((dps + 6) * 2.302585092994046)

        def g(t):
            s = mp.mpc(-c, t)
            return (mp.loggamma(kappa * s + om) - mp.log(mp.sinpi(s))
                    - kappa * s * mp.mpc(lnr, th))

        target = mp.mpf(10) ** (-dps - 6)
        peak = g(0).real
        acc = mp.exp(g(0) - peak)
        for direction in (1, -1):
            j = direction
            while True:
                val = g(j * h)
                if val.real > peak:
                    acc *= mp.exp(peak - val.real)
                    peak = val.real
                term = mp.exp(val - peak)
                acc += term
                if abs(term) < target and abs(j * h) > 2:
                    break
                j += direction
                if abs(j * h) > 1e5:
                    raise OracleError("mp quadrature does not decay")
        integral = acc * h / (2 * mp.pi) * mp.exp(peak)
        return -mp.mpf(0.5) * integral * mp.exp(-om * mp.mpc(lnr, th))


def terminant_oracle(omega: float, z: complex | None = None, *,
                     z_mod: float | None = None, z_arg: float | None = None,
                     dps: int | None = None) -> complex:
    """Reference T_omega(z), relative error <= 1e-10 in double precision.

    ``dps`` switches to arbitrary-precision quadrature on the same contour
    (used where binary64 cannot hold the answer's cancellation structure).
    """
    z_mod, z_arg = _polar(z, z_mod, z_arg)
    if omega > 200.0 or z_mod > 200.0:
        raise DomainError("oracle supports omega <= 200 and |z| <= 200")
    if dps is not None:
        import mpmath as mp

        ezt = _gen_oracle_scaled_mp(omega, 1, z_mod, z_arg, dps)
        with mp.workdps(dps):
            return ezt * mp.exp(-mp.mpc(z_mod * mp.cos(mp.mpf(z_arg)),
                                        z_mod * mp.sin(mp.mpf(z_arg))))
    ezt = _gen_oracle_scaled(omega, 1, z_mod, z_arg)
    mzre = -z_mod * math.cos(z_arg)
    mzim = -z_mod * math.sin(z_arg)
    return ezt * math.exp(mzre) * complex(math.cos(mzim), math.sin(mzim))


# ---------------------------------------------------------------------------
# generalised terminant

def terminant_gen(query: TerminantQuery) -> complex:
    """Scaled generalised terminant e^z T_omega(kappa; z).

    kappa = 1 routes to the standard function; even kappa uses the
    decomposition into kappa standard terminants (asymptotic method) or the
    direct line integral (oracle method).
    """
    om = query.omega
    kappa = query.kappa
    p_eff = kappa / 2.0 + 1.0
    if not abs(query.z_arg) < p_eff * math.pi / kappa:
        raise OutOfRegimeError(
            f"|arg z| must be below p pi/kappa = {p_eff * math.pi / kappa:.6f}")
    if query.method == TerminantMethod.ORACLE:
        return _gen_oracle_scaled(om, kappa, query.z_mod, query.z_arg)
    _check_band(om, query.z_mod)
    if kappa == 1:
        return _std_scaled_asym(om, query.z_mod, query.z_arg)
    acc_re = NeumaierSum()
    acc_im = NeumaierSum()
    for psi in fourier_roots("psi", kappa):
        piece = _std_scaled_asym(om, query.z_mod, query.z_arg + psi)
        rot = complex(math.cos(om * psi), math.sin(om * psi))
        val = rot * piece
        acc_re.add(val.real)
        acc_im.add(val.imag)
    return complex(acc_re.value, acc_im.value) / kappa


def _polar(z: complex | None, z_mod: float | None, z_arg: float | None):
    if z is not None:
        if z_mod is not None or z_arg is not None:
            raise DomainError("pass either z or (z_mod, z_arg), not both")
        z = complex(z)
        return abs(z), math.atan2(z.imag, z.real)
    if z_mod is None or z_arg is None:
        raise DomainError("z or both of z_mod/z_arg required")
    if not z_mod > 0.0:
        raise DomainError("z_mod must be positive")
    if not abs(z_arg) < 1.5 * math.pi:
        raise DomainError("|z_arg| must be below 3 pi/2")
    return float(z_mod), float(z_arg)
