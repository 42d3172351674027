"""Direct evaluation of the Bessel sum and its nu = 1/2 closed form.

The target quantity is

    S(nu, p, a) = sum_{n >= 1} (a n^p / 2)^(-nu) K_nu(a n^p),

summed ascending with compensated accumulation and a rigorous tail bound:
past any index the terms sit under the envelope
sqrt(pi) (a n^p/2)^(-nu-1/2) exp(-a n^p) (asymptotic K envelope with a
safety factor of two), and consecutive-term ratios are below
exp(-a p n^(p-1)), so the tail is bounded by a geometric sum.

At nu = 1/2 the Bessel function collapses to an exponential and

    S(1/2, p, a) = (sqrt(pi)/2) (2/a)^(nu+1/2) sum_{n>=1} exp(-a n^p)/n^w,

with w = p (nu + 1/2); this identity is the primary cross-check oracle.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from ._backend import kernels
from .errors import DomainError
from .scaled import ScaledReal

_N_CAP = 10_000_000


@dataclass(frozen=True)
class SumParams:
    """The (nu, p, a) triple defining one sum."""

    nu: float
    p: int
    a: float

    def __post_init__(self):
        if not 0.0 <= self.nu < 1.0:
            raise DomainError(f"nu must be in [0, 1), got {self.nu}")
        if not (isinstance(self.p, int) and self.p >= 2):
            raise DomainError(f"p must be an integer >= 2, got {self.p!r}")
        if not self.a > 0.0:
            raise DomainError(f"a must be positive, got {self.a}")


@dataclass(frozen=True)
class OracleResult:
    value: float
    terms_used: int
    tail_bound: float
    rel_tol_achieved: float


def bessel_term(n: int, params: SumParams) -> ScaledReal:
    """Single term (a n^p/2)^(-nu) K_nu(a n^p) as a ScaledReal."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    x = params.a * float(n) ** params.p
    scaled_k = kernels.besselk_scaled(params.nu, x)
    return ScaledReal.from_log(
        math.log(scaled_k) - x - params.nu * math.log(0.5 * x), 1.0)


def direct_sum(params: SumParams, rel_tol: float = 1e-13, *,
               hp: bool = False) -> OracleResult:
    """Brute-force oracle value of the sum.

    Parameters
    ----------
    params : SumParams
    rel_tol : float
        Requested relative tolerance, within [1e-15, 1e-6].
    hp : bool
        When true, sum with mpmath at 40 significant digits behind the same
        interface (the returned value is then an mpf).

    Returns
    -------
    OracleResult
        ``rel_tol_achieved > rel_tol`` flags a best-effort result.
    """
    if not 1e-15 <= rel_tol <= 1e-6:
        raise DomainError(f"rel_tol must be in [1e-15, 1e-6], got {rel_tol}")
    if hp:
        return _direct_sum_hp(params, rel_tol)
    value, terms, tail, _converged = kernels.direct_sum_loop(
        params.nu, params.p, params.a, rel_tol, _N_CAP)
    achieved = tail / abs(value) if value != 0.0 else math.inf
    return OracleResult(value, terms, tail, achieved)


def _direct_sum_hp(params: SumParams, rel_tol: float) -> OracleResult:
    import mpmath as mp

    with mp.workdps(40):
        nu = mp.mpf(params.nu)
        a = mp.mpf(params.a)
        acc = mp.mpf(0)
        n = 0
        floor = mp.mpf(10) ** (-38)
        while True:
            n += 1
            x = a * mp.mpf(n) ** params.p
            acc += (x / 2) ** (-nu) * mp.besselk(nu, x)
            m = n + 1
            xm = a * mp.mpf(m) ** params.p
            bound = (2 * mp.sqrt(mp.pi) * (xm / 2) ** (-nu - mp.mpf("0.5"))
                     * mp.exp(-xm) / (1 - mp.exp(-a * params.p * mp.mpf(m) ** (params.p - 1))))
            if bound <= floor * abs(acc):
                break
        return OracleResult(acc, n, float(bound), float(bound / abs(acc)))


def euler_jacobi_closed_form(params: SumParams, rel_tol: float = 1e-13) -> float:
    """Closed-form value at nu = 1/2 via the plain exponential sum."""
    if params.nu != 0.5:
        raise DomainError("closed form requires nu = 1/2 exactly")
    w = params.p * (params.nu + 0.5)
    raw, _terms, _tail, converged = kernels.ej_sum_loop(
        params.p, w, params.a, rel_tol, _N_CAP)
    if not converged:
        raise DomainError("exponential sum failed to converge")  # unreachable
    pref = 0.5 * math.sqrt(math.pi) * (2.0 / params.a) ** (params.nu + 0.5)
    return pref * raw
