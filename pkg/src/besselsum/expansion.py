"""Power-of-a side of the small-a expansion.

The sum decomposes as  S = H + sum_k (1/k) { series_k + R_k }  where H
collects the residues with Re(s) >= 0 of the underlying Mellin-Barnes
integrand and series_k is a finite asymptotic series in powers of
(a / (2 (2 pi k)^p))^2.  This module owns H (with its two double-pole limit
branches), the characteristic scales, optimal truncation of series_k, and
the inverse-factorial coefficients c_j.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Sequence

from . import special
from ._tables import EULER
from .accum import NeumaierSum
from .errors import BranchWarning, DomainError, UnsupportedDepthError
from .sums import SumParams

BRANCH_EPS = 1e-9
LN_TWO_PI = 1.8378770664093453

# terms below this absolute size cannot move any reported quantity in
# binary64; dropping them keeps far-k series loops short
TERM_FLOOR = 1e-25


@dataclass(frozen=True)
class Scales:
    """Characteristic constants of the expansion for given (nu, p)."""

    kappa: int
    h: float
    vartheta: float
    A_cal: float
    A0: float


@dataclass(frozen=True)
class TruncationPlan:
    K: int
    N: Sequence[int]
    M: int
    alpha: Sequence[float]

    def __post_init__(self):
        if self.K < 1 or len(self.N) != self.K or len(self.alpha) != self.K:
            raise DomainError("inconsistent truncation plan")


class HBranchKind(str, Enum):
    GENERIC = "generic"
    NU_ZERO = "nu_zero"
    NU_STAR = "nu_star"


@dataclass(frozen=True)
class HBranch:
    value: float
    branch: HBranchKind


@dataclass(frozen=True)
class AlgebraicSeries:
    """per_k[i] is the k = i+1 series value (prefactor included)."""

    per_k: Sequence[float]
    total: float
    k_tail_bound: float


def derived_scales(params: SumParams) -> Scales:
    p = params.p
    nu = params.nu
    kappa = 2 * (p - 1)
    return Scales(
        kappa=kappa,
        h=float(2 * p) ** (2 * p),
        vartheta=-nu,
        A_cal=p - 1.5 - (kappa + 1) * nu,
        A0=2.0 * math.pi * float(kappa) ** (0.5 + nu) * math.sqrt(2.0 * p),
    )


def x_scale(params: SumParams, k: int) -> float:
    """Large parameter X_k = kappa (2/a (pi k/p)^p)^(1/(p-1))."""
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    p = params.p
    return 2.0 * (p - 1) * (2.0 / params.a * (math.pi * k / p) ** p) ** (1.0 / (p - 1))


def optimal_truncation(params: SumParams, k: int) -> tuple[int, float]:
    """Truncation index N_k (cut just before the smallest term) and the
    rounding residue alpha_k of X_k = kappa N_k + A + alpha_k."""
    sc = derived_scales(params)
    x = x_scale(params, k)
    n = max(1, int(round((x - sc.A_cal) / sc.kappa)))
    alpha = x - sc.kappa * n - sc.A_cal
    return n, alpha


def h_part(params: SumParams) -> HBranch:
    """Residue contribution from Re(s) >= 0; three branches, the double
    poles at nu = 0 and nu = 1/(2p) being removable limits."""
    nu = params.nu
    p = params.p
    a = params.a
    half_a = 0.5 * a
    nu_star = 1.0 / (2.0 * p)
    g_star = special.gamma_real(nu_star)

    if nu < BRANCH_EPS:
        if nu != 0.0:
            warnings.warn("nu within branch tolerance of 0; using the "
                          "double-pole limit branch", BranchWarning, stacklevel=2)
        value = (g_star * g_star / (4.0 * p) * half_a ** (-1.0 / p)
                 + 0.5 * (EULER + math.log(half_a) - p * LN_TWO_PI))
        return HBranch(value, HBranchKind.NU_ZERO)

    if abs(nu - nu_star) < BRANCH_EPS:
        if nu != nu_star:
            warnings.warn("nu within branch tolerance of 1/(2p); using the "
                          "double-pole limit branch", BranchWarning, stacklevel=2)
        value = (g_star / (4.0 * p) * half_a ** (-1.0 / p)
                 * (special.digamma_real(nu_star) - 2.0 * math.log(half_a)
                    + (2.0 * p - 1.0) * EULER)
                 + math.pi / (special.sinpi(nu_star) * 4.0
                              * special.gamma_real(1.0 + nu_star)))
        return HBranch(value, HBranchKind.NU_STAR)

    value = (0.5 * special.gamma_real(nu) * half_a ** (-2.0 * nu)
             * special.zeta_real(2.0 * p * nu)
             + g_star * special.gamma_real(nu_star - nu) / (4.0 * p)
             * half_a ** (-1.0 / p)
             + math.pi / (special.sinpi(nu) * 4.0 * special.gamma_real(1.0 + nu)))
    return HBranch(value, HBranchKind.GENERIC)


def sin_ratio_prefactor(nu: float, p: int) -> float:
    """sin(pi p nu) / (2 sin(pi nu)) with its nu -> 0 limit p/2."""
    if abs(nu) < 1e-12:
        return 0.5 * p
    return special.sinpi(p * nu) / (2.0 * special.sinpi(nu))


def _log_series_base(params: SumParams, k: int) -> float:
    # ln of a / (2 (2 pi k)^p)
    return (math.log(params.a) - math.log(2.0)
            - params.p * math.log(2.0 * math.pi * k))


def algebraic_term(n: int, k: int, params: SumParams) -> float:
    """n-th inner term of the k-th series, prefactor excluded."""
    if n < 1 or k < 1:
        raise DomainError("n and k must be >= 1")
    nu = params.nu
    p = params.p
    lg = (special.log_gamma_real(2.0 * p * (n - nu) + 1.0)
          - special.log_gamma_real(n + 1.0)
          - special.log_gamma_real(n - nu + 1.0)
          + (2.0 * n - 2.0 * nu) * _log_series_base(params, k))
    sign = -1.0 if (p * n) % 2 else 1.0
    if lg < -745.0:
        return 0.0
    return sign * math.exp(lg)


def _k_tail_bound(params: SumParams, K: int, pref: float) -> float:
    """Bound on |sum_{k>K} per_k/k| from the first inner term's k-decay."""
    if pref == 0.0:
        return 0.0
    nu = params.nu
    p = params.p
    beta = 2.0 * p * (1.0 - nu)
    lg1 = (special.log_gamma_real(2.0 * p * (1.0 - nu) + 1.0)
           - special.log_gamma_real(2.0 - nu)
           + (2.0 - 2.0 * nu) * _log_series_base(params, 1))
    if lg1 - beta * math.log(K) < -745.0:
        return 0.0
    # sum_{k>K} k^(-beta-1) <= K^(-beta)/beta; factor 2 covers n >= 2 terms
    return 2.0 * abs(pref) * math.exp(lg1) * K ** (-beta) / beta


def algebraic_series(params: SumParams, plan: TruncationPlan) -> AlgebraicSeries:
    """Per-k truncated series values and their compensated k-reduction.

    The contribution of k > plan.K is not summed; a rigorous bound on it is
    reported in ``k_tail_bound`` so callers can size K for their target.
    """
    pref = sin_ratio_prefactor(params.nu, params.p)
    per_k = []
    total = NeumaierSum()
    for idx in range(plan.K):
        k = idx + 1
        inner = NeumaierSum()
        if pref != 0.0:
            for n in range(1, plan.N[idx]):
                t = algebraic_term(n, k, params)
                inner.add(t)
                if abs(t) < TERM_FLOOR:
                    break
        value = pref * inner.value
        per_k.append(value)
        total.add(value / k)
    return AlgebraicSeries(per_k, total.value,
                           _k_tail_bound(params, plan.K, pref))


def ifc_coefficient(j: int, nu: float, p: int, *,
                    table: Mapping[tuple, Sequence[float]] | None = None) -> float:
    """Inverse-factorial-expansion coefficient c_j(nu, p).

    Closed forms are built in for j <= 2; deeper coefficients must be
    supplied through ``table``, keyed by (nu, p) with entries [c_3, c_4, ...].
    """
    if j < 0:
        raise DomainError(f"j must be >= 0, got {j}")
    if j == 0:
        return 1.0
    if j == 1:
        return (2.0 * p - 1.0) / (12.0 * p) * (2.0 * p * (1.0 + 3.0 * nu + 3.0 * nu * nu) - 1.0)
    if j == 2:
        # the nu^3 term in the p^2 bracket is misprinted as nu^4 in some
        # renderings; the form below matches the defining expansion
        nu2 = nu * nu
        nu3 = nu2 * nu
        nu4 = nu2 * nu2
        return (2.0 * p - 1.0) / (288.0 * p * p) * (
            -1.0
            + p * (-18.0 - 12.0 * nu + 12.0 * nu2)
            + p * p * (36.0 + 72.0 * nu - 12.0 * nu2 - 72.0 * nu3 - 36.0 * nu4)
            + p ** 3 * (8.0 + 96.0 * nu + 264.0 * nu2 + 240.0 * nu3 + 72.0 * nu4))
    if table is not None:
        entry = table.get((nu, p))
        if entry is not None and len(entry) > j - 3:
            return float(entry[j - 3])
    raise UnsupportedDepthError(
        f"c_{j} has no built-in closed form; supply it via the coefficient table")


def default_plan(params: SumParams, K: int = 8, M: int = 1) -> TruncationPlan:
    """Optimal-truncation plan with K retained series."""
    ns = []
    alphas = []
    for k in range(1, K + 1):
        n, alpha = optimal_truncation(params, k)
        ns.append(n)
        alphas.append(alpha)
    return TruncationPlan(K, tuple(ns), M, tuple(alphas))
