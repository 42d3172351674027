"""Exponentially small remainder of the optimally truncated expansion.

Two predictors are provided for the remainder R_k left after cutting the
k-th series at its optimal index N_k:

* ``remainder_theorem2``: the general assembly through generalised
  terminants,

      R_k = (-1)^{N_k} (A0/4pi) sum_r S(M; X_k e^{i phi_r}),
      S(M; w) = sum_j (-1)^j c_j w^{theta-j} e^w T_{mu_k-j}(kappa; w),

  with the real-pairing split between even and odd p;

* ``remainder_leading``: the closed leading forms for p = 2..5, e.g. for
  p = 3 the single subdominant exponential
  2^{2 nu - 1/2} sqrt(3) X^{-nu} e^{-X/sqrt 2} sin[X/sqrt 2 - 3 pi nu/4 + ...].

The decay rates of the increasingly subdominant exponentials form the
ladder cos(pi (p - 2 l)/kappa), l = 1 .. ceil(p/2)-1, closed by the unit
rate; the ladder gains one rung each time p passes an odd integer.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

from .accum import NeumaierSum
from .errors import DomainError
from .expansion import derived_scales, ifc_coefficient, x_scale
from .sums import SumParams
from .terminant import TerminantMethod, TerminantQuery, fourier_roots, terminant_gen

_SQRT2 = math.sqrt(2.0)
_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class RemainderPrediction:
    value: float
    dominant_exponents: Sequence[float]
    X_k: float
    mu_k: float
    j_terms_used: int


def exponent_ladder(p: int) -> tuple[float, ...]:
    """Decay rates of the subdominant exponentials, ascending, unit last."""
    if p < 2:
        raise DomainError(f"p must be >= 2, got {p}")
    kappa = 2 * (p - 1)
    rates = [math.cos(math.pi * (p - 2 * ell) / kappa)
             for ell in range(1, (p + 1) // 2)]
    rates.append(1.0)
    return tuple(sorted(rates))


def _mu_k(params: SumParams, n_k: int) -> float:
    sc = derived_scales(params)
    return sc.vartheta + sc.kappa * n_k - sc.kappa * params.nu


def remainder_leading(params: SumParams, k: int, n_k: int, alpha_k: float,
                      m_terms: int = 1, *,
                      table: Mapping[tuple, Sequence[float]] | None = None
                      ) -> RemainderPrediction:
    """Closed leading form of R_k for p in {2, 3, 4, 5}.

    For p >= 6 no closed form is printed; the query routes to the
    terminant assembly.
    """
    p = params.p
    nu = params.nu
    if m_terms < 1 or m_terms > 3:
        raise DomainError("closed forms support 1 <= M <= 3")
    if p >= 6:
        return remainder_theorem2(params, k, n_k, m_terms, table=table)
    x = x_scale(params, k)
    mu = _mu_k(params, n_k)
    ladder = exponent_ladder(p)
    acc = NeumaierSum()
    for j in range(m_terms):
        cj = ifc_coefficient(j, nu, p, table=table)
        sj = -1.0 if j % 2 else 1.0
        if p == 2:
            b0 = 7.0 / 6.0 + alpha_k + j
            brace = (math.cos(math.pi * nu) / math.sqrt(_TWO_PI * x)
                     * (1.0 + 2.0 * b0) - math.sin(math.pi * nu))
            acc.add(sj * cj / x ** j * brace)
        elif p == 3:
            acc.add(sj * cj / x ** j
                    * math.sin(x / _SQRT2 - 0.75 * math.pi * nu + 0.25 * math.pi * j))
        elif p == 4:
            acc.add(sj * cj / x ** j
                    * math.sin(0.5 * math.sqrt(3.0) * x - 2.0 / 3.0 * math.pi * nu
                               + math.pi * j / 3.0))
        else:  # p == 5
            s38 = math.sin(0.375 * math.pi)
            c38 = math.cos(0.375 * math.pi)
            s18 = math.sin(0.125 * math.pi)
            c18 = math.cos(0.125 * math.pi)
            acc.add(sj * cj / x ** j * (
                math.exp(-x * c38)
                * math.sin(x * s38 - 0.625 * math.pi * nu + 0.375 * math.pi * j)
                + 2.0 * math.cos(math.pi * nu) * math.exp(-x * c18)
                * math.sin(x * s18 - 1.875 * math.pi * nu + 0.125 * math.pi * j)))
    if p == 2:
        value = 2.0 ** (nu - 0.5) * x ** (-nu) * math.exp(-x) * acc.value
    elif p == 3:
        value = (2.0 ** (2.0 * nu - 0.5) * math.sqrt(3.0) * x ** (-nu)
                 * math.exp(-x / _SQRT2) * acc.value)
    elif p == 4:
        value = 2.0 / math.sqrt(3.0) * (x / 6.0) ** (-nu) * math.exp(-0.5 * x) * acc.value
    else:
        value = 0.5 * math.sqrt(5.0) * (x / 8.0) ** (-nu) * acc.value
    return RemainderPrediction(value, ladder, x, mu, m_terms)


def remainder_theorem2(params: SumParams, k: int, n_k: int, m_terms: int = 1, *,
                       method: TerminantMethod = TerminantMethod.ASYMPTOTIC,
                       table: Mapping[tuple, Sequence[float]] | None = None
                       ) -> RemainderPrediction:
    """R_k assembled from generalised terminants at the truncation indices."""
    p = params.p
    nu = params.nu
    sc = derived_scales(params)
    kappa = sc.kappa
    theta = sc.vartheta
    x = x_scale(params, k)
    mu = _mu_k(params, n_k)
    lnx = math.log(x)
    phis = fourier_roots("phi", p)

    def s_block(phi: float) -> complex:
        acc_re = NeumaierSum()
        acc_im = NeumaierSum()
        for j in range(m_terms):
            cj = ifc_coefficient(j, nu, p, table=table)
            sj = -1.0 if j % 2 else 1.0
            ezt = terminant_gen(TerminantQuery(mu - j, kappa, x, phi, method))
            # (X e^{i phi})^(theta - j)
            pw_re = (theta - j) * lnx
            pw_im = (theta - j) * phi
            w_pow = math.exp(pw_re) * complex(math.cos(pw_im), math.sin(pw_im))
            val = sj * cj * w_pow * ezt
            acc_re.add(val.real)
            acc_im.add(val.imag)
        return complex(acc_re.value, acc_im.value)

    sign = -1.0 if n_k % 2 else 1.0
    if p % 2 == 0:
        acc = NeumaierSum()
        for r in range((p - 2) // 2 + 1):
            acc.add(s_block(phis[r]).real)
        value = sign * sc.A0 / _TWO_PI * acc.value
    else:
        acc = NeumaierSum()
        acc.add(s_block(0.0).real)
        for r in range((p - 3) // 2 + 1):
            acc.add(2.0 * s_block(phis[r]).real)
        value = sign * sc.A0 / (2.0 * _TWO_PI) * acc.value
    return RemainderPrediction(value, exponent_ladder(p), x, mu, m_terms)
