"""Accuracy contracts of the scalar kernels.

Every operation is checked against an independent oracle: closed forms,
adaptive quadrature of defining integrals, or mpmath at 40 digits.
"""
import math
import random

import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from besselsum import special
from besselsum.errors import DomainError, PoleError

from conftest import rel_err

SQRT_PI = 1.7724538509055160

# frozen oracle values (mpmath, 40 digits)
GAMMA_QUARTER = 3.625609908221908
LGAMMA_500_5 = 2608.2229044109868
DIGAMMA_QUARTER = -4.2274535333762655
ZETA_HALF = -1.4603545088095868
ERFC_ONE = 0.15729920705028513
EK0_1 = 1.144463079806895


class TestGammaReal:
    def test_half_integer(self):
        assert rel_err(special.gamma_real(0.5), SQRT_PI) < 1e-14

    def test_one(self):
        assert special.gamma_real(1.0) == pytest.approx(1.0, rel=1e-14)

    def test_quarter_vs_quadrature(self):
        # independent oracle: adaptive quadrature of the Euler integral
        val, err = _quad_gamma(0.25)
        assert err < 1e-12
        assert rel_err(special.gamma_real(0.25), val) < 1e-12
        assert rel_err(special.gamma_real(0.25), GAMMA_QUARTER) < 1e-13

    def test_range_vs_mpmath(self, mp40):
        for x in [1e-3, 0.1, 0.7, 1.5, 3.0, 10.5, 25.25, 77.7, 120.0, 170.0,
                  -0.5, -1.5, -20.3, -99.7, -170.5]:
            assert rel_err(special.gamma_real(x), mp40.gamma(x)) < 1e-13, x

    def test_poles(self):
        for x in (0.0, -1.0, -7.0):
            with pytest.raises(DomainError):
                special.gamma_real(x)

    @settings(max_examples=100, deadline=None)
    @given(st.floats(min_value=1e-3, max_value=1.0 - 1e-3))
    def test_reflection_identity(self, x):
        lhs = (special.gamma_real(x) * special.gamma_real(1.0 - x)
               * math.sin(math.pi * x) / math.pi)
        assert abs(lhs - 1.0) < 1e-11


def _quad_gamma(x):
    # composite Simpson on t in (0, 60) with substitution t = u^2 near 0
    import scipy.integrate as si

    val, err = si.quad(lambda t: t ** (x - 1.0) * math.exp(-t), 0.0, 60.0,
                       limit=200, epsabs=1e-14, epsrel=1e-13)
    return val, err


class TestLogGammaReal:
    def test_trivial(self):
        assert special.log_gamma_real(1.0) == pytest.approx(0.0, abs=1e-14)
        assert special.log_gamma_real(11.0) == pytest.approx(
            math.log(3628800.0), rel=1e-14)

    def test_500_5_vs_recurrence(self):
        # oracle: ln of the product recurrence down to [1, 2) plus mpmath base
        x = 500.5
        acc = 0.0
        y = x
        while y >= 2.0:
            y -= 1.0
            acc += math.log(y)
        base = float(mp.loggamma(y))
        ref = acc + base
        assert abs(special.log_gamma_real(x) - ref) < 1e-10
        assert rel_err(special.log_gamma_real(x), LGAMMA_500_5) < 5e-15

    def test_moderate_absolute(self, mp40):
        for x in [1e-4, 0.01, 0.3, 0.99, 1.0, 1.46, 2.0, 5.0, 11.99, 12.0, 19.5]:
            assert abs(special.log_gamma_real(x) - float(mp40.loggamma(x))) < 1e-12, x

    def test_large_relative(self, mp40):
        for x in [50.0, 500.5, 5e3, 1e5, 1e6]:
            assert rel_err(special.log_gamma_real(x), mp40.loggamma(x)) < 5e-15, x

    def test_domain(self):
        with pytest.raises(DomainError):
            special.log_gamma_real(0.0)

    @settings(max_examples=100, deadline=None)
    @given(st.floats(min_value=0.1, max_value=1e4))
    def test_recurrence_identity(self, x):
        lhs = (special.log_gamma_real(x + 1.0) - special.log_gamma_real(x)
               - math.log(x))
        assert abs(lhs) < 1e-11 * max(1.0, abs(special.log_gamma_real(x + 1.0)))


class TestLogGammaComplex:
    def test_one(self):
        assert abs(special.log_gamma_complex(1.0 + 0j)) < 1e-13

    def test_recurrence(self):
        z = 2 + 3j
        lhs = (special.log_gamma_complex(z + 1) - special.log_gamma_complex(z))
        ref = complex(math.log(abs(z)), math.atan2(z.imag, z.real))
        assert abs(lhs - ref) < 1e-12

    def test_modulus_identity(self):
        # |Gamma(1 + i y)|^2 = pi y / sinh(pi y)
        y = 10.0
        got = special.log_gamma_complex(1.0 + 10j)
        ref = 0.5 * math.log(math.pi * y / math.sinh(math.pi * y))
        assert abs(got.real - ref) < 1e-12

    def test_grid_vs_mpmath(self, mp40):
        pts = [0.3 + 0.1j, 1 + 1j, 5 - 40j, 12.5 + 0j, 0.01 + 150j,
               199 + 10j, 3 + 199j, 0.6 - 7.3j]
        for z in pts:
            ref = mp40.loggamma(mp40.mpc(z.real, z.imag))
            got = special.log_gamma_complex(z)
            assert abs(got - complex(ref)) < 1e-11, z

    def test_domain(self):
        with pytest.raises(DomainError):
            special.log_gamma_complex(-1 + 1j)


class TestDigamma:
    def test_trivial(self):
        assert abs(special.digamma_real(1.0) + 0.5772156649015329) < 1e-13
        assert abs(special.digamma_real(0.5)
                   + 0.5772156649015329 + 2.0 * math.log(2.0)) < 1e-12

    def test_quarter_by_finite_difference(self):
        # Richardson-extrapolated central difference of log Gamma
        h = 1e-5
        d1 = (special.log_gamma_real(0.25 + h) - special.log_gamma_real(0.25 - h)) / (2 * h)
        d2 = (special.log_gamma_real(0.25 + 2 * h) - special.log_gamma_real(0.25 - 2 * h)) / (4 * h)
        ref = (4.0 * d1 - d2) / 3.0
        assert abs(special.digamma_real(0.25) - ref) < 1e-9
        assert abs(special.digamma_real(0.25) - DIGAMMA_QUARTER) < 1e-12

    def test_grid(self, mp40):
        for x in [1e-3, 0.2, 1.0, 3.7, 11.99, 12.0, 100.0, 1e5]:
            assert abs(special.digamma_real(x) - float(mp40.digamma(x))) < 1e-12, x

    def test_domain(self):
        with pytest.raises(DomainError):
            special.digamma_real(-3.0)


class TestZeta:
    def test_basel(self):
        assert rel_err(special.zeta_real(2.0), math.pi ** 2 / 6.0) < 1e-14

    def test_zero(self):
        assert special.zeta_real(0.0) == pytest.approx(-0.5, rel=1e-13)

    def test_half_vs_accelerated_eta(self):
        # independent oracle: Euler-transformed alternating series
        ref = _eta_euler_transform(0.5)
        assert rel_err(special.zeta_real(0.5), ref) < 1e-11
        assert rel_err(special.zeta_real(0.5), ZETA_HALF) < 1e-13

    def test_grid(self, mp40):
        for s in [-10.0, -5.5, -0.5, -1e-3, 0.25, 0.5, 0.999, 1.001, 1.5,
                  2.0, 10.0, 37.5, 60.0]:
            assert rel_err(special.zeta_real(s), mp40.zeta(s)) < 1e-13, s

    def test_trivial_zeros(self):
        assert special.zeta_real(-2.0) == 0.0
        assert special.zeta_real(-8.0) == 0.0

    def test_pole(self):
        with pytest.raises(PoleError):
            special.zeta_real(1.0)

    def test_functional_equation(self):
        for s in (-0.5, 0.3, 0.7):
            lhs = special.zeta_real(s)
            rhs = (2.0 ** s * math.pi ** (s - 1.0) * special.gamma_real(1.0 - s)
                   * special.zeta_real(1.0 - s) * math.sin(math.pi * s / 2.0))
            assert abs(lhs - rhs) < 1e-10 * max(1.0, abs(lhs))


def _eta_euler_transform(s, n=60):
    # Euler transform of sum (-1)^(k-1) k^-s, then eta -> zeta
    from math import comb

    acc = 0.0
    for k in range(n):
        inner = sum((-1) ** j * comb(k, j) * (j + 1.0) ** (-s) for j in range(k + 1))
        acc += inner / 2.0 ** (k + 1)
    return acc / -math.expm1((1.0 - s) * math.log(2.0))


class TestBesselK:
    def test_half_order_closed_form(self):
        for x in [0.01, 0.1, 0.5, 1.0, 2.0, 7.0, 33.3, 100.0]:
            ref = math.sqrt(math.pi / (2.0 * x))
            assert rel_err(special.bessel_k_scaled(0.5, x), ref) < 1e-13, x

    def test_k0_one_vs_quadrature(self):
        # oracle: e^x Int_0^inf exp(-x cosh t) dt at x = 1
        import scipy.integrate as si

        val, err = si.quad(lambda t: math.exp(-math.cosh(t) + 1.0), 0.0, 30.0,
                           limit=200, epsabs=1e-14)
        assert err < 1e-12
        assert rel_err(special.bessel_k_scaled(0.0, 1.0), val) < 1e-12
        assert rel_err(special.bessel_k_scaled(0.0, 1.0), EK0_1) < 1e-13

    def test_grid_vs_mpmath(self, mp40):
        nus = [0.0, 1e-13, 1e-7, 0.1, 0.25, 0.49, 0.5, 0.51, 0.75, 0.9, 0.999]
        xs = [1e-6, 1e-3, 0.05, 0.7, 1.999, 2.0, 2.001, 5.0, 20.0, 120.0,
              900.0, 1e4]
        for nu in nus:
            for x in xs:
                ref = mp40.exp(x) * mp40.besselk(nu, x)
                assert rel_err(special.bessel_k_scaled(nu, x), ref) < 1e-13, (nu, x)

    def test_domain(self):
        with pytest.raises(DomainError):
            special.bessel_k_scaled(1.0, 1.0)
        with pytest.raises(DomainError):
            special.bessel_k_scaled(0.5, 0.0)
        with pytest.raises(DomainError):
            special.bessel_k_scaled(-0.1, 1.0)


class TestErfcComplex:
    def test_zero(self):
        assert special.erfc_complex(0j) == pytest.approx(1.0)

    def test_one_vs_series_and_cf(self):
        assert rel_err(special.erfc_complex(1.0 + 0j), ERFC_ONE) < 1e-12

    def test_real_axis_matches_stdlib(self):
        for x in [-6.0, -2.5, -1.0, -0.1, 0.0, 0.3, 1.0, 2.3, 4.0, 8.5, 20.0]:
            got = special.erfc_complex(complex(x, 0.0))
            assert abs(got.imag) < 1e-16 * max(1.0, abs(got.real))
            assert rel_err(got.real, math.erfc(x)) < 1e-11, x

    def test_schwarz_reflection(self):
        z = 0.3 + 0.7j
        a = special.erfc_complex(z.conjugate())
        b = special.erfc_complex(z).conjugate()
        assert abs(a - b) < 1e-14

    def test_sum_identity(self):
        random.seed(42)
        for _ in range(50):
            z = complex(random.uniform(-4, 4), random.uniform(-4, 4))
            s = special.erfc_complex(z) + special.erfc_complex(-z)
            assert abs(s - 2.0) < 1e-11 * max(1.0, abs(special.erfc_complex(z)))

    def test_grid_vs_mpmath(self, mp40):
        pts = [0.5 + 0.5j, 2 + 2j, 3 - 1j, 5 + 0.2j, 1 + 5j, 0.2 + 8j,
               10 + 10j, 25 + 3j, -3 + 2j, -1 - 6j, 0.1 + 20j, 7 - 30j,
               35 + 1j, 0.5 + 12j]
        for z in pts:
            ref = complex(mp40.erfc(mp40.mpc(z.real, z.imag)))
            got = special.erfc_complex(z)
            assert abs(got - ref) <= 1e-11 * max(1.0, abs(ref)), z
