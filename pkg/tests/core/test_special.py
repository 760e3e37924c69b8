"""
Unit tests for the special functions.
"""

import math

import pytest
from scipy import special as sp

from sensize.core.errors import DomainError
from sensize.core.special import (
    ln_beta,
    ln_gamma,
    normal_cdf,
    reg_inc_beta,
    reg_inc_gamma_lower,
    reg_inc_gamma_upper,
)


class TestLnGamma:
    """Test cases for ln_gamma and ln_beta."""

    @pytest.mark.parametrize("x", [0.5, 1.0, 2.5, 10.0, 171.3, 1e5])
    def test_matches_scipy(self, x):
        """Test ln_gamma against scipy.special.gammaln."""
        assert ln_gamma(x) == pytest.approx(sp.gammaln(x), rel=1e-13, abs=1e-14)

    def test_integers_are_log_factorials(self):
        """Test ln Γ(n) = ln (n-1)!."""
        assert ln_gamma(5.0) == pytest.approx(math.log(24.0))

    @pytest.mark.parametrize("x", [0.0, -1.0, float("inf"), float("nan")])
    def test_rejects_non_positive(self, x):
        """Test ln_gamma outside its domain."""
        with pytest.raises(DomainError, match="x > 0"):
            ln_gamma(x)

    def test_ln_beta(self):
        """Test ln_beta against scipy.special.betaln."""
        assert ln_beta(2.5, 7.0) == pytest.approx(sp.betaln(2.5, 7.0), rel=1e-13)


class TestRegIncBeta:
    """Test cases for the regularized incomplete beta function."""

    @pytest.mark.parametrize(
        "a,b,x",
        [
            (0.5, 0.5, 0.3),
            (1.0, 1.0, 0.42),
            (2.0, 3.0, 0.9),
            (0.5, 136.5, 0.01),
            (50.0, 0.5, 0.999),
            (250.0, 250.0, 0.5),
            (1.5, 1000.0, 0.002),
        ],
    )
    def test_matches_scipy(self, a, b, x):
        """Test I_x(a, b) against scipy.special.betainc."""
        assert reg_inc_beta(a, b, x) == pytest.approx(sp.betainc(a, b, x), rel=1e-11, abs=1e-15)

    def test_endpoints(self):
        """Test I_0 = 0 and I_1 = 1."""
        assert reg_inc_beta(2.0, 3.0, 0.0) == 0.0
        assert reg_inc_beta(2.0, 3.0, 1.0) == 1.0

    def test_symmetry(self):
        """Test I_x(a, b) = 1 - I_{1-x}(b, a)."""
        assert reg_inc_beta(3.0, 7.0, 0.2) == pytest.approx(1.0 - reg_inc_beta(7.0, 3.0, 0.8))

    @pytest.mark.parametrize("a,b,x", [(0.0, 1.0, 0.5), (1.0, -1.0, 0.5), (1.0, 1.0, 1.5)])
    def test_domain(self, a, b, x):
        """Test out-of-range arguments."""
        with pytest.raises(DomainError):
            reg_inc_beta(a, b, x)


class TestRegIncGamma:
    """Test cases for the regularized incomplete gamma functions."""

    @pytest.mark.parametrize(
        "s,x", [(0.5, 0.1), (0.5, 3.0), (2.0, 1.0), (10.0, 12.0), (100.0, 80.0), (3.5, 40.0)]
    )
    def test_matches_scipy(self, s, x):
        """Test P and Q against scipy.special.gammainc and gammaincc."""
        assert reg_inc_gamma_lower(s, x) == pytest.approx(sp.gammainc(s, x), rel=1e-11, abs=1e-15)
        assert reg_inc_gamma_upper(s, x) == pytest.approx(
            sp.gammaincc(s, x), rel=1e-11, abs=1e-15
        )

    def test_complement(self):
        """Test P + Q = 1."""
        assert reg_inc_gamma_lower(4.0, 3.0) + reg_inc_gamma_upper(4.0, 3.0) == pytest.approx(1.0)

    def test_upper_tail_keeps_precision(self):
        """Test Q far in the tail is not lost to cancellation."""
        assert reg_inc_gamma_upper(0.5, 50.0) == pytest.approx(sp.gammaincc(0.5, 50.0), rel=1e-9)

    def test_zero_and_infinity(self):
        """Test P(s, 0) = 0 and P(s, inf) = 1."""
        assert reg_inc_gamma_lower(2.0, 0.0) == 0.0
        assert reg_inc_gamma_lower(2.0, float("inf")) == 1.0
        assert reg_inc_gamma_upper(2.0, 0.0) == 1.0

    def test_domain(self):
        """Test s <= 0 and x < 0 are rejected."""
        with pytest.raises(DomainError, match="s > 0"):
            reg_inc_gamma_lower(0.0, 1.0)
        with pytest.raises(DomainError, match="x >= 0"):
            reg_inc_gamma_upper(1.0, -1.0)


class TestNormalCdf:
    def test_values(self):
        """Test a few standard normal probabilities."""
        assert normal_cdf(0.0) == 0.5
        assert normal_cdf(1.6448536269514722) == pytest.approx(0.95, abs=1e-12)
        assert normal_cdf(-8.0) == pytest.approx(sp.ndtr(-8.0), rel=1e-12)
