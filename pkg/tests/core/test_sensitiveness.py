"""
Unit tests for sensitiveness analysis.
"""

import random

import pytest

from sensize.core.effect_size import EffectSize, Metric
from sensize.core.errors import DomainError, NumericError, SpecError
from sensize.core.sensitiveness import (
    SensitivenessResult,
    Tails,
    TestFamily,
    TestSpec,
    critical_value,
    first_satisfying,
    mes_at_n,
    min_sample_size,
    post_hoc_sensitiveness,
)


class TestTestSpec:
    """Test cases for TestSpec validation."""

    def test_chi2_requires_df(self):
        """Test chi-square needs df."""
        with pytest.raises(SpecError, match="df >= 1"):
            TestSpec(TestFamily.CHI2_GOF)

    def test_anova_requires_groups(self):
        """Test ANOVA needs at least two groups."""
        with pytest.raises(SpecError, match="k_groups >= 2"):
            TestSpec.oneway_f(1)

    def test_misplaced_parameters(self):
        """Test df and k_groups are refused by other families."""
        with pytest.raises(SpecError, match="takes no df"):
            TestSpec(TestFamily.T_TWO_SAMPLE, df=2)
        with pytest.raises(SpecError, match="takes no k_groups"):
            TestSpec(TestFamily.CHI2_GOF, df=1, k_groups=3)

    @pytest.mark.parametrize("sig", [0.0, 0.6, -0.05])
    def test_sig_range(self, sig):
        """Test sig must lie in (0, 0.5]."""
        with pytest.raises(SpecError, match="sig must be"):
            TestSpec.t_two_sample(sig=sig)

    def test_tails_normalized_for_chi2_and_f(self):
        """Test chi-square and F are always one-tailed."""
        assert TestSpec(TestFamily.CHI2_GOF, tails=Tails.TWO, df=2).tails is Tails.ONE
        assert TestSpec(TestFamily.ONEWAY_F, tails=Tails.TWO, k_groups=3).tails is Tails.ONE
        assert TestSpec.t_two_sample(tails=Tails.TWO).tails is Tails.TWO

    def test_distribution(self):
        """Test the null distribution at N."""
        assert TestSpec.t_two_sample().distribution(48).dfs == (46,)
        assert TestSpec.chi2_gof(3).distribution(87).dfs == (3,)
        assert TestSpec.oneway_f(6).distribution(188).dfs == (5, 182)

    def test_below_floor(self):
        """Test N below the df floor names the floor."""
        with pytest.raises(DomainError, match="minimum of 3"):
            TestSpec.t_two_sample().distribution(2)
        with pytest.raises(DomainError, match="minimum of 5"):
            TestSpec.oneway_f(4).distribution(4)

    def test_metric_compatibility(self):
        """Test incompatible metrics raise SpecError."""
        TestSpec.t_two_sample().check_metric(Metric.R)
        with pytest.raises(SpecError, match="does not fit"):
            TestSpec.chi2_gof(1).check_metric(Metric.D)

    def test_dict_round_trip(self):
        """Test to_dict / from_dict."""
        spec = TestSpec.oneway_f(4, sig=0.01)
        assert TestSpec.from_dict(spec.to_dict()) == spec


class TestMesAtN:
    """Test cases for a priori sensitiveness at a fixed N."""

    def test_thirty_participants(self):
        """Test N = 30 detects d = 0.64 at sig = .05."""
        assert mes_at_n(TestSpec.t_two_sample(), 30).mes.value == pytest.approx(0.64, abs=0.005)

    def test_strict_significance(self):
        """Test N = 164 detects d = 0.37 at sig = .01."""
        result = mes_at_n(TestSpec.t_two_sample(sig=0.01), 164)
        assert result.mes.value == pytest.approx(0.37, abs=0.005)

    def test_printed_medium_d(self):
        """Test N = 48 gives t(46) = 1.6787 and d = 0.4950."""
        result = mes_at_n(TestSpec.t_two_sample(), 48)
        assert result.df == (46,)
        assert result.critical_value == pytest.approx(1.6787, abs=5e-5)
        assert result.mes.value == pytest.approx(0.4950, abs=5e-5)

    def test_two_tailed_is_stricter(self):
        """Test a two-tailed test needs a larger effect."""
        one = mes_at_n(TestSpec.t_two_sample(), 48).mes.value
        two = mes_at_n(TestSpec.t_two_sample(tails=Tails.TWO), 48).mes.value
        assert two > one
        assert critical_value(TestSpec.t_two_sample(tails=Tails.TWO), 48) == pytest.approx(
            2.0129, abs=5e-5
        )

    def test_requested_metric(self):
        """Test reporting in r and V."""
        assert mes_at_n(TestSpec.t_two_sample(), 48, Metric.R).mes.metric is Metric.R
        result = mes_at_n(TestSpec.chi2_gof(3), 87, Metric.V)
        assert result.mes == EffectSize(Metric.V, result.mes.value, 3)
        assert result.mes.value == pytest.approx(0.1730, abs=5e-5)


class TestMinSampleSize:
    """Test cases for the minimum N search."""

    @pytest.mark.parametrize(
        "spec,target,n",
        [
            (TestSpec.t_two_sample(), EffectSize(Metric.D, 0.5), 48),
            (TestSpec.t_two_sample(), EffectSize(Metric.D, 0.2), 275),
            (TestSpec.point_biserial(), EffectSize(Metric.R, 0.3), 32),
            (TestSpec.chi2_gof(1), EffectSize(Metric.W, 0.3), 43),
            (TestSpec.chi2_gof(3), EffectSize(Metric.V, 0.289, 3), 32),
            (TestSpec.oneway_f(3), EffectSize(Metric.F, 0.4), 44),
            (TestSpec.oneway_f(6), EffectSize(Metric.F, 0.25), 188),
        ],
    )
    def test_known_values(self, spec, target, n):
        """Test minimum N for printed cases."""
        assert min_sample_size(spec, target).n_min == n

    def test_unequal_split_flag(self):
        """Test an odd N for two groups is flagged."""
        result = min_sample_size(TestSpec.t_two_sample(), EffectSize(Metric.D, 0.8))
        assert result.n_min == 21
        assert result.unequal_split is True

    def test_at_floor_flag(self):
        """Test a target met at the smallest N is flagged."""
        result = min_sample_size(TestSpec.chi2_gof(1), EffectSize(Metric.W, 2.0))
        assert result.n_min == 1
        assert result.at_floor is True

    def test_rounded_comparison(self):
        """Test four-decimal rounding reproduces hand-computed tables."""
        target = EffectSize(Metric.V, 0.071, 2)
        assert min_sample_size(TestSpec.chi2_gof(2), target, precision=4).n_min == 594

    def test_zero_target(self):
        """Test a zero target is refused."""
        with pytest.raises(SpecError, match="> 0"):
            min_sample_size(TestSpec.t_two_sample(), EffectSize(Metric.D, 0.0))

    def test_wrong_metric(self):
        """Test an incompatible target metric."""
        with pytest.raises(SpecError, match="does not fit"):
            min_sample_size(TestSpec.oneway_f(3), EffectSize(Metric.D, 0.5))

    def test_unreachable(self):
        """Test a target below what any searchable N can detect."""
        with pytest.raises(NumericError, match="No sample size"):
            min_sample_size(TestSpec.t_two_sample(), EffectSize(Metric.D, 1e-6))

    def test_minimality_on_random_specs(self):
        """Test mes(n_min) <= target < mes(n_min - 1) for 200 random cases."""
        rng = random.Random(20)
        for _ in range(200):
            family = rng.choice(list(TestFamily))
            sig = rng.choice([0.01, 0.05, 0.1])
            if family is TestFamily.CHI2_GOF:
                spec = TestSpec.chi2_gof(rng.randint(1, 5), sig)
                if rng.random() < 0.5:
                    target = EffectSize(Metric.W, rng.uniform(0.05, 1.0))
                else:
                    target = EffectSize(Metric.V, rng.uniform(0.05, 0.6), spec.df)
            elif family is TestFamily.ONEWAY_F:
                spec = TestSpec.oneway_f(rng.randint(2, 6), sig)
                target = EffectSize(Metric.F, rng.uniform(0.05, 0.8))
            else:
                spec = TestSpec(family, tails=rng.choice(list(Tails)), sig=sig)
                metric = rng.choice([Metric.D, Metric.R])
                high = 1.5 if metric is Metric.D else 0.8
                target = EffectSize(metric, rng.uniform(0.05, high))

            n_min = min_sample_size(spec, target).n_min
            dfs = target.dfs
            assert mes_at_n(spec, n_min, target.metric, dfs).mes.value <= target.value
            if n_min > spec.min_n:
                assert mes_at_n(spec, n_min - 1, target.metric, dfs).mes.value > target.value

    def test_result_round_trip(self):
        """Test SensitivenessResult to_dict / from_dict."""
        result = min_sample_size(TestSpec.chi2_gof(2), EffectSize(Metric.V, 0.212, 2))
        assert SensitivenessResult.from_dict(result.to_dict()) == result


class TestFirstSatisfying:
    def test_step(self):
        """Test the search over a stepped lattice."""
        assert first_satisfying(lambda n: n >= 101, 4, step=2) == 102
        assert first_satisfying(lambda n: n >= 1, 1) == 1


class TestPostHocSensitiveness:
    """Test cases for post-hoc sensitiveness."""

    @pytest.mark.parametrize(
        "n_actual,n_min,expected", [(30, 48, -37.5), (102, 48, 112.5), (48, 48, 0.0)]
    )
    def test_values(self, n_actual, n_min, expected):
        """Test over- and under-sensitiveness percentages."""
        assert post_hoc_sensitiveness(n_actual, n_min) == pytest.approx(expected)

    def test_invalid(self):
        """Test sizes must be positive."""
        with pytest.raises(DomainError, match="n_min"):
            post_hoc_sensitiveness(30, 0)

    @pytest.mark.parametrize("n_min", [1, 30, 48, 102])
    def test_increasing_in_n_actual(self, n_min):
        """Test each extra participant raises post-hoc sensitiveness."""
        values = [post_hoc_sensitiveness(n, n_min) for n in range(1, 400)]
        assert all(b > a for a, b in zip(values, values[1:]))


ALL_FAMILIES = [
    TestSpec.t_two_sample(),
    TestSpec.point_biserial(),
    TestSpec.chi2_gof(1),
    TestSpec.chi2_gof(4),
    TestSpec.oneway_f(2),
    TestSpec.oneway_f(6),
]


def n_grid(spec):
    """Every N up to 300, then a sparse grid to 10,000."""
    return list(range(spec.min_n, 300)) + list(range(300, 10_000, 97)) + [10_000]


class TestMesInvariants:
    """Properties linking mes_at_n and min_sample_size."""

    @pytest.mark.parametrize("spec", ALL_FAMILIES, ids=lambda s: s.label)
    def test_mes_strictly_decreasing(self, spec):
        """Test a larger N always detects a smaller effect."""
        values = [mes_at_n(spec, n).mes.value for n in n_grid(spec)]
        assert all(b < a for a, b in zip(values, values[1:]))

    @pytest.mark.parametrize("spec", ALL_FAMILIES, ids=lambda s: s.label)
    def test_solver_recovers_n(self, spec):
        """Test solving for the MES achieved at N never asks for more than N."""
        for n in [spec.min_n, spec.min_n + 1, 30, 48, 103, 270, 1001, 5000]:
            target = mes_at_n(spec, n).mes
            result = min_sample_size(spec, target)
            assert result.n_min <= n
            assert result.achieved_mes.value <= target.value
