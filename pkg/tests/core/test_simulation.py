"""
Unit tests for the sampling-strategy simulation.
"""

import math

import numpy as np
import pytest
from scipy import stats

from sensize.core.analysis import pairwise_gof
from sensize.core.config import Extraction, MacroPopulation, SimulationConfig
from sensize.core.errors import ConfigError, DegenerateDataError, DomainError
from sensize.core.simulation import (
    PopulationDescriptives,
    StudyOutcome,
    generate_macro_populations,
    run_simulation,
    run_study,
    sample_and_test,
    substream,
    two_sample_t,
)


def small_config(**overrides):
    values = dict(
        seed=7,
        macro_pops=[MacroPopulation(600), MacroPopulation(300)],
        extraction_plan=[Extraction(0, 400), Extraction(1, 200)],
        n_studies=3,
        pops_per_study=10,
    )
    values.update(overrides)
    return SimulationConfig(**values)


class TestTwoSampleT:
    """Test cases for the pooled-variance t test."""

    def test_hand_computed(self):
        """Test A = {0, 1}, B = {2, 3}: t = 2 sqrt(2), df = 2, d = 4."""
        result = two_sample_t([0.0, 1.0], [2.0, 3.0])
        assert result.t == pytest.approx(2 * math.sqrt(2))
        assert result.df == 2
        assert result.d == pytest.approx(4.0)
        assert result.p_one_tailed == pytest.approx(stats.t.sf(2 * math.sqrt(2), 2), abs=1e-10)

    def test_identical_groups(self):
        """Test equal groups give t = 0, p = .5 and d = 0."""
        result = two_sample_t([1.0, 2.0, 4.0], [1.0, 2.0, 4.0])
        assert (result.t, result.p_one_tailed, result.d) == (0.0, 0.5, 0.0)

    def test_direction(self):
        """Test the test is one-tailed in the direction B > A."""
        assert two_sample_t([2.0, 3.0], [0.0, 1.0]).p_one_tailed > 0.5

    def test_small_group(self):
        """Test groups need two observations."""
        with pytest.raises(DomainError, match=">= 2 observations"):
            two_sample_t([1.0], [2.0, 3.0])

    def test_constant_groups(self):
        """Test zero pooled variance."""
        with pytest.raises(DegenerateDataError, match="variance"):
            two_sample_t([5.0, 5.0, 5.0], [5.0, 5.0])

    def test_matches_scipy(self):
        """Test t and p against scipy.stats.ttest_ind on random groups."""
        rng = np.random.default_rng(11)
        for n_a, n_b in [(5, 5), (24, 24), (51, 40)]:
            a, b = rng.normal(0, 1, n_a), rng.normal(0.3, 1, n_b)
            expected = stats.ttest_ind(b, a, alternative="greater")
            result = two_sample_t(a, b)
            assert result.t == pytest.approx(expected.statistic, rel=1e-10)
            assert result.p_one_tailed == pytest.approx(expected.pvalue, abs=1e-10)
            assert result.d == pytest.approx(2 * result.t / math.sqrt(n_a + n_b - 2))

    def test_null_calibration(self):
        """Test the significant rate under the null is .05 within three binomial SEs."""
        rng = np.random.default_rng(3)
        n_tests = 10_000
        significant = sum(
            two_sample_t(rng.normal(0, 1, 24), rng.normal(0, 1, 24)).p_one_tailed <= 0.05
            for _ in range(n_tests)
        )
        se = math.sqrt(0.05 * 0.95 / n_tests)
        assert abs(significant / n_tests - 0.05) <= 3 * se

    @pytest.mark.slow
    def test_null_p_values_uniform(self):
        """Test p-values under the null are uniform by Kolmogorov-Smirnov."""
        rng = np.random.default_rng(5)
        p_values = [
            two_sample_t(rng.normal(0, 1, 24), rng.normal(0, 1, 24)).p_one_tailed
            for _ in range(100_000)
        ]
        assert stats.kstest(p_values, "uniform").pvalue > 1e-3


class TestSubstreams:
    """Test cases for keyed random substreams."""

    def test_same_key_same_draws(self):
        """Test a key always gives the same stream."""
        assert np.array_equal(substream(1, 2, 3).random(5), substream(1, 2, 3).random(5))

    def test_keys_differ(self):
        """Test different keys and seeds give different streams."""
        base = substream(1, 2, 3).random(5)
        assert not np.array_equal(base, substream(1, 2, 4).random(5))
        assert not np.array_equal(base, substream(2, 2, 3).random(5))

    def test_macro_populations(self):
        """Test macro-population sizes and generating parameters."""
        config = small_config()
        macros = generate_macro_populations(config)
        assert [g[0].size for g in macros] == [600, 300]
        first = PopulationDescriptives.of(macros[0])
        assert first.group1.mean == pytest.approx(10.0, abs=0.2)
        assert first.group2.mean == pytest.approx(10.5, abs=0.2)
        assert first.d == pytest.approx(0.5, abs=0.2)


class TestSampleAndTest:
    """Test cases for one condition sample."""

    def test_capture_rule(self):
        """Test a capture is exactly a significant test with d above the threshold."""
        rng = np.random.default_rng(8)
        population = (rng.normal(10, 1, 100), rng.normal(10.5, 1, 100))
        for i in range(300):
            outcome = sample_and_test(population, 48, substream(8, i))
            assert outcome.significant == (outcome.test.p_one_tailed <= 0.05)
            assert outcome.captured == (outcome.significant and outcome.test.d > 0.495)

    def test_without_replacement(self):
        """Test a sample the size of the population reuses every member once."""
        population = (np.arange(10.0), np.arange(10.0) + 0.5)
        outcome = sample_and_test(population, 20, substream(0, 0))
        expected = stats.ttest_ind(population[1], population[0], alternative="greater")
        assert outcome.test.t == pytest.approx(expected.statistic)
        assert outcome.test.df == 18


class TestRunSimulation:
    """Test cases for whole simulation runs."""

    def test_outcome_shape(self):
        """Test one outcome per study with the planned research sizes."""
        outcomes = run_simulation(small_config())
        assert [o.study_index for o in outcomes] == [0, 1, 2]
        assert [o.research_n for o in outcomes] == [400, 200, 400]
        assert all(o.pops == 10 for o in outcomes)
        assert all(len(o.population_descriptives) == 10 for o in outcomes)
        assert all(set(o.counts) == {"PWR", "SNS", "THMB"} for o in outcomes)

    def test_counts_invariant(self):
        """Test captures <= significant <= populations in every study."""
        for outcome in run_simulation(small_config(pops_per_study=20)):
            for name, captured in outcome.counts.items():
                assert 0 <= captured <= outcome.sig_any[name] <= outcome.pops

    def test_deterministic(self):
        """Test the same config gives the same outcomes."""
        assert run_simulation(small_config()) == run_simulation(small_config())

    def test_seed_changes_outcomes(self):
        """Test different seeds give different populations."""
        a = run_simulation(small_config(seed=1))
        b = run_simulation(small_config(seed=2))
        assert a[0].population_descriptives != b[0].population_descriptives

    def test_independent_of_workers(self):
        """Test results do not depend on the number of worker processes."""
        config = small_config()
        assert run_simulation(config, workers=2) == run_simulation(config, workers=1)

    def test_study_independent_of_order(self):
        """Test a study gives the same outcome when run on its own."""
        config = small_config()
        macros = generate_macro_populations(config)
        assert run_study(config, 2, macros) == run_simulation(config)[2]

    def test_null_populations_rarely_capture(self):
        """Test populations without an effect give few captures."""
        config = SimulationConfig(
            seed=4,
            macro_pops=[MacroPopulation(2000, mean1=10.0, mean2=10.0)],
            extraction_plan=[Extraction(0, 2000)],
            pops_per_study=100,
        )
        for outcome in run_simulation(config):
            for name in config.conditions:
                assert outcome.counts[name] / outcome.pops < 0.15

    def test_null_significance_rate(self):
        """Test significant tests under no effect run near the 5% level in every condition."""
        config = SimulationConfig(
            seed=12,
            macro_pops=[MacroPopulation(100_000, mean1=10.0, mean2=10.0)],
            extraction_plan=[Extraction(0, 2000)],
            n_studies=2,
            pops_per_study=250,
        )
        outcomes = run_simulation(config)
        pops = sum(o.pops for o in outcomes)
        se = math.sqrt(0.05 * 0.95 / pops)
        for name in config.conditions:
            rate = sum(o.sig_any[name] for o in outcomes) / pops
            assert abs(rate - 0.05) <= 4 * se

    def test_invalid_config(self):
        """Test validation errors stop the run."""
        config = small_config(condition_ns={"PWR": 202, "SNS": 47})
        with pytest.raises(ConfigError) as excinfo:
            run_simulation(config)
        assert any("must be even" in e for e in excinfo.value.errors)
        assert any("exceeds population size" in e for e in excinfo.value.errors)

    def test_outcome_round_trip(self):
        """Test StudyOutcome to_dict / from_dict."""
        outcome = run_simulation(small_config(n_studies=1))[0]
        assert StudyOutcome.from_dict(outcome.to_dict()) == outcome

    def test_outcome_invariant_enforced(self):
        """Test captures above significant counts are refused."""
        outcome = run_simulation(small_config(n_studies=1))[0]
        data = outcome.to_dict()
        data["counts"]["PWR"] = data["sig_any"]["PWR"] + 1
        with pytest.raises(ValueError, match="captures"):
            StudyOutcome.from_dict(data)

    def test_outcome_condition_sets_must_match(self):
        """Test counts and sig_any must cover the same conditions."""
        data = run_simulation(small_config(n_studies=1))[0].to_dict()
        del data["sig_any"]["PWR"]
        with pytest.raises(ValueError, match="sig_any covers"):
            StudyOutcome.from_dict(data)

    @pytest.mark.parametrize("field", ["pops", "counts", "macro_descriptives"])
    def test_outcome_missing_field(self, field):
        """Test a missing field is reported as a ValueError."""
        data = run_simulation(small_config(n_studies=1))[0].to_dict()
        del data[field]
        with pytest.raises(ValueError, match="Malformed study outcome"):
            StudyOutcome.from_dict(data)

    def test_outcome_needs_populations(self):
        """Test a study with no populations is refused."""
        data = run_simulation(small_config(n_studies=1))[0].to_dict()
        data.update(pops=0, counts=dict.fromkeys(data["counts"], 0))
        data["sig_any"] = dict.fromkeys(data["sig_any"], 0)
        with pytest.raises(ValueError, match="pops must be >= 1"):
            StudyOutcome.from_dict(data)


@pytest.mark.slow
class TestReferenceDesign:
    """Statistical checks of the reference design over twenty seeds."""

    @pytest.fixture(scope="class")
    def runs(self):
        return [
            run_simulation(SimulationConfig(seed=seed, n_studies=8)) for seed in range(20)
        ]

    @staticmethod
    def totals(outcomes):
        return {
            name: sum(o.counts[name] for o in outcomes) for name in ("PWR", "SNS", "THMB")
        }

    def test_thumb_rule_captures_least(self, runs):
        """Test PWR and SNS each capture more than THMB in at least 16 of 20 runs."""
        ordered = 0
        for outcomes in runs:
            f = self.totals(outcomes)
            ordered += f["PWR"] > f["THMB"] and f["SNS"] > f["THMB"]
        assert ordered >= 16

    def test_power_and_sensitiveness_agree(self, runs):
        """Test the PWR-SNS w stays below .30 in at least 19 of 20 runs."""
        small = 0
        for outcomes in runs:
            f = self.totals(outcomes)
            small += pairwise_gof(f["PWR"], f["SNS"]).w < 0.30
        assert small >= 19
