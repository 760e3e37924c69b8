"""
Neyman-Pearson power: power at a given N and the minimum N for a target
power, using noncentral t, chi-square and F distributions.
"""

import logging
import math
from dataclasses import dataclass
from typing import Any, Dict

from sensize.core.effect_size import EffectSize, Metric, d_from_r
from sensize.core.errors import SpecError
from sensize.core.noncentral import Noncentrality, noncentral_cdf, noncentral_sf
from sensize.core.sensitiveness import (
    TestFamily,
    TestSpec,
    Tails,
    critical_value,
    first_satisfying,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PowerSpec:
    """
    A power analysis: the test (its sig doubles as alpha), the population
    effect size and the target power.
    """

    test: TestSpec
    population_es: EffectSize
    target_power: float = 0.80

    def __post_init__(self) -> None:
        if not (0.0 < self.target_power < 1.0):
            raise SpecError(f"target_power must be in (0, 1), got {self.target_power}")
        self.test.check_metric(self.population_es.metric)

    @property
    def alpha(self) -> float:
        return self.test.sig

    def to_dict(self) -> Dict[str, Any]:
        return {
            "test": self.test.to_dict(),
            "population_es": self.population_es.to_dict(),
            "target_power": self.target_power,
        }


def noncentrality(spec: PowerSpec, n: int) -> Noncentrality:
    """
    Noncentrality of the test statistic at total size n.

    t tests use delta = d * sqrt(n1 * n2 / N) with n1 = ceil(N/2) and
    n2 = floor(N/2) for two groups, delta = d * sqrt(N) / 2 for the
    point-biserial r (d = 2r / sqrt(1 - r^2)); chi-square uses
    lambda = N * w^2 and ANOVA lambda = N * f^2.
    """
    es = spec.population_es
    family = spec.test.family
    if spec.test.is_t_family:
        d = d_from_r(es.value) if es.metric is Metric.R else es.value
        if family is TestFamily.T_TWO_SAMPLE:
            n1, n2 = (n + 1) // 2, n // 2
            return Noncentrality(d * math.sqrt(n1 * n2 / n))
        return Noncentrality(d * math.sqrt(n) / 2.0)
    if family is TestFamily.CHI2_GOF:
        w = es.value * math.sqrt(es.dfs) if es.metric is Metric.V and es.dfs else es.value
        return Noncentrality(n * w * w)
    return Noncentrality(n * es.value * es.value)


def power_at_n(spec: PowerSpec, n: int) -> float:
    """
    Probability that the test statistic exceeds its critical value when the
    population effect size is spec.population_es.

    Raises:
        DomainError: If n is below the df floor of the test
    """
    dist = spec.test.distribution(n)
    cv = critical_value(spec.test, n)
    nc = noncentrality(spec, n)
    power = noncentral_sf(dist, nc, cv)
    if spec.test.tails is Tails.TWO:
        power += noncentral_cdf(dist, nc, -cv)
    return min(1.0, max(0.0, power))


def searches_even_n(test: TestSpec) -> bool:
    """Whether min_n_for_power restricts a test to equal groups (even N)."""
    return test.family is TestFamily.T_TWO_SAMPLE


def min_n_for_power(spec: PowerSpec) -> int:
    """
    Smallest total N whose power reaches spec.target_power.

    Two-group t tests search equal groups only, so the result is the
    smallest even N. An odd N one below it may already reach the target
    with unequal groups (d = .5 gives 102, yet power_at_n(101) is about
    .802); use power_at_n to size unequal designs.

    Raises:
        NumericError: If the target power is unreachable
    """
    test = spec.test
    if searches_even_n(test):
        start, step = test.min_n + test.min_n % 2, 2
    else:
        start, step = test.min_n, 1
    n = first_satisfying(lambda m: power_at_n(spec, m) >= spec.target_power, start, step)
    logger.debug(
        "Minimum N for power %.2f with %s at %s: %d",
        spec.target_power,
        spec.population_es,
        test.label,
        n,
    )
    return n
