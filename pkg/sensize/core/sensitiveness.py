"""
Sensitiveness analysis: minimum effect size at a given N, minimum N for a
target minimum effect size, and post-hoc sensitiveness.
"""

import logging
from dataclasses import dataclass
from enum import Enum, IntEnum
from typing import Any, Callable, Dict, Optional, Tuple

from sensize.core.distributions import DistributionParams, quantile
from sensize.core.effect_size import (
    EffectSize,
    Metric,
    d_from_t,
    f_from_F,
    r_from_t,
    v_from_chi2,
    w_from_chi2,
)
from sensize.core.errors import DomainError, NumericError, SpecError
from sensize.utils import round_half_up

logger = logging.getLogger(__name__)

#: Upper limit for sample-size searches.
MAX_SAMPLE_SIZE = 10_000_000


class TestFamily(str, Enum):
    """Statistical tests supported by the solvers."""

    __test__ = False

    T_TWO_SAMPLE = "t2"
    POINT_BISERIAL_R = "r"
    CHI2_GOF = "chi2"
    ONEWAY_F = "anova"


class Tails(IntEnum):
    """Tails of a t test; chi-square and F tests are always upper-tailed."""

    ONE = 1
    TWO = 2


_T_FAMILIES = (TestFamily.T_TWO_SAMPLE, TestFamily.POINT_BISERIAL_R)

_COMPATIBLE_METRICS = {
    TestFamily.T_TWO_SAMPLE: (Metric.D, Metric.R),
    TestFamily.POINT_BISERIAL_R: (Metric.R, Metric.D),
    TestFamily.CHI2_GOF: (Metric.W, Metric.V),
    TestFamily.ONEWAY_F: (Metric.F,),
}


@dataclass(frozen=True)
class TestSpec:
    """
    The test under analysis.

    ``df`` is the chi-square degrees of freedom and ``k_groups`` the number
    of ANOVA groups; each is required for its family and absent otherwise.
    Chi-square and F tests are one-tailed by nature, so ``tails`` is
    normalized to ONE for them.
    """

    __test__ = False

    family: TestFamily
    tails: Tails = Tails.ONE
    sig: float = 0.05
    df: Optional[int] = None
    k_groups: Optional[int] = None

    def __post_init__(self) -> None:
        if not (0.0 < self.sig <= 0.5):
            raise SpecError(f"sig must be in (0, 0.5], got {self.sig}")
        if self.family is TestFamily.CHI2_GOF:
            if self.df is None or self.df < 1:
                raise SpecError("Chi-square goodness-of-fit requires df >= 1")
        elif self.df is not None:
            raise SpecError(f"Test {self.family.value} takes no df")
        if self.family is TestFamily.ONEWAY_F:
            if self.k_groups is None or self.k_groups < 2:
                raise SpecError("One-way ANOVA requires k_groups >= 2")
        elif self.k_groups is not None:
            raise SpecError(f"Test {self.family.value} takes no k_groups")
        if self.family not in _T_FAMILIES:
            object.__setattr__(self, "tails", Tails.ONE)
        else:
            object.__setattr__(self, "tails", Tails(self.tails))

    @classmethod
    def t_two_sample(cls, tails: Tails = Tails.ONE, sig: float = 0.05) -> "TestSpec":
        return cls(TestFamily.T_TWO_SAMPLE, tails=tails, sig=sig)

    @classmethod
    def point_biserial(cls, tails: Tails = Tails.ONE, sig: float = 0.05) -> "TestSpec":
        return cls(TestFamily.POINT_BISERIAL_R, tails=tails, sig=sig)

    @classmethod
    def chi2_gof(cls, df: int, sig: float = 0.05) -> "TestSpec":
        return cls(TestFamily.CHI2_GOF, sig=sig, df=df)

    @classmethod
    def oneway_f(cls, k_groups: int, sig: float = 0.05) -> "TestSpec":
        return cls(TestFamily.ONEWAY_F, sig=sig, k_groups=k_groups)

    @property
    def is_t_family(self) -> bool:
        return self.family in _T_FAMILIES

    @property
    def native_metric(self) -> Metric:
        return _COMPATIBLE_METRICS[self.family][0]

    @property
    def min_n(self) -> int:
        """Smallest total N with positive degrees of freedom."""
        if self.is_t_family:
            return 3
        if self.family is TestFamily.ONEWAY_F:
            assert self.k_groups is not None
            return self.k_groups + 1
        return 1

    def distribution(self, n: int) -> DistributionParams:
        """Null distribution of the test statistic at total sample size n."""
        if n < self.min_n:
            raise DomainError(
                f"N = {n} is below the minimum of {self.min_n} for test {self.label}"
            )
        if self.is_t_family:
            return DistributionParams.t(n - 2)
        if self.family is TestFamily.CHI2_GOF:
            assert self.df is not None
            return DistributionParams.chi2(self.df)
        assert self.k_groups is not None
        return DistributionParams.f(self.k_groups - 1, n - self.k_groups)

    def check_metric(self, metric: Metric) -> None:
        if metric not in _COMPATIBLE_METRICS[self.family]:
            allowed = " or ".join(m.value for m in _COMPATIBLE_METRICS[self.family])
            raise SpecError(
                f"Effect size {metric.value} does not fit test {self.label} (use {allowed})"
            )

    @property
    def label(self) -> str:
        if self.family is TestFamily.CHI2_GOF:
            return f"chi2({self.df})"
        if self.family is TestFamily.ONEWAY_F:
            return f"F({self.k_groups} groups)"
        return self.family.value

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "family": self.family.value,
            "tails": int(self.tails),
            "sig": self.sig,
        }
        if self.df is not None:
            data["df"] = self.df
        if self.k_groups is not None:
            data["k_groups"] = self.k_groups
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "TestSpec":
        return cls(
            TestFamily(data["family"]),
            tails=Tails(data.get("tails", 1)),
            sig=float(data.get("sig", 0.05)),
            df=data.get("df"),
            k_groups=data.get("k_groups"),
        )


@dataclass(frozen=True)
class MesAtN:
    """Critical value and minimum effect size at one exact N."""

    n: int
    critical_value: float
    mes: EffectSize
    df: Tuple[int, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "critical_value": self.critical_value,
            "mes": self.mes.to_dict(),
            "df": list(self.df),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "MesAtN":
        return cls(
            n=int(data["n"]),
            critical_value=float(data["critical_value"]),
            mes=EffectSize.from_dict(data["mes"]),
            df=tuple(int(d) for d in data["df"]),
        )


@dataclass(frozen=True)
class SensitivenessResult:
    """
    Outcome of a minimum sample size search.

    ``at_floor`` marks a target already met at the smallest valid N;
    ``unequal_split`` marks an odd total N for two equal groups.
    """

    n_min: int
    critical_value: float
    achieved_mes: EffectSize
    df: Tuple[int, ...]
    target: EffectSize
    at_floor: bool = False
    unequal_split: bool = False
    two_tailed: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n_min": self.n_min,
            "critical_value": self.critical_value,
            "achieved_mes": self.achieved_mes.to_dict(),
            "df": list(self.df),
            "target": self.target.to_dict(),
            "at_floor": self.at_floor,
            "unequal_split": self.unequal_split,
            "two_tailed": self.two_tailed,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SensitivenessResult":
        return cls(
            n_min=int(data["n_min"]),
            critical_value=float(data["critical_value"]),
            achieved_mes=EffectSize.from_dict(data["achieved_mes"]),
            df=tuple(int(d) for d in data["df"]),
            target=EffectSize.from_dict(data["target"]),
            at_floor=bool(data.get("at_floor", False)),
            unequal_split=bool(data.get("unequal_split", False)),
            two_tailed=bool(data.get("two_tailed", False)),
        )


def critical_value(spec: TestSpec, n: int) -> float:
    """Critical statistic at 1 - sig (or 1 - sig/2 for a two-tailed t)."""
    p = 1.0 - spec.sig / 2.0 if spec.tails is Tails.TWO else 1.0 - spec.sig
    return quantile(spec.distribution(n), p)


def effect_from_statistic(
    spec: TestSpec, statistic: float, n: int, metric: Optional[Metric] = None, dfs: int = 1
) -> EffectSize:
    """
    Convert a test statistic at total size n into an effect size.

    Args:
        spec: The test
        statistic: t, chi-square or F value
        n: Total sample size
        metric: Requested metric (defaults to the test's native metric)
        dfs: dfs of Cramér's V when metric is V
    """
    metric = metric or spec.native_metric
    spec.check_metric(metric)
    dist = spec.distribution(n)
    if spec.is_t_family:
        if metric is Metric.D:
            return d_from_t(statistic, dist.df1)
        return r_from_t(statistic, dist.df1)
    if spec.family is TestFamily.CHI2_GOF:
        if metric is Metric.V:
            return v_from_chi2(statistic, n, dfs)
        return w_from_chi2(statistic, n)
    assert dist.df2 is not None
    return f_from_F(statistic, dist.df1, dist.df2)


def mes_at_n(
    spec: TestSpec, n: int, metric: Optional[Metric] = None, dfs: Optional[int] = None
) -> MesAtN:
    """
    A priori sensitiveness: the critical value and the minimum effect size a
    test of total size n can return as significant.

    Raises:
        DomainError: If n is below the df floor of the test
        SpecError: If the metric does not fit the test
    """
    dist = spec.distribution(n)
    cv = critical_value(spec, n)
    v_dfs = dfs if dfs is not None else (spec.df or 1)
    mes = effect_from_statistic(spec, cv, n, metric, v_dfs)
    return MesAtN(n=n, critical_value=cv, mes=mes, df=dist.dfs)


def first_satisfying(predicate: Callable[[int], bool], start: int, step: int = 1) -> int:
    """
    Smallest N = start + step * i satisfying a monotone predicate, found by
    doubling the step count then bisecting.
    """
    if predicate(start):
        return start
    lo, offset = 0, 1
    while not predicate(start + step * offset):
        lo = offset
        offset *= 2
        if start + step * offset > MAX_SAMPLE_SIZE:
            raise NumericError(f"No sample size up to {MAX_SAMPLE_SIZE} meets the target")
    hi = offset
    logger.debug("Bracketed N in (%d, %d]", start + step * lo, start + step * hi)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if predicate(start + step * mid):
            hi = mid
        else:
            lo = mid
    return start + step * hi


def min_sample_size(
    spec: TestSpec, target: EffectSize, precision: Optional[int] = None
) -> SensitivenessResult:
    """
    Minimum total N at which the target minimum effect size is significant.

    Args:
        spec: The test
        target: Target minimum effect size (d or r for t tests, w or V for
            chi-square, f for ANOVA)
        precision: When given, the critical value and achieved MES are rounded
            half-up to this many decimals before comparing, reproducing hand
            calculations from printed critical values

    Returns:
        SensitivenessResult at the smallest N with achieved MES <= target

    Raises:
        SpecError: If target's metric does not fit the test, or target is 0
        NumericError: If no N up to MAX_SAMPLE_SIZE suffices
    """
    spec.check_metric(target.metric)
    if target.value <= 0:
        raise SpecError("Target effect size must be > 0")
    dfs = target.dfs if target.dfs is not None else (spec.df or 1)

    def achieved(n: int) -> float:
        cv = critical_value(spec, n)
        if precision is not None:
            cv = round_half_up(cv, precision)
        value = effect_from_statistic(spec, cv, n, target.metric, dfs).value
        return round_half_up(value, precision) if precision is not None else value

    n_min = first_satisfying(lambda n: achieved(n) <= target.value, spec.min_n)
    result = mes_at_n(spec, n_min, target.metric, dfs)
    at_floor = n_min == spec.min_n
    logger.debug("Minimum N for %s at %s: %d", target, spec.label, n_min)
    return SensitivenessResult(
        n_min=n_min,
        critical_value=result.critical_value,
        achieved_mes=result.mes,
        df=result.df,
        target=target,
        at_floor=at_floor,
        unequal_split=spec.family is TestFamily.T_TWO_SAMPLE and n_min % 2 == 1,
        two_tailed=spec.tails is Tails.TWO,
    )


def post_hoc_sensitiveness(n_actual: int, n_min: int) -> float:
    """
    Post-hoc sensitiveness as a percentage: 100 * (N_actual / N_min - 1).

    Positive values indicate over-sensitiveness, negative values
    under-sensitiveness.
    """
    if n_min < 1:
        raise DomainError(f"n_min must be >= 1, got {n_min}")
    if n_actual < 1:
        raise DomainError(f"n_actual must be >= 1, got {n_actual}")
    return 100.0 * (n_actual / n_min - 1.0)
