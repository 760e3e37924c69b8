"""
Central t, chi-square and F distributions: CDF, survival function and
quantile.
"""

import math
import numbers
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Optional, Tuple

from sensize.core.errors import DomainError, NumericError
from sensize.core.special import (
    LN_SQRT_PI,
    ln_beta,
    ln_gamma,
    reg_inc_beta,
    reg_inc_gamma_lower,
    reg_inc_gamma_upper,
)

#: Target residual |cdf(x) - p| for quantile inversion.
QUANTILE_TOLERANCE = 1e-10
_QUANTILE_MAX_ITERATIONS = 200
_BRACKET_MAX_DOUBLINGS = 1100


class Family(str, Enum):
    """Distribution families available for critical values."""

    STUDENT_T = "t"
    CHI_SQUARE = "chi2"
    FISHER_F = "F"


@dataclass(frozen=True)
class DistributionParams:
    """
    A central distribution and its degrees of freedom.

    ``df1`` is the only df for t and chi-square; ``df2`` is the denominator
    df of F and must be absent for the other families.
    """

    family: Family
    df1: int
    df2: Optional[int] = None

    def __post_init__(self) -> None:
        for name in ("df1", "df2"):
            value = getattr(self, name)
            if value is None:
                continue
            if isinstance(value, bool) or not isinstance(value, numbers.Integral):
                raise DomainError(f"{name} must be an integer, got {value!r}")
            if value < 1:
                raise DomainError(f"{name} must be >= 1, got {value}")
        if self.family is Family.FISHER_F and self.df2 is None:
            raise DomainError("F distribution requires df2")
        if self.family is not Family.FISHER_F and self.df2 is not None:
            raise DomainError(f"{self.family.value} distribution takes no df2")

    @classmethod
    def t(cls, df: int) -> "DistributionParams":
        return cls(Family.STUDENT_T, df)

    @classmethod
    def chi2(cls, df: int) -> "DistributionParams":
        return cls(Family.CHI_SQUARE, df)

    @classmethod
    def f(cls, dfn: int, dfd: int) -> "DistributionParams":
        return cls(Family.FISHER_F, dfn, dfd)

    @property
    def dfs(self) -> Tuple[int, ...]:
        """Degrees of freedom as a tuple, (df,) or (dfn, dfd)."""
        if self.df2 is None:
            return (self.df1,)
        return (self.df1, self.df2)

    def __str__(self) -> str:
        return f"{self.family.value}({', '.join(str(d) for d in self.dfs)})"


def _t_tail(df: int, x: float) -> float:
    """P(T > |x|) for a t variate."""
    return 0.5 * reg_inc_beta(0.5 * df, 0.5, df / (df + x * x))


def cdf(params: DistributionParams, x: float) -> float:
    """
    Cumulative distribution function P(X <= x).

    Chi-square and F return 0 for x < 0.
    """
    if math.isnan(x):
        raise DomainError("cdf is undefined at NaN")
    if params.family is Family.STUDENT_T:
        if math.isinf(x):
            return 1.0 if x > 0 else 0.0
        if x == 0.0:
            return 0.5
        tail = _t_tail(params.df1, x)
        return 1.0 - tail if x > 0 else tail

    if x <= 0.0:
        return 0.0
    if math.isinf(x):
        return 1.0
    if params.family is Family.CHI_SQUARE:
        return reg_inc_gamma_lower(0.5 * params.df1, 0.5 * x)

    dfn, dfd = params.df1, params.df2
    assert dfd is not None
    return reg_inc_beta(0.5 * dfn, 0.5 * dfd, dfn * x / (dfn * x + dfd))


def sf(params: DistributionParams, x: float) -> float:
    """Survival function P(X > x), computed without cancellation."""
    if math.isnan(x):
        raise DomainError("sf is undefined at NaN")
    if params.family is Family.STUDENT_T:
        if math.isinf(x):
            return 0.0 if x > 0 else 1.0
        if x == 0.0:
            return 0.5
        tail = _t_tail(params.df1, x)
        return tail if x > 0 else 1.0 - tail

    if x <= 0.0:
        return 1.0
    if math.isinf(x):
        return 0.0
    if params.family is Family.CHI_SQUARE:
        return reg_inc_gamma_upper(0.5 * params.df1, 0.5 * x)

    dfn, dfd = params.df1, params.df2
    assert dfd is not None
    return reg_inc_beta(0.5 * dfd, 0.5 * dfn, dfd / (dfn * x + dfd))


def _density(params: DistributionParams, x: float) -> float:
    if params.family is Family.STUDENT_T:
        v = params.df1
        log_pdf = (
            ln_gamma(0.5 * (v + 1))
            - ln_gamma(0.5 * v)
            - 0.5 * math.log(v)
            - LN_SQRT_PI
            - 0.5 * (v + 1) * math.log1p(x * x / v)
        )
        return math.exp(log_pdf)
    if x <= 0.0:
        return 0.0
    if params.family is Family.CHI_SQUARE:
        k = 0.5 * params.df1
        return math.exp((k - 1.0) * math.log(x) - 0.5 * x - k * math.log(2.0) - ln_gamma(k))

    d1, d2 = params.df1, params.df2
    assert d2 is not None
    log_pdf = (
        0.5 * (d1 * math.log(d1 * x) + d2 * math.log(d2) - (d1 + d2) * math.log(d1 * x + d2))
        - math.log(x)
        - ln_beta(0.5 * d1, 0.5 * d2)
    )
    return math.exp(log_pdf)


def _bracket(params: DistributionParams, p: float) -> Tuple[float, float]:
    if params.family is Family.STUDENT_T:
        lo, hi = -1.0, 1.0
        for _ in range(_BRACKET_MAX_DOUBLINGS):
            if cdf(params, lo) <= p:
                break
            hi, lo = lo, lo * 2.0
        for _ in range(_BRACKET_MAX_DOUBLINGS):
            if cdf(params, hi) >= p:
                break
            lo, hi = hi, hi * 2.0
        return lo, hi

    lo = 0.0
    hi = float(params.df1) if params.family is Family.CHI_SQUARE else 1.0
    for _ in range(_BRACKET_MAX_DOUBLINGS):
        if cdf(params, hi) >= p:
            return lo, hi
        lo, hi = hi, hi * 2.0
    raise NumericError(f"Could not bracket quantile p={p} of {params}")


@lru_cache(maxsize=4096)
def quantile(params: DistributionParams, p: float) -> float:
    """
    Inverse CDF: the x with cdf(x) = p.

    Brackets the root by doubling from an initial guess, then refines with
    Newton steps that fall back to bisection whenever a step leaves the
    bracket.

    Args:
        params: The distribution
        p: Probability in (0, 1)

    Returns:
        x such that |cdf(x) - p| <= QUANTILE_TOLERANCE

    Raises:
        DomainError: If p is not in (0, 1)
        NumericError: If the refinement does not converge
    """
    if not (0.0 < p < 1.0):
        raise DomainError(f"quantile requires 0 < p < 1, got {p}")
    if params.family is Family.STUDENT_T and p == 0.5:
        return 0.0

    lo, hi = _bracket(params, p)
    x = 0.5 * (lo + hi)
    for _ in range(_QUANTILE_MAX_ITERATIONS):
        residual = cdf(params, x) - p
        if residual == 0.0:
            return x
        if residual < 0.0:
            lo = x
        else:
            hi = x

        density = _density(params, x)
        candidate = x - residual / density if density > 0.0 else math.nan
        if not (lo < candidate < hi):
            candidate = 0.5 * (lo + hi)

        step = abs(candidate - x)
        x = candidate
        if step <= 1e-15 * max(1.0, abs(x)) or hi - lo <= 4e-16 * max(1.0, abs(x)):
            break

    if abs(cdf(params, x) - p) > QUANTILE_TOLERANCE:
        raise NumericError(f"Quantile p={p} of {params} did not converge")
    return x
