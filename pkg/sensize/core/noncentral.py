"""
Noncentral t, chi-square and F cumulative distribution functions.

Chi-square and F are Poisson mixtures of their central counterparts, summed
outwards from the modal Poisson index. The noncentral t uses the
incomplete-beta series of Lenth's algorithm AS 243, which needs no
quadrature.
"""

import math
from dataclasses import dataclass
from typing import Callable

from sensize.core.distributions import DistributionParams, Family
from sensize.core.distributions import cdf as central_cdf
from sensize.core.errors import DomainError, NumericError
from sensize.core.special import (
    LN_SQRT_PI,
    ln_gamma,
    normal_cdf,
    reg_inc_beta,
    reg_inc_gamma_lower,
)

#: Weight below which Poisson mixture terms are dropped.
MIXTURE_TOLERANCE = 1e-14
MIXTURE_MAX_TERMS = 10_000
#: Error bound and iteration cap of the noncentral t series.
T_SERIES_TOLERANCE = 1e-12
T_SERIES_MAX_ITERATIONS = 1_000

_SQRT_2_OVER_PI = math.sqrt(2.0 / math.pi)


@dataclass(frozen=True)
class Noncentrality:
    """
    Noncentrality parameter.

    ``value`` is delta for the t family (any sign) and lambda (>= 0) for
    chi-square and F.
    """

    value: float

    def __post_init__(self) -> None:
        if math.isnan(self.value) or math.isinf(self.value):
            raise DomainError(f"Noncentrality must be finite, got {self.value}")

    def check_for(self, params: DistributionParams) -> None:
        """Raise DomainError if the value is invalid for the family."""
        if params.family is not Family.STUDENT_T and self.value < 0:
            raise DomainError(
                f"Noncentrality lambda must be >= 0 for {params.family.value}, got {self.value}"
            )


def _poisson_mixture(mean: float, term: Callable[[int], float]) -> float:
    """Sum of Poisson(mean) weights times term(j), expanding from the mode."""
    mode = int(math.floor(mean))
    if mean == 0.0:
        return term(0)

    log_weight = -mean + mode * math.log(mean) - ln_gamma(mode + 1.0)
    mode_weight = math.exp(log_weight)
    total = mode_weight * term(mode)
    terms = 1

    weight = mode_weight
    j = mode
    while True:
        j += 1
        weight *= mean / j
        total += weight * term(j)
        terms += 1
        if weight < MIXTURE_TOLERANCE:
            break
        if terms > MIXTURE_MAX_TERMS:
            raise NumericError(f"Poisson mixture did not converge for mean {mean}")

    weight = mode_weight
    j = mode
    while j > 0:
        weight *= j / mean
        j -= 1
        total += weight * term(j)
        terms += 1
        if weight < MIXTURE_TOLERANCE:
            break
        if terms > MIXTURE_MAX_TERMS:
            raise NumericError(f"Poisson mixture did not converge for mean {mean}")

    return min(1.0, max(0.0, total))


def _noncentral_t_cdf(df: int, delta: float, t: float) -> float:
    negative = t < 0.0
    tt, dl = (-t, -delta) if negative else (t, delta)

    total = 0.0
    x = tt * tt / (tt * tt + df)
    if x > 0.0:
        lam = dl * dl
        p = 0.5 * math.exp(-0.5 * lam)
        q = _SQRT_2_OVER_PI * p * dl
        s = 0.5 - p
        a = 0.5
        b = 0.5 * df
        rxb = (1.0 - x) ** b
        log_beta = LN_SQRT_PI + ln_gamma(b) - ln_gamma(a + b)
        x_odd = reg_inc_beta(a, b, x)
        g_odd = 2.0 * rxb * math.exp(a * math.log(x) - log_beta)
        x_even = 1.0 - rxb
        g_even = b * x * rxb
        total = p * x_odd + q * x_even

        n = 1
        while True:
            a += 1.0
            x_odd -= g_odd
            x_even -= g_even
            g_odd *= x * (a + b - 1.0) / a
            g_even *= x * (a + b - 0.5) / (a + 0.5)
            p *= lam / (2 * n)
            q *= lam / (2 * n + 1)
            s -= p
            n += 1
            total += p * x_odd + q * x_even
            error_bound = 2.0 * s * (x_odd - g_odd)
            if error_bound <= T_SERIES_TOLERANCE:
                break
            if n > T_SERIES_MAX_ITERATIONS:
                raise NumericError(
                    f"Noncentral t series did not converge (df={df}, delta={delta}, t={t})"
                )

    total += normal_cdf(-dl)
    total = min(1.0, max(0.0, total))
    return 1.0 - total if negative else total


def noncentral_cdf(params: DistributionParams, nc: Noncentrality, x: float) -> float:
    """
    Noncentral cumulative distribution function P(X <= x).

    Args:
        params: Family and degrees of freedom
        nc: Noncentrality (delta for t, lambda for chi-square and F)
        x: Point of evaluation

    Returns:
        Probability in [0, 1]; equals the central CDF when nc is zero

    Raises:
        DomainError: If lambda is negative for chi-square or F
        NumericError: If a series fails to converge within its cap
    """
    nc.check_for(params)
    if math.isnan(x):
        raise DomainError("noncentral_cdf is undefined at NaN")
    if math.isinf(x):
        return 1.0 if x > 0 else 0.0

    if params.family is Family.STUDENT_T:
        return _noncentral_t_cdf(params.df1, nc.value, x)

    if x <= 0.0:
        return 0.0
    if nc.value == 0.0:
        return central_cdf(params, x)

    half_lambda = 0.5 * nc.value
    if params.family is Family.CHI_SQUARE:
        half_df = 0.5 * params.df1
        return _poisson_mixture(half_lambda, lambda j: reg_inc_gamma_lower(half_df + j, 0.5 * x))

    dfn, dfd = params.df1, params.df2
    assert dfd is not None
    y = dfn * x / (dfn * x + dfd)
    return _poisson_mixture(half_lambda, lambda j: reg_inc_beta(0.5 * dfn + j, 0.5 * dfd, y))


def noncentral_sf(params: DistributionParams, nc: Noncentrality, x: float) -> float:
    """Upper tail P(X > x) of the noncentral distribution."""
    return 1.0 - noncentral_cdf(params, nc, x)
