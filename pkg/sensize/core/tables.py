"""
Reference tables: sample sizes for sensitiveness and power at Cohen's
conventional effect sizes, with critical values and achieved effect sizes.

Sensitiveness columns are solved at publication precision: critical values
and achieved effect sizes rounded half-up to four decimals, and Cramér's V
targets rounded to three decimals, which is how the printed values were
obtained by hand.
"""

import math
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from sensize.core.effect_size import (
    BenchmarkSize,
    EffectSize,
    Metric,
    benchmark,
)
from sensize.core.power import PowerSpec, min_n_for_power
from sensize.core.sensitiveness import TestSpec, effect_from_statistic, min_sample_size
from sensize.utils import round_half_up

#: Decimals of printed critical values and achieved effect sizes.
PUBLICATION_PRECISION = 4
#: Decimals of printed Cramér's V targets.
V_TARGET_PRECISION = 3

SIZES = (BenchmarkSize.SMALL, BenchmarkSize.MEDIUM, BenchmarkSize.LARGE)


@dataclass(frozen=True)
class TableTest:
    """One test row of the reference tables."""

    test_label: str
    es_label: str
    spec: TestSpec
    metric: Metric

    def sensitiveness_target(self, size: BenchmarkSize) -> EffectSize:
        """Target as printed: Cohen's value, or V(df) = w / sqrt(df) for df >= 2."""
        es = benchmark(self.metric, size)
        if self.metric is Metric.W and self.spec.df and self.spec.df > 1:
            dfs = self.spec.df
            value = round_half_up(es.value / math.sqrt(dfs), V_TARGET_PRECISION)
            return EffectSize(Metric.V, value, dfs)
        return es


def reference_tests(sig: float = 0.05) -> List[TableTest]:
    """The twelve tests of the reference tables, in printed order."""
    tests = [
        TableTest("t", "r", TestSpec.point_biserial(sig=sig), Metric.R),
        TableTest("t", "d", TestSpec.t_two_sample(sig=sig), Metric.D),
    ]
    for df in range(1, 6):
        tests.append(TableTest(f"chi2({df})", f"w({df}df)", TestSpec.chi2_gof(df, sig), Metric.W))
    for k in range(2, 7):
        tests.append(TableTest(f"F({k - 1},dfd)", f"f({k}g)", TestSpec.oneway_f(k, sig), Metric.F))
    return tests


@dataclass(frozen=True)
class TableRow:
    """One (test, conventional size) cell group of a reference table."""

    test_label: str
    es_label: str
    size: BenchmarkSize
    target_es: EffectSize
    n_sns: int
    critical_value: float
    df: Tuple[int, ...]
    actual_es: EffectSize
    n_pwr: Optional[int] = None

    @property
    def critical_label(self) -> str:
        """Critical value as printed, e.g. ``t(46) = 1.6787``."""
        family = self.test_label.split("(")[0]
        dfs = ",".join(str(d) for d in self.df)
        value = f"{round_half_up(self.critical_value, PUBLICATION_PRECISION):.4f}"
        return f"{family}({dfs}) = {value}"

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "test": self.test_label,
            "es": self.es_label,
            "size": self.size.value,
            "target_es": self.target_es.to_dict(),
            "n_sns": self.n_sns,
            "critical_value": self.critical_value,
            "df": list(self.df),
            "actual_es": self.actual_es.to_dict(),
        }
        if self.n_pwr is not None:
            data["n_pwr"] = self.n_pwr
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "TableRow":
        return cls(
            test_label=data["test"],
            es_label=data["es"],
            size=BenchmarkSize(data["size"]),
            target_es=EffectSize.from_dict(data["target_es"]),
            n_sns=int(data["n_sns"]),
            critical_value=float(data["critical_value"]),
            df=tuple(int(d) for d in data["df"]),
            actual_es=EffectSize.from_dict(data["actual_es"]),
            n_pwr=data.get("n_pwr"),
        )

    def to_record(self) -> Dict[str, Any]:
        """Flat record for CSV and Markdown output."""
        record: Dict[str, Any] = {
            "test": self.test_label,
            "es": self.es_label,
            "size": self.size.value,
            "target": self.target_es.value,
            "n_sns": self.n_sns,
        }
        if self.n_pwr is not None:
            record["n_pwr"] = self.n_pwr
        record["cv"] = self.critical_label
        record["actual"] = self.actual_es.value
        return record


def _sensitiveness_row(
    table_test: TableTest, size: BenchmarkSize, power: Optional[float]
) -> TableRow:
    spec = table_test.spec
    target = table_test.sensitiveness_target(size)
    result = min_sample_size(spec, target, precision=PUBLICATION_PRECISION)
    printed_cv = round_half_up(result.critical_value, PUBLICATION_PRECISION)
    actual = effect_from_statistic(
        spec, printed_cv, result.n_min, target.metric, target.dfs or 1
    )
    n_pwr = None
    if power is not None:
        population_es = benchmark(table_test.metric, size)
        n_pwr = min_n_for_power(PowerSpec(spec, population_es, power))
    return TableRow(
        test_label=table_test.test_label,
        es_label=table_test.es_label,
        size=size,
        target_es=target,
        n_sns=result.n_min,
        critical_value=result.critical_value,
        df=result.df,
        actual_es=actual,
        n_pwr=n_pwr,
    )


def generate_table2(sig: float = 0.05, power: float = 0.80) -> List[TableRow]:
    """
    Sample sizes for sensitiveness and power at Cohen's small, medium and
    large effects: twelve one-tailed tests by three sizes.
    """
    return [
        _sensitiveness_row(table_test, size, power)
        for table_test in reference_tests(sig)
        for size in SIZES
    ]


def generate_supp_table2(sig: float = 0.05) -> List[TableRow]:
    """Target and actual effect sizes, sample sizes and critical values."""
    return [
        _sensitiveness_row(table_test, size, None)
        for table_test in reference_tests(sig)
        for size in SIZES
    ]
