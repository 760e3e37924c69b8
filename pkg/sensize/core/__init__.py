"""
Core domain logic for sensize.

Pure numerics and domain types; nothing here touches files.
"""

from sensize.core.effect_size import EffectSize, Metric
from sensize.core.sensitiveness import TestFamily, TestSpec, Tails

__all__ = ["EffectSize", "Metric", "TestFamily", "TestSpec", "Tails"]
