"""
Simulation config validation.
"""

from dataclasses import dataclass, field
from typing import List

from sensize.core.config import SimulationConfig
from sensize.core.sensitiveness import Tails


@dataclass
class ValidationResult:
    """Result of config validation."""

    valid: bool
    errors: List[str] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        """Check if validation passed (no errors)."""
        return self.valid and len(self.errors) == 0


class SimulationConfigValidator:
    """Cross-field checks run before any simulation work."""

    @staticmethod
    def validate_conditions(config: SimulationConfig) -> ValidationResult:
        """
        Validate condition sample sizes and test settings.

        Args:
            config: The SimulationConfig to validate

        Returns:
            ValidationResult with condition validation status
        """
        errors = []
        warnings = []

        for name, n in config.condition_ns.items():
            if n < 4:
                errors.append(f"Condition {name}: sample size {n} must be >= 4")
            elif n % 2:
                errors.append(f"Condition {name}: sample size {n} must be even (equal groups)")

        if not (0.0 < config.sig < 1.0):
            errors.append(f"sig must be in (0, 1), got {config.sig}")
        if config.tails is not Tails.ONE:
            errors.append("Only one-tailed tests are simulated")
        if config.mes_threshold < 0:
            errors.append(f"mes_threshold must be >= 0, got {config.mes_threshold}")
        if len(config.condition_ns) < 2:
            warnings.append("Fewer than two conditions: nothing to compare")

        return ValidationResult(valid=len(errors) == 0, errors=errors, warnings=warnings)

    @staticmethod
    def validate_plan(config: SimulationConfig) -> ValidationResult:
        """
        Validate that every extraction fits its macro-population and every
        condition sample fits every research population it is drawn from.

        Args:
            config: The SimulationConfig to validate

        Returns:
            ValidationResult with plan validation status
        """
        errors = []
        warnings = []
        largest_sample = max(config.condition_ns.values())

        for i, extraction in enumerate(config.extraction_plan):
            where = f"extraction_plan[{i}]"
            if not (0 <= extraction.macro < len(config.macro_pops)):
                errors.append(f"{where}: no macro-population with index {extraction.macro}")
                continue
            if extraction.size % 2:
                errors.append(f"{where}: population size {extraction.size} must be even")
            group = extraction.size // 2
            macro_group = config.macro_pops[extraction.macro].group_size
            if group > macro_group:
                errors.append(
                    f"{where}: {group} per group exceeds macro-population "
                    f"{extraction.macro} ({macro_group} per group)"
                )
            if largest_sample > extraction.size:
                errors.append(
                    f"{where}: sample size {largest_sample} exceeds population size "
                    f"{extraction.size}"
                )
            elif largest_sample == extraction.size:
                warnings.append(f"{where}: largest sample takes the whole population")

        return ValidationResult(valid=len(errors) == 0, errors=errors, warnings=warnings)

    @staticmethod
    def validate(config: SimulationConfig) -> ValidationResult:
        """
        Validate conditions and extraction plan.

        Args:
            config: The SimulationConfig to validate

        Returns:
            ValidationResult with combined validation status
        """
        conditions_result = SimulationConfigValidator.validate_conditions(config)
        plan_result = SimulationConfigValidator.validate_plan(config)

        all_errors = conditions_result.errors + plan_result.errors
        all_warnings = conditions_result.warnings + plan_result.warnings

        return ValidationResult(
            valid=len(all_errors) == 0, errors=all_errors, warnings=all_warnings
        )
