"""
Fingerprints for simulation configs.
"""

import hashlib
from typing import Any, Dict

import yaml

from sensize.core.config import SimulationConfig


class ConfigHasher:
    """Generate hashes for config content."""

    @staticmethod
    def generate_hash_from_dict(data: Dict[str, Any]) -> str:
        """
        Generate a hash from a config dictionary.

        Args:
            data: Dictionary in SimulationConfig.to_dict() form

        Returns:
            First 12 characters of the SHA256 hash
        """
        # Create deterministic YAML string
        yaml_str = yaml.dump(data, sort_keys=True, default_flow_style=False)

        hash_obj = hashlib.sha256(yaml_str.encode("utf-8"))

        # Return first 12 characters (like git)
        return hash_obj.hexdigest()[:12]

    @staticmethod
    def generate_hash(config: SimulationConfig) -> str:
        """
        Generate a SHA256 fingerprint of everything that determines a run.

        Args:
            config: The SimulationConfig to hash

        Returns:
            First 12 characters of the SHA256 hash
        """
        return ConfigHasher.generate_hash_from_dict(config.to_dict())

    @staticmethod
    def verify_hash(config: SimulationConfig, expected: str) -> bool:
        """
        Check that a recorded fingerprint belongs to a config.

        Args:
            config: The SimulationConfig to check
            expected: Fingerprint recorded alongside earlier results

        Returns:
            True if hash matches, False otherwise
        """
        if not expected:
            return False

        return ConfigHasher.generate_hash(config) == expected
