"""
Config file loader for simulation settings (YAML, JSON or TOML).
"""

import sys
from pathlib import Path
from typing import Any, Dict, Union

import yaml

from sensize.core.config import SimulationConfig

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

YAML_SUFFIXES = (".yaml", ".yml", ".json")
TOML_SUFFIXES = (".toml",)


class ConfigLoader:
    """Adapter for loading and saving simulation config documents."""

    def __init__(self, config_dir: Path = Path(".")):
        """
        Initialize the config loader.

        Args:
            config_dir: Directory that relative config names are resolved against
        """
        self.config_dir = Path(config_dir)

    def _resolve_path(self, name: Union[str, Path]) -> Path:
        """Resolve a config name to a file path."""
        path = Path(name)

        if path.exists() or path.is_absolute():
            return path

        return self.config_dir / path

    def load(self, name: Union[str, Path]) -> Dict[str, Any]:
        """
        Load a config document.

        JSON is parsed by the YAML parser, of which it is a subset.

        Args:
            name: A file path or a name relative to config_dir

        Returns:
            Dictionary containing the config data

        Raises:
            FileNotFoundError: If the config file doesn't exist
            ValueError: If the suffix is unknown or the document is empty
            yaml.YAMLError: If the YAML or JSON is invalid
            tomllib.TOMLDecodeError: If the TOML is invalid
        """
        path = self._resolve_path(name)

        if not path.exists():
            raise FileNotFoundError(f"Config file not found: {path}")

        suffix = path.suffix.lower()
        if suffix in TOML_SUFFIXES:
            with open(path, "rb") as f:
                data = tomllib.load(f)
        elif suffix in YAML_SUFFIXES:
            with open(path, "r") as f:
                data = yaml.safe_load(f)
        else:
            raise ValueError(f"Unsupported config format {suffix!r}: {path}")

        if not data:
            raise ValueError(f"Empty or invalid config file: {path}")
        if not isinstance(data, dict):
            raise ValueError(f"Config file must hold a mapping: {path}")

        return dict(data)

    def load_config(self, name: Union[str, Path]) -> SimulationConfig:
        """
        Load a config file and return a SimulationConfig.

        Raises:
            ConfigError: If the document does not describe a valid config
        """
        return SimulationConfig.from_dict(self.load(name))

    def save(self, config: SimulationConfig, name: Union[str, Path]) -> Path:
        """
        Save a config as YAML.

        Args:
            config: The SimulationConfig to save
            name: File name, relative to config_dir unless absolute

        Returns:
            Path to the saved file
        """
        path = self.config_dir / Path(name)

        # Create directory if it doesn't exist
        path.parent.mkdir(parents=True, exist_ok=True)

        with open(path, "w") as f:
            yaml.dump(config.to_dict(), f, default_flow_style=False, sort_keys=False)

        return path
