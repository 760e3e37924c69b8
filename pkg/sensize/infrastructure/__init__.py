"""
Infrastructure layer for sensize.

Adapters for files: config documents, fingerprints and result serializers.
"""

from sensize.infrastructure.storage.config_loader import ConfigLoader
from sensize.infrastructure.storage.hasher import ConfigHasher
from sensize.infrastructure.storage.serializers import OutputFormat, Report, render

__all__ = ["ConfigLoader", "ConfigHasher", "OutputFormat", "Report", "render"]
