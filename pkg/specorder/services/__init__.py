"""
Specorder - Services
"""

from specorder.services.artifacts import ArtifactService, dump_json, system_from_config
from specorder.services.verification import SUITES, VerificationService

__all__ = [
    "ArtifactService",
    "SUITES",
    "VerificationService",
    "dump_json",
    "system_from_config",
]
