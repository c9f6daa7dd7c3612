# Schemas Package
from specorder.schemas.common import BaseSchema, ErrorResponse
from specorder.schemas.poset import PosetDocument, PosetNode
from specorder.schemas.quotient import QuotientListing, QuotientRow
from specorder.schemas.report import SuiteResult, VerificationReport
from specorder.schemas.run import FamilyEnum, OutputFormatEnum, RunConfig, SideEnum

__all__ = [
    # Common
    "BaseSchema",
    "ErrorResponse",
    # Run
    "FamilyEnum",
    "OutputFormatEnum",
    "RunConfig",
    "SideEnum",
    # Artefacts
    "PosetDocument",
    "PosetNode",
    "QuotientListing",
    "QuotientRow",
    "SuiteResult",
    "VerificationReport",
]
