"""
Specorder - Custom Exceptions
Library exception classes with error codes and CLI exit codes
"""

from typing import Any

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


class SpecOrderError(Exception):
    """Base exception for all specorder errors."""

    def __init__(
        self,
        message: str,
        exit_code: int = EXIT_USAGE,
        error_code: str = "INTERNAL_ERROR",
        details: dict[str, Any] | None = None,
    ) -> None:
        self.message = message
        self.exit_code = exit_code
        self.error_code = error_code
        self.details = details or {}
        super().__init__(self.message)

    def to_dict(self) -> dict[str, Any]:
        """Error document in the shape printed by the CLI."""
        return {
            "error": type(self).__name__,
            "error_code": self.error_code,
            "message": self.message,
            "details": self.details,
        }


# =============================================================================
# Configuration Exceptions
# =============================================================================


class ConfigurationError(SpecOrderError):
    """Raised when a run configuration is invalid."""

    def __init__(
        self,
        message: str = "Invalid configuration",
        details: dict[str, Any] | None = None,
    ) -> None:
        super().__init__(
            message=message,
            error_code="CONFIGURATION_ERROR",
            details=details,
        )


class UnsupportedSystemError(SpecOrderError):
    """Raised for a family/rank combination that cannot be built."""

    def __init__(self, family: str, rank: int, reason: str) -> None:
        super().__init__(
            message=f"Unsupported system {family}{rank}: {reason}",
            error_code="UNSUPPORTED_SYSTEM",
            details={"family": family, "rank": rank},
        )


class NotAnAutomorphismError(SpecOrderError):
    """Raised when a Frobenius map does not preserve the Coxeter matrix."""

    def __init__(self, frobenius: tuple[int, ...], reason: str) -> None:
        super().__init__(
            message=f"Frobenius map is not a diagram automorphism: {reason}",
            error_code="NOT_AN_AUTOMORPHISM",
            details={"frobenius": [i + 1 for i in frobenius]},
        )


class InvalidSubsetError(SpecOrderError):
    """Raised when a set of simple reflections has out-of-range indices."""

    def __init__(self, indices: list[int], rank: int) -> None:
        super().__init__(
            message=f"Simple reflection indices {indices} out of range 1..{rank}",
            error_code="INVALID_SUBSET",
            details={"indices": indices, "rank": rank},
        )


class UnknownSuiteError(SpecOrderError):
    """Raised when verification is requested for an unknown suite."""

    def __init__(self, suite: str, known: list[str]) -> None:
        super().__init__(
            message=f"Unknown verification suite '{suite}'",
            error_code="UNKNOWN_SUITE",
            details={"suite": suite, "known": known},
        )


# =============================================================================
# Input / Precondition Exceptions
# =============================================================================


class MixedSystemError(SpecOrderError):
    """Raised when elements of different Coxeter systems are combined."""

    def __init__(self) -> None:
        super().__init__(
            message="Elements belong to different Coxeter systems",
            error_code="MIXED_SYSTEM",
        )


class BoundExceededError(SpecOrderError):
    """Raised when an enumeration would exceed the configured bound."""

    def __init__(self, what: str, bound: int) -> None:
        super().__init__(
            message=f"Enumeration of {what} exceeds the configured bound of {bound}",
            error_code="BOUND_EXCEEDED",
            details={"what": what, "bound": bound},
        )


class PreconditionError(SpecOrderError):
    """Raised when an operation's input violates its precondition."""

    def __init__(
        self,
        message: str,
        details: dict[str, Any] | None = None,
    ) -> None:
        super().__init__(
            message=message,
            error_code="PRECONDITION_FAILED",
            details=details,
        )


class QuotientMembershipError(PreconditionError):
    """Raised when an element is not in the required parabolic quotient."""

    def __init__(self, word: tuple[int, ...], quotient: str) -> None:
        super().__init__(
            message=f"Element {list(word)} is not in {quotient}",
            details={"word": [i + 1 for i in word], "quotient": quotient},
        )
        self.error_code = "NOT_IN_QUOTIENT"


class InvalidPermutationError(PreconditionError):
    """Raised when a permutation violates the symplectic condition."""

    def __init__(self, images: tuple[int, ...], reason: str) -> None:
        super().__init__(
            message=f"Invalid symplectic permutation {list(images)}: {reason}",
            details={"images": list(images)},
        )
        self.error_code = "INVALID_PERMUTATION"


# =============================================================================
# Theorem Violations
# =============================================================================


class TheoremViolationError(SpecOrderError):
    """
    Raised when a theorem-guaranteed search misses or a computed relation
    fails an axiom. Signals an implementation defect, not bad input.
    """

    def __init__(
        self,
        statement: str,
        details: dict[str, Any] | None = None,
    ) -> None:
        super().__init__(
            message=f"Theorem violated: {statement}",
            exit_code=EXIT_VIOLATION,
            error_code="THEOREM_VIOLATION",
            details=details,
        )
