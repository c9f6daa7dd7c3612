"""
Specorder - Run Configuration Schema
Validated CLI configuration shared by every command
"""

from enum import Enum

from pydantic import ConfigDict, Field, field_validator, model_validator

from specorder.schemas.common import BaseSchema


class FamilyEnum(str, Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"


class OutputFormatEnum(str, Enum):
    TEXT = "text"
    JSON = "json"
    DOT = "dot"
    CSV = "csv"


class SideEnum(str, Enum):
    LEFT = "left"
    RIGHT = "right"
    DOUBLE = "double"


class RunConfig(BaseSchema):
    """One CLI invocation, with 1-based generator indices."""

    model_config = ConfigDict(populate_by_name=True, use_enum_values=True, validate_default=True)

    command: str
    family: FamilyEnum = FamilyEnum.A
    rank: int = Field(default=2, ge=1, description="Number of simple reflections")
    j: list[int] | None = Field(default=None, description="1-based indices of J; None means every J for verify, \u2205 otherwise")
    k: list[int] | None = Field(default=None, description="1-based indices of K (double quotients)")
    frobenius: list[int] | None = Field(
        default=None, description="Image of each generator under F; None means identity"
    )
    side: SideEnum = SideEnum.LEFT
    output_format: OutputFormatEnum = OutputFormatEnum.TEXT
    eo_genus: int | None = Field(default=None, ge=1, description="Genus g for the EO poset")
    include_matrix: bool = True
    max_order: int | None = Field(default=None, gt=0)
    seed: int | None = None
    suite: str | None = None

    @field_validator("j", "k")
    @classmethod
    def sort_indices(cls, value: list[int] | None) -> list[int] | None:
        if value is None:
            return None
        return sorted(set(value))

    @model_validator(mode="after")
    def check_ranges(self) -> "RunConfig":
        for name, indices in (("j", self.j or []), ("k", self.k or [])):
            bad = [i for i in indices if not 1 <= i <= self.rank]
            if bad:
                raise ValueError(f"{name} indices {bad} out of range 1..{self.rank}")
        if self.frobenius is not None and sorted(self.frobenius) != list(range(1, self.rank + 1)):
            raise ValueError(f"frobenius {self.frobenius} is not a permutation of 1..{self.rank}")
        return self

    @property
    def j_zero_based(self) -> list[int]:
        return [i - 1 for i in self.j or []]

    @property
    def k_zero_based(self) -> list[int] | None:
        return None if self.k is None else [i - 1 for i in self.k]

    @property
    def frobenius_zero_based(self) -> list[int] | None:
        return None if self.frobenius is None else [i - 1 for i in self.frobenius]
