"""
Specorder - Quotient Listing Schema
"""

from pydantic import Field

from specorder.schemas.common import BaseSchema


class QuotientRow(BaseSchema):
    index: int
    word: list[int] = Field(description="Canonical reduced word, 1-based")
    length: int


class QuotientListing(BaseSchema):
    family: str
    rank: int
    j: list[int]
    k: list[int] | None = None
    side: str
    count: int
    rows: list[QuotientRow]
