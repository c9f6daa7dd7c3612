"""
Specorder - Poset Document Schema
JSON shape of an emitted poset
"""

from pydantic import Field

from specorder.schemas.common import BaseSchema


class PosetNode(BaseSchema):
    id: int = Field(description="Position in the vertex order")
    word: list[int] = Field(description="Canonical reduced word, 1-based generator indices")
    eps: str | None = Field(default=None, description="ε bit-string for Ekedahl-Oort strata")
    length: int = Field(description="Length of the element (stratum dimension for EO strata)")


class PosetDocument(BaseSchema):
    """
    A poset over ^JW.

    ``covers`` holds pairs [i, j] with node i covered by node j, i.e. the
    stratum of i lies in the closure of the stratum of j.
    """

    family: str
    rank: int
    j: list[int] = Field(description="1-based indices of J")
    frobenius: list[int] | str = Field(description="Image of each generator under F, or \"id\"")
    nodes: list[PosetNode]
    leq: list[list[bool]] | None = Field(
        default=None, description="Full relation matrix, leq[i][j] iff node i ⪯ node j"
    )
    covers: list[list[int]]
