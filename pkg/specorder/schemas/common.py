"""
Specorder - Common Pydantic Schemas
Shared schema components used by every emitted document
"""

from typing import Any

from pydantic import BaseModel, ConfigDict, Field


class BaseSchema(BaseModel):
    """Base schema with common configuration."""

    model_config = ConfigDict(
        populate_by_name=True,
        use_enum_values=True,
    )


class ErrorResponse(BaseSchema):
    """Error document printed on stderr by the CLI."""

    error: str
    error_code: str
    message: str
    details: dict[str, Any] = Field(default_factory=dict)
