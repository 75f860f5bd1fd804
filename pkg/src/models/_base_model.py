"""
This module defines the BaseModel class as the base for all domain models.
"""

from typing import Any, TypeVar

from pydantic import BaseModel as PydanticBaseModel
from pydantic import ConfigDict

BaseModelType = TypeVar("BaseModelType", bound="BaseModel")


class BaseModel(PydanticBaseModel):
    """
    Base model shared by the grids, regions, reports and configs.

    Models are immutable after construction and reject unknown fields.

    Methods:
        model_validate_partial: Validates a copy of a model with some fields replaced.
    """

    model_config = ConfigDict(
        frozen=True,
        extra="forbid",
        arbitrary_types_allowed=True,
    )

    @classmethod
    def model_validate_partial(
        cls: type[BaseModelType], base: BaseModelType, data: dict[str, Any]
    ) -> BaseModelType:
        _data = {}
        for field in cls.model_fields:
            if field not in data:
                _data[field] = getattr(base, field)
            else:
                _data[field] = data[field]
        for field in data:
            if field not in cls.model_fields:
                _data[field] = data[field]
        return cls.model_validate(_data)
