#!/usr/bin/env python3
"""Base model classes for file-backed data."""

from typing import Any, Dict, Tuple
from abc import ABC, abstractmethod

import numpy as np

from models.errors import ParseError


class BaseModel(ABC):
    """Base class for models parsed from JSON documents.

    Subclasses list their mandatory top-level keys in ``REQUIRED_FIELDS``; the document shape
    is checked before ``_parse_data`` runs.
    """

    REQUIRED_FIELDS: Tuple[str, ...] = ()
    KIND = "document"

    def __init__(self, data: Dict[str, Any]):
        self._raw_data = data
        self._check_shape(data)
        self._parse_data(data)

    def _check_shape(self, data: Any) -> None:
        if not isinstance(data, dict):
            raise ParseError(f"{self.KIND} must be a JSON object", "$")
        for key in self.REQUIRED_FIELDS:
            if key not in data:
                raise ParseError(f"missing required field '{key}'", "$")

    @abstractmethod
    def _parse_data(self, data: Dict[str, Any]):
        """Parse the raw data into model attributes."""
        pass

    def to_dict(self) -> Dict[str, Any]:
        """Plain-JSON view of the public attributes; arrays become nested lists."""
        result = {}
        for key, value in self.__dict__.items():
            if key.startswith('_'):
                continue
            if isinstance(value, BaseModel):
                result[key] = value.to_dict()
            elif isinstance(value, np.ndarray):
                result[key] = value.tolist()
            elif isinstance(value, list):
                result[key] = [
                    item.to_dict() if isinstance(item, BaseModel) else item
                    for item in value
                ]
            else:
                result[key] = value
        return result

    def get_raw_data(self) -> Dict[str, Any]:
        """Get the original raw data."""
        return self._raw_data
