"""
Base serializer infrastructure for result tables.
Defines SerializerBase and a simple SerializerRegistry.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List

import numpy as np

from typeb_fock.errors import ArgumentError

Row = Dict[str, Any]


def plain_value(value: Any) -> Any:
    """Convert numpy scalars, complex numbers and fractions to plain values."""
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, complex):
        return value.real if value.imag == 0 else [value.real, value.imag]
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [plain_value(v) for v in value]
    if isinstance(value, dict):
        return {k: plain_value(v) for k, v in value.items()}
    return value


class SerializerBase(ABC):
    """Abstract base class for all serializers."""

    @abstractmethod
    def serialize(self, rows: List[Row], **options) -> str:
        """Serialize rows to a string format."""
        raise NotImplementedError

    @abstractmethod
    def serialize_to_dict(self, rows: List[Row], **options) -> Any:
        """Serialize rows to a structured object (dict/list)."""
        raise NotImplementedError

    def save(self, rows: List[Row], path: Path | str, **options) -> None:
        """Save serialized output to a file path."""
        p = Path(path)
        p.parent.mkdir(parents=True, exist_ok=True)
        p.write_text(self.serialize(rows, **options), encoding="utf-8")


class SerializerRegistry:
    """Registry mapping format names to serializer instances."""

    _serializers: Dict[str, SerializerBase] = {}

    @classmethod
    def register(cls, fmt: str, serializer: SerializerBase) -> None:
        cls._serializers[fmt.strip().lower()] = serializer

    @classmethod
    def get(cls, fmt: str) -> SerializerBase:
        key = fmt.strip().lower()
        if key not in cls._serializers:
            available = ", ".join(sorted(cls._serializers.keys())) or "<none>"
            raise ArgumentError(f"Unknown format: {fmt}. Available: {available}")
        return cls._serializers[key]

    @classmethod
    def formats(cls) -> List[str]:
        return sorted(cls._serializers.keys())
