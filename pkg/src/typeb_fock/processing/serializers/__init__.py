"""
Serializer package and registry for output formats.

Concrete serializers ('csv', 'json') register themselves on import.
"""

from typeb_fock.processing.serializers.base import (
    SerializerBase,
    SerializerRegistry,
    plain_value,
)

# Import concrete serializers to trigger self-registration
from typeb_fock.processing.serializers import csv as _csv  # noqa: F401
from typeb_fock.processing.serializers import json as _json  # noqa: F401

__all__ = [
    "SerializerBase",
    "SerializerRegistry",
    "plain_value",
]
