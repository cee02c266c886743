"""
JSON serializer for result tables.
Either one document {"meta": ..., "rows": [...]} or JSON lines.
"""

from __future__ import annotations

import json
from typing import Any, Dict, List

from typeb_fock.processing.serializers.base import (
    Row,
    SerializerBase,
    SerializerRegistry,
    plain_value,
)


class JSONSerializer(SerializerBase):
    """Serializes rows to JSON; floats keep their round-trip repr."""

    def serialize_to_dict(self, rows: List[Row], **options) -> Dict[str, Any]:
        return {
            "meta": plain_value(options.get("meta") or {}),
            "rows": [plain_value(row) for row in rows],
        }

    def serialize(self, rows: List[Row], **options) -> str:
        if options.get("lines", False):
            return "".join(
                json.dumps(plain_value(row), sort_keys=False) + "\n" for row in rows
            )
        indent = 2 if options.get("pretty", True) else None
        return json.dumps(self.serialize_to_dict(rows, **options), indent=indent) + "\n"


# Self-register on import
SerializerRegistry.register("json", JSONSerializer())
