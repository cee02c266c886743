"""
CSV serializer for result tables.
Floats are written with 17 significant digits and '.' decimals.
"""

from __future__ import annotations

import csv as _csv
from io import StringIO
from typing import Any, Dict, List

from typeb_fock.processing.serializers.base import (
    Row,
    SerializerBase,
    SerializerRegistry,
    plain_value,
)


def format_cell(value: Any) -> str:
    value = plain_value(value)
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return format(value, ".17g")
    if isinstance(value, list):
        return ";".join(format_cell(v) for v in value)
    return str(value)


class CSVSerializer(SerializerBase):
    """Serializes rows to CSV, with optional '# key=value' header lines."""

    def serialize_to_dict(self, rows: List[Row], **options) -> List[Dict[str, str]]:
        columns = options.get("columns") or (list(rows[0].keys()) if rows else [])
        return [{col: format_cell(row.get(col)) for col in columns} for row in rows]

    def serialize(self, rows: List[Row], **options) -> str:
        output = StringIO()
        for key, value in (options.get("meta") or {}).items():
            output.write(f"# {key}={format_cell(value)}\n")
        table = self.serialize_to_dict(rows, **options)
        if not table:
            return output.getvalue()
        writer = _csv.DictWriter(
            output, fieldnames=list(table[0].keys()), lineterminator="\n"
        )
        writer.writeheader()
        writer.writerows(table)
        return output.getvalue()


# Self-register on import
SerializerRegistry.register("csv", CSVSerializer())
