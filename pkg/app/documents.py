"""
Shared helpers for the versioned JSON documents every app reads and writes.
"""
import json
from fractions import Fraction

from django.conf import settings
from rest_framework import serializers


class VersionedDocumentSerializer(serializers.Serializer):
    """Base for top-level documents: an optional "schema" that must match when present."""
    schema = serializers.CharField(required=False)

    def validate_schema(self, value):
        if value != settings.KODAIRA_KIT_SCHEMA:
            raise serializers.ValidationError(
                f"Unsupported schema {value!r}; expected {settings.KODAIRA_KIT_SCHEMA!r}"
            )
        return value


def jsonable(value):
    """Fractions become "p/q" strings (integral ones become ints); containers recurse."""
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else str(value)
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return value


def dump_document(payload: dict, indent=2) -> str:
    """Stable rendering: sorted keys and the schema tag on every document."""
    body = {'schema': settings.KODAIRA_KIT_SCHEMA, **jsonable(payload)}
    if indent is None:
        return json.dumps(body, sort_keys=True, separators=(',', ':'), ensure_ascii=False)
    return json.dumps(body, sort_keys=True, indent=indent, ensure_ascii=False)


def flatten_errors(errors, prefix='') -> list:
    """DRF error trees as "field.path: message" lines."""
    lines = []
    if isinstance(errors, dict):
        for key, value in errors.items():
            name = prefix if key == 'non_field_errors' else (f"{prefix}.{key}" if prefix else str(key))
            lines.extend(flatten_errors(value, name))
    elif isinstance(errors, list):
        for index, value in enumerate(errors):
            if isinstance(value, (dict, list)):
                lines.extend(flatten_errors(value, f"{prefix}[{index}]" if prefix else f"[{index}]"))
            else:
                lines.append(f"{prefix or 'document'}: {value}")
    else:
        lines.append(f"{prefix or 'document'}: {errors}")
    return lines
