"""JSON Schema validation for model and corpus files."""
import json
from typing import Any, Dict

from jsonschema import ValidationError, validate

from ..config import settings
from ..errors import ModelFormatError

MODEL_SCHEMA = "model_schema.json"
CORPUS_SCHEMA = "corpus_schema.json"


def load_schema(name: str) -> Dict[str, Any]:
    """Load a schema from the schema directory."""
    schema_path = settings.schema_dir / name
    with open(schema_path, "r", encoding="utf-8") as f:
        return json.load(f)


def validate_document(instance: Dict[str, Any], schema_name: str) -> bool:
    """
    Validate a parsed JSON document against a named schema.

    Args:
        instance: Parsed JSON content
        schema_name: File name under ``schemas/``

    Returns:
        True if valid

    Raises:
        ModelFormatError: If validation fails
    """
    try:
        validate(instance=instance, schema=load_schema(schema_name))
    except ValidationError as e:
        location = "/".join(str(part) for part in e.absolute_path) or "<root>"
        raise ModelFormatError(f"{schema_name}: {location}: {e.message}") from e
    return True
