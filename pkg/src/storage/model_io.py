"""Model file persistence."""
import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional, Union

from ..config import settings
from ..corpus import Vocabulary
from ..errors import ModelFormatError
from ..sampler import Hyperparams, TrainedModel
from .validator import MODEL_SCHEMA, validate_document

logger = logging.getLogger(__name__)


def _format_row(row) -> str:
    return "[" + ", ".join(f"{x:.17g}" for x in row) + "]"


def model_to_json(model: TrainedModel) -> str:
    """Serialize a model; phi entries carry 17 significant digits."""
    header: Dict[str, Any] = {
        "format_version": model.format_version,
        "K": model.K,
        "alpha": model.hyperparams.alpha,
        "beta": model.hyperparams.beta,
        "granularity": model.hyperparams.granularity.value,
        "seed": model.hyperparams.seed,
        "vocabulary": model.vocabulary.id_to_term,
    }
    head = json.dumps(header, indent=2, ensure_ascii=False)
    rows = ",\n    ".join(_format_row(row) for row in model.phi)
    return head[:-2] + f',\n  "phi": [\n    {rows}\n  ]\n}}\n'


def save_model(model: TrainedModel, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(model_to_json(model), encoding="utf-8")
    logger.info(f"Saved K={model.K}, V={model.V} model to {path}")
    return path


def load_model(path: Union[str, Path], expected_version: Optional[int] = None) -> TrainedModel:
    """
    Load and validate a model file.

    Args:
        path: Model JSON path
        expected_version: Required ``format_version`` (defaults to settings)

    Returns:
        TrainedModel

    Raises:
        FileNotFoundError: If the file does not exist
        ModelFormatError: On invalid JSON, schema violations, version or shape mismatch
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Model file not found: {path}")
    expected = settings.model_format_version if expected_version is None else expected_version

    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise ModelFormatError(f"{path}: invalid JSON: {e}") from e

    validate_document(data, MODEL_SCHEMA)
    if data["format_version"] != expected:
        raise ModelFormatError(f"{path}: format_version {data['format_version']} != expected {expected}")
    if len(data["phi"]) != data["K"]:
        raise ModelFormatError(f"{path}: phi has {len(data['phi'])} rows for K={data['K']}")

    try:
        hyper = Hyperparams(
            K=data["K"],
            alpha=data["alpha"],
            beta=data["beta"],
            granularity=data["granularity"],
            seed=data.get("seed", 0)
        )
        model = TrainedModel(
            phi=data["phi"],
            hyperparams=hyper,
            vocabulary=Vocabulary.from_terms(data["vocabulary"]),
            format_version=data["format_version"]
        )
    except ValueError as e:
        raise ModelFormatError(f"{path}: {e}") from e

    logger.debug(f"Loaded K={model.K}, V={model.V} model from {path}")
    return model
