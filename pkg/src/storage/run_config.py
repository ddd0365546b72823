"""Resolved run configuration written next to every output."""
import hashlib
import json
from pathlib import Path
from typing import Any, Dict, Union

from pydantic import BaseModel, Field


class RunConfig(BaseModel):
    """Command name plus its fully resolved parameters."""
    command: str
    parameters: Dict[str, Any] = Field(default_factory=dict)

    @property
    def config_hash(self) -> str:
        config_str = json.dumps(self.parameters, sort_keys=True, default=str)
        return hashlib.sha256(config_str.encode()).hexdigest()


def config_path_for(output: Union[str, Path]) -> Path:
    output = Path(output)
    return output.with_name(output.name + ".config.json")


def write_run_config(config: RunConfig, output: Union[str, Path]) -> Path:
    """Write ``<output>.config.json``."""
    path = config_path_for(output)
    payload = {
        "command": config.command,
        "config_hash": config.config_hash,
        "parameters": config.parameters,
    }
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(payload, f, indent=2, sort_keys=True, default=str)
        f.write("\n")
    return path
