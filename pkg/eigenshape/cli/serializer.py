import json
from pathlib import Path
from typing import Dict

from eigenshape.basemodel import SerializerConfig


class RunConfigSerializer:
    @staticmethod
    def serialize(path: Path, data: Dict, config: SerializerConfig) -> None:
        """
        Writes a run configuration as indented JSON.

        Attributes:
            path (Path): The path to the destination file.
            data (Dict): The configuration values.
            config (SerializerConfig): The serialization configuration; JSON
                numbers are always written in their shortest round-trip form.
        """
        path.parent.mkdir(parents=True, exist_ok=True)

        with path.open("w", encoding="utf8", newline="\n") as f:
            json.dump(data, f, indent=4, default=str)
            f.write("\n")
