from pathlib import Path
from typing import Dict

from eigenshape.basemodel import SerializerConfig
from eigenshape.utils import format_float


class FieldFileSerializer:
    @staticmethod
    def serialize(path: Path, data: Dict, config: SerializerConfig) -> None:
        """
        Serializes the mesh and its fields to the file at the specified path.

        Attributes:
            path (Path): The path to the destination file.
            data (Dict): The data to be serialized, with a "mesh" and "quantities".
            config (SerializerConfig): The serialization configuration.
        """
        path.parent.mkdir(parents=True, exist_ok=True)

        mesh = data["mesh"]
        fmt = lambda x: format_float(x, config.float_format)

        with path.open("w", newline="\n") as f:
            f.write(f"{mesh.dim} {mesh.n_vertices} {mesh.n_elements}\n")
            for vertex in mesh.vertices:
                f.write(" ".join(fmt(x) for x in vertex) + "\n")
            for element in mesh.elements:
                f.write(" ".join(str(i) for i in element) + "\n")
            for name, field in data.get("quantities", {}).items():
                f.write(f"field {name} {field.location}\n")
                for value in field.values:
                    f.write(f"{fmt(value)}\n")
