from pathlib import Path

import scipy.sparse as sp

from eigenshape.basemodel import SerializerConfig
from eigenshape.utils import format_float


class CooSerializer:
    @staticmethod
    def serialize(
        path: Path, matrix: sp.spmatrix, config: SerializerConfig = SerializerConfig()
    ) -> None:
        """
        Writes a sparse matrix as `i j value` lines with 0-based indices,
        ordered by row and then column.

        Attributes:
            path (Path): The path to the destination file.
            matrix (sp.spmatrix): The matrix to write.
            config (SerializerConfig): The serialization configuration.
        """
        path.parent.mkdir(parents=True, exist_ok=True)

        csr = sp.csr_matrix(matrix)
        csr.sum_duplicates()
        csr.sort_indices()
        coo = csr.tocoo()
        with path.open("w", newline="\n") as f:
            for i, j, value in zip(coo.row, coo.col, coo.data):
                f.write(f"{i} {j} {format_float(value, config.float_format)}\n")


def write_coo(path: Path, matrix: sp.spmatrix, float_format: str = "") -> None:
    """Write a sparse matrix in coordinate text format for debugging."""
    CooSerializer.serialize(path, matrix, SerializerConfig(float_format=float_format))
