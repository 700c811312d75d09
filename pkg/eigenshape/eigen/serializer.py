import csv
from pathlib import Path
from typing import Sequence

from eigenshape.basemodel import SerializerConfig
from eigenshape.utils import format_float


class DiagnosticsSerializer:
    header = ["lambda", "residual", "iters", "positivity_margin"]

    @staticmethod
    def serialize(path: Path, results: Sequence, config: SerializerConfig) -> None:
        """
        Writes eigensolver diagnostics, one row per result.

        Attributes:
            path (Path): The path to the destination file.
            results (Sequence[EigenResult]): The results to write.
            config (SerializerConfig): The serialization configuration.
        """
        path.parent.mkdir(parents=True, exist_ok=True)

        fmt = lambda x: format_float(x, config.float_format)
        with path.open("w", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(DiagnosticsSerializer.header)
            for result in results:
                writer.writerow(
                    [
                        fmt(result.lambda_),
                        fmt(result.residual),
                        result.iters,
                        fmt(result.positivity_margin),
                    ]
                )
