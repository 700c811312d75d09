import csv
from pathlib import Path
from typing import Sequence, Tuple

from eigenshape.basemodel import SerializerConfig
from eigenshape.utils import format_float


class TraceSerializer:
    header = ["iter", "lambda", "alpha", "volume", "set_change"]

    @staticmethod
    def serialize(path: Path, records: Sequence, config: SerializerConfig) -> None:
        """
        Writes optimizer iterations, one row per record.

        Attributes:
            path (Path): The path to the destination file.
            records (Sequence[IterationRecord]): The records to write.
            config (SerializerConfig): The serialization configuration.
        """
        path.parent.mkdir(parents=True, exist_ok=True)

        fmt = lambda x: format_float(x, config.float_format)
        with path.open("w", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(TraceSerializer.header)
            for record in records:
                writer.writerow(
                    [
                        record.k,
                        fmt(record.lambda_),
                        fmt(record.alpha),
                        fmt(record.volume),
                        fmt(record.set_change),
                    ]
                )


class SweepSerializer:
    header = ["a", "lambda"]

    @staticmethod
    def serialize(
        path: Path, samples: Sequence[Tuple[float, float]], config: SerializerConfig
    ) -> None:
        path.parent.mkdir(parents=True, exist_ok=True)

        fmt = lambda x: format_float(x, config.float_format)
        with path.open("w", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(SweepSerializer.header)
            for a, value in samples:
                writer.writerow([fmt(a), fmt(value)])
