import csv
from pathlib import Path

from eigenshape.basemodel import SerializerConfig
from eigenshape.utils import format_float


class TimeSeriesSerializer:
    header = ["t", "linf", "mass"]

    @staticmethod
    def serialize(path: Path, series, config: SerializerConfig) -> None:
        """
        Writes the time series of a logistic simulation.

        Attributes:
            path (Path): The path to the destination file.
            series (TimeSeries): The series to write.
            config (SerializerConfig): The serialization configuration.
        """
        path.parent.mkdir(parents=True, exist_ok=True)

        fmt = lambda x: format_float(x, config.float_format)
        with path.open("w", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(TimeSeriesSerializer.header)
            for row in zip(series.t, series.linf, series.mass):
                writer.writerow([fmt(x) for x in row])
