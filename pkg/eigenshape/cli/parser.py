import json
from pathlib import Path
from typing import Dict


class RunConfigParser:
    """
    A parser for JSON run configuration files.
    """

    @staticmethod
    def parse(filepath: Path) -> Dict:
        """Parses a run configuration file into a dictionary.

        Args:
            filepath (Path): Path to the JSON file.

        Raises:
            ValueError: When the file is not valid JSON, does not hold an object
                or gives both c and m0.

        Returns:
            Dict: The configuration values.
        """
        try:
            with filepath.open(encoding="utf8") as f:
                data = json.load(f)
        except json.JSONDecodeError as e:
            raise ValueError(
                f"Error parsing run configuration '{filepath}', line {e.lineno}: "
                f"{e.msg}."
            ) from e

        if not isinstance(data, dict):
            raise ValueError(
                f"Error parsing run configuration '{filepath}': expected a JSON object."
            )
        if "c" in data and "m0" in data:
            raise ValueError(
                f"Error parsing run configuration '{filepath}': give exactly one of "
                f"c and m0."
            )
        return data
