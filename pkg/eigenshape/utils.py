from typing import Any, Optional

import numpy as np


def str_is_empty_or_none(str_field: Optional[str]) -> bool:
    """
    Verifies whether a string is empty or None.

    Args:
        str_field (str): String to validate.

    Returns:
        bool: Evaluation result.
    """
    return str_field is None or not str_field or str_field.isspace()


def format_float(value: float, float_format: str = "") -> str:
    """Format a float for a text file.

    An empty format gives the shortest representation that parses back to the
    same double, so files written with it round-trip bit-exactly.

    Args:
        value (float): The value to format.
        float_format (str): A format specification, e.g. ".6e". Defaults to "".

    Returns:
        str: The formatted value.
    """
    if str_is_empty_or_none(float_format):
        return repr(float(value))
    return f"{value:{float_format}}"


def as_float_array(value: Any, ndim: int) -> np.ndarray:
    """Coerce value into a C-contiguous double array of the given dimension.

    Raises:
        ValueError: When the coerced array has the wrong number of dimensions.
    """
    array = np.ascontiguousarray(value, dtype=np.double)
    if ndim == 2 and array.ndim == 1:
        array = array.reshape(-1, 1)
    if array.ndim != ndim:
        raise ValueError(f"Expected a {ndim}-dimensional array, got {array.ndim}.")
    return array


def as_index_array(value: Any, ndim: int) -> np.ndarray:
    """Coerce value into a C-contiguous int64 index array of the given dimension.

    Raises:
        ValueError: When the coerced array has the wrong number of dimensions.
    """
    array = np.ascontiguousarray(value, dtype=np.int64)
    if array.ndim != ndim:
        raise ValueError(f"Expected a {ndim}-dimensional array, got {array.ndim}.")
    return array
