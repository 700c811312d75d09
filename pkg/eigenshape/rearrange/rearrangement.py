from typing import Tuple

import numpy as np

from eigenshape.errors import InvalidArgumentError
from eigenshape.geometry import RadialRings


def monotone_two_sided_1d(
    values: np.ndarray, measures: np.ndarray, peak_index: int
) -> Tuple[np.ndarray, np.ndarray]:
    """Rearrange element values of a 1D mesh to increase up to the peak element
    and decrease after it.

    Elements 0..peak_index are sorted ascending and the remaining elements
    descending; each value keeps its measure, so both sides are equimeasurable
    with the input.

    Args:
        values (np.ndarray): A value per element, in element order.
        measures (np.ndarray): The measure of every element.
        peak_index (int): Last element of the increasing part.

    Returns:
        Tuple[np.ndarray, np.ndarray]: The rearranged values and their measures.

    Raises:
        InvalidArgumentError: When peak_index is out of range.
    """
    values = np.asarray(values, dtype=np.double)
    measures = np.asarray(measures, dtype=np.double)
    if not 0 <= peak_index < len(values):
        raise InvalidArgumentError(
            f"peak_index must lie in [0, {len(values) - 1}], got {peak_index}."
        )

    split = peak_index + 1
    left = np.argsort(values[:split], kind="stable")
    right = split + np.argsort(-values[split:], kind="stable")
    order = np.concatenate([left, right])
    return values[order], measures[order]


def schwarz_radial(rings: RadialRings, dimension: int) -> RadialRings:
    """The centered ball [0, r₀] with the same N-volume as the rings.

    r₀ = (Σ r_hi^N − r_lo^N)^{1/N}.
    """
    if dimension < 1:
        raise InvalidArgumentError(f"dimension must be positive, got {dimension}.")
    power = sum(hi**dimension - lo**dimension for lo, hi in rings.rings)
    r0 = min(power ** (1.0 / dimension), rings.radius)
    return RadialRings(rings=[(0.0, r0)], radius=rings.radius)
