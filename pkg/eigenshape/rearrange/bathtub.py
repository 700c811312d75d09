import logging
from typing import Tuple

import numpy as np

from eigenshape.assembly import Weight
from eigenshape.errors import InvalidArgumentError
from eigenshape.geometry import CustomSet
from eigenshape.mesh import Mesh

logger = logging.getLogger(__name__)


def bathtub_select(
    values: np.ndarray, measures: np.ndarray, target_volume: float
) -> Tuple[np.ndarray, float]:
    """Select the elements with the largest values until their measure reaches
    the target.

    Elements are taken by decreasing value, ties by increasing index, until the
    cumulative measure first reaches target_volume.

    Args:
        values (np.ndarray): A value per element.
        measures (np.ndarray): The measure of every element.
        target_volume (float): The volume to fill, 0 < target < total measure.

    Returns:
        Tuple[np.ndarray, float]: The boolean selection and the threshold α,
            the value of the last selected element.

    Raises:
        InvalidArgumentError: When the target is not strictly between 0 and the
            total measure.
    """
    values = np.asarray(values, dtype=np.double)
    measures = np.asarray(measures, dtype=np.double)
    total = float(measures.sum())
    if not 0.0 < target_volume < total:
        raise InvalidArgumentError(
            f"target_volume must lie in (0, {total}), got {target_volume}."
        )

    order = np.lexsort((np.arange(len(values)), -values))
    cumulative = np.cumsum(measures[order])
    # Round-off in the cumulative sum must not push the selection one element on.
    k = int(np.searchsorted(cumulative, target_volume - 1e-12 * total, side="left"))
    k = min(k, len(values) - 1)

    selected = np.zeros(len(values), dtype=bool)
    selected[order[: k + 1]] = True
    return selected, float(values[order[k]])


def element_values(mesh: Mesh, phi: np.ndarray) -> np.ndarray:
    """Values of a vertex field at the element centroids."""
    return np.asarray(phi, dtype=np.double)[mesh.elements].mean(axis=1)


def bathtub_threshold(
    mesh: Mesh, phi: np.ndarray, target_volume: float, kappa: float = 1.0
) -> Tuple[Weight, float]:
    """The bang-bang weight on the superlevel set {φ > α} of measure target_volume.

    Args:
        mesh (Mesh): The mesh.
        phi (np.ndarray): Vertex values of a field.
        target_volume (float): Measure of the set to select.
        kappa (float): Value of the weight on the selected set. Defaults to 1.

    Returns:
        Tuple[Weight, float]: The weight and the threshold α.
    """
    selected, alpha = bathtub_select(
        element_values(mesh, phi), mesh.element_measure, target_volume
    )
    weight = Weight.bang_bang(selected, kappa, descriptor=CustomSet(label="bathtub"))
    return weight, alpha
