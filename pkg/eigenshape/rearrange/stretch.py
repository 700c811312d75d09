"""Stretching a radial set of the unit ball onto a set touching the boundary.

A point (x₁, x') belongs to the stretched set Ê when ((x₁ + f(x'))/2, x') belongs
to E, with f(x') = sqrt(1 − |x'|²). The half ball {x₁ > 0} of every chord is
spread over the whole chord, so |Ê| = |E| and Ê touches ∂Ω.
"""
from typing import Callable

import numpy as np

from eigenshape.assembly import Weight
from eigenshape.errors import InvalidArgumentError
from eigenshape.geometry import CustomSet, RadialRings
from eigenshape.mesh import Mesh

BALL_TOLERANCE = 1e-12


def stretch_disk(rings: RadialRings) -> Callable[[np.ndarray], np.ndarray]:
    """Membership predicate of the stretched set Ê.

    Args:
        rings (RadialRings): The set E in the unit ball (radius 1).

    Returns:
        Callable[[np.ndarray], np.ndarray]: A function mapping points of shape
            (k, N) to a boolean membership array.

    Raises:
        InvalidArgumentError: When the rings do not live in the unit ball, or,
            from the predicate, when a point lies outside the closed unit ball.
    """
    if abs(rings.radius - 1.0) > BALL_TOLERANCE:
        raise InvalidArgumentError(
            f"Stretching needs the unit ball, got radius {rings.radius}."
        )

    def contains(points: np.ndarray) -> np.ndarray:
        points = np.asarray(points, dtype=np.double).reshape(len(points), -1)
        squared = np.einsum("ij,ij->i", points, points)
        if (squared > 1.0 + BALL_TOLERANCE).any():
            raise InvalidArgumentError("Point outside the closed unit ball.")
        transverse = squared - points[:, 0] ** 2
        f = np.sqrt(np.clip(1.0 - transverse, 0.0, None))
        mapped = points.copy()
        mapped[:, 0] = 0.5 * (points[:, 0] + f)
        return rings.contains(mapped)

    return contains


def stretched_weight(mesh: Mesh, rings: RadialRings, kappa: float) -> Weight:
    """The bang-bang weight of Ê on a mesh of the unit disk, by centroid."""
    selected = stretch_disk(rings)(mesh.element_centroids)
    return Weight.bang_bang(selected, kappa, descriptor=CustomSet(label="stretched"))
