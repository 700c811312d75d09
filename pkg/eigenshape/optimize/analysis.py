from typing import List, Tuple

import numpy as np

from eigenshape.assembly import Weight
from eigenshape.errors import InvalidArgumentError
from eigenshape.mesh import Mesh


def interval_of_weight(mesh: Mesh, weight: Weight) -> List[Tuple[float, float]]:
    """The maximal intervals where a weight on a 1D mesh is positive.

    Returns:
        List[Tuple[float, float]]: The intervals (lo, hi), sorted by lo.
    """
    if mesh.dim != 1:
        raise InvalidArgumentError("Intervals are only defined on a 1D mesh.")
    ends = np.sort(mesh.vertices[mesh.elements][:, :, 0], axis=1)
    order = np.argsort(ends[:, 0], kind="stable")
    intervals: List[Tuple[float, float]] = []
    for e in order:
        if not weight.selected[e]:
            continue
        lo, hi = float(ends[e, 0]), float(ends[e, 1])
        if intervals and intervals[-1][1] == lo:
            intervals[-1] = (intervals[-1][0], hi)
        else:
            intervals.append((lo, hi))
    return intervals


def _has_interior_maximum(line: np.ndarray) -> bool:
    """Whether a sequence has a plateau strictly above both of its neighbours."""
    keep = np.concatenate([[True], np.diff(line) != 0.0])
    runs = line[keep]
    if len(runs) < 3:
        return False
    middle = runs[1:-1]
    return bool(((middle > runs[:-2]) & (middle > runs[2:])).any())


def count_monotonicity_violations(
    mesh: Mesh, weight: Weight, nx: int, ny: int
) -> Tuple[int, int]:
    """Count grid lines along which the indicator of a rectangle mesh has a
    strict interior local maximum.

    Args:
        mesh (Mesh): A mesh made by `gen_rectangle` with nx × ny cells.
        weight (Weight): The weight to check.
        nx (int): Cells along x.
        ny (int): Cells along y.

    Returns:
        Tuple[int, int]: The number of violating lines and the number of lines.
    """
    if mesh.n_elements != 2 * nx * ny:
        raise InvalidArgumentError("The mesh is not an nx × ny rectangle mesh.")
    cells = weight.selected.astype(np.double).reshape(ny, nx, 2).mean(axis=2)
    rows = sum(_has_interior_maximum(cells[j, :]) for j in range(ny))
    columns = sum(_has_interior_maximum(cells[:, i]) for i in range(nx))
    return int(rows + columns), nx + ny
