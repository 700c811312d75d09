"""Deterministic structured meshes of the interval, the rectangle and the disk."""
import logging
import math

import numpy as np

from eigenshape.errors import InvalidArgumentError

from .models import Mesh

logger = logging.getLogger(__name__)


def gen_interval(n_cells: int, length: float = 1.0) -> Mesh:
    """Uniform partition of (0, length).

    Args:
        n_cells (int): Number of cells, at least 2.
        length (float): Length of the interval. Defaults to 1.

    Returns:
        Mesh: A 1D mesh with n_cells + 1 vertices and boundary {0, length}.

    Raises:
        InvalidArgumentError: When n_cells < 2 or length is not positive.
    """
    if n_cells < 2:
        raise InvalidArgumentError(f"n_cells must be at least 2, got {n_cells}.")
    if not length > 0.0:
        raise InvalidArgumentError(f"length must be positive, got {length}.")

    vertices = np.linspace(0.0, length, n_cells + 1)
    index = np.arange(n_cells)
    elements = np.column_stack([index, index + 1])
    return Mesh.from_connectivity(vertices, elements)


def gen_rectangle(lx: float, ly: float, nx: int, ny: int) -> Mesh:
    """Uniform triangulation of (0, lx) × (0, ly).

    Every grid cell is split along its lower-left to upper-right diagonal, so
    all triangles are congruent and counter-clockwise.

    Raises:
        InvalidArgumentError: When a side length is not positive or a cell count
            is below 2.
    """
    if not (lx > 0.0 and ly > 0.0):
        raise InvalidArgumentError(
            f"Rectangle sides must be positive, got {lx}, {ly}."
        )
    if nx < 2 or ny < 2:
        raise InvalidArgumentError(f"nx and ny must be at least 2, got {nx}, {ny}.")

    x = np.linspace(0.0, lx, nx + 1)
    y = np.linspace(0.0, ly, ny + 1)
    xx, yy = np.meshgrid(x, y)
    vertices = np.column_stack([xx.ravel(), yy.ravel()])

    i, j = np.meshgrid(np.arange(nx), np.arange(ny))
    v00 = (j * (nx + 1) + i).ravel()
    v10 = v00 + 1
    v01 = v00 + nx + 1
    v11 = v01 + 1
    lower = np.column_stack([v00, v10, v11])
    upper = np.column_stack([v00, v11, v01])
    elements = np.stack([lower, upper], axis=1).reshape(-1, 3)
    return Mesh.from_connectivity(vertices, elements)


def ring_offset(ring: int) -> int:
    """Index of the first vertex of a ring of a mesh made by `gen_disk`."""
    return 0 if ring == 0 else 1 + 3 * ring * (ring - 1)


def gen_disk(radius: float, n_rings: int) -> Mesh:
    """Structured polar triangulation of the disk B(0, radius).

    Vertex 0 is the center; ring i (1-based) lies at radius i·radius/n_rings and
    carries 6·i equally spaced vertices starting at angle 0. Each of the six
    sectors between rings i − 1 and i is filled with 2·i − 1 triangles, for
    6·n_rings² triangles in total. The mesh is invariant under rotations by
    multiples of 60 degrees.

    Raises:
        InvalidArgumentError: When radius is not positive or n_rings < 2.
    """
    if not radius > 0.0:
        raise InvalidArgumentError(f"radius must be positive, got {radius}.")
    if n_rings < 2:
        raise InvalidArgumentError(f"n_rings must be at least 2, got {n_rings}.")

    vertices = [np.zeros((1, 2))]
    for i in range(1, n_rings + 1):
        theta = 2.0 * math.pi * np.arange(6 * i) / (6 * i)
        r = i * radius / n_rings
        vertices.append(np.column_stack([r * np.cos(theta), r * np.sin(theta)]))

    elements = []
    for i in range(1, n_rings + 1):
        outer = ring_offset(i) + np.arange(6 * i)
        inner = ring_offset(i - 1) + np.arange(max(6 * (i - 1), 1))
        for s in range(6):
            b = outer[(s * i + np.arange(i + 1)) % (6 * i)]
            if i == 1:
                a = inner
            else:
                a = inner[(s * (i - 1) + np.arange(i)) % (6 * (i - 1))]
            j = np.arange(i)
            tip = a[np.minimum(j, len(a) - 1)]
            elements.append(np.column_stack([b[j], b[j + 1], tip]))
            if i > 1:
                j = np.arange(i - 1)
                elements.append(np.column_stack([a[j], b[j + 1], a[j + 1]]))

    mesh = Mesh.from_connectivity(np.concatenate(vertices), np.concatenate(elements))
    logger.debug(
        f"Generated disk mesh with {mesh.n_vertices} vertices, "
        f"{mesh.n_elements} elements"
    )
    return mesh
