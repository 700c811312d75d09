"""Exact P1 finite element assembly of stiffness, mass and boundary mass."""
import logging
from typing import Tuple

import numpy as np
import scipy.sparse as sp

from eigenshape.errors import AssemblyError, InvalidArgumentError
from eigenshape.geometry import SetDescriptor
from eigenshape.mesh import Mesh
from eigenshape.mesh.models import element_measures

from .models import OperatorBundle, Weight, scatter

logger = logging.getLogger(__name__)

_MASS_1D = np.array([[2.0, 1.0], [1.0, 2.0]]) / 6.0
_MASS_2D = np.array([[2.0, 1.0, 1.0], [1.0, 2.0, 1.0], [1.0, 1.0, 2.0]]) / 12.0


def _checked_measures(mesh: Mesh) -> np.ndarray:
    measures = element_measures(mesh.vertices, mesh.elements)
    if mesh.dim == 1:
        measures = np.abs(measures)
    tolerance = 1e-14 * mesh.max_diameter**mesh.dim
    bad = np.flatnonzero(measures <= tolerance)
    if bad.size:
        index = int(bad[0])
        raise AssemblyError(
            f"Element {index} is degenerate or inverted (measure {measures[index]}).",
            element_index=index,
        )
    return measures


def _local_matrices(mesh: Mesh) -> Tuple[np.ndarray, np.ndarray]:
    """Element stiffness and mass matrices of shape (ne, k, k)."""
    measures = _checked_measures(mesh)

    if mesh.dim == 1:
        stiffness = np.array([[1.0, -1.0], [-1.0, 1.0]])
        local_k = stiffness[None, :, :] / measures[:, None, None]
        local_m = _MASS_1D[None, :, :] * measures[:, None, None]
        return local_k, local_m

    corners = mesh.vertices[mesh.elements]
    # Barycentric gradients are (b_i, c_i) / (2|T|).
    x, y = corners[:, :, 0], corners[:, :, 1]
    b = np.roll(y, -1, axis=1) - np.roll(y, -2, axis=1)
    c = np.roll(x, -2, axis=1) - np.roll(x, -1, axis=1)
    local_k = (b[:, :, None] * b[:, None, :] + c[:, :, None] * c[:, None, :]) / (
        4.0 * measures[:, None, None]
    )
    local_m = _MASS_2D[None, :, :] * measures[:, None, None]
    return local_k, local_m


def _boundary_mass(mesh: Mesh) -> sp.csr_matrix:
    n = mesh.n_vertices
    if mesh.dim == 1:
        ones = np.ones(len(mesh.boundary_edges))
        index = mesh.boundary_edges[:, 0]
        return sp.coo_matrix((ones, (index, index)), shape=(n, n)).tocsr()

    edges = mesh.vertices[mesh.boundary_edges]
    lengths = np.linalg.norm(edges[:, 1] - edges[:, 0], axis=1)
    return scatter(mesh.boundary_edges, _MASS_1D[None] * lengths[:, None, None], n)


def assemble_operators(mesh: Mesh) -> OperatorBundle:
    """Assemble the stiffness, boundary mass and mass matrices of a mesh.

    The Robin coefficient is not applied here; solvers form K + βB.

    Args:
        mesh (Mesh): The mesh.

    Returns:
        OperatorBundle: The assembled operators.

    Raises:
        AssemblyError: When an element is degenerate.
    """
    local_k, local_m = _local_matrices(mesh)
    n = mesh.n_vertices
    bundle = OperatorBundle(
        K=scatter(mesh.elements, local_k, n),
        B=_boundary_mass(mesh),
        M0=scatter(mesh.elements, local_m, n),
        n=n,
        elements=mesh.elements,
        local_mass=local_m,
        boundary_vertices=mesh.boundary_vertices,
    )
    logger.debug(f"Assembled operators of size {n} from {mesh.n_elements} elements")
    return bundle


def assemble_radial_operators(mesh: Mesh, dimension: int) -> OperatorBundle:
    """Assemble the operators of the radial problem on a 1D mesh of [0, R].

    All inner products carry the weight r^{N−1}; the boundary term lives at the
    outer end point r = R with coefficient R^{N−1}, and r = 0 carries the
    natural no-flux condition.

    Args:
        mesh (Mesh): A 1D mesh of [0, R].
        dimension (int): The space dimension N ≥ 1.

    Returns:
        OperatorBundle: The radial operators; a Dirichlet condition removes the
            vertex at r = R only.
    """
    if mesh.dim != 1:
        raise InvalidArgumentError("The radial problem needs a 1D mesh.")
    if dimension < 1:
        raise InvalidArgumentError(
            f"The dimension must be at least 1, got {dimension}."
        )

    _checked_measures(mesh)
    corners = mesh.vertices[mesh.elements][:, :, 0]
    r0, r1 = corners[:, 0], corners[:, 1]
    h = r1 - r0

    nodes, weights = np.polynomial.legendre.leggauss(dimension // 2 + 2)
    r = r0[:, None] + 0.5 * h[:, None] * (nodes[None, :] + 1.0)
    w = 0.5 * np.abs(h)[:, None] * weights[None, :] * r ** (dimension - 1)
    left = (r1[:, None] - r) / h[:, None]
    right = (r - r0[:, None]) / h[:, None]
    basis = np.stack([left, right], axis=1)

    local_m = np.einsum("eq,eiq,ejq->eij", w, basis, basis)
    stiffness = np.array([[1.0, -1.0], [-1.0, 1.0]])
    local_k = stiffness[None] * (w.sum(axis=1) / h**2)[:, None, None]

    n = mesh.n_vertices
    outer = int(np.argmax(mesh.vertices[:, 0]))
    radius = float(mesh.vertices[outer, 0])
    boundary = sp.coo_matrix(
        ([radius ** (dimension - 1)], ([outer], [outer])), shape=(n, n)
    ).tocsr()

    return OperatorBundle(
        K=scatter(mesh.elements, local_k, n),
        B=boundary,
        M0=scatter(mesh.elements, local_m, n),
        n=n,
        elements=mesh.elements,
        local_mass=local_m,
        boundary_vertices=[outer],
    )


def weighted_mass(mesh: Mesh, w: Weight) -> sp.csr_matrix:
    """Assemble the weighted mass matrix ∫mφψ.

    Args:
        mesh (Mesh): The mesh.
        w (Weight): A weight with one value per element.

    Returns:
        sp.csr_matrix: The symmetric weighted mass matrix, indefinite when the
            weight changes sign.

    Raises:
        InvalidArgumentError: When the weight does not have one value per element.
    """
    if len(w.per_element) != mesh.n_elements:
        raise InvalidArgumentError(
            f"Weight has {len(w.per_element)} values, mesh has "
            f"{mesh.n_elements} elements."
        )
    _, local_m = _local_matrices(mesh)
    values = w.per_element[:, None, None] * local_m
    return scatter(mesh.elements, values, mesh.n_vertices)


def weight_from_descriptor(
    mesh: Mesh, descriptor: SetDescriptor, kappa: float
) -> Weight:
    """The bang-bang weight κ on the set E and −1 elsewhere.

    An element belongs to E when its centroid does.
    """
    selected = descriptor.contains(mesh.element_centroids)
    if not selected.any():
        raise InvalidArgumentError(
            f"No element centroid lies in the set {descriptor}; refine the mesh."
        )
    return Weight.bang_bang(selected, kappa, descriptor=descriptor)
