"""Convergence and consistency checks for eigenpairs."""
import math

import numpy as np
from scipy.sparse.linalg import norm as sparse_norm

from eigenshape.assembly import BoundaryCondition, OperatorBundle, Weight
from eigenshape.mesh import Mesh, ring_offset

from .models import EigenResult
from .solver import numerator


def richardson_extrapolate(coarse: float, fine: float, order: float = 2.0) -> float:
    """Extrapolate two values computed with mesh sizes h and h/2."""
    return fine + (fine - coarse) / (2.0**order - 1.0)


def observed_order(coarse: float, medium: float, fine: float) -> float:
    """Convergence order from three values at mesh sizes h, h/2 and h/4."""
    return math.log2(abs(coarse - medium) / abs(medium - fine))


def relative_residual(
    bundle: OperatorBundle, w: Weight, bc: BoundaryCondition, result: EigenResult
) -> float:
    """‖(K + βB − λM)φ‖₂ / ((‖K + βB‖∞ + λ‖M‖∞)‖φ‖₂) on the free vertices."""
    M = bundle.weighted_mass(w.per_element)
    A = numerator(bundle, bc)
    keep = bundle.interior_vertices if bc.is_dirichlet else np.arange(bundle.n)
    phi = result.phi[keep]
    r = (A - result.lambda_ * M).tocsr()[keep][:, keep] @ phi
    scale = sparse_norm(A, np.inf) + result.lambda_ * sparse_norm(M, np.inf)
    return float(np.linalg.norm(r) / (scale * np.linalg.norm(phi)))


def rayleigh_quotient(
    bundle: OperatorBundle, w: Weight, bc: BoundaryCondition, phi: np.ndarray
) -> float:
    """(φᵀ(K + βB)φ) / (φᵀM(m)φ)."""
    M = bundle.weighted_mass(w.per_element)
    return float(phi @ (numerator(bundle, bc) @ phi)) / float(phi @ (M @ phi))


def ring_angular_variance(mesh: Mesh, phi: np.ndarray, n_rings: int) -> np.ndarray:
    """Variance of φ over every ring of a disk mesh divided by the squared ring mean.

    Args:
        mesh (Mesh): A mesh made by `gen_disk`.
        phi (np.ndarray): Vertex values.
        n_rings (int): The number of rings of the mesh.

    Returns:
        np.ndarray: One value per ring 1..n_rings.
    """
    variances = np.empty(n_rings)
    for i in range(1, n_rings + 1):
        values = phi[ring_offset(i) : ring_offset(i) + 6 * i]
        variances[i - 1] = values.var() / values.mean() ** 2
    return variances
