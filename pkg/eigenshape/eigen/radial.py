import logging

from eigenshape.assembly import (
    BoundaryCondition,
    assemble_radial_operators,
    weight_from_descriptor,
)
from eigenshape.errors import InvalidArgumentError
from eigenshape.geometry import RadialRings
from eigenshape.mesh import gen_interval

from .models import EigenResult
from .solver import principal_eigen

logger = logging.getLogger(__name__)


def radial_eigen(
    dimension: int,
    rings: RadialRings,
    kappa: float,
    bc: BoundaryCondition,
    n_cells: int,
    lam_start: float = 1.0,
) -> EigenResult:
    """Principal eigenvalue of a radial weight on the N-dimensional ball.

    Solves U'' + ((N − 1)/r)U' + λmU = 0 on (0, R) with U'(0) = 0 and the
    boundary condition at r = R, discretized by P1 elements with weight r^{N−1}.

    Args:
        dimension (int): Space dimension N ≥ 1.
        rings (RadialRings): The favourable rings on [0, R].
        kappa (float): Upper bound κ of the weight.
        bc (BoundaryCondition): Condition at r = R.
        n_cells (int): Number of radial cells.
        lam_start (float): First probe of the bracket search. Defaults to 1.

    Returns:
        EigenResult: The radial eigenpair; φ is normalized with ∫φ²r^{N−1} = 1.
    """
    if dimension < 1:
        raise InvalidArgumentError(f"dimension must be positive, got {dimension}.")

    mesh = gen_interval(n_cells, length=rings.radius)
    bundle = assemble_radial_operators(mesh, dimension)
    weight = weight_from_descriptor(mesh, rings, kappa)
    return principal_eigen(bundle, weight, bc, lam_start=lam_start)
