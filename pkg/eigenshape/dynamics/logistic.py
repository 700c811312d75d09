"""Diffusive logistic equation ∂ₜu = Δu + ωu(m − u) with ∂ₙu + βu = 0.

The population persists when ω > λ(m) and goes extinct when ω ≤ λ(m).
"""
import logging
import math
from typing import Optional, Tuple

import numpy as np
from scipy.sparse.linalg import splu

from eigenshape.assembly import (
    BoundaryCondition,
    OperatorBundle,
    Weight,
    assemble_operators,
)
from eigenshape.eigen.solver import numerator, spectral_rho
from eigenshape.errors import InstabilityError, InvalidArgumentError
from eigenshape.mesh import Mesh

from .models import SimState, TimeSeries

logger = logging.getLogger(__name__)

BLOW_UP_FACTOR = 10.0


def _free_vertices(bundle: OperatorBundle, bc: BoundaryCondition) -> np.ndarray:
    return bundle.interior_vertices if bc.is_dirichlet else np.arange(bundle.n)


def simulate_logistic(
    mesh: Mesh,
    bc: BoundaryCondition,
    w: Weight,
    omega: float,
    u0: np.ndarray,
    t_end: float,
    dt: Optional[float] = None,
    linearized: bool = False,
    bundle: Optional[OperatorBundle] = None,
) -> Tuple[SimState, TimeSeries]:
    """Integrate the logistic equation with an implicit-explicit scheme.

    Every step solves (M0 + dt(K + βB))u^{n+1} = M0u^n + dt·ω(M(m)u^n − L(u^n)²),
    where L is the lumped mass; diffusion is implicit and the reaction explicit.
    Negative vertex values are clipped to zero and counted.

    Args:
        mesh (Mesh): The mesh.
        bc (BoundaryCondition): The boundary condition.
        w (Weight): The weight m.
        omega (float): The growth scale ω > 0.
        u0 (np.ndarray): Nonnegative, nonzero initial density at the vertices.
        t_end (float): Final time.
        dt (Optional[float]): Time step, 0.1/ω by default. It is shortened so
            that a whole number of steps reaches t_end.
        linearized (bool): Drop the −ωu² term. Defaults to False.
        bundle (Optional[OperatorBundle]): Operators of the mesh.

    Returns:
        Tuple[SimState, TimeSeries]: The final state and the trajectory summary.

    Raises:
        InvalidArgumentError: For a negative or vanishing initial density.
        InstabilityError: When max u exceeds 10(κ + 1).
    """
    if not omega > 0.0 or not t_end > 0.0:
        raise InvalidArgumentError(
            f"omega and t_end must be positive, got {omega} and {t_end}."
        )
    u = np.array(u0, dtype=np.double)
    if (u < 0.0).any() or not (u > 0.0).any():
        raise InvalidArgumentError(
            "The initial density must be nonnegative and nonzero."
        )

    bundle = bundle or assemble_operators(mesh)
    dt = 0.1 / omega if dt is None else dt
    n_steps = max(1, math.ceil(t_end / dt - 1e-9))
    dt = t_end / n_steps

    free = _free_vertices(bundle, bc)
    M0 = bundle.M0.tocsr()[free][:, free]
    M = bundle.weighted_mass(w.per_element).tocsr()[free][:, free]
    lumped = np.asarray(M0.sum(axis=1)).ravel()
    system = (M0 + dt * numerator(bundle, bc).tocsr()[free][:, free]).tocsc()
    solve = splu(system).solve
    limit = BLOW_UP_FACTOR * (w.kappa + 1.0)

    v = u[free]
    series = TimeSeries()
    series.append(0.0, float(v.max()), float(lumped @ v))
    for step in range(1, n_steps + 1):
        reaction = M @ v
        if not linearized:
            reaction -= lumped * v**2
        v = solve(M0 @ v + dt * omega * reaction)

        negative = int((v < 0.0).sum())
        if negative:
            series.clipped += negative
            logger.warning(f"Step {step}: clipped {negative} negative densities")
            v = np.maximum(v, 0.0)
        if v.max() > limit:
            raise InstabilityError(
                f"Density {v.max()} exceeds {limit} at t={step * dt}; "
                f"try a smaller dt than {dt}.",
                probe=step * dt,
            )
        series.append(step * dt, float(v.max()), float(lumped @ v))

    u = np.zeros(bundle.n)
    u[free] = v
    logger.info(
        f"Logistic run to t={t_end} with omega={omega}: final mass {series.mass[-1]}"
    )
    return SimState(u=u, t=t_end, omega=omega, dt=dt), series


def steady_state_residual(
    bundle: OperatorBundle,
    bc: BoundaryCondition,
    w: Weight,
    omega: float,
    u: np.ndarray,
) -> float:
    """Max-norm of L⁻¹((K + βB)u − ω(M(m)u − Lu²)) on the free vertices,
    the discrete Δu + ωu(m − u) of the scheme."""
    free = _free_vertices(bundle, bc)
    M0 = bundle.M0.tocsr()[free][:, free]
    M = bundle.weighted_mass(w.per_element).tocsr()[free][:, free]
    A = numerator(bundle, bc).tocsr()[free][:, free]
    lumped = np.asarray(M0.sum(axis=1)).ravel()
    v = np.asarray(u, dtype=np.double)[free]
    residual = A @ v - omega * (M @ v - lumped * v**2)
    return float(np.abs(residual / lumped).max())


def default_horizon(
    bundle: OperatorBundle,
    bc: BoundaryCondition,
    w: Weight,
    lam: float,
    omega: float,
) -> float:
    """A final time long enough to tell extinction from persistence.

    The linearization at u = 0 grows or decays at the rate |ρ(ω)|, the smallest
    eigenvalue of the pencil (K + βB − ωM(m), M0). The horizon covers 16 such
    time scales and at least 50/λ, capped at 2000/λ.

    Args:
        bundle (OperatorBundle): Operators of the mesh.
        bc (BoundaryCondition): The boundary condition.
        w (Weight): The weight m.
        lam (float): The principal eigenvalue λ(m).
        omega (float): The growth scale ω.

    Returns:
        float: The final time.
    """
    M = bundle.weighted_mass(w.per_element)
    rate = abs(spectral_rho(bundle, M, bc, omega, m_bound=w.kappa).rho)
    longest = 2000.0 / lam
    if rate == 0.0:
        return longest
    return max(50.0 / lam, min(16.0 / rate, longest))
