"""Principal eigenvalue of Δφ + λmφ = 0 by root finding on the pencil spectrum.

For a probe λ the smallest eigenvalue ρ(λ) of the symmetric pencil
(K + βB − λM(m), M0) is concave in λ. The principal eigenvalue is the positive
root of ρ, and the eigenvector at the root is the principal eigenfunction.
"""
import logging
import math
from typing import Callable, Dict, Optional, Tuple

import numpy as np
import scipy.linalg
import scipy.sparse as sp
from scipy.optimize import brentq
from scipy.sparse.linalg import ArpackError, eigsh, splu

from eigenshape.assembly import BoundaryCondition, OperatorBundle, Weight
from eigenshape.config import settings
from eigenshape.errors import (
    InvalidArgumentError,
    NoPositiveEigenvalueError,
    NumericFailureError,
)

from .models import EigenResult, SpectralProbe

logger = logging.getLogger(__name__)

NEUMANN_BRACKET_START = 1e-6
MAX_BRACKET = 1e8
BRACKET_FACTOR = 2.0


def _restricted(
    bundle: OperatorBundle, bc: BoundaryCondition, *matrices: sp.spmatrix
) -> Tuple[np.ndarray, list]:
    """Remove the boundary rows and columns for a Dirichlet condition."""
    if not bc.is_dirichlet:
        return np.arange(bundle.n), [sp.csr_matrix(a) for a in matrices]
    keep = bundle.interior_vertices
    return keep, [sp.csr_matrix(a)[keep][:, keep] for a in matrices]


def numerator(bundle: OperatorBundle, bc: BoundaryCondition) -> sp.csr_matrix:
    """K + βB, or K alone for Dirichlet."""
    if bc.is_dirichlet or bc.beta == 0.0:
        return bundle.K
    return (bundle.K + bc.beta * bundle.B).tocsr()


def _weight_bound(M: sp.spmatrix, M0: sp.spmatrix) -> float:
    return float(np.max(M.diagonal() / M0.diagonal()))


def spectral_rho(
    bundle: OperatorBundle,
    M: sp.spmatrix,
    bc: BoundaryCondition,
    lam: float,
    m_bound: Optional[float] = None,
    v0: Optional[np.ndarray] = None,
) -> SpectralProbe:
    """Smallest eigenvalue of the pencil (K + βB − lam·M, M0).

    Small systems are solved densely; larger ones by shift-invert Lanczos with
    a shift below the whole spectrum.

    Args:
        bundle (OperatorBundle): The assembled operators.
        M (sp.spmatrix): The weighted mass matrix.
        bc (BoundaryCondition): The boundary condition.
        lam (float): The probe value.
        m_bound (Optional[float]): An upper bound of the weight, used to place
            the shift. Estimated from the diagonals when omitted.
        v0 (Optional[np.ndarray]): Starting vector on all vertices, e.g. the
            eigenvector of a nearby probe.

    Returns:
        SpectralProbe: ρ(lam) and its M0-normalized eigenvector, zero on the
            boundary for Dirichlet.

    Raises:
        NumericFailureError: When the factorization or the eigensolve fails.
    """
    shifted = numerator(bundle, bc) - lam * M
    keep, (A, M0) = _restricted(bundle, bc, shifted, bundle.M0)
    size = A.shape[0]

    try:
        if size <= settings.DENSE_EIGEN_THRESHOLD:
            values, vectors = scipy.linalg.eigh(
                A.toarray(), M0.toarray(), subset_by_index=[0, 0]
            )
        else:
            if m_bound is None:
                _, (M_r,) = _restricted(bundle, bc, M)
                m_bound = _weight_bound(M_r, M0)
            sigma = -2.0 * abs(lam) * max(m_bound, 0.0) - 1.0
            start = np.ones(size) if v0 is None else np.asarray(v0)[keep]
            values, vectors = eigsh(
                A, k=1, M=M0, sigma=sigma, which="LM", v0=start, tol=1e-12
            )
    except (ArpackError, RuntimeError, ValueError, np.linalg.LinAlgError) as e:
        raise NumericFailureError(
            f"Pencil eigensolve failed at lambda={lam}: {e}", probe=lam
        ) from e

    v = vectors[:, 0]
    v = v / math.sqrt(float(v @ (M0 @ v)))
    if (M0 @ v).sum() < 0.0:
        v = -v

    eigvec = np.zeros(bundle.n)
    eigvec[keep] = v
    rho = float(values[0])
    logger.debug(f"rho({lam}) = {rho}")
    return SpectralProbe(lam=lam, rho=rho, eigvec=eigvec)


def _bracket(
    rho: Callable[[float], float], start: float, floor: float
) -> Tuple[float, float]:
    """Find lo < hi with rho(lo) > 0 ≥ rho(hi), doubling from start."""
    if rho(start) > 0.0:
        lo, hi = start, start * BRACKET_FACTOR
        while rho(hi) > 0.0:
            if hi >= MAX_BRACKET:
                raise NumericFailureError(
                    f"No sign change of rho below lambda={MAX_BRACKET}.", probe=hi
                )
            lo, hi = hi, hi * BRACKET_FACTOR
            logger.debug(f"Expanding bracket to [{lo}, {hi}]")
        return lo, hi

    hi = start
    lo = start / BRACKET_FACTOR
    while True:
        if lo < NEUMANN_BRACKET_START:
            lo = floor
        if rho(lo) > 0.0:
            return lo, hi
        if lo == floor:
            raise NumericFailureError(
                f"rho is not positive at the lower bracket end {floor}.", probe=floor
            )
        hi, lo = lo, lo / BRACKET_FACTOR
        logger.debug(f"Shrinking bracket to [{lo}, {hi}]")


def principal_eigen(
    bundle: OperatorBundle,
    w: Weight,
    bc: BoundaryCondition,
    lam_start: float = 1.0,
    rtol: float = 1e-12,
) -> EigenResult:
    """Positive principal eigenvalue and eigenfunction of Δφ + λmφ = 0.

    Args:
        bundle (OperatorBundle): The assembled operators.
        w (Weight): The weight, one value per element.
        bc (BoundaryCondition): The boundary condition.
        lam_start (float): First probe of the bracket search. Defaults to 1.
        rtol (float): Relative tolerance on λ. Defaults to 1e-12.

    Returns:
        EigenResult: The principal eigenpair with ∫φ² = 1 and φ of positive mean.

    Raises:
        InvalidArgumentError: When the weight does not match the bundle.
        NoPositiveEigenvalueError: For Neumann conditions with ∫m ≥ 0.
        NumericFailureError: When no bracket is found below 1e8 or a solve fails.
    """
    if len(w.per_element) != bundle.n_elements:
        raise InvalidArgumentError(
            f"Weight has {len(w.per_element)} values, operators have "
            f"{bundle.n_elements} elements."
        )
    integral = w.integral(bundle.element_measure)
    if bc.is_neumann and integral >= 0.0:
        raise NoPositiveEigenvalueError(
            f"With Neumann conditions a positive principal eigenvalue requires "
            f"∫m < 0, got {integral}."
        )

    M = bundle.weighted_mass(w.per_element)
    probes: Dict[float, SpectralProbe] = {}
    previous: Optional[np.ndarray] = None

    def probe(lam: float) -> SpectralProbe:
        nonlocal previous
        if lam not in probes:
            result = spectral_rho(bundle, M, bc, lam, m_bound=w.kappa, v0=previous)
            probes[lam] = result
            previous = result.eigvec
        return probes[lam]

    def rho(lam: float) -> float:
        return probe(lam).rho

    floor = NEUMANN_BRACKET_START if bc.is_neumann else 0.0
    lo, hi = _bracket(rho, max(lam_start, NEUMANN_BRACKET_START), floor)
    if rho(hi) == 0.0:
        lam = hi
    else:
        lam = brentq(rho, lo, hi, xtol=1e-14, rtol=rtol, maxiter=200)
    final = probe(lam)

    phi = final.eigvec
    residual = _dual_residual(bundle, bc, M, lam, phi)
    mass = float(phi @ (M @ phi))
    if not mass > 0.0:
        raise NumericFailureError(
            f"Eigenfunction at lambda={lam} has ∫mφ² = {mass} ≤ 0.", probe=lam
        )

    logger.info(
        f"Principal eigenvalue {lam:.12g} after {len(probes)} probes "
        f"(residual {residual:.3e})"
    )
    return EigenResult(
        lambda_=lam,
        phi=phi,
        residual=residual,
        iters=len(probes),
        positivity_margin=float(phi.min()),
    )


def _dual_residual(
    bundle: OperatorBundle,
    bc: BoundaryCondition,
    M: sp.spmatrix,
    lam: float,
    phi: np.ndarray,
) -> float:
    shifted = numerator(bundle, bc) - lam * M
    keep, (A, M0) = _restricted(bundle, bc, shifted, bundle.M0)
    r = A @ phi[keep]
    return math.sqrt(max(float(r @ splu(M0.tocsc()).solve(r)), 0.0))


def gamma_eigen(bundle: OperatorBundle, mu: np.ndarray, bc: BoundaryCondition) -> float:
    """Smallest eigenvalue γ(μ) of the pencil (K + βB − M(μ), M0).

    Args:
        bundle (OperatorBundle): The assembled operators.
        mu (np.ndarray): A weight value per element, of any sign.
        bc (BoundaryCondition): The boundary condition.

    Returns:
        float: γ(μ).
    """
    mu = np.asarray(mu, dtype=np.double)
    if len(mu) != bundle.n_elements:
        raise InvalidArgumentError(
            f"mu has {len(mu)} values, operators have {bundle.n_elements} elements."
        )
    M = bundle.weighted_mass(mu)
    return spectral_rho(bundle, M, bc, 1.0, m_bound=float(mu.max())).rho


def mu_from_weight(w: Weight, mu_minus: float, mu_plus: float) -> np.ndarray:
    """The two-valued weight μ₊ on the favourable set of w and μ₋ elsewhere.

    Raises:
        InvalidArgumentError: Unless μ₋ < 0 < μ₊.
    """
    if not mu_minus < 0.0 < mu_plus:
        raise InvalidArgumentError(
            f"Expected mu_minus < 0 < mu_plus, got {mu_minus} and {mu_plus}."
        )
    return np.where(w.selected, mu_plus, mu_minus)
