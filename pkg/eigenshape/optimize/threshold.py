"""Fixed-point thresholding for the optimal favourable set.

Starting from a set E_0 of measure c|Ω|, every iteration computes the principal
eigenfunction φ_k of the weight of E_k and sets E_{k+1} = {φ_k > α}, with α
chosen so that |E_{k+1}| = c|Ω|. Each step does not increase λ.
"""
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.sparse.linalg import splu

from eigenshape.assembly import (
    BoundaryCondition,
    OperatorBundle,
    Weight,
    assemble_operators,
)
from eigenshape.config import settings
from eigenshape.eigen import EigenResult, principal_eigen
from eigenshape.errors import InvalidArgumentError, NumericFailureError
from eigenshape.geometry import CustomSet, check_admissible
from eigenshape.mesh import Mesh
from eigenshape.rearrange import (
    MAX_CAP_FRACTION,
    bathtub_select,
    bathtub_threshold,
    cap_radius_from_fraction,
)

from .models import IterationRecord, OptimizeTrace

logger = logging.getLogger(__name__)

SEEDS = ("half-domain", "centered-ball", "random-balanced", "disk-cap")
DESCENT_TOLERANCE = 1e-9
POSITIVITY_TOLERANCE = 1e-8
SMOOTHING_STEPS = 5
SMOOTHING_STEP = 0.01


def _smoothed_noise(mesh: Mesh, bundle: OperatorBundle, seed: int) -> np.ndarray:
    """Uniform vertex noise after a few implicit heat steps, averaged per element.

    The heat steps remove the element-scale oscillations, so the superlevel set
    is a few blobs instead of scattered elements.
    """
    u = np.random.default_rng(seed).random(mesh.n_vertices)
    extent = float(np.ptp(mesh.vertices, axis=0).max())
    solve = splu((bundle.M0 + SMOOTHING_STEP * extent**2 * bundle.K).tocsc()).solve
    for _ in range(SMOOTHING_STEPS):
        u = solve(bundle.M0 @ u)
    return u[mesh.elements].mean(axis=1)


def seed_weight(
    mesh: Mesh,
    tag: str,
    kappa: float,
    c: float,
    seed: int = 0,
    bundle: Optional[OperatorBundle] = None,
) -> Weight:
    """An initial bang-bang weight of volume c|Ω|.

    Args:
        mesh (Mesh): The mesh.
        tag (str): One of "half-domain" (leftmost elements), "centered-ball"
            (elements closest to the center of the bounding box),
            "random-balanced" (smoothed uniform noise) or "disk-cap" (the cap
            meeting the boundary of a disk orthogonally).
        kappa (float): Value of the weight on the set.
        c (float): Volume fraction.
        seed (int): Seed of the random generator. Defaults to 0.
        bundle (Optional[OperatorBundle]): Operators of the mesh used to smooth
            the noise, assembled when omitted.

    Returns:
        Weight: The seed weight, volume exact up to one element.
    """
    target = c * mesh.measure
    centroids = mesh.element_centroids

    if tag == "half-domain":
        values = -centroids[:, 0]
    elif tag == "centered-ball":
        center = 0.5 * (mesh.vertices.min(axis=0) + mesh.vertices.max(axis=0))
        values = -np.linalg.norm(centroids - center, axis=1)
    elif tag == "random-balanced":
        values = _smoothed_noise(mesh, bundle or assemble_operators(mesh), seed)
    elif tag == "disk-cap":
        if mesh.dim != 2:
            raise InvalidArgumentError("The disk-cap seed needs a disk mesh.")
        radius = float(np.linalg.norm(mesh.vertices, axis=1).max())
        cap = cap_radius_from_fraction(radius, c)
        values = -np.linalg.norm(centroids - cap.center, axis=1)
    else:
        raise InvalidArgumentError(f"Unknown seed '{tag}', expected one of {SEEDS}.")

    selected, _ = bathtub_select(values, mesh.element_measure, target)
    return Weight.bang_bang(selected, kappa, descriptor=CustomSet(label=tag))


def _checked(result: EigenResult, k: int) -> EigenResult:
    if result.positivity_margin < -POSITIVITY_TOLERANCE:
        raise NumericFailureError(
            f"Iteration {k}: eigenfunction changes sign "
            f"(min {result.positivity_margin}), the root is not principal.",
            probe=result.lambda_,
        )
    return result


def optimize_threshold(
    mesh: Mesh,
    bc: BoundaryCondition,
    kappa: float,
    c: float,
    init: Union[Weight, str] = "centered-ball",
    max_iters: int = 100,
    tol: float = 1e-9,
    seed: int = 0,
    bundle: Optional[OperatorBundle] = None,
) -> OptimizeTrace:
    """Minimize λ over bang-bang weights of volume fraction c by thresholding.

    Stops when the thresholded set equals the current one, when
    |λ_k − λ_{k−1}| ≤ tol·λ_k, when a step would increase λ, or after max_iters.
    Only the first two count as converged; after a rejected step the kept set
    is not a fixed point of the thresholding.

    Args:
        mesh (Mesh): The mesh.
        bc (BoundaryCondition): The boundary condition.
        kappa (float): Upper bound κ of the weight.
        c (float): Volume fraction of the favourable set.
        init (Union[Weight, str]): Initial weight or seed tag.
        max_iters (int): Iteration limit. Defaults to 100.
        tol (float): Relative λ tolerance. Defaults to 1e-9.
        seed (int): Seed for the "random-balanced" initial set.
        bundle (Optional[OperatorBundle]): Operators of the mesh, assembled when
            omitted.

    Returns:
        OptimizeTrace: The trace with the best set found.

    Raises:
        InvalidArgumentError: When (β, κ, c) is not admissible.
        NumericFailureError: When an eigenfunction changes sign.
    """
    check_admissible(bc.beta_value, kappa, c)
    bundle = bundle or assemble_operators(mesh)
    measures = mesh.element_measure
    target = c * mesh.measure

    if isinstance(init, Weight):
        label = "custom"
        weight = init
    else:
        label = init
        weight = seed_weight(mesh, init, kappa, c, seed=seed, bundle=bundle)
    if len(weight.per_element) != mesh.n_elements:
        raise InvalidArgumentError("The initial weight does not match the mesh.")

    result = _checked(principal_eigen(bundle, weight, bc), 0)
    records = [
        IterationRecord(
            k=0,
            lambda_=result.lambda_,
            alpha=math.nan,
            volume=weight.favourable_measure(measures),
            set_change=math.nan,
        )
    ]

    converged, reason = False, "iteration limit"
    for k in range(1, max_iters + 1):
        candidate, alpha = bathtub_threshold(mesh, result.phi, target, kappa)
        change = float(measures[candidate.selected ^ weight.selected].sum())
        if change == 0.0:
            converged, reason = True, "set unchanged"
            break
        if bc.is_neumann:
            assert candidate.integral(measures) < 0.0

        trial = _checked(
            principal_eigen(bundle, candidate, bc, lam_start=result.lambda_), k
        )
        if trial.lambda_ > result.lambda_ * (1.0 + DESCENT_TOLERANCE):
            logger.warning(
                f"Iteration {k} would raise lambda from {result.lambda_} to "
                f"{trial.lambda_}; keeping the previous set."
            )
            converged, reason = False, "no descent"
            break

        previous = result.lambda_
        weight, result = candidate, trial
        records.append(
            IterationRecord(
                k=k,
                lambda_=result.lambda_,
                alpha=alpha,
                volume=weight.favourable_measure(measures),
                set_change=change,
            )
        )
        logger.debug(
            f"Iteration {k}: lambda={result.lambda_}, alpha={alpha}, change={change}"
        )
        if abs(result.lambda_ - previous) <= tol * result.lambda_:
            converged, reason = True, "lambda tolerance"
            break

    logger.info(
        f"Thresholding from '{label}' stopped after {len(records) - 1} "
        f"iterations ({reason}), lambda={result.lambda_}"
    )
    return OptimizeTrace(
        records=records,
        weight=weight,
        eigen=result,
        converged=converged,
        reason=reason,
        seed=label,
    )


def optimize_multi_seed(
    mesh: Mesh,
    bc: BoundaryCondition,
    kappa: float,
    c: float,
    seeds: Sequence[str] = SEEDS[:3],
    threads: Optional[int] = None,
    seed: int = 0,
    max_iters: int = 100,
    tol: float = 1e-9,
) -> Tuple[OptimizeTrace, List[OptimizeTrace]]:
    """Run the optimizer from several initial sets and keep the best.

    Runs are independent and share the read-only operators; they are spread
    over a bounded thread pool. A run that fails numerically is dropped with a
    warning, and so is the disk-cap seed when no cap has volume fraction c.

    Returns:
        Tuple[OptimizeTrace, List[OptimizeTrace]]: The run with the smallest λ
            (earliest seed on ties) and all completed runs in seed order.

    Raises:
        InvalidArgumentError: Without seeds or for inadmissible parameters.
        NumericFailureError: When every run fails.
    """
    if len(seeds) == 0:
        raise InvalidArgumentError("At least one seed is required.")
    check_admissible(bc.beta_value, kappa, c)
    if "disk-cap" in seeds and c >= MAX_CAP_FRACTION:
        logger.warning(f"Dropping seed 'disk-cap': no orthogonal cap has c={c}")
        seeds = [tag for tag in seeds if tag != "disk-cap"]
    bundle = assemble_operators(mesh)

    def run(tag: str) -> Optional[OptimizeTrace]:
        try:
            return optimize_threshold(
                mesh, bc, kappa, c, tag, max_iters, tol, seed=seed, bundle=bundle
            )
        except NumericFailureError as e:
            logger.warning(f"Dropping seed '{tag}': {e}")
            return None

    with ThreadPoolExecutor(max_workers=threads or settings.THREADS) as executor:
        traces = [trace for trace in executor.map(run, seeds) if trace is not None]

    if not traces:
        raise NumericFailureError(f"The optimizer failed from every seed {seeds}.")
    best = min(traces, key=lambda trace: trace.eigen.lambda_)
    return best, traces
