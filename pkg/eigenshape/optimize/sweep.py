import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

import numpy as np

from eigenshape.config import settings
from eigenshape.eigen import beta_star, interval_eigen_1d
from eigenshape.errors import InvalidArgumentError

from .models import SweepResult

logger = logging.getLogger(__name__)

ARGMIN_TOLERANCE = 1e-9


def sweep_intervals_1d(
    kappa: float,
    c: float,
    beta: float,
    n_samples: int,
    threads: Optional[int] = None,
) -> SweepResult:
    """Evaluate λ_β(a) on a uniform grid of positions a ∈ [0, 1 − c].

    Args:
        kappa (float): Upper bound κ of the weight.
        c (float): Length of the favourable interval.
        beta (float): Robin coefficient, `math.inf` for Dirichlet.
        n_samples (int): Number of positions, at least 3.
        threads (Optional[int]): Worker pool size.

    Returns:
        SweepResult: The samples in increasing a and the positions whose value
            is within 1e-9 (relative) of the minimum.
    """
    if n_samples < 3:
        raise InvalidArgumentError(f"n_samples must be at least 3, got {n_samples}.")

    positions = np.linspace(0.0, 1.0 - c, n_samples)
    evaluate = lambda a: interval_eigen_1d(float(a), c, kappa, beta)
    with ThreadPoolExecutor(max_workers=threads or settings.THREADS) as executor:
        values = list(executor.map(evaluate, positions))

    minimum = min(values)
    argmin = [
        float(a)
        for a, value in zip(positions, values)
        if value <= minimum * (1.0 + ARGMIN_TOLERANCE)
    ]
    return SweepResult(
        samples=[(float(a), float(v)) for a, v in zip(positions, values)],
        argmin=argmin,
    )


def classify_interval_minimizer(
    kappa: float, c: float, beta: float, rtol: float = 1e-12
) -> str:
    """Which intervals of length c minimize λ_β(a) on (0, 1).

    Returns:
        str: "centered" for β > β*, "boundary" for β < β* (the intervals (0, c)
            and (1 − c, 1)), "any" for β = β*.
    """
    threshold = beta_star(kappa, c)
    if math.isinf(beta) or beta > threshold * (1.0 + rtol):
        return "centered"
    if beta < threshold * (1.0 - rtol):
        return "boundary"
    return "any"
