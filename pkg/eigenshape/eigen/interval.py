"""Mesh-free principal eigenvalue for an interval set on (0, 1).

With m = κ on [a, a + c] and −1 elsewhere, the eigenfunction is piecewise
cosh/sinh (rate √λ) and cos/sin (rate √(λκ)). Propagating (φ, φ') from x = 0
with the Robin condition φ'(0) = βφ(0) gives a scalar determinant
D(λ) = φ'(1) + βφ(1) whose smallest positive root is the principal eigenvalue.
"""
import logging
import math
from fractions import Fraction
from typing import List, Tuple

import numpy as np
from scipy.optimize import bisect

from eigenshape.errors import InvalidArgumentError, NumericFailureError

logger = logging.getLogger(__name__)

SCAN_STEP = 0.1
SCAN_LIMIT = 1e6
SCAN_CHUNK = 4096
SCAN_FIRST = 1e-9


def beta_star(kappa: float, c: float) -> float:
    """Robin coefficient at which λ_β(a) does not depend on the position a.

    Args:
        kappa (float): Upper bound κ > 0 of the weight.
        c (float): Length of the favourable interval, 0 < c < 1.

    Returns:
        float: β*(κ, c).
    """
    if not kappa > 0.0:
        raise InvalidArgumentError(f"kappa must be positive, got {kappa}.")
    if not 0.0 < c < 1.0:
        raise InvalidArgumentError(f"c must lie in (0, 1), got {c}.")

    root = math.sqrt(kappa)
    if kappa > 1.0:
        return 2.0 / (c * root) * math.atan(1.0 / root)
    if kappa == 1.0:
        return math.pi / (2.0 * c)
    return (math.atan(2.0 * root / (kappa - 1.0)) + math.pi) / (c * root)


def stretch_constant(dimension: int) -> Fraction:
    """The factor (5N − 4)/(4N) by which stretching a radial set lowers λ."""
    if dimension < 1:
        raise InvalidArgumentError(f"dimension must be positive, got {dimension}.")
    return Fraction(5 * dimension - 4, 4 * dimension)


def _pieces(a: float, c: float, kappa: float) -> List[Tuple[float, float]]:
    return [(a, -1.0), (c, kappa), (1.0 - a - c, -1.0)]


def _propagate(
    lam: np.ndarray, pieces: List[Tuple[float, float]], dirichlet: bool, beta: float
) -> Tuple[np.ndarray, np.ndarray]:
    """Carry (φ, φ') from x = 0 to the end of the pieces, up to positive scaling."""
    lam = np.asarray(lam, dtype=np.double)
    if dirichlet:
        phi, dphi = np.zeros_like(lam), np.ones_like(lam)
    else:
        phi, dphi = np.ones_like(lam), np.full_like(lam, beta)

    for length, m in pieces:
        if length <= 0.0:
            continue
        if m < 0.0:
            s = np.sqrt(-m * lam)
            x = s * length
            # cosh and sinh scaled by exp(-x)
            decay = np.exp(-2.0 * x)
            ch = 0.5 * (1.0 + decay)
            sh = -0.5 * np.expm1(-2.0 * x)
            phi, dphi = ch * phi + sh / s * dphi, s * sh * phi + ch * dphi
        else:
            t = np.sqrt(m * lam)
            x = t * length
            co, si = np.cos(x), np.sin(x)
            phi, dphi = co * phi + si / t * dphi, -t * si * phi + co * dphi
        norm = np.hypot(phi, dphi)
        phi, dphi = phi / norm, dphi / norm
    return phi, dphi


def _determinant(
    lam: np.ndarray, a: float, c: float, kappa: float, beta: float
) -> np.ndarray:
    dirichlet = math.isinf(beta)
    phi, dphi = _propagate(lam, _pieces(a, c, kappa), dirichlet, beta)
    if dirichlet:
        return phi
    return dphi + beta * phi


def _is_principal(lam: float, a: float, c: float, kappa: float, beta: float) -> bool:
    """Check that the eigenfunction at lam does not change sign."""
    dirichlet = math.isinf(beta)
    lams = np.array([lam])
    phi_a, dphi_a = _propagate(lams, [(a, -1.0)], dirichlet, beta)
    if a > 0.0 and not phi_a[0] > 0.0:
        return False
    t = math.sqrt(lam * kappa)
    # (φ, φ'/t) rotates clockwise by t·c on the favourable piece.
    phase = math.atan2(dphi_a[0] / t, phi_a[0])
    if not (phase - t * c > -0.5 * math.pi - 1e-9 and phase <= 0.5 * math.pi):
        return False
    phi_end, _ = _propagate(lams, _pieces(a, c, kappa), dirichlet, beta)
    return bool(phi_end[0] >= -1e-9)


def interval_eigen_1d(a: float, c: float, kappa: float, beta: float) -> float:
    """Principal eigenvalue λ_β(a) of φ'' + λmφ = 0 on (0, 1) with
    m = κ on [a, a + c] and −1 elsewhere.

    Args:
        a (float): Left end of the favourable interval, 0 ≤ a ≤ 1 − c.
        c (float): Length of the favourable interval.
        kappa (float): Upper bound κ > 0.
        beta (float): Robin coefficient β ≥ 0; `math.inf` gives Dirichlet.

    Returns:
        float: The principal eigenvalue, to an absolute accuracy of 1e-12.

    Raises:
        InvalidArgumentError: When a parameter is out of range.
        NumericFailureError: When no root is found below 1e6, or the root
            found has a sign-changing eigenfunction.
    """
    if not 0.0 < c <= 1.0:
        raise InvalidArgumentError(f"c must lie in (0, 1], got {c}.")
    if not -1e-12 <= a <= 1.0 - c + 1e-12:
        raise InvalidArgumentError(f"a must lie in [0, {1.0 - c}], got {a}.")
    if not kappa > 0.0 or beta < 0.0:
        raise InvalidArgumentError(
            f"Expected kappa > 0 and beta >= 0, got {kappa} and {beta}."
        )
    a = min(max(a, 0.0), 1.0 - c)

    f = lambda lam: float(_determinant(np.array([lam]), a, c, kappa, beta)[0])

    previous_lam = SCAN_FIRST
    previous = f(previous_lam)
    start = 1
    while start * SCAN_STEP < SCAN_LIMIT:
        lams = SCAN_STEP * np.arange(start, start + SCAN_CHUNK)
        values = _determinant(lams, a, c, kappa, beta)
        signs = np.sign(np.concatenate([[previous], values]))
        change = np.flatnonzero(signs[1:] != signs[:-1])
        if change.size:
            k = int(change[0])
            hi = float(lams[k])
            lo = previous_lam if k == 0 else float(lams[k - 1])
            if values[k] == 0.0:
                root = hi
            else:
                root = bisect(f, lo, hi, xtol=1e-12)
            if not _is_principal(root, a, c, kappa, beta):
                raise NumericFailureError(
                    f"The first root {root} has a sign-changing eigenfunction.",
                    probe=root,
                )
            logger.debug(f"lambda_beta(a={a}) = {root} for c={c}, beta={beta}")
            return root
        previous_lam, previous = float(lams[-1]), float(values[-1])
        start += SCAN_CHUNK

    raise NumericFailureError(
        f"No principal eigenvalue below {SCAN_LIMIT} for a={a}, c={c}.",
        probe=SCAN_LIMIT,
    )
