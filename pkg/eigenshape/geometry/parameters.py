import math

from eigenshape.errors import InvalidArgumentError


def c_from_m0(m0: float, kappa: float) -> float:
    """Volume fraction c = (1 − m0)/(κ + 1) of the favourable set."""
    return (1.0 - m0) / (kappa + 1.0)


def m0_from_c(c: float, kappa: float) -> float:
    """Mass parameter m0 = 1 − c(κ + 1) of a bang-bang weight."""
    return 1.0 - c * (kappa + 1.0)


def check_admissible(beta: float, kappa: float, c: float) -> None:
    """Check the parameter triple (β, κ, c) of the optimal design problem.

    Args:
        beta (float): Robin coefficient, `math.inf` for Dirichlet.
        kappa (float): Upper bound κ of the weight.
        c (float): Volume fraction of the favourable set.

    Raises:
        InvalidArgumentError: When κ ≤ 0, c ∉ (0, 1), or when β = 0 and
            c ≥ 1/(κ + 1), in which case ∫m ≥ 0 and the Neumann problem has no
            positive principal eigenvalue.
    """
    if not kappa > 0.0:
        raise InvalidArgumentError(f"kappa must be positive, got {kappa}.")
    if not 0.0 < c < 1.0:
        raise InvalidArgumentError(f"c must lie in (0, 1), got {c}.")
    if beta < 0.0 or math.isnan(beta):
        raise InvalidArgumentError(f"beta must be nonnegative, got {beta}.")
    if beta == 0.0 and c >= 1.0 / (kappa + 1.0):
        raise InvalidArgumentError(
            f"With beta=0 a positive principal eigenvalue requires c < 1/(kappa+1) "
            f"= {1.0 / (kappa + 1.0)}, got c={c}."
        )
