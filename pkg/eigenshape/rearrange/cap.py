import logging
import math

from scipy.optimize import bisect

from eigenshape.errors import InvalidArgumentError, NumericFailureError
from eigenshape.geometry import DiskCap, cap_area

logger = logging.getLogger(__name__)

MAX_CAP_FRACTION = 0.5
MAX_BRACKET_DOUBLINGS = 60


def cap_radius_from_fraction(radius: float, c: float, angle: float = 0.0) -> DiskCap:
    """The disk cap meeting ∂B(0, R) orthogonally that covers a fraction c of
    the disk.

    The cap area increases with r_c towards half the disk, so r_c is found by
    bisection, starting from the bracket [0, 10R·c/(1 − c)].

    Args:
        radius (float): Radius R of the disk.
        c (float): Area fraction, 0 < c < 1/2.
        angle (float): Polar angle of the cap. Defaults to 0.

    Returns:
        DiskCap: The cap, with r_c accurate to 1e-12.

    Raises:
        InvalidArgumentError: When R ≤ 0 or c lies outside (0, 1/2).
        NumericFailureError: When no bracket is found.
    """
    if not radius > 0.0:
        raise InvalidArgumentError(f"radius must be positive, got {radius}.")
    if not 0.0 < c < MAX_CAP_FRACTION:
        raise InvalidArgumentError(
            f"An orthogonal cap covers less than half the disk, c must lie in "
            f"(0, {MAX_CAP_FRACTION}), got {c}."
        )

    target = c * math.pi * radius**2
    excess = lambda r_c: cap_area(radius, r_c) - target

    hi = 10.0 * radius * c / (1.0 - c)
    for _ in range(MAX_BRACKET_DOUBLINGS):
        if excess(hi) > 0.0:
            break
        hi *= 2.0
    else:
        raise NumericFailureError(
            f"No cap radius below {hi} covers the fraction {c} of the disk."
        )

    r_c = bisect(excess, 0.0, hi, xtol=1e-12)
    logger.debug(f"Cap radius {r_c} for R={radius}, c={c}")
    return DiskCap(radius=radius, r_c=r_c, angle=angle)
