"""Analytic descriptors of the favourable set E where the weight equals κ.

Every descriptor answers membership queries for arrays of points of shape
``(k, d)``; the assembly module uses them on element centroids.
"""
import math
from typing import List, Literal, Optional, Tuple, Union

import numpy as np
from pydantic import Field, root_validator, validator
from scipy.special import gamma

from eigenshape.basemodel import BaseModel


def ball_volume(radius: float, dim: int) -> float:
    """Volume of the dim-dimensional ball of the given radius."""
    return math.pi ** (dim / 2) / float(gamma(dim / 2 + 1)) * radius**dim


def cap_area(radius: float, r_c: float) -> float:
    """Area of the disk cap of radius r_c meeting the disk of the given radius
    orthogonally.

    The cap center lies at distance sqrt(radius² + r_c²) from the disk center.

    Args:
        radius (float): Radius R of the disk.
        r_c (float): Radius of the cap.

    Returns:
        float: R²·arcsin(r_c/d) + r_c²·arcsin(R/d) − r_c·R with d = sqrt(R² + r_c²).
    """
    if r_c <= 0.0:
        return 0.0
    d = math.hypot(radius, r_c)
    return (
        radius**2 * math.asin(r_c / d) + r_c**2 * math.asin(radius / d) - r_c * radius
    )


class IntervalSet(BaseModel):
    """The interval [a, a + c) of the unit interval.

    Attributes:
        a (float): Left end point.
        c (float): Length of the interval.
    """

    kind: Literal["interval"] = "interval"
    a: float = Field(..., ge=0.0)
    c: float = Field(..., gt=0.0)

    def contains(self, points: np.ndarray) -> np.ndarray:
        x = np.asarray(points, dtype=np.double).reshape(len(points), -1)[:, 0]
        return (x >= self.a) & (x < self.a + self.c)

    def _get_identifier(self, data: dict) -> Optional[str]:
        return f"interval a:{data.get('a')} c:{data.get('c')}"


class RadialRings(BaseModel):
    """A union of concentric rings [r_lo, r_hi) centered at the origin.

    Attributes:
        rings (List[Tuple[float, float]]): Sorted, disjoint rings.
        radius (float): Radius R of the domain holding the rings.
    """

    kind: Literal["rings"] = "rings"
    rings: List[Tuple[float, float]]
    radius: float = Field(1.0, gt=0.0)

    @root_validator(skip_on_failure=True)
    def _check_rings(cls, values):
        rings = values.get("rings")
        radius = values.get("radius")
        previous_hi = 0.0
        for lo, hi in rings:
            if not 0.0 <= lo < hi:
                raise ValueError(f"Ring [{lo}, {hi}) is empty or negative.")
            if hi > radius * (1.0 + 1e-12):
                raise ValueError(
                    f"Ring [{lo}, {hi}) exceeds the domain radius {radius}."
                )
            if lo < previous_hi:
                raise ValueError(f"Ring [{lo}, {hi}) overlaps its predecessor.")
            previous_hi = hi
        return values

    def volume(self, dim: int) -> float:
        """The dim-dimensional volume of the union of rings."""
        return sum(
            ball_volume(hi, dim) - ball_volume(lo, dim) for lo, hi in self.rings
        )

    def contains(self, points: np.ndarray) -> np.ndarray:
        points = np.asarray(points, dtype=np.double).reshape(len(points), -1)
        r = np.linalg.norm(points, axis=1)
        inside = np.zeros(r.shape, dtype=bool)
        for lo, hi in self.rings:
            inside |= (r >= lo) & (r < hi)
        return inside

    def _get_identifier(self, data: dict) -> Optional[str]:
        return f"rings {data.get('rings')}"


class DiskCap(BaseModel):
    """The piece of the disk B(0, R) cut out by a disk of radius r_c that meets
    the boundary orthogonally.

    Attributes:
        radius (float): Radius R of the domain.
        r_c (float): Radius of the cutting disk.
        angle (float): Polar angle of the cutting disk's center. Defaults to 0.
    """

    kind: Literal["cap"] = "cap"
    radius: float = Field(..., gt=0.0)
    r_c: float = Field(..., gt=0.0)
    angle: float = 0.0

    @property
    def center_distance(self) -> float:
        return math.hypot(self.radius, self.r_c)

    @property
    def center(self) -> np.ndarray:
        d = self.center_distance
        return np.array([d * math.cos(self.angle), d * math.sin(self.angle)])

    def area(self) -> float:
        return cap_area(self.radius, self.r_c)

    def contains(self, points: np.ndarray) -> np.ndarray:
        points = np.asarray(points, dtype=np.double).reshape(len(points), -1)
        return np.linalg.norm(points[:, :2] - self.center, axis=1) < self.r_c


class CustomSet(BaseModel):
    """A set without analytic description, e.g. the output of the optimizer."""

    kind: Literal["custom"] = "custom"
    label: str = ""

    def contains(self, points: np.ndarray) -> np.ndarray:
        raise NotImplementedError("A custom set has no analytic membership.")


SetDescriptor = Union[IntervalSet, RadialRings, DiskCap, CustomSet]
