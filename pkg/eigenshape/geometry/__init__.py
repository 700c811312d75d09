from .models import (
    CustomSet,
    DiskCap,
    IntervalSet,
    RadialRings,
    SetDescriptor,
    ball_volume,
    cap_area,
)
from .parameters import c_from_m0, check_admissible, m0_from_c

__all__ = [
    "IntervalSet",
    "RadialRings",
    "DiskCap",
    "CustomSet",
    "SetDescriptor",
    "ball_volume",
    "cap_area",
    "c_from_m0",
    "m0_from_c",
    "check_admissible",
]
