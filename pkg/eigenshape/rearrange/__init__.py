from eigenshape.geometry import DiskCap, RadialRings

from .bathtub import bathtub_select, bathtub_threshold, element_values
from .cap import MAX_CAP_FRACTION, cap_radius_from_fraction
from .rearrangement import monotone_two_sided_1d, schwarz_radial
from .stretch import stretch_disk, stretched_weight

__all__ = [
    "RadialRings",
    "DiskCap",
    "bathtub_select",
    "bathtub_threshold",
    "element_values",
    "monotone_two_sided_1d",
    "schwarz_radial",
    "stretch_disk",
    "stretched_weight",
    "cap_radius_from_fraction",
    "MAX_CAP_FRACTION",
]
