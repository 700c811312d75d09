from .assembler import (
    assemble_operators,
    assemble_radial_operators,
    weight_from_descriptor,
    weighted_mass,
)
from .models import BoundaryCondition, OperatorBundle, Weight
from .serializer import CooSerializer, write_coo

__all__ = [
    "BoundaryCondition",
    "OperatorBundle",
    "Weight",
    "assemble_operators",
    "assemble_radial_operators",
    "weighted_mass",
    "weight_from_descriptor",
    "CooSerializer",
    "write_coo",
]
