from .generators import gen_disk, gen_interval, gen_rectangle, ring_offset
from .models import FieldFileModel, Mesh, MeshField, boundary_facets

__all__ = [
    "Mesh",
    "MeshField",
    "FieldFileModel",
    "boundary_facets",
    "gen_interval",
    "gen_rectangle",
    "gen_disk",
    "ring_offset",
]
