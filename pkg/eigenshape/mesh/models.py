import logging
from pathlib import Path
from typing import Callable, Dict, Literal, Optional

import numpy as np
from pydantic import Field, root_validator, validator

from eigenshape.basemodel import BaseModel, ParsableFileModel, SerializerConfig
from eigenshape.utils import as_float_array, as_index_array

from .parser import FieldFileParser
from .serializer import FieldFileSerializer

logger = logging.getLogger(__name__)


def boundary_facets(elements: np.ndarray, dim: int) -> np.ndarray:
    """Extract the boundary facets of a conforming simplicial mesh.

    In 2D a facet is an edge that belongs to exactly one triangle; it is returned
    in the orientation of its triangle, which is outward for counter-clockwise
    triangles. In 1D a facet is a vertex used by exactly one element.

    Args:
        elements (np.ndarray): Element connectivity of shape (ne, dim + 1).
        dim (int): Spatial dimension, 1 or 2.

    Returns:
        np.ndarray: Facets of shape (nb, 2) in 2D and (nb, 1) in 1D, sorted by
            their vertex indices.
    """
    if dim == 1:
        vertices, counts = np.unique(elements.ravel(), return_counts=True)
        return vertices[counts == 1].reshape(-1, 1)

    directed = np.concatenate(
        [elements[:, [0, 1]], elements[:, [1, 2]], elements[:, [2, 0]]]
    )
    keys = np.sort(directed, axis=1)
    _, first, counts = np.unique(
        keys, axis=0, return_index=True, return_counts=True
    )
    return directed[first[counts == 1]]


def element_measures(vertices: np.ndarray, elements: np.ndarray) -> np.ndarray:
    """Signed element measures: lengths in 1D, areas in 2D.

    Counter-clockwise triangles have positive area.
    """
    corners = vertices[elements]
    if vertices.shape[1] == 1:
        return corners[:, 1, 0] - corners[:, 0, 0]
    e1 = corners[:, 1] - corners[:, 0]
    e2 = corners[:, 2] - corners[:, 0]
    return 0.5 * (e1[:, 0] * e2[:, 1] - e1[:, 1] * e2[:, 0])


class Mesh(BaseModel):
    """A conforming simplicial mesh of an interval or a planar domain.

    Attributes:
        dim (int): Spatial dimension, 1 or 2.
        vertices (np.ndarray): Vertex coordinates of shape (nv, dim).
        elements (np.ndarray): Vertex indices of shape (ne, dim + 1).
        boundary_edges (np.ndarray): Boundary facets, outward oriented edges of
            shape (nb, 2) in 2D and the endpoint indices of shape (nb, 1) in 1D.
        element_measure (np.ndarray): Length or area of every element.
    """

    dim: Literal[1, 2]
    vertices: np.ndarray
    elements: np.ndarray
    boundary_edges: np.ndarray
    element_measure: np.ndarray

    @validator("vertices", "element_measure", pre=True)
    def _to_float_array(cls, value, field):
        return as_float_array(value, 2 if field.name == "vertices" else 1)

    @validator("elements", "boundary_edges", pre=True)
    def _to_index_array(cls, value):
        return as_index_array(value, 2)

    @root_validator(skip_on_failure=True)
    def _check_shapes(cls, values):
        dim = values["dim"]
        vertices = values["vertices"]
        elements = values["elements"]
        if vertices.shape[1] != dim:
            raise ValueError(
                f"Vertices have {vertices.shape[1]} coordinates, expected {dim}."
            )
        if elements.shape[1] != dim + 1:
            raise ValueError(
                f"Elements have {elements.shape[1]} vertices, expected {dim + 1}."
            )
        if elements.size and (elements.min() < 0 or elements.max() >= len(vertices)):
            raise ValueError("Element vertex indices are out of range.")
        if len(values["element_measure"]) != len(elements):
            raise ValueError("Expected one measure per element.")
        return values

    @classmethod
    def from_connectivity(cls, vertices, elements) -> "Mesh":
        """Build a mesh from coordinates and connectivity, deriving the boundary
        facets and the element measures.

        Args:
            vertices: Vertex coordinates of shape (nv, dim) or (nv,) in 1D.
            elements: Vertex indices of shape (ne, dim + 1).

        Returns:
            Mesh: The mesh.
        """
        vertices = as_float_array(vertices, 2)
        elements = as_index_array(elements, 2)
        dim = vertices.shape[1]
        return cls(
            dim=dim,
            vertices=vertices,
            elements=elements,
            boundary_edges=boundary_facets(elements, dim),
            element_measure=np.abs(element_measures(vertices, elements)),
        )

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_elements(self) -> int:
        return len(self.elements)

    @property
    def measure(self) -> float:
        """Total length or area of the discrete domain."""
        return float(self.element_measure.sum())

    @property
    def element_centroids(self) -> np.ndarray:
        return self.vertices[self.elements].mean(axis=1)

    @property
    def boundary_vertices(self) -> np.ndarray:
        return np.unique(self.boundary_edges)

    @property
    def boundary_measure(self) -> float:
        """Length of the discrete boundary in 2D, number of end points in 1D."""
        if self.dim == 1:
            return float(len(self.boundary_edges))
        edges = self.vertices[self.boundary_edges]
        return float(np.linalg.norm(edges[:, 1] - edges[:, 0], axis=1).sum())

    @property
    def max_diameter(self) -> float:
        """Largest element diameter (longest edge)."""
        corners = self.vertices[self.elements]
        k = self.dim + 1
        lengths = [
            np.linalg.norm(corners[:, j] - corners[:, i], axis=1)
            for i in range(k)
            for j in range(i + 1, k)
        ]
        return float(np.max(lengths))


class MeshField(BaseModel):
    """A named field attached to a mesh.

    Attributes:
        location (str): Either "vertex" or "element".
        values (np.ndarray): One value per vertex or per element.
    """

    location: Literal["vertex", "element"]
    values: np.ndarray

    @validator("values", pre=True)
    def _to_float_array(cls, value):
        return as_float_array(value, 1)


class FieldFileModel(ParsableFileModel):
    """A mesh with named vertex and element fields, stored as plain text.

    Attributes:
        mesh (Mesh): The mesh.
        quantities (Dict[str, MeshField]): The fields, in insertion order.
    """

    mesh: Mesh
    quantities: Dict[str, MeshField] = Field(default_factory=dict)

    @validator("mesh", pre=True)
    def _mesh_from_connectivity(cls, value):
        if isinstance(value, dict) and "boundary_edges" not in value:
            return Mesh.from_connectivity(value["vertices"], value["elements"])
        return value

    @root_validator(skip_on_failure=True)
    def _check_field_sizes(cls, values):
        mesh = values["mesh"]
        for name, field in values["quantities"].items():
            if field.location == "vertex":
                expected = mesh.n_vertices
            else:
                expected = mesh.n_elements
            if len(field.values) != expected:
                raise ValueError(
                    f"Field '{name}' has {len(field.values)} values, "
                    f"expected {expected}."
                )
        return values

    def add_field(self, name: str, location: str, values: np.ndarray) -> None:
        """Attach (or replace) a field."""
        quantities = dict(self.quantities)
        quantities[name] = MeshField(location=location, values=values)
        self.quantities = quantities

    def dict(self, *args, **kwargs):
        return dict(mesh=self.mesh, quantities=self.quantities)

    @classmethod
    def _ext(cls) -> str:
        return ".field"

    @classmethod
    def _filename(cls) -> str:
        return "mesh"

    @classmethod
    def _get_serializer(cls) -> Callable[[Path, Dict, SerializerConfig], None]:
        return FieldFileSerializer.serialize

    @classmethod
    def _get_parser(cls) -> Callable[[Path], Dict]:
        return FieldFileParser.parse
