import math
from typing import Literal, Optional

import numpy as np
import scipy.sparse as sp
from pydantic import Field, root_validator, validator

from eigenshape.basemodel import BaseModel
from eigenshape.geometry import SetDescriptor
from eigenshape.utils import as_float_array, as_index_array


class BoundaryCondition(BaseModel):
    """Boundary condition ∂ₙφ + βφ = 0 (Robin, β = 0 is Neumann) or φ = 0.

    Attributes:
        kind (str): "robin" or "dirichlet".
        beta (float): Robin coefficient β ≥ 0, ignored for Dirichlet.
    """

    kind: Literal["robin", "dirichlet"] = "robin"
    beta: float = Field(0.0, ge=0.0)

    @classmethod
    def neumann(cls) -> "BoundaryCondition":
        return cls(kind="robin", beta=0.0)

    @classmethod
    def robin(cls, beta: float) -> "BoundaryCondition":
        return cls(kind="robin", beta=beta)

    @classmethod
    def dirichlet(cls) -> "BoundaryCondition":
        return cls(kind="dirichlet")

    @classmethod
    def from_beta(cls, beta: float) -> "BoundaryCondition":
        """Robin condition, or Dirichlet when beta is infinite."""
        if math.isinf(beta):
            return cls.dirichlet()
        return cls.robin(beta)

    @property
    def is_dirichlet(self) -> bool:
        return self.kind == "dirichlet"

    @property
    def is_neumann(self) -> bool:
        return self.kind == "robin" and self.beta == 0.0

    @property
    def beta_value(self) -> float:
        """β as a number, infinite for Dirichlet."""
        return math.inf if self.is_dirichlet else self.beta


class Weight(BaseModel):
    """A weight m constant on every element, with −1 ≤ m ≤ κ.

    Bang-bang weights take the values κ on the favourable set E and −1 elsewhere.

    Attributes:
        per_element (np.ndarray): The weight value of every element.
        kappa (float): The upper bound κ > 0.
        descriptor (Optional[SetDescriptor]): Analytic description of E, if any.
    """

    per_element: np.ndarray
    kappa: float = Field(..., gt=0.0)
    descriptor: Optional[SetDescriptor] = None

    @validator("per_element", pre=True)
    def _to_float_array(cls, value):
        return as_float_array(value, 1)

    @root_validator(skip_on_failure=True)
    def _check_bounds(cls, values):
        m = values["per_element"]
        kappa = values["kappa"]
        tolerance = 1e-12 * max(kappa, 1.0)
        if m.size == 0:
            raise ValueError("A weight needs at least one element.")
        if m.min() < -1.0 - tolerance or m.max() > kappa + tolerance:
            raise ValueError(
                f"Weight values must lie in [-1, {kappa}], "
                f"got [{m.min()}, {m.max()}]."
            )
        if not (m > 0.0).any():
            raise ValueError("The weight must be positive on at least one element.")
        return values

    @classmethod
    def bang_bang(
        cls,
        selected: np.ndarray,
        kappa: float,
        descriptor: Optional[SetDescriptor] = None,
    ) -> "Weight":
        """The weight κ on the selected elements and −1 elsewhere."""
        selected = np.asarray(selected, dtype=bool)
        return cls(
            per_element=np.where(selected, kappa, -1.0),
            kappa=kappa,
            descriptor=descriptor,
        )

    @property
    def selected(self) -> np.ndarray:
        """Elements where the weight is positive."""
        return self.per_element > 0.0

    def favourable_measure(self, element_measure: np.ndarray) -> float:
        """Measure of the set where the weight is positive."""
        return float(element_measure[self.selected].sum())

    def integral(self, element_measure: np.ndarray) -> float:
        """∫m, the sum of m_e·|e| over all elements."""
        return float(np.dot(self.per_element, element_measure))

    def _get_identifier(self, data: dict) -> Optional[str]:
        return f"weight kappa:{data.get('kappa')}"


class OperatorBundle(BaseModel):
    """The sparse operators of the Rayleigh quotient of a P1 discretization.

    Attributes:
        K (sp.csr_matrix): Stiffness matrix ∫∇φ·∇ψ.
        B (sp.csr_matrix): Boundary mass matrix ∫_{∂Ω} φψ.
        M0 (sp.csr_matrix): Mass matrix ∫φψ.
        n (int): Number of unknowns (vertices).
        elements (np.ndarray): Element connectivity used for weighted masses.
        local_mass (np.ndarray): Element mass matrices of shape (ne, k, k).
        boundary_vertices (np.ndarray): Vertices removed by a Dirichlet condition.
    """

    K: sp.csr_matrix
    B: sp.csr_matrix
    M0: sp.csr_matrix
    n: int
    elements: np.ndarray
    local_mass: np.ndarray
    boundary_vertices: np.ndarray

    @validator("elements", pre=True)
    def _to_index_array(cls, value):
        return as_index_array(value, 2)

    @validator("boundary_vertices", pre=True)
    def _to_boundary_array(cls, value):
        return as_index_array(value, 1)

    @validator("local_mass", pre=True)
    def _to_local_array(cls, value):
        return as_float_array(value, 3)

    @root_validator(skip_on_failure=True)
    def _check_sizes(cls, values):
        n = values["n"]
        for name in ("K", "B", "M0"):
            if values[name].shape != (n, n):
                raise ValueError(
                    f"{name} has shape {values[name].shape}, expected {n}."
                )
        if len(values["local_mass"]) != len(values["elements"]):
            raise ValueError("Expected one local mass matrix per element.")
        return values

    @property
    def n_elements(self) -> int:
        return len(self.elements)

    @property
    def element_measure(self) -> np.ndarray:
        """Element measures in the inner product of M0."""
        return self.local_mass.sum(axis=(1, 2))

    @property
    def measure(self) -> float:
        return float(self.element_measure.sum())

    @property
    def interior_vertices(self) -> np.ndarray:
        mask = np.ones(self.n, dtype=bool)
        mask[self.boundary_vertices] = False
        return np.flatnonzero(mask)

    def weighted_mass(self, values: np.ndarray) -> sp.csr_matrix:
        """The mass matrix ∫mφψ for a weight m constant per element.

        Args:
            values (np.ndarray): Weight value of every element.

        Returns:
            sp.csr_matrix: The symmetric weighted mass matrix.
        """
        values = np.asarray(values, dtype=np.double)
        return scatter(self.elements, values[:, None, None] * self.local_mass, self.n)


def scatter(elements: np.ndarray, local: np.ndarray, n: int) -> sp.csr_matrix:
    """Sum element matrices of shape (ne, k, k) into a sparse n×n matrix."""
    k = elements.shape[1]
    rows = np.repeat(elements, k, axis=1)
    cols = np.tile(elements, (1, k))
    matrix = sp.coo_matrix((local.ravel(), (rows.ravel(), cols.ravel())), shape=(n, n))
    return matrix.tocsr()
