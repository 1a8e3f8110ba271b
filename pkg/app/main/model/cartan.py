"""
Cartan data for untwisted affine and finite types.

Index 0 is the affine node for affine types; the classical part is 1..n.
"""
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field


class RootKind(str, Enum):
    """Real or imaginary root"""
    REAL = "real"
    IMAGINARY = "imaginary"


@dataclass(frozen=True)
class Root:
    """Root sum(n_i alpha_i) in simple-root coordinates"""
    coords: Tuple[int, ...]
    kind: RootKind = RootKind.REAL

    @property
    def height(self) -> int:
        return sum(self.coords)

    def is_positive(self) -> bool:
        return any(self.coords) and all(n >= 0 for n in self.coords)

    def is_negative(self) -> bool:
        return any(self.coords) and all(n <= 0 for n in self.coords)

    def __neg__(self) -> "Root":
        return Root(tuple(-n for n in self.coords), self.kind)

    def __add__(self, other: "Root") -> "Root":
        return Root(tuple(x + y for x, y in zip(self.coords, other.coords)), self.kind)

    def __sub__(self, other: "Root") -> "Root":
        return Root(tuple(x - y for x, y in zip(self.coords, other.coords)), self.kind)

    def scaled(self, k: int) -> "Root":
        return Root(tuple(k * n for n in self.coords), self.kind)

    def __str__(self) -> str:
        return "[" + ",".join(str(n) for n in self.coords) + "]"


@dataclass(frozen=True)
class AffineCartanData:
    """Cartan matrix plus the derived bilinear form, delta and c.

    ``cartan_matrix[i][j]`` is <h_i, alpha_j>. For finite types
    ``delta_coeffs`` and ``c_coeffs`` are None.
    """
    name: str
    cartan_matrix: Tuple[Tuple[int, ...], ...]
    symmetrizer: Tuple[Fraction, ...]
    affine: bool
    delta_coeffs: Optional[Tuple[int, ...]] = None
    c_coeffs: Optional[Tuple[int, ...]] = None
    classical_rank: int = field(default=0)

    @property
    def rank(self) -> int:
        """Size of the index set I"""
        return len(self.cartan_matrix)

    @property
    def imaginary_mult(self) -> int:
        return self.classical_rank if self.affine else 0

    @cached_property
    def form(self) -> Tuple[Tuple[Fraction, ...], ...]:
        """(alpha_i, alpha_j) = d_i <h_i, alpha_j>"""
        return tuple(
            tuple(self.symmetrizer[i] * self.cartan_matrix[i][j] for j in range(self.rank))
            for i in range(self.rank)
        )

    @property
    def delta(self) -> Optional[Root]:
        if not self.affine:
            return None
        return Root(self.delta_coeffs, RootKind.IMAGINARY)

    @property
    def delta_height(self) -> int:
        return sum(self.delta_coeffs) if self.affine else 0

    @property
    def classical_indices(self) -> Tuple[int, ...]:
        if self.affine:
            return tuple(range(1, self.rank))
        return tuple(range(self.rank))

    def simple_root(self, i: int) -> Root:
        return Root(tuple(1 if j == i else 0 for j in range(self.rank)))

    def root_norm(self, root: Root) -> Fraction:
        """(alpha, alpha)"""
        n = root.coords
        total = Fraction(0)
        for i in range(self.rank):
            if not n[i]:
                continue
            for j in range(self.rank):
                if n[j]:
                    total += n[i] * n[j] * self.form[i][j]
        return total

    def root_product(self, alpha: Root, beta: Root) -> Fraction:
        """(alpha, beta)"""
        total = Fraction(0)
        for i, x in enumerate(alpha.coords):
            if not x:
                continue
            for j, y in enumerate(beta.coords):
                if y:
                    total += x * y * self.form[i][j]
        return total

    def __repr__(self) -> str:
        return f"<AffineCartanData {self.name} rank={self.rank}>"


class CartanTypeSpec(BaseModel):
    """Schema for a user-supplied Cartan type"""
    cartan_matrix: List[List[int]] = Field(..., description="Matrix of <h_i, alpha_j>")
    affine: bool = Field(default=True, description="Untwisted affine type with node 0 affine")

    model_config = {
        "from_attributes": True
    }


class CartanOverrideFile(BaseModel):
    """Schema for the Cartan override file"""
    types: Dict[str, CartanTypeSpec] = Field(default_factory=dict)
