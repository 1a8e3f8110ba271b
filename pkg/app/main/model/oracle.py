"""Loop-algebra generators for the A1~ Shapovalov oracle"""
from dataclasses import dataclass
from enum import Enum
from typing import List, Tuple

from pydantic import BaseModel


class LoopKind(str, Enum):
    E = "e"
    F = "f"
    H = "h"
    C = "c"


@dataclass(frozen=True, order=True)
class LoopGenerator:
    """x (x) t^degree for x in {e, f, h}, or the central element c"""
    kind: LoopKind
    degree: int = 0

    def is_negative(self) -> bool:
        if self.kind == LoopKind.E or self.kind == LoopKind.H:
            return self.degree < 0
        if self.kind == LoopKind.F:
            return self.degree <= 0
        return False

    def is_positive(self) -> bool:
        if self.kind == LoopKind.E:
            return self.degree >= 0
        if self.kind == LoopKind.F or self.kind == LoopKind.H:
            return self.degree > 0
        return False

    @property
    def xi(self) -> Tuple[int, int]:
        """-(root) in (alpha_0, alpha_1) coordinates, for a negative generator"""
        k = -self.degree
        if self.kind == LoopKind.E:
            return k, k - 1
        if self.kind == LoopKind.F:
            return k, k + 1
        return k, k

    def sort_key(self) -> Tuple[int, int]:
        order = {LoopKind.F: 0, LoopKind.H: 1, LoopKind.E: 2, LoopKind.C: 3}
        return -self.degree, order[self.kind]

    def omega(self) -> "LoopGenerator":
        """Chevalley anti-involution: e t^k <-> f t^-k, h t^k -> h t^-k"""
        if self.kind == LoopKind.E:
            return LoopGenerator(LoopKind.F, -self.degree)
        if self.kind == LoopKind.F:
            return LoopGenerator(LoopKind.E, -self.degree)
        return LoopGenerator(self.kind, -self.degree)

    def __str__(self) -> str:
        if self.kind == LoopKind.C:
            return "c"
        return f"{self.kind.value}{self.degree:+d}"


CENTRAL = LoopGenerator(LoopKind.C, 0)

Monomial = Tuple[LoopGenerator, ...]


class OracleSchema(BaseModel):
    """Shapovalov form on one weight space of M(lambda)"""
    cartan_type: str
    weight: str
    xi: List[int]
    size: int
    rank: int
    determinant: str
    monomials: List[str]
