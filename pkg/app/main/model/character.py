"""
Truncated formal characters and linkage-class data.

A character with base beta and depth D is sum c_xi e^{beta - xi} over
xi in Q+ with ht xi <= D; xi is kept as integer root coordinates.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

from app.main.model.coxeter import CoxeterElement
from app.main.model.weight import Weight

Coords = Tuple[int, ...]


@dataclass
class Character:
    base: Weight
    depth: int
    coeffs: Dict[Coords, int] = field(default_factory=dict)

    def coefficient(self, xi: Coords) -> int:
        return self.coeffs.get(tuple(xi), 0)

    def add_term(self, xi: Coords, value: int):
        if sum(xi) > self.depth or value == 0:
            return
        total = self.coeffs.get(xi, 0) + value
        if total:
            self.coeffs[xi] = total
        else:
            self.coeffs.pop(xi, None)

    def _check_compatible(self, other: "Character"):
        if self.base != other.base or self.depth != other.depth:
            raise ValueError("Characters have different base weights or depths")

    def __add__(self, other: "Character") -> "Character":
        self._check_compatible(other)
        result = Character(self.base, self.depth, dict(self.coeffs))
        for xi, value in other.coeffs.items():
            result.add_term(xi, value)
        return result

    def __sub__(self, other: "Character") -> "Character":
        return self + other.scaled(-1)

    def scaled(self, factor: int) -> "Character":
        if factor == 0:
            return Character(self.base, self.depth, {})
        return Character(self.base, self.depth, {xi: factor * c for xi, c in self.coeffs.items()})

    def restrict(self, depth: int) -> "Character":
        return Character(self.base, depth, {xi: c for xi, c in self.coeffs.items() if sum(xi) <= depth})

    def support(self) -> List[Tuple[Coords, int]]:
        return sorted(self.coeffs.items(), key=lambda item: (sum(item[0]), item[0]))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Character):
            return NotImplemented
        return self.base == other.base and self.depth == other.depth and self.coeffs == other.coeffs


@dataclass(frozen=True)
class FormulaTerm:
    """One summand sign * KL(1) * ch M(y o mu) of the character formula"""
    y: CoxeterElement
    sign: int
    kl_at_1: int
    offset: Coords

    @property
    def value(self) -> int:
        return self.sign * self.kl_at_1

    def to_dict(self) -> Dict[str, Any]:
        return {"y_word": list(self.y.word), "sign": self.sign, "kl_at_1": self.kl_at_1}


@dataclass
class LinkageClassData:
    """Character matrix of a linkage class inside a height window.

    ``coefficients[i][j]`` is the coefficient of ch M(anchor j) in
    ch L(anchor of row i); ``multiplicities[j][i]`` is [M(anchor j) : L(anchor i)].
    Anchors are given by their offsets mu - y o mu.
    """
    weight: Weight
    mu: Weight
    plus: bool
    depth: int
    rows: List[CoxeterElement]
    row_offsets: List[Coords]
    columns: List[CoxeterElement]
    column_offsets: List[Coords]
    coefficients: List[List[int]]
    multiplicities: Optional[List[List[int]]] = None
    complete: Dict[Coords, bool] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "weight": self.weight.format(),
            "dominant_weight": self.mu.format(),
            "chamber": "CPlus" if self.plus else "CMinus",
            "depth": self.depth,
            "representatives": [list(x.word) for x in self.rows],
            "row_offsets": [list(o) for o in self.row_offsets],
            "columns": [list(y.word) for y in self.columns],
            "column_offsets": [list(o) for o in self.column_offsets],
            "coefficients": self.coefficients,
            "multiplicities": self.multiplicities,
        }


class CharacterTermSchema(BaseModel):
    xi: List[int]
    coeff: int


class FormulaTermSchema(BaseModel):
    y_word: List[int]
    sign: int
    kl_at_1: int


class CharacterSchema(BaseModel):
    """JSON surface of a truncated character"""
    base_weight: str
    depth: int
    terms: List[CharacterTermSchema] = Field(default_factory=list)
    formula: List[FormulaTermSchema] = Field(default_factory=list)

    model_config = {
        "from_attributes": True
    }


class LinkageClassSchema(BaseModel):
    weight: str
    dominant_weight: str
    chamber: str
    depth: int
    representatives: List[List[int]]
    row_offsets: List[List[int]]
    columns: List[List[int]]
    column_offsets: List[List[int]]
    coefficients: List[List[int]]
    multiplicities: Optional[List[List[int]]] = None
