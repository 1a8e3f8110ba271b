"""
Integral root systems of a weight.

Delta(lambda) is stored as finitely many delta-progressions, one per classical
direction gamma that has integral members.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import FrozenSet, List, Optional, Tuple, Union

from pydantic import BaseModel, Field

from app.main.model.cartan import AffineCartanData, Root
from app.main.model.scalar import Scalar
from app.main.model.weight import Weight


class ChamberClass(str, Enum):
    """Chamber of a weight relative to its integral roots"""
    CRITICAL = "Critical"
    CPLUS = "CPlus"
    CMINUS = "CMinus"
    INTERIOR = "Interior"


@dataclass(frozen=True)
class Progression:
    """Integral roots gamma + j delta, j = first + t * period.

    For an infinite progression t ranges over Z and ``base`` is the first
    positive member; a finite progression has the single member ``base``.
    """
    direction: Root
    base: Root
    first: int
    period: int
    infinite: bool
    base_pairing: Scalar
    step: Scalar

    @property
    def range_label(self) -> Union[str, List[int]]:
        return "all" if self.infinite else [0]

    def normalized(self) -> Tuple:
        """Key that identifies the root set independently of lambda"""
        if self.infinite:
            return (self.direction.coords, self.first % self.period, self.period, True)
        return (self.direction.coords, self.first, 1, False)


@dataclass(frozen=True)
class IntegralSystem:
    cartan: AffineCartanData
    weight: Weight
    level: Optional[Scalar]
    progressions: Tuple[Progression, ...]
    delta0: Tuple[Root, ...]
    simples: Tuple[Root, ...]
    simples0: Tuple[Root, ...]
    coxeter_matrix: Tuple[Tuple[int, ...], ...]
    finite_flag: bool
    checked_height: int = 0
    simple_pairings: Tuple[int, ...] = field(default=())

    def is_empty(self) -> bool:
        return not self.progressions

    def root_set_key(self) -> FrozenSet[Tuple]:
        return frozenset(p.normalized() for p in self.progressions)

    def delta0_key(self) -> FrozenSet[Tuple[int, ...]]:
        return frozenset(r.coords for r in self.delta0)

    def positive_delta0(self) -> Tuple[Root, ...]:
        return tuple(r for r in self.delta0 if r.is_positive())

    def system_key(self) -> str:
        """Identifies the Coxeter system (W(lambda), simples)"""
        roots = ";".join(",".join(str(n) for n in r.coords) for r in self.simples)
        return f"{self.cartan.name}|{roots}"


class ProgressionSchema(BaseModel):
    """Schema for one progression"""
    base: List[int]
    period: int
    range: Union[str, List[int]]


class IntegralSystemSchema(BaseModel):
    """Schema for an integral root system"""
    cartan_type: str
    weight: str
    level: Optional[str] = None
    chamber: str
    progressions: List[ProgressionSchema] = Field(default_factory=list)
    delta0: List[List[int]] = Field(default_factory=list)
    simples: List[List[int]] = Field(default_factory=list)
    simples0: List[List[int]] = Field(default_factory=list)
    coxeter_matrix: List[List[int]] = Field(default_factory=list)
    finite: bool

    model_config = {
        "from_attributes": True
    }


@dataclass(frozen=True)
class DominantRepresentative:
    """mu = w o lambda with w = s_{word[0]} ... s_{word[-1]} over the simples"""
    mu: Weight
    word: Tuple[int, ...]
    system: IntegralSystem


@dataclass(frozen=True)
class ParabolicConjugation:
    """x = s_{word[0]} ... s_{word[-1]} over I with x Delta_1 inside Delta_J"""
    word: Tuple[int, ...]
    J: Tuple[int, ...]
    images: Tuple[Root, ...] = ()


@dataclass(frozen=True)
class ParabolicReduction:
    conjugation: ParabolicConjugation
    weight: Weight
    reduced_weight: Weight
    removed_letters: int
