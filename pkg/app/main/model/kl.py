"""
Kazhdan-Lusztig polynomials and their persistent memo.

Polynomials are integer coefficient tuples in ascending powers of q.
"""
from dataclasses import dataclass
from typing import List, Tuple

from pydantic import BaseModel, Field
from sqlalchemy import Column, Integer, String, Text, UniqueConstraint

from app.main import Base


def _trim(coeffs) -> Tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class KLPoly:
    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def zero(cls) -> "KLPoly":
        return cls(())

    @classmethod
    def one(cls) -> "KLPoly":
        return cls((1,))

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial"""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def shift(self, k: int) -> "KLPoly":
        """Multiply by q^k, k >= 0"""
        if not self.coeffs:
            return self
        return KLPoly((0,) * k + self.coeffs)

    def scaled(self, c: int) -> "KLPoly":
        return KLPoly(tuple(c * x for x in self.coeffs))

    def __add__(self, other: "KLPoly") -> "KLPoly":
        size = max(len(self.coeffs), len(other.coeffs))
        return KLPoly(tuple(self.coefficient(k) + other.coefficient(k) for k in range(size)))

    def __neg__(self) -> "KLPoly":
        return self.scaled(-1)

    def __sub__(self, other: "KLPoly") -> "KLPoly":
        return self + (-other)

    def __mul__(self, other: "KLPoly") -> "KLPoly":
        if not self.coeffs or not other.coeffs:
            return KLPoly.zero()
        product = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                product[i + j] += a * b
        return KLPoly(tuple(product))

    def at_one(self) -> int:
        return sum(self.coeffs)

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append(f"{c}*q")
            else:
                terms.append(f"{c}*q^{k}")
        return " + ".join(terms) if terms else "0"


class KLCacheEntry(Base):
    __tablename__ = "kl_polynomial"
    __table_args__ = (UniqueConstraint("system_key", "kind", "y_word", "w_word"),)

    id = Column(Integer, primary_key=True, autoincrement=True)
    system_key = Column(String, nullable=False, index=True)
    kind = Column(String(1), nullable=False)  # 'P' or 'Q'
    y_word = Column(String, nullable=False)
    w_word = Column(String, nullable=False)
    coeffs = Column(Text, nullable=False)  # JSON array


class CacheMeta(Base):
    __tablename__ = "cache_meta"

    id = Column(Integer, primary_key=True)
    version = Column(Integer, nullable=False)


class KLEntrySchema(BaseModel):
    """One (y, w) row of a KL table"""
    y_word: List[int]
    w_word: List[int]
    polynomial: str
    coeffs: List[int] = Field(default_factory=list)
    mu: int = 0


class KLTableSchema(BaseModel):
    cartan_type: str
    weight: str
    system_key: str
    length: int
    entries: List[KLEntrySchema] = Field(default_factory=list)

    model_config = {
        "from_attributes": True
    }
