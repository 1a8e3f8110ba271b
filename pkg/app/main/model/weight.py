"""Weights of the Cartan subalgebra dual and their text grammar."""
import re
from dataclasses import dataclass
from typing import Iterable, Tuple

from app.main.model.scalar import Number, Scalar, ZERO
from app.main.util.exceptions import WeightSyntaxError

ENTRY_RE = re.compile(r"^\s*(h(\d+)|d)\s*=\s*(.+?)\s*$")


@dataclass(frozen=True)
class Weight:
    """lambda given by <h_i, lambda> for i in I and <d, lambda>"""
    pairings: Tuple[Scalar, ...]
    d_pairing: Scalar = ZERO

    @classmethod
    def from_values(cls, pairings: Iterable[Number], d_pairing: Number = 0) -> "Weight":
        return cls(tuple(Scalar.of(p) for p in pairings), Scalar.of(d_pairing))

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls(tuple(ZERO for _ in range(rank)), ZERO)

    @classmethod
    def parse(cls, text: str, rank: int) -> "Weight":
        """Parse `h0=<rat>[+<rat>*t],...,d=...`; every h_i is required."""
        values = {}
        d_value = ZERO
        for chunk in text.split(","):
            if not chunk.strip():
                raise WeightSyntaxError(f"Empty entry in weight '{text}'")
            match = ENTRY_RE.match(chunk)
            if not match:
                raise WeightSyntaxError(f"Malformed weight entry '{chunk.strip()}'")
            value = Scalar.parse(match.group(3))
            if match.group(1) == "d":
                d_value = value
                continue
            index = int(match.group(2))
            if index >= rank:
                raise WeightSyntaxError(f"Index h{index} out of range for rank {rank}")
            if index in values:
                raise WeightSyntaxError(f"Duplicate entry h{index}")
            values[index] = value
        missing = [i for i in range(rank) if i not in values]
        if missing:
            raise WeightSyntaxError(f"Missing pairings for h{missing[0]}")
        return cls(tuple(values[i] for i in range(rank)), d_value)

    @property
    def rank(self) -> int:
        return len(self.pairings)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(x + y for x, y in zip(self.pairings, other.pairings)),
                      self.d_pairing + other.d_pairing)

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(x - y for x, y in zip(self.pairings, other.pairings)),
                      self.d_pairing - other.d_pairing)

    def __neg__(self) -> "Weight":
        return Weight(tuple(-x for x in self.pairings), -self.d_pairing)

    def scaled(self, factor: Number) -> "Weight":
        return Weight(tuple(x * factor for x in self.pairings), self.d_pairing * factor)

    def is_rational(self) -> bool:
        return self.d_pairing.is_rational() and all(p.is_rational() for p in self.pairings)

    def has_integer_pairings(self) -> bool:
        """Membership in the weight lattice P"""
        return all(p.is_integer() for p in self.pairings)

    def format(self) -> str:
        parts = [f"h{i}={p}" for i, p in enumerate(self.pairings)]
        parts.append(f"d={self.d_pairing}")
        return ",".join(parts)

    def __str__(self) -> str:
        return self.format()
