"""Elements of the integral Weyl group W(lambda)"""
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import numpy as np

from app.main.model.cartan import Root


@dataclass(frozen=True, eq=False)
class CoxeterElement:
    """An element of (W(lambda), S(lambda)).

    ``word`` is the ShortLex-minimal reduced word over the simple roots of
    W(lambda), read as s_{word[0]} s_{word[1]} ...; ``matrix`` is the action
    on root-lattice coordinates, so equal matrices mean equal elements.
    """
    system_key: str
    word: Tuple[int, ...]
    key: Tuple[int, ...]
    matrix: np.ndarray = field(repr=False)
    inverse: np.ndarray = field(repr=False)

    @property
    def length(self) -> int:
        return len(self.word)

    def act(self, root: Root) -> Root:
        image = self.matrix.dot(np.array(root.coords, dtype=object))
        return Root(tuple(int(x) for x in image), root.kind)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CoxeterElement):
            return NotImplemented
        return self.system_key == other.system_key and self.key == other.key

    def __hash__(self) -> int:
        return hash((self.system_key, self.key))

    def __str__(self) -> str:
        if not self.word:
            return "e"
        return "".join(f"s{i}" for i in self.word)


@dataclass(frozen=True)
class BruhatInterval:
    bottom: CoxeterElement
    top: CoxeterElement
    elements: Tuple[CoxeterElement, ...]

    def by_length(self) -> Dict[int, List[CoxeterElement]]:
        grouped: Dict[int, List[CoxeterElement]] = {}
        for element in self.elements:
            grouped.setdefault(element.length, []).append(element)
        return grouped

    def __contains__(self, element: CoxeterElement) -> bool:
        return element in set(self.elements)


@dataclass(frozen=True)
class OrbitPoint:
    """A point u o mu of the dot orbit, with its offset |mu - u o mu| in root coordinates"""
    offset: Root
    element: CoxeterElement
