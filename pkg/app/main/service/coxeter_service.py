"""The Coxeter group (W(lambda), S(lambda)) realized on root-lattice coordinates"""
import logging
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from app.main.config import Config
from app.main.model.cartan import AffineCartanData, Root
from app.main.model.coxeter import BruhatInterval, CoxeterElement, OrbitPoint
from app.main.model.integral import IntegralSystem
from app.main.model.weight import Weight
from app.main.service.root_service import coroot_pairing, pairing, rho, root_weight
from app.main.util.exceptions import BoundExceeded, MixedSystems, NotComparable, NotDominant

logger = logging.getLogger(__name__)


def _reflection_matrix(cartan: AffineCartanData, beta: Root) -> np.ndarray:
    """s_beta on coordinates: I - beta (beta^v, alpha_j)"""
    size = cartan.rank
    row = [coroot_pairing(cartan, beta, cartan.simple_root(j)) for j in range(size)]
    matrix = np.identity(size, dtype=object)
    for i in range(size):
        for j in range(size):
            matrix[i, j] -= beta.coords[i] * row[j]
    return matrix


def _is_negative(vector: np.ndarray) -> bool:
    return all(x <= 0 for x in vector) and any(x != 0 for x in vector)


class CoxeterSystem:
    """W(lambda) with generators s_beta, beta in Pi(lambda).

    Elements are cached by matrix, so every element is built and reduced once.
    """

    def __init__(self, cartan: AffineCartanData, simples: Sequence[Root], key: str):
        self.cartan = cartan
        self.simples = tuple(simples)
        self.key = key
        self.generators = [_reflection_matrix(cartan, beta) for beta in self.simples]
        self._simple_vectors = [np.array(beta.coords, dtype=object) for beta in self.simples]
        self._elements: Dict[Tuple[int, ...], CoxeterElement] = {}
        self._bruhat: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], bool] = {}
        self._below: Dict[Tuple[int, ...], FrozenSet[CoxeterElement]] = {}
        identity = np.identity(cartan.rank, dtype=object)
        self._identity = self._store((), identity, identity)

    @classmethod
    def from_integral_system(cls, system: IntegralSystem) -> "CoxeterSystem":
        return _cached_system(system.cartan, system.simples, system.system_key())

    @property
    def rank(self) -> int:
        """Number of Coxeter generators"""
        return len(self.simples)

    # construction

    @staticmethod
    def _matrix_key(matrix: np.ndarray) -> Tuple[int, ...]:
        return tuple(int(x) for x in matrix.flatten())

    def _store(self, word: Tuple[int, ...], matrix: np.ndarray, inverse: np.ndarray) -> CoxeterElement:
        key = self._matrix_key(matrix)
        element = CoxeterElement(self.key, word, key, matrix, inverse)
        self._elements[key] = element
        return element

    def _from_matrices(self, matrix: np.ndarray, inverse: np.ndarray) -> CoxeterElement:
        """Look up or reduce: strip the smallest left descent until the identity is reached"""
        key = self._matrix_key(matrix)
        if key in self._elements:
            return self._elements[key]
        word = []
        current, current_inverse = matrix, inverse
        for _ in range(Config.ORBIT_CAP):
            current_key = self._matrix_key(current)
            if current_key in self._elements:
                word.extend(self._elements[current_key].word)
                return self._store(tuple(word), matrix, inverse)
            descent = None
            for i, vector in enumerate(self._simple_vectors):
                if _is_negative(current_inverse.dot(vector)):
                    descent = i
                    break
            if descent is None:
                raise ValueError("Matrix is not an element of this Coxeter system")
            word.append(descent)
            current = self.generators[descent].dot(current)
            current_inverse = current_inverse.dot(self.generators[descent])
        raise BoundExceeded("Normal form reduction did not terminate")

    def _check(self, *elements: CoxeterElement):
        for element in elements:
            if element.system_key != self.key:
                raise MixedSystems(f"Element {element} belongs to {element.system_key}, not {self.key}")

    def identity(self) -> CoxeterElement:
        return self._identity

    def generator(self, i: int) -> CoxeterElement:
        return self._from_matrices(self.generators[i], self.generators[i])

    def element(self, word: Iterable[int]) -> CoxeterElement:
        """The element s_{word[0]} s_{word[1]} ..., reduced to normal form"""
        matrix = np.identity(self.cartan.rank, dtype=object)
        inverse = np.identity(self.cartan.rank, dtype=object)
        for i in word:
            if not 0 <= i < self.rank:
                raise ValueError(f"Generator index {i} out of range")
            matrix = matrix.dot(self.generators[i])
            inverse = self.generators[i].dot(inverse)
        return self._from_matrices(matrix, inverse)

    def reflection(self, root: Root) -> CoxeterElement:
        """s_beta for beta in Delta(lambda)"""
        matrix = _reflection_matrix(self.cartan, root)
        return self._from_matrices(matrix, matrix)

    # arithmetic

    def multiply(self, u: CoxeterElement, v: CoxeterElement) -> CoxeterElement:
        self._check(u, v)
        return self._from_matrices(u.matrix.dot(v.matrix), v.inverse.dot(u.inverse))

    def left_multiply(self, i: int, w: CoxeterElement) -> CoxeterElement:
        return self._from_matrices(self.generators[i].dot(w.matrix), w.inverse.dot(self.generators[i]))

    def right_multiply(self, w: CoxeterElement, i: int) -> CoxeterElement:
        return self._from_matrices(w.matrix.dot(self.generators[i]), self.generators[i].dot(w.inverse))

    def inverse(self, w: CoxeterElement) -> CoxeterElement:
        self._check(w)
        return self._from_matrices(w.inverse, w.matrix)

    def length(self, w: CoxeterElement) -> int:
        self._check(w)
        return w.length

    def is_left_descent(self, i: int, w: CoxeterElement) -> bool:
        """s_i w < w iff w^-1 beta_i < 0"""
        return _is_negative(w.inverse.dot(self._simple_vectors[i]))

    def is_right_descent(self, w: CoxeterElement, i: int) -> bool:
        return _is_negative(w.matrix.dot(self._simple_vectors[i]))

    def descents_left(self, w: CoxeterElement) -> FrozenSet[int]:
        self._check(w)
        return frozenset(i for i in range(self.rank) if self.is_left_descent(i, w))

    def descents_right(self, w: CoxeterElement) -> FrozenSet[int]:
        self._check(w)
        return frozenset(i for i in range(self.rank) if self.is_right_descent(w, i))

    def inversion_count(self, w: CoxeterElement, positives: Iterable[Root]) -> int:
        """|{beta > 0 : w beta < 0}| over the given positive roots"""
        return sum(1 for beta in positives if w.act(beta).is_negative())

    # Bruhat order

    def bruhat_leq(self, y: CoxeterElement, w: CoxeterElement) -> bool:
        """Lifting property: for s w < w, y <= w iff min(y, s y) <= s w"""
        self._check(y, w)
        if y.length > w.length:
            return False
        if y.length == w.length:
            return y == w
        if y.length == 0:
            return True
        memo_key = (y.key, w.key)
        if memo_key in self._bruhat:
            return self._bruhat[memo_key]
        s = w.word[0]
        sw = self.left_multiply(s, w)
        if self.is_left_descent(s, y):
            result = self.bruhat_leq(self.left_multiply(s, y), sw)
        else:
            result = self.bruhat_leq(y, sw)
        self._bruhat[memo_key] = result
        return result

    def below(self, w: CoxeterElement) -> FrozenSet[CoxeterElement]:
        """[e, w] = [e, s w] union s [e, s w] for s w < w"""
        self._check(w)
        if w.key in self._below:
            return self._below[w.key]
        if w.length == 0:
            result = frozenset([w])
        else:
            s = w.word[0]
            lower = self.below(self.left_multiply(s, w))
            result = lower | frozenset(self.left_multiply(s, u) for u in lower)
        self._below[w.key] = result
        return result

    def interval(self, x: CoxeterElement, w: CoxeterElement) -> BruhatInterval:
        if not self.bruhat_leq(x, w):
            raise NotComparable(f"{x} is not below {w}")
        elements = sorted((u for u in self.below(w) if self.bruhat_leq(x, u)),
                          key=lambda u: (u.length, u.word))
        return BruhatInterval(x, w, tuple(elements))

    def enumerate_interval_below(self, w: CoxeterElement) -> BruhatInterval:
        return self.interval(self._identity, w)

    def ball(self, max_length: int) -> List[CoxeterElement]:
        """All elements of length <= max_length, by length then word"""
        layer = [self._identity]
        result = [self._identity]
        for _ in range(max_length):
            seen = set()
            next_layer = []
            for u in layer:
                for i in range(self.rank):
                    if self.is_left_descent(i, u):
                        continue
                    v = self.left_multiply(i, u)
                    if v not in seen:
                        seen.add(v)
                        next_layer.append(v)
            if not next_layer:
                break
            if len(result) + len(next_layer) > Config.ORBIT_CAP:
                raise BoundExceeded(f"Ball of length {max_length} exceeds {Config.ORBIT_CAP} elements")
            result.extend(sorted(next_layer, key=lambda u: u.word))
            layer = next_layer
        return result

    # parabolic subgroups

    def subgroup(self, roots: Sequence[Root]) -> List[CoxeterElement]:
        """The finite group generated by reflections in the given roots"""
        reflections = [self.reflection(beta) for beta in roots]
        elements = {self._identity}
        frontier = [self._identity]
        while frontier:
            u = frontier.pop()
            for r in reflections:
                v = self.multiply(u, r)
                if v not in elements:
                    if len(elements) >= Config.ORBIT_CAP:
                        raise BoundExceeded("Reflection subgroup is too large")
                    elements.add(v)
                    frontier.append(v)
        return sorted(elements, key=lambda u: (u.length, u.word))

    def coset(self, w: CoxeterElement, subgroup: Sequence[CoxeterElement]) -> List[CoxeterElement]:
        return [self.multiply(w, z) for z in subgroup]

    def coset_extreme(self, w: CoxeterElement, subgroup: Sequence[CoxeterElement],
                      longest: bool = True) -> CoxeterElement:
        """Longest or shortest element of w W_0"""
        coset = self.coset(w, subgroup)
        pick = max if longest else min
        return pick(coset, key=lambda u: u.length)

    # dot action

    def dot_action(self, w: CoxeterElement, weight: Weight) -> Tuple[Weight, Root]:
        """(w o lambda, lambda - w o lambda); the offset is integral in root coordinates"""
        self._check(w)
        current = weight
        offset = [0] * self.cartan.rank
        for i in reversed(w.word):
            beta = self.simples[i]
            p = pairing(self.cartan, beta, current + rho(self.cartan))
            if not p.is_integer():
                raise ValueError(f"Weight {weight.format()} is not in the integral orbit of this system")
            n = p.to_int()
            current = current - root_weight(self.cartan, beta).scaled(n)
            offset = [o + n * b for o, b in zip(offset, beta.coords)]
        return current, Root(tuple(offset))

    def orbit_points(self, mu: Weight, max_height: int, downward: bool = True) -> List[OrbitPoint]:
        """Points u o mu reached from mu by simple reflections that move strictly down (or up).

        For mu in C+ (resp. C-) every orbit point below (above) mu within the
        height window is reached, each with a shortest u.
        """
        start = OrbitPoint(Root(tuple(0 for _ in range(self.cartan.rank))), self._identity)
        points = {start.offset.coords: start}
        weights = {start.offset.coords: mu}
        frontier = [start]
        while frontier:
            next_frontier = []
            for point in frontier:
                current = weights[point.offset.coords]
                shifted = current + rho(self.cartan)
                for i, beta in enumerate(self.simples):
                    n = pairing(self.cartan, beta, shifted).to_int()
                    if (downward and n <= 0) or (not downward and n >= 0):
                        continue
                    coords = tuple(o + n * b for o, b in zip(point.offset.coords, beta.coords))
                    if abs(sum(coords)) > max_height or coords in points:
                        continue
                    new_point = OrbitPoint(Root(coords), self.left_multiply(i, point.element))
                    points[coords] = new_point
                    weights[coords] = current - root_weight(self.cartan, beta).scaled(n)
                    next_frontier.append(new_point)
                    if len(points) > Config.ORBIT_CAP:
                        raise BoundExceeded(f"Orbit enumeration exceeds {Config.ORBIT_CAP} points")
            frontier = next_frontier
        logger.debug(f"Orbit of {mu.format()} within height {max_height}: {len(points)} points")
        return sorted(points.values(), key=lambda p: (abs(p.offset.height), p.element.word))

    def is_dominant(self, mu: Weight) -> bool:
        """(beta^v, mu + rho) >= 0 for every simple root of the system"""
        shifted = mu + rho(self.cartan)
        return all(pairing(self.cartan, beta, shifted) >= 0 for beta in self.simples)

    def enumerate_above_within(self, w: CoxeterElement, height_budget: int, mu: Weight,
                               subgroup: Sequence[CoxeterElement]) -> List[CoxeterElement]:
        """Longest-in-coset y >= w with ht(w o mu - y o mu) <= height_budget; mu must lie in C+"""
        self._check(w)
        if not self.is_dominant(mu):
            logger.error(f"Enumeration above {w} needs a dominant weight, got {mu.format()}")
            raise NotDominant(f"{mu.format()} is not in the dominant chamber")
        if height_budget < 0:
            return []
        _, top = self.dot_action(w, mu)
        points = self.orbit_points(mu, top.height + height_budget)
        result = []
        for point in points:
            drop = point.offset - top
            if drop.height > height_budget or any(n < 0 for n in drop.coords):
                continue
            y = self.coset_extreme(point.element, subgroup, longest=True)
            if self.bruhat_leq(w, y):
                result.append(y)
        return sorted(result, key=lambda u: (u.length, u.word))


@lru_cache(maxsize=64)
def _cached_system(cartan: AffineCartanData, simples: Tuple[Root, ...], key: str) -> CoxeterSystem:
    return CoxeterSystem(cartan, simples, key)


def ambient_system(cartan: AffineCartanData) -> CoxeterSystem:
    """The full Weyl group W with its simple reflections; for A1~ the infinite dihedral group"""
    simples = tuple(cartan.simple_root(i) for i in range(cartan.rank))
    return _cached_system(cartan, simples, f"{cartan.name}|ambient")


def word_string(word: Sequence[int], names: Optional[Sequence[str]] = None) -> str:
    if not word:
        return "e"
    names = names or [f"s{i}" for i in range(max(word) + 1)]
    return "".join(names[i] for i in word)
