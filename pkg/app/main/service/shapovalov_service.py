"""
Brute-force dim L(lambda)_{lambda - xi} for A1~ from the Shapovalov form.

The affine algebra is realized as sl2 (x) C[t, 1/t] + Cc + Cd with
e_1 = e, f_1 = f, e_0 = f t, f_0 = e t^{-1}. M(lambda) is spanned by ordered
monomials in the negative loop generators applied to the highest weight
vector; the form is <u 1, u' 1> = coefficient of 1 in omega(u) u' 1.
"""
import logging
from itertools import combinations_with_replacement
from typing import Dict, List, Sequence, Tuple

import sympy

from app.main.config import OracleConfig
from app.main.model.cartan import AffineCartanData
from app.main.model.oracle import CENTRAL, LoopGenerator, LoopKind, Monomial, OracleSchema
from app.main.model.scalar import Scalar, ZERO
from app.main.model.weight import Weight
from app.main.util.exceptions import DepthExceeded, UnsupportedType

logger = logging.getLogger(__name__)

Vector = Dict[Monomial, Scalar]
Combination = Dict[LoopGenerator, Scalar]

SL2_BRACKET = {
    (LoopKind.E, LoopKind.F): (LoopKind.H, 1),
    (LoopKind.F, LoopKind.E): (LoopKind.H, -1),
    (LoopKind.H, LoopKind.E): (LoopKind.E, 2),
    (LoopKind.E, LoopKind.H): (LoopKind.E, -2),
    (LoopKind.H, LoopKind.F): (LoopKind.F, -2),
    (LoopKind.F, LoopKind.H): (LoopKind.F, 2),
}

KILLING = {
    (LoopKind.E, LoopKind.F): 1,
    (LoopKind.F, LoopKind.E): 1,
    (LoopKind.H, LoopKind.H): 2,
}


def bracket(x: LoopGenerator, y: LoopGenerator) -> Combination:
    """[x t^m, y t^n] = [x, y] t^{m+n} + m delta_{m,-n} (x, y) c"""
    if x.kind == LoopKind.C or y.kind == LoopKind.C:
        return {}
    result: Combination = {}
    if (x.kind, y.kind) in SL2_BRACKET:
        kind, factor = SL2_BRACKET[(x.kind, y.kind)]
        result[LoopGenerator(kind, x.degree + y.degree)] = Scalar.of(factor)
    if x.degree + y.degree == 0 and (x.kind, y.kind) in KILLING:
        value = x.degree * KILLING[(x.kind, y.kind)]
        if value:
            result[CENTRAL] = Scalar.of(value)
    return result


def _add_into(target: Vector, monomial: Monomial, value: Scalar):
    total = target.get(monomial, ZERO) + value
    if total:
        target[monomial] = total
    else:
        target.pop(monomial, None)


def _check_type(cartan: AffineCartanData):
    if cartan.name != "A1~":
        raise UnsupportedType(f"The Shapovalov oracle only supports A1~, not {cartan.name}")


def _check_xi(xi: Sequence[int]):
    if len(xi) != 2 or any(n < 0 for n in xi):
        raise ValueError(f"xi must be two non-negative integers, got {list(xi)}")
    if sum(xi) > OracleConfig.MAX_HEIGHT:
        raise DepthExceeded(f"ht xi = {sum(xi)} exceeds the oracle limit {OracleConfig.MAX_HEIGHT}")


class VermaModule:
    """M(lambda) for A1~; only <h, lambda> = <h_1, lambda> and the level enter the form"""

    def __init__(self, weight: Weight):
        self.weight = weight
        self.h_value = weight.pairings[1]
        self.level = weight.pairings[0] + weight.pairings[1]
        self._memo: Dict[Tuple[LoopGenerator, Monomial], Vector] = {}

    def _highest(self, x: LoopGenerator) -> Vector:
        if x.is_negative():
            return {(x,): Scalar.of(1)}
        if x == CENTRAL:
            return {(): self.level} if self.level else {}
        if x.kind == LoopKind.H and x.degree == 0:
            return {(): self.h_value} if self.h_value else {}
        return {}

    def apply(self, x: LoopGenerator, monomial: Monomial) -> Vector:
        """x . (y_1 ... y_k 1) as a combination of ordered monomials"""
        key = (x, monomial)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        if not monomial:
            result = self._highest(x)
        elif x.is_negative() and x.sort_key() <= monomial[0].sort_key():
            result = {(x,) + monomial: Scalar.of(1)}
        elif x == CENTRAL:
            result = {monomial: self.level} if self.level else {}
        else:
            # x y_1 m = y_1 (x m) + [x, y_1] m
            head, rest = monomial[0], monomial[1:]
            result = self.apply_vector(head, self.apply(x, rest))
            for z, factor in bracket(x, head).items():
                for term, value in self.apply(z, rest).items():
                    _add_into(result, term, factor * value)
        self._memo[key] = result
        return result

    def apply_vector(self, x: LoopGenerator, vector: Vector) -> Vector:
        result: Vector = {}
        for monomial, coeff in vector.items():
            for term, value in self.apply(x, monomial).items():
                _add_into(result, term, coeff * value)
        return result

    def form(self, left: Monomial, right: Monomial) -> Scalar:
        vector: Vector = {right: Scalar.of(1)}
        for x in left:
            vector = self.apply_vector(x.omega(), vector)
        return vector.get((), ZERO)


def negative_generators(max_height: int) -> List[LoopGenerator]:
    result = []
    for k in range(0, max_height + 1):
        for kind in (LoopKind.E, LoopKind.F, LoopKind.H):
            g = LoopGenerator(kind, -k)
            if g.is_negative() and sum(g.xi) <= max_height:
                result.append(g)
    return sorted(result, key=lambda g: g.sort_key())


def pbw_monomials(xi: Sequence[int]) -> List[Monomial]:
    """Ordered monomials of weight -xi; their number is the Verma coefficient at xi"""
    xi = tuple(xi)
    height = sum(xi)
    if height == 0:
        return [()]
    generators = negative_generators(height)
    result = []
    for size in range(1, height + 1):
        for combo in combinations_with_replacement(generators, size):
            total = (sum(g.xi[0] for g in combo), sum(g.xi[1] for g in combo))
            if total == xi:
                result.append(tuple(combo))
    return result


def gram_matrix(weight: Weight, xi: Sequence[int], cartan: AffineCartanData) -> Tuple[List[Monomial], List[List[Scalar]]]:
    _check_type(cartan)
    _check_xi(xi)
    module = VermaModule(weight)
    monomials = pbw_monomials(xi)
    matrix = [[module.form(u, v) for v in monomials] for u in monomials]
    logger.debug(f"Gram matrix of size {len(monomials)} at xi = {list(xi)} for {weight.format()}")
    return monomials, matrix


def _regular_representation(matrix: List[List[Scalar]]) -> sympy.Matrix:
    """a + b sqrt2 -> [[a, 2b], [b, a]]; rank over Q is twice the rank over Q(sqrt2)"""
    n = len(matrix)
    rows = [[0] * (2 * n) for _ in range(2 * n)]
    for i, row in enumerate(matrix):
        for j, entry in enumerate(row):
            a = sympy.Rational(entry.a.numerator, entry.a.denominator)
            b = sympy.Rational(entry.b.numerator, entry.b.denominator)
            rows[2 * i][2 * j], rows[2 * i][2 * j + 1] = a, 2 * b
            rows[2 * i + 1][2 * j], rows[2 * i + 1][2 * j + 1] = b, a
    return sympy.Matrix(rows)


def matrix_rank(matrix: List[List[Scalar]]) -> int:
    if not matrix:
        return 0
    return _regular_representation(matrix).rank() // 2


def determinant(matrix: List[List[Scalar]]) -> Scalar:
    if not matrix:
        return Scalar.of(1)
    entries = sympy.Matrix([[entry.to_sympy() for entry in row] for row in matrix])
    return Scalar.from_sympy(entries.det(method="bareiss"))


def irreducible_dim(weight: Weight, xi: Sequence[int], cartan: AffineCartanData) -> int:
    """dim L(lambda)_{lambda - xi} as the rank of the Gram block"""
    _, matrix = gram_matrix(weight, xi, cartan)
    return matrix_rank(matrix)


def oracle_report(weight: Weight, xi: Sequence[int], cartan: AffineCartanData) -> OracleSchema:
    monomials, matrix = gram_matrix(weight, xi, cartan)
    return OracleSchema(
        cartan_type=cartan.name,
        weight=weight.format(),
        xi=list(xi),
        size=len(monomials),
        rank=matrix_rank(matrix),
        determinant=str(determinant(matrix)),
        monomials=[" ".join(str(g) for g in m) or "1" for m in monomials],
    )
