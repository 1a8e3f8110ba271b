"""Pairings, reflections, the shifted action and root enumeration"""
import logging
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

import sympy

from app.main.model.cartan import AffineCartanData, Root, RootKind
from app.main.model.scalar import Scalar, ZERO
from app.main.model.weight import Weight
from app.main.util.exceptions import ImaginaryCoroot

logger = logging.getLogger(__name__)


def rho(cartan: AffineCartanData) -> Weight:
    """<h_i, rho> = 1 for all i and <d, rho> = 0"""
    return Weight.from_values([1] * cartan.rank, 0)


def classify_root(cartan: AffineCartanData, root: Root) -> RootKind:
    if cartan.affine and cartan.root_norm(root) == 0:
        return RootKind.IMAGINARY
    return RootKind.REAL


def root_weight(cartan: AffineCartanData, root: Root) -> Weight:
    """The weight sum(n_i alpha_i): <h_j, .> = sum_i a_ji n_i, <d, .> = n_0"""
    n = root.coords
    pairings = tuple(
        Scalar.of(sum(cartan.cartan_matrix[j][i] * n[i] for i in range(cartan.rank)))
        for j in range(cartan.rank)
    )
    d_pairing = Scalar.of(n[0]) if cartan.affine else ZERO
    return Weight(pairings, d_pairing)


def form_with_weight(cartan: AffineCartanData, root: Root, weight: Weight) -> Scalar:
    """(alpha, lambda) = sum n_i d_i <h_i, lambda>"""
    total = ZERO
    for i, n in enumerate(root.coords):
        if n:
            total = total + weight.pairings[i] * (n * cartan.symmetrizer[i])
    return total


def level(cartan: AffineCartanData, weight: Weight) -> Optional[Scalar]:
    """<c, lambda>, or None for finite types"""
    if not cartan.affine:
        return None
    total = ZERO
    for i, m in enumerate(cartan.c_coeffs):
        total = total + weight.pairings[i] * m
    return total


def pairing(cartan: AffineCartanData, alpha: Root, weight: Weight) -> Scalar:
    """(alpha^v, lambda) = 2 (alpha, lambda) / (alpha, alpha)"""
    norm = cartan.root_norm(alpha)
    if norm == 0:
        logger.error(f"Coroot of imaginary root {alpha} requested")
        raise ImaginaryCoroot(f"Root {alpha} is imaginary")
    return form_with_weight(cartan, alpha, weight) * Fraction(2) / norm


def coroot_pairing(cartan: AffineCartanData, alpha: Root, beta: Root) -> int:
    """(alpha^v, beta) for roots; an integer when alpha is real"""
    norm = cartan.root_norm(alpha)
    if norm == 0:
        raise ImaginaryCoroot(f"Root {alpha} is imaginary")
    value = 2 * cartan.root_product(alpha, beta) / norm
    if value.denominator != 1:
        raise ValueError(f"Non-integral pairing of {alpha} with {beta}")
    return value.numerator


def reflect(cartan: AffineCartanData, alpha: Root, weight: Weight) -> Weight:
    """s_alpha(lambda) = lambda - (alpha^v, lambda) alpha"""
    return weight - root_weight(cartan, alpha).scaled(pairing(cartan, alpha, weight))


def reflect_root(cartan: AffineCartanData, alpha: Root, beta: Root) -> Root:
    c = coroot_pairing(cartan, alpha, beta)
    return Root(tuple(b - c * a for a, b in zip(alpha.coords, beta.coords)), beta.kind)


def shifted_reflect(cartan: AffineCartanData, alpha: Root, weight: Weight) -> Tuple[Weight, Scalar]:
    """s_alpha o lambda together with the coefficient (alpha^v, lambda + rho)"""
    p = pairing(cartan, alpha, weight + rho(cartan))
    return weight - root_weight(cartan, alpha).scaled(p), p


def shifted_action(cartan: AffineCartanData, word: Sequence[Root], weight: Weight) -> Weight:
    """w o lambda = w(lambda + rho) - rho for w = s_{word[0]} ... s_{word[-1]}"""
    shifted = weight + rho(cartan)
    for alpha in reversed(word):
        shifted = reflect(cartan, alpha, shifted)
    return shifted - rho(cartan)


# root enumeration

def affine_root(cartan: AffineCartanData, gamma: Root, k: int) -> Root:
    """gamma + k delta"""
    if not k:
        return gamma
    return Root(tuple(g + k * m for g, m in zip(gamma.coords, cartan.delta_coeffs)))


def split_affine_root(cartan: AffineCartanData, alpha: Root) -> Tuple[Root, int]:
    """Write a real root as gamma + k delta with gamma classical"""
    if not cartan.affine:
        return alpha, 0
    k = alpha.coords[0]
    return affine_root(cartan, alpha, -k), k


@lru_cache(maxsize=None)
def finite_roots(cartan: AffineCartanData) -> Tuple[Root, ...]:
    """All roots of the classical part, embedded with 0 on the affine node"""
    indices = cartan.classical_indices
    size = cartan.rank
    simples = [cartan.simple_root(i) for i in indices]
    seen = set(simples)
    queue = list(simples)
    while queue:
        beta = queue.pop()
        for i in indices:
            image = reflect_root(cartan, cartan.simple_root(i), beta)
            if image not in seen:
                seen.add(image)
                queue.append(image)
    roots = sorted(seen, key=lambda r: (r.height, r.coords))
    assert all(len(r.coords) == size for r in roots)
    return tuple(roots)


def is_positive_affine(gamma: Root, k: int) -> bool:
    """gamma + k delta is positive iff k > 0, or k = 0 and gamma > 0"""
    return k > 0 or (k == 0 and gamma.is_positive())


def positive_real_roots(cartan: AffineCartanData, max_height: int) -> List[Root]:
    """Positive real roots of height <= max_height, by increasing height"""
    result = []
    for gamma in finite_roots(cartan):
        if not cartan.affine:
            if gamma.is_positive() and gamma.height <= max_height:
                result.append(gamma)
            continue
        k = 0 if gamma.is_positive() else 1
        while gamma.height + k * cartan.delta_height <= max_height:
            result.append(affine_root(cartan, gamma, k))
            k += 1
    return sorted(result, key=lambda r: (r.height, r.coords))


def positive_roots_with_multiplicity(cartan: AffineCartanData, max_height: int) -> List[Tuple[Root, int]]:
    """Positive roots (real and imaginary) with dim g_alpha, by height"""
    roots = [(r, 1) for r in positive_real_roots(cartan, max_height)]
    if cartan.affine:
        k = 1
        while k * cartan.delta_height <= max_height:
            roots.append((cartan.delta.scaled(k), cartan.imaginary_mult))
            k += 1
    return sorted(roots, key=lambda item: (item[0].height, item[0].coords))


def weight_difference(cartan: AffineCartanData, upper: Weight, lower: Weight) -> Optional[Root]:
    """Return xi with upper - lower = sum xi_i alpha_i, or None if not in Q"""
    diff = upper - lower
    if not diff.is_rational():
        return None
    rhs = [sympy.Rational(p.a.numerator, p.a.denominator) for p in diff.pairings]
    matrix = sympy.Matrix(cartan.cartan_matrix)
    if cartan.affine:
        xi0 = diff.d_pairing.a
        if xi0.denominator != 1:
            return None
        cl = list(cartan.classical_indices)
        sub = matrix.extract(cl, cl)
        b = sympy.Matrix([rhs[j] - matrix[j, 0] * int(xi0) for j in cl])
        solution = [sympy.Integer(int(xi0))] + list(sub.LUsolve(b))
    else:
        if diff.d_pairing != 0:
            return None
        solution = list(matrix.LUsolve(sympy.Matrix(rhs)))
    if any(not sympy.Rational(x).is_integer for x in solution):
        return None
    coords = tuple(int(x) for x in solution)
    if root_weight(cartan, Root(coords)) != diff:
        logger.debug(f"Solution {coords} does not reproduce {diff.format()}")
        return None
    return Root(coords)
