"""Built-in Cartan table and the override file loader"""
import json
import logging
import re
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

import sympy
from pydantic import ValidationError
from sympy.liealgebras.cartan_type import CartanType

from app.main.config import Config
from app.main.model.cartan import AffineCartanData, CartanOverrideFile, CartanTypeSpec
from app.main.util.exceptions import UnknownCartanType

logger = logging.getLogger(__name__)

TYPE_RE = re.compile(r"^([A-G])(\d+)(~?)$")

# smallest rank for which the untwisted affine type is defined
AFFINE_MIN_RANK = {'A': 1, 'B': 3, 'C': 2, 'D': 4, 'E': 6, 'F': 4, 'G': 2}


def finite_cartan_matrix(letter: str, n: int) -> List[List[int]]:
    """Return <h_i, alpha_j> for a finite type, 0-indexed."""
    if letter == 'A':
        if n < 1:
            raise UnknownCartanType("Type A needs rank >= 1")
        return [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n)] for i in range(n)]
    if letter == 'C' and n == 2:
        # C2 is B2 with the root lengths exchanged
        return [list(row) for row in zip(*finite_cartan_matrix('B', 2))]
    try:
        matrix = CartanType(f"{letter}{n}").cartan_matrix()
    except Exception as e:
        raise UnknownCartanType(f"Unknown finite type {letter}{n}: {e}")
    # sympy stores 2(a_i,a_j)/(a_j,a_j); transpose to <h_i, alpha_j>
    return [[int(matrix[j, i]) for j in range(n)] for i in range(n)]


def finite_symmetrizer(matrix: Sequence[Sequence[int]]) -> List[Fraction]:
    """d_i with d_i a_ij = d_j a_ji, long roots normalized to d = 1 per component"""
    size = len(matrix)
    d: List[Optional[Fraction]] = [None] * size
    for start in range(size):
        if d[start] is not None:
            continue
        component = [start]
        d[start] = Fraction(1)
        queue = [start]
        while queue:
            i = queue.pop()
            for j in range(size):
                if j != i and matrix[i][j] != 0 and d[j] is None:
                    d[j] = d[i] * matrix[i][j] / matrix[j][i]
                    component.append(j)
                    queue.append(j)
        top = max(d[i] for i in component)
        for i in component:
            d[i] = d[i] / top
    return d


def _primitive_kernel(matrix: sympy.Matrix) -> Tuple[int, ...]:
    kernel = matrix.nullspace()
    if len(kernel) != 1:
        raise UnknownCartanType("Matrix is not of affine type (corank != 1)")
    vector = kernel[0]
    denominator = 1
    for x in vector:
        q = int(sympy.Rational(x).q)
        denominator = denominator * q // gcd(denominator, q)
    values = [int(sympy.Rational(x) * denominator) for x in vector]
    divisor = 0
    for v in values:
        divisor = gcd(divisor, abs(v))
    values = [v // divisor for v in values]
    if all(v <= 0 for v in values):
        values = [-v for v in values]
    if any(v <= 0 for v in values):
        raise UnknownCartanType("Kernel vector is not strictly positive")
    return tuple(values)


def _finite_roots(matrix: Sequence[Sequence[int]]) -> List[Tuple[int, ...]]:
    """Closure of the simple roots under simple reflections"""
    size = len(matrix)
    simples = [tuple(1 if j == i else 0 for j in range(size)) for i in range(size)]
    seen = set(simples)
    queue = list(simples)
    while queue:
        beta = queue.pop()
        for i in range(size):
            c = sum(matrix[i][j] * beta[j] for j in range(size))
            image = tuple(beta[j] - (c if j == i else 0) for j in range(size))
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return sorted(seen)


def build_cartan(name: str, matrix: Sequence[Sequence[int]], affine: bool) -> AffineCartanData:
    """Derive symmetrizer, delta and c from a Cartan matrix"""
    size = len(matrix)
    if any(len(row) != size for row in matrix) or any(matrix[i][i] != 2 for i in range(size)):
        raise UnknownCartanType(f"Malformed Cartan matrix for {name}")
    cartan = tuple(tuple(int(x) for x in row) for row in matrix)
    if not affine:
        return AffineCartanData(name=name, cartan_matrix=cartan,
                                symmetrizer=tuple(finite_symmetrizer(cartan)),
                                affine=False, classical_rank=size)

    delta = _primitive_kernel(sympy.Matrix(cartan))
    c_coeffs = _primitive_kernel(sympy.Matrix(cartan).T)
    if delta[0] != 1 or c_coeffs[0] != 1:
        raise UnknownCartanType(f"{name}: node 0 is not the affine node of an untwisted type")
    symmetrizer = tuple(Fraction(c_coeffs[i], delta[i]) for i in range(size))
    for i in range(size):
        for j in range(size):
            if symmetrizer[i] * cartan[i][j] != symmetrizer[j] * cartan[j][i]:
                raise UnknownCartanType(f"{name}: matrix is not symmetrizable by m_i^v / m_i")
    return AffineCartanData(name=name, cartan_matrix=cartan, symmetrizer=symmetrizer,
                            affine=True, delta_coeffs=delta, c_coeffs=c_coeffs,
                            classical_rank=size - 1)


def affine_extension(letter: str, n: int) -> List[List[int]]:
    """Adjoin alpha_0 = delta - theta to the finite Cartan matrix"""
    finite = finite_cartan_matrix(letter, n)
    d = finite_symmetrizer(finite)
    positive = [r for r in _finite_roots(finite) if all(x >= 0 for x in r)]
    theta = max(positive, key=sum)

    def form(u, v):
        return sum(u[i] * v[j] * d[i] * finite[i][j] for i in range(n) for j in range(n))

    matrix = [[2] + [0] * n] + [[0] * (n + 1) for _ in range(n)]
    for j in range(n):
        alpha_j = tuple(1 if k == j else 0 for k in range(n))
        # theta is long, so (theta, theta) = 2
        matrix[0][j + 1] = int(-form(theta, alpha_j))
        matrix[j + 1][0] = -sum(finite[j][k] * theta[k] for k in range(n))
        for k in range(n):
            matrix[j + 1][k + 1] = finite[j][k]
    return matrix


def _builtin(name: str) -> AffineCartanData:
    match = TYPE_RE.match(name)
    if not match:
        raise UnknownCartanType(f"Unknown Cartan type '{name}'")
    letter, n, tilde = match.group(1), int(match.group(2)), bool(match.group(3))
    if tilde:
        if n < AFFINE_MIN_RANK[letter]:
            raise UnknownCartanType(f"Affine type {letter}{n}~ is not defined")
        return build_cartan(name, affine_extension(letter, n), affine=True)
    return build_cartan(name, finite_cartan_matrix(letter, n), affine=False)


def load_override_file(path: Optional[str]) -> Dict[str, CartanTypeSpec]:
    """Read the Cartan override file; a missing path means no overrides"""
    if not path:
        return {}
    try:
        with open(path, "r") as f:
            data = json.load(f)
        return CartanOverrideFile.model_validate(data).types
    except FileNotFoundError:
        logger.error(f"Cartan override file not found: {path}")
        return {}
    except (json.JSONDecodeError, ValidationError) as e:
        raise UnknownCartanType(f"Invalid Cartan override file {path}: {e}")


@lru_cache(maxsize=None)
def _resolve(name: str, override_path: Optional[str]) -> AffineCartanData:
    overrides = load_override_file(override_path)
    if name in overrides:
        spec = overrides[name]
        logger.info(f"Using Cartan override for {name}")
        return build_cartan(name, spec.cartan_matrix, spec.affine)
    return _builtin(name)


def get_cartan(name: str) -> AffineCartanData:
    """Look up a Cartan type such as 'A1~', 'A2~' or 'G2'"""
    return _resolve(name.strip(), Config.CARTAN_FILE)
