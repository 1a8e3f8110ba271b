"""
Kazhdan-Lusztig basis of the Hecke algebra by direct triangularization.

An independent path to P_{y,w}: it builds C'_s C'_{sw} in the basis
T~_y = v^{-l(y)} T_y, then removes the lower basis elements whose
coefficients are not in v Z[v]. It shares nothing with KLCache.
"""
import logging
from typing import Dict, Tuple

import sympy

from app.main.model.coxeter import CoxeterElement
from app.main.model.kl import KLPoly
from app.main.service.coxeter_service import CoxeterSystem

logger = logging.getLogger(__name__)

v = sympy.Symbol("v")

HeckeElement = Dict[CoxeterElement, sympy.Expr]


def _laurent_terms(expr) -> Dict[int, int]:
    """Exponent -> integer coefficient of a Laurent polynomial in v"""
    result: Dict[int, int] = {}
    for term in sympy.Add.make_args(sympy.expand(expr)):
        if term == 0:
            continue
        coeff, exponent = term.as_coeff_exponent(v)
        result[int(exponent)] = result.get(int(exponent), 0) + int(coeff)
    return {k: c for k, c in result.items() if c}


def _add_into(target: HeckeElement, element: CoxeterElement, coeff):
    value = sympy.expand(target.get(element, 0) + coeff)
    if value == 0:
        target.pop(element, None)
    else:
        target[element] = value


def multiply_c_s(system: CoxeterSystem, s: int, h: HeckeElement) -> HeckeElement:
    """C'_s h with C'_s = T~_s + v^{-1} and T~_s^2 = (v - v^{-1}) T~_s + 1"""
    result: HeckeElement = {}
    for y, coeff in h.items():
        sy = system.left_multiply(s, y)
        _add_into(result, sy, coeff)
        if system.is_left_descent(s, y):
            _add_into(result, y, coeff * (v - 1 / v))
        _add_into(result, y, coeff / v)
    return result


def kazhdan_lusztig_basis(system: CoxeterSystem, max_length: int) -> Dict[CoxeterElement, HeckeElement]:
    """C'_w for every w of length <= max_length"""
    basis: Dict[CoxeterElement, HeckeElement] = {system.identity(): {system.identity(): sympy.Integer(1)}}
    for w in system.ball(max_length):
        if w.length == 0:
            continue
        s = w.word[0]
        product = multiply_c_s(system, s, basis[system.left_multiply(s, w)])
        # Highest lower terms first; each correction only touches shorter elements
        while True:
            offending = None
            for y in sorted(product, key=lambda u: (-u.length, u.word)):
                if y == w:
                    continue
                terms = _laurent_terms(product[y])
                if any(k <= 0 for k in terms):
                    offending = (y, terms)
                    break
            if offending is None:
                break
            y, terms = offending
            correction = sympy.Integer(terms.get(0, 0))
            for k, c in terms.items():
                if k < 0:
                    correction += c * (v ** k + v ** (-k))
            for z, coeff in basis[y].items():
                _add_into(product, z, -correction * coeff)
        basis[w] = product
    logger.debug(f"Hecke oracle built {len(basis)} basis elements up to length {max_length}")
    return basis


def kl_polynomials(system: CoxeterSystem, max_length: int) -> Dict[Tuple[CoxeterElement, CoxeterElement], KLPoly]:
    """P_{y,w}(q) = v^{l(w) - l(y)} p_{y,w}(v) with q = v^2, for all pairs with l(w) <= max_length"""
    result = {}
    for w, element in kazhdan_lusztig_basis(system, max_length).items():
        for y, coeff in element.items():
            terms = _laurent_terms(coeff * v ** (w.length - y.length))
            if any(k < 0 or k % 2 for k in terms):
                raise ArithmeticError(f"Coefficient of {y} in C'_{w} is not a polynomial in q")
            size = max(terms) // 2 + 1 if terms else 0
            result[(y, w)] = KLPoly(tuple(terms.get(2 * k, 0) for k in range(size)))
    return result
