"""Verma and irreducible characters, decomposition matrices and translation"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import sympy

from app.main.config import Config
from app.main.model.cartan import AffineCartanData, Root
from app.main.model.character import Character, CharacterSchema, CharacterTermSchema, Coords, \
    FormulaTerm, FormulaTermSchema, LinkageClassData
from app.main.model.coxeter import CoxeterElement
from app.main.model.integral import ChamberClass, IntegralSystem
from app.main.model.weight import Weight
from app.main.service.coxeter_service import CoxeterSystem
from app.main.service.integral_service import (
    classify_chamber, compute_integral_system, dominant_representative, targets_plus,
)
from app.main.service.kl_service import get_kl_cache
from app.main.service.root_service import pairing, positive_roots_with_multiplicity, rho, root_weight
from app.main.util.exceptions import (
    BudgetExceeded, ChambersDiffer, IntegralityMismatch, NotDominantIntegral, PreconditionViolated,
)

logger = logging.getLogger(__name__)


# Verma characters

@lru_cache(maxsize=32)
def kostant_table(cartan: AffineCartanData, depth: int) -> Tuple[Tuple[Coords, int], ...]:
    """Partition counts of every xi in Q+ with ht xi <= depth, roots counted with multiplicity.

    Unbounded knapsack over the positive roots, one pass per unit of
    multiplicity, processing xi by increasing height.
    """
    zero = tuple(0 for _ in range(cartan.rank))
    levels: List[Dict[Coords, int]] = [dict() for _ in range(depth + 1)]
    levels[0][zero] = 1
    for root, multiplicity in positive_roots_with_multiplicity(cartan, depth):
        step = root.height
        for _ in range(multiplicity):
            for h in range(0, depth - step + 1):
                for xi, count in list(levels[h].items()):
                    target = tuple(a + b for a, b in zip(xi, root.coords))
                    levels[h + step][target] = levels[h + step].get(target, 0) + count
    return tuple(item for level in levels for item in sorted(level.items()))


def _add_verma(character: Character, shift: Coords, factor: int, cartan: AffineCartanData):
    """character += factor * ch M(base - shift)"""
    budget = character.depth - sum(shift)
    if budget < 0 or factor == 0:
        return
    for eta, count in kostant_table(cartan, budget):
        character.add_term(tuple(s + e for s, e in zip(shift, eta)), factor * count)


def verma_character(weight: Weight, depth: int, cartan: AffineCartanData) -> Character:
    character = Character(weight, depth)
    _add_verma(character, tuple(0 for _ in range(cartan.rank)), 1, cartan)
    return character


# the Main Theorem

@dataclass
class LinkageContext:
    """lambda = w o mu with mu in C+ (plus) or C-, and the groups W(lambda), W_0(mu)"""
    cartan: AffineCartanData
    weight: Weight
    system: IntegralSystem
    mu: Weight
    mu_system: IntegralSystem
    plus: bool
    coxeter: CoxeterSystem
    stabilizer: List[CoxeterElement]
    w: CoxeterElement
    top: Root

    def offset(self, y: CoxeterElement) -> Root:
        """mu - y o mu"""
        return self.coxeter.dot_action(y, self.mu)[1]


def linkage_context(weight: Weight, cartan: AffineCartanData) -> LinkageContext:
    system = compute_integral_system(weight, cartan)
    representative = dominant_representative(weight, cartan, system)
    mu = representative.mu
    mu_system = compute_integral_system(mu, cartan)
    plus = targets_plus(system)
    coxeter = CoxeterSystem.from_integral_system(mu_system)
    stabilizer = coxeter.subgroup(mu_system.simples0)
    w = coxeter.element(reversed(representative.word))
    w = coxeter.coset_extreme(w, stabilizer, longest=plus)
    _, top = coxeter.dot_action(w, mu)
    logger.debug(f"{weight.format()} = {w} o {mu.format()}, |W_0| = {len(stabilizer)}")
    return LinkageContext(cartan, weight, system, mu, mu_system, plus, coxeter, stabilizer, w, top)


def formula_terms(context: LinkageContext, x: CoxeterElement, budget: int,
                  cache_dir: Optional[str] = None) -> List[FormulaTerm]:
    """Summands of ch L(x o mu) whose Verma anchor lies within budget below x o mu.

    Every y of a coset contributes; terms sharing the anchor y o mu merge later.

    C+: sum over y >= x of (-1)^{l(y)-l(x)} Q_{x,y}(1) ch M(y o mu), x longest in x W_0.
    C-: sum over y <= x of (-1)^{l(x)-l(y)} P_{y,x}(1) ch M(y o mu), x shortest in x W_0.
    """
    coxeter = context.coxeter
    cache = get_kl_cache(coxeter, cache_dir)
    top = context.offset(x)
    terms = []
    if context.plus:
        candidates = []
        for point in coxeter.orbit_points(context.mu, top.height + budget, downward=True):
            candidates.extend((coxeter.multiply(point.element, z), point.offset) for z in context.stabilizer)
    else:
        candidates = [(y, context.offset(y)) for y in coxeter.below(x)]
    if len(candidates) > Config.ORBIT_CAP:
        raise BudgetExceeded(f"{len(candidates)} contributing elements exceed {Config.ORBIT_CAP}")

    for y, offset in candidates:
        drop = offset - top
        if drop.height > budget or any(n < 0 for n in drop.coords):
            continue
        if context.plus:
            if not coxeter.bruhat_leq(x, y):
                continue
            value = cache.inverse_kl(x, y).at_one()
            sign = 1 if (y.length - x.length) % 2 == 0 else -1
        else:
            value = cache.kl_polynomial(y, x).at_one()
            sign = 1 if (x.length - y.length) % 2 == 0 else -1
        if value:
            terms.append(FormulaTerm(y, sign, value, offset.coords))
    cache.flush()
    return sorted(terms, key=lambda t: (sum(t.offset), t.y.length, t.y.word))


def merge_terms(terms: Sequence[FormulaTerm]) -> Dict[Coords, int]:
    """Coefficients per Verma anchor; y in one W_0-coset share an anchor"""
    merged: Dict[Coords, int] = {}
    for term in terms:
        merged[term.offset] = merged.get(term.offset, 0) + term.value
    return {offset: c for offset, c in merged.items() if c}


def irreducible_character(weight: Weight, depth: int, cartan: AffineCartanData,
                          cache_dir: Optional[str] = None) -> Tuple[Character, List[FormulaTerm]]:
    """ch L(lambda) to the given depth, with the formula terms that produced it"""
    system = compute_integral_system(weight, cartan)
    if system.is_empty():
        return verma_character(weight, depth, cartan), []
    context = linkage_context(weight, cartan)
    terms = formula_terms(context, context.w, depth, cache_dir)
    character = Character(weight, depth)
    top = context.top
    for offset, coefficient in merge_terms(terms).items():
        shift = tuple(o - t for o, t in zip(offset, top.coords))
        _add_verma(character, shift, coefficient, cartan)
    return character, terms


def character_schema(character: Character, terms: Sequence[FormulaTerm] = ()) -> CharacterSchema:
    return CharacterSchema(
        base_weight=character.base.format(),
        depth=character.depth,
        terms=[CharacterTermSchema(xi=list(xi), coeff=c) for xi, c in character.support()],
        formula=[FormulaTermSchema(**term.to_dict()) for term in terms],
    )


# linkage classes

def orbit_representatives(weight: Weight, budget: int, cartan: AffineCartanData,
                          context: Optional[LinkageContext] = None) -> List[Tuple[CoxeterElement, Root]]:
    """Extreme coset representatives x with x o mu <= lambda and ht(lambda - x o mu) <= budget"""
    context = context or linkage_context(weight, cartan)
    coxeter = context.coxeter
    top = context.top
    window = top.height + budget if context.plus else -top.height
    result = []
    for point in coxeter.orbit_points(context.mu, window, downward=context.plus):
        drop = point.offset - top
        if drop.height > budget or any(n < 0 for n in drop.coords):
            continue
        x = coxeter.coset_extreme(point.element, context.stabilizer, longest=context.plus)
        result.append((x, point.offset))
    return sorted(result, key=lambda item: ((item[1] - top).height, item[0].length, item[0].word))


def invert_unitriangular(matrix: List[List[int]]) -> List[List[int]]:
    """Integer inverse of a coefficient matrix; det = +-1 keeps the adjugate integral"""
    if not matrix:
        return []
    square = sympy.Matrix(matrix)
    if square.det() not in (1, -1):
        logger.error(f"Coefficient matrix {matrix} is not unimodular")
        raise PreconditionViolated("Coefficient matrix is not invertible over the integers")
    inverse = square.inv()
    return [[int(inverse[i, j]) for j in range(inverse.cols)] for i in range(inverse.rows)]


def decomposition_multiplicities(weight: Weight, depth: int, cartan: AffineCartanData,
                                 cache_dir: Optional[str] = None) -> LinkageClassData:
    """Character matrix of the orbit points within depth below lambda, and its inverse"""
    context = linkage_context(weight, cartan)
    reps = orbit_representatives(weight, depth, cartan, context)
    index = {offset.coords: k for k, (_, offset) in enumerate(reps)}
    size = len(reps)
    coefficients = [[0] * size for _ in range(size)]
    top = context.top
    for i, (x, offset) in enumerate(reps):
        budget = depth - (offset - top).height
        for anchor, value in merge_terms(formula_terms(context, x, budget, cache_dir)).items():
            if anchor in index:
                coefficients[i][index[anchor]] = value
    logger.info(f"Linkage class of {weight.format()} at depth {depth}: {size} points")
    offsets = [offset.coords for _, offset in reps]
    return LinkageClassData(
        weight=weight,
        mu=context.mu,
        plus=context.plus,
        depth=depth,
        rows=[x for x, _ in reps],
        row_offsets=offsets,
        columns=[x for x, _ in reps],
        column_offsets=offsets,
        coefficients=coefficients,
        multiplicities=invert_unitriangular(coefficients),
        complete={o: True for o in offsets},
    )


# translation

def _translation_preconditions(weight: Weight, other: Weight, cartan: AffineCartanData) \
        -> Tuple[IntegralSystem, IntegralSystem, bool]:
    first = compute_integral_system(weight, cartan)
    second = compute_integral_system(other, cartan)
    if first.root_set_key() != second.root_set_key():
        raise IntegralityMismatch("Integral root systems differ")
    first_chamber, second_chamber = classify_chamber(first), classify_chamber(second)
    chambers = (ChamberClass.CPLUS, ChamberClass.CMINUS)
    if first_chamber not in chambers or first_chamber != second_chamber:
        raise ChambersDiffer(f"Chambers {first_chamber.value} and {second_chamber.value} differ")
    if not (other - weight).has_integer_pairings():
        raise PreconditionViolated("Weights do not differ by an integral weight")
    if not first.delta0_key() <= second.delta0_key():
        raise PreconditionViolated("Delta_0 of the source is not contained in Delta_0 of the target")
    return first, second, first_chamber == ChamberClass.CPLUS


def translation_survives(w: CoxeterElement, weight: Weight, other: Weight, cartan: AffineCartanData) -> bool:
    """T L(w o lambda) = L(w o mu) iff w(Delta_0+(mu) minus Delta_0+(lambda)) is negative (C+) or positive (C-)"""
    first, second, plus = _translation_preconditions(weight, other, cartan)
    new_roots = [r for r in second.positive_delta0() if r.coords not in first.delta0_key()]
    for beta in new_roots:
        image = w.act(beta)
        if plus and not image.is_negative():
            return False
        if not plus and not image.is_positive():
            return False
    return True


def transport_coefficients(data: LinkageClassData, target: Weight, cartan: AffineCartanData) -> LinkageClassData:
    """Reuse the coefficient matrix at a translated weight.

    Rows whose L is killed by translation are dropped; columns whose Vermas
    land on the same weight are merged.
    """
    _translation_preconditions(data.mu, target, cartan)
    target_system = compute_integral_system(target, cartan)
    coxeter = CoxeterSystem.from_integral_system(target_system)
    stabilizer = coxeter.subgroup(target_system.simples0)

    column_targets: List[Coords] = []
    column_elements: List[CoxeterElement] = []
    column_index: Dict[Coords, int] = {}
    mapping = []
    for y in data.columns:
        _, offset = coxeter.dot_action(y, target)
        if offset.coords not in column_index:
            column_index[offset.coords] = len(column_targets)
            column_targets.append(offset.coords)
            column_elements.append(coxeter.coset_extreme(y, stabilizer, longest=data.plus))
        mapping.append(column_index[offset.coords])

    source_offsets = set(data.column_offsets)
    complete = {}
    for target_offset, y in zip(column_targets, column_elements):
        complete[target_offset] = all(
            coxeter.dot_action(coxeter.multiply(y, z), data.mu)[1].coords in source_offsets for z in stabilizer)

    rows, row_offsets, coefficients = [], [], []
    for x, row in zip(data.rows, data.coefficients):
        if not translation_survives(x, data.mu, target, cartan):
            continue
        merged = [0] * len(column_targets)
        for j, value in enumerate(row):
            merged[mapping[j]] += value
        rows.append(x)
        row_offsets.append(coxeter.dot_action(x, target)[1].coords)
        coefficients.append(merged)

    multiplicities = None
    if len(rows) == len(column_targets) and set(row_offsets) == set(column_targets):
        order = [column_index[o] for o in row_offsets]
        square = [[row[j] for j in order] for row in coefficients]
        multiplicities = invert_unitriangular(square)
    logger.info(f"Transported {len(rows)} of {len(data.rows)} rows to {target.format()}")
    return LinkageClassData(
        weight=target,
        mu=target,
        plus=data.plus,
        depth=data.depth,
        rows=rows,
        row_offsets=row_offsets,
        columns=column_elements,
        column_offsets=column_targets,
        coefficients=coefficients,
        multiplicities=multiplicities,
        complete=complete,
    )


def translated_character(data: LinkageClassData, row: int, depth: int, cartan: AffineCartanData) -> Character:
    """ch of the row's irreducible from the transported coefficients, based at its anchor.

    Raises BudgetExceeded when an orbit point inside the depth window is not
    covered completely by the data.
    """
    system = compute_integral_system(data.mu, cartan)
    coxeter = CoxeterSystem.from_integral_system(system)
    anchor = data.row_offsets[row]
    top = Root(anchor)
    weight = data.mu - root_weight(cartan, top)
    window = top.height + depth if data.plus else -top.height
    for point in coxeter.orbit_points(data.mu, window, downward=data.plus):
        drop = point.offset - top
        if drop.height > depth or any(n < 0 for n in drop.coords):
            continue
        if not data.complete.get(point.offset.coords, False):
            raise BudgetExceeded(f"Orbit point {point.offset} is not covered by the transported data")

    character = Character(weight, depth)
    for offset, value in zip(data.column_offsets, data.coefficients[row]):
        shift = tuple(o - a for o, a in zip(offset, anchor))
        if value and all(s >= 0 for s in shift):
            _add_verma(character, shift, value, cartan)
    return character


# Weyl-Kac

def weyl_kac_character(weight: Weight, depth: int, cartan: AffineCartanData) -> Character:
    """sum over w in W of (-1)^{l(w)} ch M(w o lambda) for dominant integral regular lambda"""
    shifted = weight + rho(cartan)
    for i in range(cartan.rank):
        p = pairing(cartan, cartan.simple_root(i), shifted)
        if not p.is_integer() or p <= 0:
            raise NotDominantIntegral(f"{weight.format()} is not dominant integral regular")

    zero = tuple(0 for _ in range(cartan.rank))
    signs: Dict[Coords, int] = {zero: 1}
    points: Dict[Coords, Weight] = {zero: shifted}
    frontier = [zero]
    while frontier:
        next_frontier = []
        for offset in frontier:
            current = points[offset]
            for i in range(cartan.rank):
                alpha = cartan.simple_root(i)
                n = pairing(cartan, alpha, current).to_int()
                if n <= 0:
                    continue
                target = tuple(o + n * a for o, a in zip(offset, alpha.coords))
                if sum(target) > depth or target in signs:
                    continue
                signs[target] = -signs[offset]
                points[target] = current - root_weight(cartan, alpha).scaled(n)
                next_frontier.append(target)
        frontier = next_frontier

    character = Character(weight, depth)
    for offset, sign in signs.items():
        _add_verma(character, offset, sign, cartan)
    return character
