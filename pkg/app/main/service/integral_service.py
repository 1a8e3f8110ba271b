"""Integral root systems: progressions, simple roots, chambers and conjugation"""
import logging
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

import sympy

from app.main.config import Config
from app.main.model.cartan import AffineCartanData, Root
from app.main.model.integral import (
    ChamberClass, DominantRepresentative, IntegralSystem, IntegralSystemSchema,
    ParabolicConjugation, ParabolicReduction, Progression, ProgressionSchema,
)
from app.main.model.scalar import Scalar, ZERO
from app.main.model.weight import Weight
from app.main.service.root_service import (
    affine_root, coroot_pairing, finite_roots, level, pairing, positive_real_roots,
    reflect_root, rho, root_weight, split_affine_root, weight_difference,
)
from app.main.util.exceptions import (
    BoundExceeded, CriticalLevel, NotApplicable, NotFinite,
)

logger = logging.getLogger(__name__)

# n(s,t) = (a^v, b)(b^v, a) -> Coxeter order; 0 encodes infinity
COXETER_ORDER = {0: 2, 1: 3, 2: 4, 3: 6}


def _to_fraction(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def _direction_progression(cartan: AffineCartanData, gamma: Root, shifted: Weight,
                           lvl: Optional[Scalar]) -> Optional[Progression]:
    """Integral members of gamma + Z delta, as a progression"""
    b = pairing(cartan, gamma, shifted)
    if not cartan.affine:
        if b.is_integer():
            return Progression(gamma, gamma, 0, 1, False, b, ZERO)
        return None

    # pairing of gamma + k delta is b + k s
    s = lvl * Fraction(2) / cartan.root_norm(gamma)
    if s.b != 0:
        k = -b.b / s.b
        if k.denominator != 1:
            return None
        value = b + s * k
        if not value.is_integer():
            return None
        k = k.numerator
        return Progression(gamma, affine_root(cartan, gamma, k), k, 1, False, value, ZERO)
    if b.b != 0:
        return None

    p, q = s.a.numerator, s.a.denominator
    if (b.a * q).denominator != 1:
        return None
    t = int(-b.a * q) % q
    k0 = (t * pow(p, -1, q)) % q if q > 1 else 0
    lowest = 0 if gamma.is_positive() else 1
    first = lowest + (k0 - lowest) % q
    return Progression(gamma, affine_root(cartan, gamma, first), first, q, True,
                       b + s * first, s * q)


def positive_members(cartan: AffineCartanData, progression: Progression, max_height: int) -> List[Root]:
    if not progression.infinite:
        base = progression.base
        return [base] if base.is_positive() and base.height <= max_height else []
    members = []
    j = progression.first
    while progression.direction.height + j * cartan.delta_height <= max_height:
        members.append(affine_root(cartan, progression.direction, j))
        j += progression.period
    return members


def _zero_roots(cartan: AffineCartanData, progression: Progression) -> List[Root]:
    if not progression.infinite:
        return [progression.base] if progression.base_pairing == 0 else []
    t = -progression.base_pairing / progression.step
    if not t.is_integer():
        return []
    j = progression.first + t.to_int() * progression.period
    return [affine_root(cartan, progression.direction, j)]


def is_simple_root(cartan: AffineCartanData, progressions: Sequence[Progression], alpha: Root) -> bool:
    """s_alpha maps every positive integral root other than alpha to a positive root.

    Along a progression the image of gamma' + j delta is
    (gamma' - c gamma_alpha) + (j - c k_alpha) delta, so only members with
    j <= c k_alpha can fail.
    """
    _, k_alpha = split_affine_root(cartan, alpha)
    for progression in progressions:
        if not progression.infinite:
            beta = progression.base
            if beta.is_positive() and beta != alpha and not reflect_root(cartan, alpha, beta).is_positive():
                return False
            continue
        c = coroot_pairing(cartan, alpha, progression.direction)
        limit = max(c * k_alpha, 0)
        j = progression.first
        while j <= limit:
            beta = affine_root(cartan, progression.direction, j)
            if beta != alpha and not reflect_root(cartan, alpha, beta).is_positive():
                return False
            j += progression.period
    return True


def _finite_simples(cartan: AffineCartanData, positives: Sequence[Root]) -> List[Root]:
    """Simple roots of a finite positive system, by the reflection test"""
    ordered = sorted(positives, key=lambda r: (r.height, r.coords))
    members = set(ordered)
    simples = []
    for alpha in ordered:
        if any(cartan.root_product(beta, alpha) > 0 for beta in simples):
            continue
        if all(reflect_root(cartan, alpha, beta) in members for beta in ordered if beta != alpha):
            simples.append(alpha)
    return simples


def _decomposes(cartan: AffineCartanData, simples: Sequence[Root], alpha: Root,
                memo: Dict[Root, bool]) -> bool:
    """Descend by simple reflections until a simple root is reached"""
    simple_set = set(simples)
    path = []
    current = alpha
    result = False
    while True:
        if current in memo:
            result = memo[current]
            break
        if current in simple_set:
            result = True
            break
        path.append(current)
        lower = None
        for beta in simples:
            if cartan.root_product(beta, current) > 0:
                lower = reflect_root(cartan, beta, current)
                break
        if lower is None or not lower.is_positive() or lower.height >= current.height:
            result = False
            break
        current = lower
    for root in path:
        memo[root] = result
    return result


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _certified(cartan: AffineCartanData, progressions: Sequence[Progression], simples: Sequence[Root],
               candidates: Sequence[Root], height: int) -> bool:
    """Every positive integral root is a nonnegative integer combination of simples"""
    memo: Dict[Root, bool] = {}
    if not all(_decomposes(cartan, simples, alpha, memo) for alpha in candidates):
        return False
    infinite = [p for p in progressions if p.infinite]
    if not infinite:
        return True
    if not simples:
        return False
    if height < 2 * max(r.height for r in simples) + max(p.period for p in infinite) * cartan.delta_height:
        return False

    # N delta is the sum of the first members of opposite directions
    firsts = {p.direction.coords: p.first for p in infinite}
    n_delta = min(p.first + firsts[(-p.direction).coords] for p in infinite
                  if (-p.direction).coords in firsts)
    for progression in infinite:
        window = progression.first + _lcm(n_delta, progression.period)
        j = progression.first
        while j <= window:
            member = affine_root(cartan, progression.direction, j)
            if not _decomposes(cartan, simples, member, memo):
                return False
            j += progression.period
    return True


def _coxeter_matrix(cartan: AffineCartanData, simples: Sequence[Root]) -> Tuple[Tuple[int, ...], ...]:
    rows = []
    for i, alpha in enumerate(simples):
        row = []
        for j, beta in enumerate(simples):
            if i == j:
                row.append(1)
                continue
            n = coroot_pairing(cartan, alpha, beta) * coroot_pairing(cartan, beta, alpha)
            row.append(COXETER_ORDER.get(n, 0))
        rows.append(tuple(row))
    return tuple(rows)


def compute_integral_system(weight: Weight, cartan: AffineCartanData,
                            height_cap: Optional[int] = None) -> IntegralSystem:
    """Compute Delta(lambda), Delta_0(lambda), the simple roots and the Coxeter matrix"""
    shifted = weight + rho(cartan)
    lvl = level(cartan, shifted)
    if cartan.affine and lvl == 0:
        raise CriticalLevel(f"Weight {weight.format()} is at the critical level")

    progressions = []
    for gamma in finite_roots(cartan):
        progression = _direction_progression(cartan, gamma, shifted, lvl)
        if progression is not None:
            progressions.append(progression)
    progressions = tuple(progressions)
    finite_flag = not any(p.infinite for p in progressions)

    delta0 = sorted((r for p in progressions for r in _zero_roots(cartan, p)),
                    key=lambda r: (r.height, r.coords))

    if finite_flag:
        positives = [p.base for p in progressions if p.base.is_positive()]
        simples = _finite_simples(cartan, positives)
        checked = max((r.height for r in positives), default=0)
    else:
        cap = height_cap or Config.HEIGHT_CAP
        height = max(4, 2 * cartan.delta_height)
        while True:
            candidates = sorted((r for p in progressions for r in positive_members(cartan, p, height)),
                                key=lambda r: (r.height, r.coords))
            simples = []
            for alpha in candidates:
                if any(cartan.root_product(beta, alpha) > 0 for beta in simples):
                    continue
                if is_simple_root(cartan, progressions, alpha):
                    simples.append(alpha)
            if _certified(cartan, progressions, simples, candidates, height):
                checked = height
                break
            if height * 2 > cap:
                logger.error(f"Simple-root certificate failed at height {height} for {weight.format()}")
                raise BoundExceeded(f"Simple roots not certified below height cap {cap}")
            height *= 2
            logger.debug(f"Raising simple-root search height to {height}")

    simples0 = _finite_simples(cartan, [r for r in delta0 if r.is_positive()])
    simple_pairings = tuple(pairing(cartan, alpha, shifted).to_int() for alpha in simples)
    return IntegralSystem(
        cartan=cartan,
        weight=weight,
        level=lvl,
        progressions=progressions,
        delta0=tuple(delta0),
        simples=tuple(simples),
        simples0=tuple(simples0),
        coxeter_matrix=_coxeter_matrix(cartan, simples),
        finite_flag=finite_flag,
        checked_height=checked,
        simple_pairings=simple_pairings,
    )


def chamber_flags(system: IntegralSystem) -> Tuple[bool, bool]:
    """(lambda in C+, lambda in C-) from the first member and step of each progression"""
    plus = minus = True
    for progression in system.progressions:
        if progression.infinite:
            first = progression.base_pairing
            if progression.step > 0:
                minus = False
                if first < 0:
                    plus = False
            else:
                plus = False
                if first > 0:
                    minus = False
        elif progression.base.is_positive():
            value = progression.base_pairing
            if value < 0:
                plus = False
            if value > 0:
                minus = False
    return plus, minus


def classify_chamber(system: IntegralSystem) -> ChamberClass:
    if system.cartan.affine and system.level == 0:
        return ChamberClass.CRITICAL
    plus, minus = chamber_flags(system)
    if plus and minus:
        if not system.cartan.affine or system.level > 0:
            return ChamberClass.CPLUS
        return ChamberClass.CMINUS
    if plus:
        return ChamberClass.CPLUS
    if minus:
        return ChamberClass.CMINUS
    return ChamberClass.INTERIOR


def targets_plus(system: IntegralSystem) -> bool:
    """Chamber reached by dominant_representative: C- only for negative rational level"""
    lvl = system.level
    return lvl is None or not lvl.is_rational() or lvl > 0


def dominant_representative(weight: Weight, cartan: AffineCartanData,
                            system: Optional[IntegralSystem] = None) -> DominantRepresentative:
    """Move lambda into C+ or C- by simple reflections of W(lambda)"""
    system = system or compute_integral_system(weight, cartan)
    plus = targets_plus(system)
    current = weight
    applied = []
    for _ in range(Config.ORBIT_CAP):
        step = None
        for index, alpha in enumerate(system.simples):
            p = pairing(cartan, alpha, current + rho(cartan))
            if (plus and p < 0) or (not plus and p > 0):
                step = (index, alpha, p)
                break
        if step is None:
            return DominantRepresentative(current, tuple(reversed(applied)), system)
        index, alpha, p = step
        current = current - root_weight(cartan, alpha).scaled(p)
        applied.append(index)
    raise BoundExceeded(f"No dominant representative within {Config.ORBIT_CAP} reflections")


# parabolic conjugation

def _generic_witness(cartan: AffineCartanData, roots: Sequence[Root]) -> List[Scalar]:
    """Values (alpha_i, mu) of a vector mu orthogonal to roots, generic otherwise.

    mu = n + sqrt(2) g with (delta, n) = 1 and g generic in the orthogonal
    complement of roots and delta.
    """
    size = cartan.rank
    rows = [list(r.coords) for r in roots]
    if cartan.affine:
        system = sympy.Matrix(rows + [list(cartan.delta_coeffs)])
        rhs = sympy.Matrix([0] * len(rows) + [1])
        solution, params = system.gauss_jordan_solve(rhs)
        particular = solution.subs({p: 0 for p in params})
        basis = system.nullspace()
    else:
        particular = sympy.zeros(size, 1)
        basis = sympy.Matrix(rows).nullspace() if rows else [sympy.eye(size)[:, i] for i in range(size)]

    classical = [sympy.Matrix([list(g.coords)]) for g in finite_roots(cartan)]
    generic = sympy.zeros(size, 1)
    for t in range(2, 64):
        generic = sympy.zeros(size, 1)
        for k, vector in enumerate(basis):
            generic += t ** k * vector
        if all((row * generic)[0] != 0 or all((row * b)[0] == 0 for b in basis) for row in classical):
            break
    if cartan.affine:
        return [Scalar(_to_fraction(particular[i]), _to_fraction(generic[i])) for i in range(size)]
    return [Scalar(_to_fraction(generic[i])) for i in range(size)]


def _dominate(cartan: AffineCartanData, values: List[Scalar]) -> Tuple[List[int], List[Scalar]]:
    """Apply s_i for the lowest i with (alpha_i, mu) < 0 until mu is dominant"""
    applied = []
    for _ in range(Config.ORBIT_CAP):
        negative = [i for i, v in enumerate(values) if v < 0]
        if not negative:
            return applied, values
        i = negative[0]
        vi = values[i]
        values = [values[k] - vi * cartan.cartan_matrix[i][k] for k in range(cartan.rank)]
        applied.append(i)
    raise BoundExceeded("Witness vector did not become dominant")


def apply_ambient_word(cartan: AffineCartanData, applied: Sequence[int], root: Root) -> Root:
    """Apply s_{applied[0]} first, then s_{applied[1]}, ..."""
    for i in applied:
        root = reflect_root(cartan, cartan.simple_root(i), root)
    return root


def conjugate_to_parabolic(system: IntegralSystem, zero_part: bool = False) -> ParabolicConjugation:
    """Find x in W and J with x Delta_1 inside Delta_J.

    With ``zero_part`` the subsystem is Delta_0(lambda); for lambda in C+ or C-
    with matching level sign, lambda + rho itself is the witness, which also
    gives x Delta+(lambda) inside Delta+ and x Delta_0(lambda) = Delta_J.
    """
    cartan = system.cartan
    if zero_part:
        roots = system.simples0
        chamber = classify_chamber(system)
        sign = 1 if chamber == ChamberClass.CPLUS else -1
        use_weight = chamber in (ChamberClass.CPLUS, ChamberClass.CMINUS) and (
            not cartan.affine or system.level.sign() == sign)
        if use_weight:
            shifted = system.weight + rho(cartan)
            values = [shifted.pairings[i] * (sign * cartan.symmetrizer[i]) for i in range(cartan.rank)]
        else:
            values = _generic_witness(cartan, roots)
    else:
        if not system.finite_flag:
            raise NotFinite("Delta(lambda) is infinite")
        roots = system.simples
        values = _generic_witness(cartan, roots)

    applied, values = _dominate(cartan, values)
    J = tuple(i for i, v in enumerate(values) if v == 0)
    images = tuple(apply_ambient_word(cartan, applied, beta) for beta in roots)
    return ParabolicConjugation(tuple(reversed(applied)), J, images)


def parabolic_reduction(weight: Weight, cartan: AffineCartanData) -> ParabolicReduction:
    """Shorten x until every step pairing along the word is non-integral"""
    system = compute_integral_system(weight, cartan)
    conjugation = conjugate_to_parabolic(system)
    applied = list(reversed(conjugation.word))
    removed = 0
    while True:
        current = weight
        integral_step = None
        for k, i in enumerate(applied):
            alpha = cartan.simple_root(i)
            p = pairing(cartan, alpha, current + rho(cartan))
            if p.is_integer():
                integral_step = k
                break
            current = current - root_weight(cartan, alpha).scaled(p)
        if integral_step is None:
            break
        del applied[integral_step]
        removed += 1
    images = tuple(apply_ambient_word(cartan, applied, beta) for beta in system.simples)
    reduced = ParabolicConjugation(tuple(reversed(applied)), conjugation.J, images)
    return ParabolicReduction(reduced, weight, current, removed)


# rationalization

def same_integrality(first: IntegralSystem, second: IntegralSystem) -> bool:
    return (first.root_set_key() == second.root_set_key()
            and first.level == second.level
            and first.simples == second.simples
            and first.simple_pairings == second.simple_pairings)


def rationalize_weight(weight: Weight, cartan: AffineCartanData) -> Weight:
    """A rational weight with the same integral roots, pairings and level"""
    system = compute_integral_system(weight, cartan)
    if system.finite_flag or system.is_empty():
        raise NotApplicable("Rationalization needs an infinite integral root system")
    if weight.is_rational():
        return weight

    shifted = weight + rho(cartan)
    base = [p.a for p in shifted.pairings]
    matrix = sympy.Matrix([[sympy.Rational(n) * sympy.Rational(d.numerator, d.denominator)
                            for n, d in zip(r.coords, cartan.symmetrizer)] for r in system.simples])
    basis = matrix.nullspace()
    bound = max([100] + [10 * p.a.denominator for p in shifted.pairings])

    prime = int(sympy.nextprime(bound))
    attempts = [[Fraction(0)] * len(basis)]
    for _ in range(8):
        coefficients = []
        for _ in basis:
            coefficients.append(Fraction(1, prime))
            prime = int(sympy.nextprime(prime))
        attempts.append(coefficients)

    for coefficients in attempts:
        values = list(base)
        for c, vector in zip(coefficients, basis):
            values = [v + c * _to_fraction(x) for v, x in zip(values, vector)]
        candidate = Weight(tuple(Scalar(v - 1) for v in values), Scalar(weight.d_pairing.a))
        try:
            if same_integrality(system, compute_integral_system(candidate, cartan)):
                return candidate
        except CriticalLevel:
            continue
    logger.error(f"No rational representative found for {weight.format()}")
    raise NotApplicable("No rational representative found")


# linkage and cone membership

def kk_linked(weight: Weight, other: Weight, height_bound: int, cartan: AffineCartanData) -> bool:
    """Search chains lambda_k = lambda_{k-1} - n beta with (beta^v, lambda_{k-1} + rho) = n > 0.

    Only real beta occur: at non-critical level (delta, lambda + rho) is constant
    along a chain and nonzero, so imaginary steps never satisfy the equation.
    """
    if cartan.affine and level(cartan, weight + rho(cartan)) == 0:
        raise CriticalLevel(f"Weight {weight.format()} is at the critical level")
    xi = weight_difference(cartan, weight, other)
    if xi is None or any(n < 0 for n in xi.coords) or xi.height > height_bound:
        return False
    if xi.height == 0:
        return True
    roots = positive_real_roots(cartan, xi.height)
    target = xi.coords
    start = tuple(0 for _ in target)
    seen = {start}
    frontier = [(start, weight)]
    while frontier:
        offset, current = frontier.pop()
        shifted = current + rho(cartan)
        for beta in roots:
            if any(o + b > t for o, b, t in zip(offset, beta.coords, target)):
                continue
            p = pairing(cartan, beta, shifted)
            if not p.is_integer() or p <= 0:
                continue
            n = p.to_int()
            new_offset = tuple(o + n * b for o, b in zip(offset, beta.coords))
            if any(o > t for o, t in zip(new_offset, target)):
                continue
            if new_offset == target:
                return True
            if new_offset not in seen:
                seen.add(new_offset)
                frontier.append((new_offset, current - root_weight(cartan, beta).scaled(n)))
    return False


def delta_cone_coefficients(system: IntegralSystem) -> Optional[Dict[Root, Fraction]]:
    """Coefficients c >= 0 with delta = sum c_alpha alpha over one component of the simples"""
    cartan = system.cartan
    if not cartan.affine or system.finite_flag or not system.simples:
        return None
    simples = list(system.simples)
    unvisited = set(range(len(simples)))
    while unvisited:
        start = unvisited.pop()
        component = [start]
        queue = [start]
        while queue:
            i = queue.pop()
            for j in list(unvisited):
                if cartan.root_product(simples[i], simples[j]) != 0:
                    unvisited.discard(j)
                    component.append(j)
                    queue.append(j)
        columns = sympy.Matrix([list(simples[i].coords) for i in component]).T
        try:
            solution, params = columns.gauss_jordan_solve(sympy.Matrix(list(cartan.delta_coeffs)))
        except ValueError:
            continue
        solution = solution.subs({p: 0 for p in params})
        coefficients = {simples[i]: _to_fraction(solution[k]) for k, i in enumerate(component)}
        if all(c >= 0 for c in coefficients.values()):
            return coefficients
    return None


def integral_system_schema(system: IntegralSystem) -> IntegralSystemSchema:
    return IntegralSystemSchema(
        cartan_type=system.cartan.name,
        weight=system.weight.format(),
        level=str(system.level) if system.level is not None else None,
        chamber=classify_chamber(system).value,
        progressions=[ProgressionSchema(base=list(p.base.coords), period=p.period, range=p.range_label)
                      for p in system.progressions],
        delta0=[list(r.coords) for r in system.delta0],
        simples=[list(r.coords) for r in system.simples],
        simples0=[list(r.coords) for r in system.simples0],
        coxeter_matrix=[list(row) for row in system.coxeter_matrix],
        finite=system.finite_flag,
    )
