"""Finite-colength ideal arithmetic: truncation frames, closures, reductions."""

from dataclasses import dataclass
from typing import Optional

from .arith import QQ, BiPoly, SparseEchelon, bipoly_gcd
from .errors import BudgetExceeded, Unstable
from .nearpoints import LocalIdeal, QdtPath, QdtStep
from .zariski import Factorization, strip_principal, zariski_factorization

MAX_FRAME_DEGREE = 1024


def _monomials_below(bound):
    # all (i, j) with i + j < bound, in a fixed deterministic order
    return [(i, j) for j in range(bound) for i in range(bound - j)]


def _truncated_row(g, bound):
    return {e: c for e, c in g.terms.items() if e[0] + e[1] < bound}


class TruncationFrame:
    """Echelonized image of an ideal in R / M^bound."""

    __slots__ = ("ideal", "bound", "ech")

    def __init__(self, ideal, bound):
        self.ideal = ideal
        self.bound = bound
        ech = SparseEchelon(ideal.tower)
        for g in ideal.gens:
            base = g.ord_at_origin()
            for a, b in _monomials_below(max(bound - base, 0)):
                row = _truncated_row(g.mul_monomial((a, b)), bound)
                if row:
                    ech.insert(row)
        self.ech = ech

    def colength(self):
        total = self.bound * (self.bound + 1) // 2
        return total - self.ech.rank

    def contains(self, f):
        if f.is_zero():
            return True
        return self.ech.contains(_truncated_row(f, self.bound))


def stabilized_frame(ideal):
    """Frame at an N where the colength has stopped moving, so M^N lies in the ideal."""
    if ideal.is_unit():
        return TruncationFrame(ideal, 1)
    bound = max(g.total_degree for g in ideal.gens) + max(
        g.ord_at_origin() for g in ideal.gens
    )
    bound = max(bound, 2)
    while bound <= MAX_FRAME_DEGREE:
        frame = TruncationFrame(ideal, bound)
        ahead = TruncationFrame(ideal, bound + 1)
        if frame.colength() == ahead.colength():
            return frame
        bound *= 2
    raise Unstable(
        "colength did not stabilize below degree %d; is the ideal M-primary?"
        % MAX_FRAME_DEGREE
    )


def colength(ideal):
    if ideal.is_unit():
        return 0
    return stabilized_frame(ideal).colength()


def membership(f, ideal, frame=None):
    if f.is_zero():
        return True
    if ideal.is_unit():
        return True
    if frame is None:
        frame = stabilized_frame(ideal)
    return frame.contains(f)


def ideal_equals(j, k):
    fj = stabilized_frame(j)
    fk = stabilized_frame(k)
    return all(fk.contains(g) for g in j.gens) and all(
        fj.contains(g) for g in k.gens
    )


def _gen_key(tower, g):
    return (
        g.ord_at_origin(),
        g.total_degree,
        tuple(
            (e, tower.sort_key(c)) for e, c in sorted(g.terms.items())
        ),
    )


def _dedupe(tower, gens):
    seen = set()
    out = []
    for g in gens:
        key = _gen_key(tower, g)
        if key not in seen:
            seen.add(key)
            out.append(g)
    return out


def _prune_monomials(gens):
    exps = sorted(next(iter(g.terms)) for g in gens)
    keep = []
    for e in exps:
        if not any(k[0] <= e[0] and k[1] <= e[1] for k in keep):
            keep.append(e)
    return keep


def product(j, k):
    tower, vars = j.tower, j.vars
    gens = [a * b for a in j.gens for b in k.gens]
    if all(g.is_monomial() for g in gens):
        keep = _prune_monomials(gens)
        gens = [BiPoly.monomial(tower, vars, e) for e in keep]
    else:
        gens = _dedupe(tower, gens)
    return LocalIdeal(tower, vars, gens)


def power(j, n):
    if n < 0:
        raise ValueError("negative ideal power")
    result = LocalIdeal(j.tower, j.vars, [BiPoly.one(j.tower, j.vars)])
    for _ in range(n):
        result = product(result, j)
    return result


def minimal_generators(ideal, frame_degree=None):
    """Trim a generating set to a minimal one (Nakayama on I / M.I)."""
    tower = ideal.tower
    gens = _dedupe(tower, ideal.gens)
    if ideal.is_unit():
        return LocalIdeal(tower, ideal.vars, [BiPoly.one(tower, ideal.vars)])
    if all(g.is_monomial() for g in gens):
        keep = _prune_monomials(gens)
        return LocalIdeal(
            tower, ideal.vars, [BiPoly.monomial(tower, ideal.vars, e) for e in keep]
        )
    if frame_degree is None:
        principal, residual = strip_principal(ideal)
        if not principal.is_constant():
            trimmed = minimal_generators(residual)
            return LocalIdeal(
                tower, ideal.vars, [g.mul(principal) for g in trimmed.gens]
            )
        frame_degree = stabilized_frame(ideal).bound
    bound = frame_degree + 1
    ech = SparseEchelon(tower)
    for g in gens:
        base = g.ord_at_origin()
        for a, b in _monomials_below(max(bound - base, 0)):
            if a + b == 0:
                continue
            row = _truncated_row(g.mul_monomial((a, b)), bound)
            if row:
                ech.insert(row)
    kept = []
    for g in sorted(gens, key=lambda g: _gen_key(tower, g)):
        if ech.insert(_truncated_row(g, bound)):
            kept.append(g)
    return LocalIdeal(tower, ideal.vars, kept)


@dataclass(frozen=True)
class ClosureData:
    """Valuative description of an integral closure: principal part plus value floors."""

    ideal: LocalIdeal
    factorization: Factorization
    floors: tuple

    def contains(self, f):
        if f.is_zero():
            return True
        principal = self.factorization.principal
        if not principal.is_constant():
            common = bipoly_gcd(f, principal)
            if not principal.exact_div(common).is_unit_at_origin():
                return False
        return all(v.value(f) >= c for v, c in self.floors)

    def colength(self):
        if not self.factorization.principal.is_constant():
            raise ValueError("closure colength requires an M-primary ideal")
        if not self.floors:
            return 0
        bound = 0
        for v, c in self.floors:
            mu = min(v.coordinate_values())
            bound = max(bound, -(-c // mu))
        columns = _monomials_below(bound)
        ech = SparseEchelon(self.ideal.tower)
        for v, c in self.floors:
            for row in _valuation_rows(v, c, columns):
                ech.insert(row)
        return ech.rank


def _valuation_rows(divisor, floor, columns):
    """Linear conditions 'terminal order >= floor' on the span of the given monomials."""
    path = divisor.path
    terminal = path.terminal_tower
    root = path.tower
    ratio = terminal.degree() // root.degree()
    fx, fy = path.substitution()
    vx, vy = divisor.coordinate_values()
    deg = max(e[0] + e[1] for e in columns) if columns else 0
    xpows = [BiPoly.one(terminal, fx.vars)]
    ypows = [BiPoly.one(terminal, fx.vars)]
    for _ in range(deg):
        xpows.append(xpows[-1] * fx)
        ypows.append(ypows[-1] * fy)
    rows = {}
    for e in columns:
        if e[0] * vx + e[1] * vy >= floor:
            continue
        image = xpows[e[0]] * ypows[e[1]]
        for mono, coeff in image.terms.items():
            if mono[0] + mono[1] >= floor:
                continue
            if ratio == 1:
                rows.setdefault((mono, 0), {})[e] = coeff
            else:
                for k, part in enumerate(terminal.components_over(root, coeff)):
                    if not root.is_zero(part):
                        rows.setdefault((mono, k), {})[e] = part
    return [rows[key] for key in sorted(rows)]


def closure_data(ideal, config=None):
    fact = zariski_factorization(ideal, config)
    floors = tuple((v, v.value_of_ideal(ideal)) for v, _ in fact.exponents)
    return ClosureData(ideal, fact, floors)


def closure_membership(f, ideal, config=None, data=None):
    if data is None:
        data = closure_data(ideal, config)
    return data.contains(f)


def closure_colength(ideal, config=None, data=None):
    if data is None:
        data = closure_data(ideal, config)
    return data.colength()


def closure_equals(j, k, config=None):
    """Whether the integral closure of J equals K on the nose.

    True needs K inside the closure of J, matching factorizations, and
    colength(K) equal to the closure colength, which certifies K complete.
    """
    data_k = closure_data(k, config)
    if j is not k:
        data_j = closure_data(j, config)
        if not all(data_j.contains(g) for g in k.gens):
            return False
        if data_j.factorization.principal != data_k.factorization.principal:
            return False
        exps_j = {v.path: n for v, n in data_j.factorization.exponents}
        exps_k = {v.path: n for v, n in data_k.factorization.exponents}
        if exps_j != exps_k:
            return False
    # equal factorizations force equal closures; it remains to certify that
    # K is complete, which only its residual part can fail
    principal, residual = strip_principal(k)
    floors = data_k.floors
    if not principal.is_constant():
        floors = tuple((v, c - v.value(principal)) for v, c in floors)
    unit = BiPoly.one(k.tower, k.vars)
    residual_data = ClosureData(
        residual, Factorization(unit, data_k.factorization.exponents), floors
    )
    return colength(residual) == residual_data.colength()


@dataclass(frozen=True)
class ReductionResult:
    decision: bool
    witness: Optional[int]
    by_direct: Optional[bool]
    by_valuative: bool


def is_reduction(j, i, n_max=None, config=None):
    """Decide whether J is a reduction of I, by power chase and by values.

    The direct method finds the least n with J.I^n = I^(n+1); the valuative
    method checks I against the value floors of J's closure.  Both run and
    the result records each verdict.
    """
    frame_i = stabilized_frame(i)
    if not all(frame_i.contains(g) for g in j.gens):
        return ReductionResult(False, None, False, False)
    # floors must come from J: values on I's own divisors cannot see
    # elements of I lying below J's polygon
    data = closure_data(j, config)
    valuative = all(v.value_of_ideal(i) == c for v, c in data.floors)
    if n_max is None:
        n_max = frame_i.colength()
    witness = None
    current = power(i, 0)
    for n in range(n_max + 1):
        lifted = product(i, current)
        frame = stabilized_frame(product(j, current))
        if all(frame.contains(g) for g in lifted.gens):
            witness = n
            break
        current = lifted
    if valuative and witness is None:
        raise BudgetExceeded(
            "no reduction exponent found up to n_max = %d" % n_max
        )
    if (witness is not None) != valuative:
        raise AssertionError("reduction criteria disagree")
    return ReductionResult(valuative, witness, witness is not None, valuative)


def _triangular(n):
    return n * (n + 1) // 2


def abhyankar_family(m, tower=QQ, vars=("x", "y")):
    """The degree-m pencil with simple ideal component product I_m.

    F_m collects the odd-triangular monomials, G_m the even ones; I_m is the
    product of the simple ideals along the first m infinitely near points of
    the y-axis direction.
    """
    if m < 1:
        raise ValueError("family index must be positive")
    from .divisors import PrimeDivisor, simple_ideal

    def mono(a, b):
        return BiPoly.monomial(tower, vars, (a, b))

    f = BiPoly.zero(tower, vars)
    for p in range((m - 1) // 2 + 1):
        f = f + mono(_triangular(2 * p + 1), m - 1 - 2 * p)
    g = BiPoly.zero(tower, vars)
    for p in range(m // 2 + 1):
        g = g + mono(_triangular(2 * p), m - 2 * p)
    ideal = LocalIdeal(tower, vars, [BiPoly.one(tower, vars)])
    for j in range(m):
        path = QdtPath(tower, vars, [QdtStep.affine(tower.zero())] * j)
        ideal = product(ideal, simple_ideal(PrimeDivisor(path)))
    return f, g, ideal
