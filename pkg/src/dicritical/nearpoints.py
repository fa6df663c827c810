"""Infinitely near points of a 2-dimensional regular local ring.

A point is reached from the root ring by a chain of local quadratic
transforms.  Each step picks a point on the exceptional line of the blowup:

  * Affine(c):  u = u', w = u'(w' + c)   (c in the residue tower at the node)
  * Infinity:   u = u'w', w = w'

Affine steps may extend the residue tower when the chosen point is not
rational over it.  Composed substitutions stay polynomial, so all valuation
work reduces to orders of polynomial pullbacks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith.factor import extend, factor_univariate, _poly_key
from .arith.polynomials import BiPoly, UniPoly, bipoly_gcd, homogeneous_gcd
from .errors import EmptyInput, UnitIdeal, ZeroPolynomial


@dataclass(frozen=True)
class QdtStep:
    kind: str
    c: object = None
    ext_name: str = None
    ext_minpoly: tuple = None

    @classmethod
    def affine(cls, c):
        return cls(kind="affine", c=c)

    @classmethod
    def affine_ext(cls, name, minpoly_coeffs):
        """Affine step at a non-rational point: the tower gains a root of
        the (irreducible, monic) minpoly and c is that new generator."""
        return cls(kind="affine", ext_name=name, ext_minpoly=tuple(minpoly_coeffs))

    @classmethod
    def infinity(cls):
        return cls(kind="infinity")

    @property
    def extends(self):
        return self.ext_minpoly is not None

    def extend_tower(self, tower, check=False):
        if not self.extends:
            return tower
        mp = UniPoly(tower, self.ext_minpoly)
        return extend(tower, mp, self.ext_name, check=check)

    def constant_in(self, tower):
        """The translation constant as an element of the post-step tower."""
        if self.kind != "affine":
            raise ValueError("only affine steps carry a constant")
        if self.extends:
            return tower.generator()
        return self.c


class QdtPath:
    """A chain of QDT steps from a root ring, with cached pullback data."""

    __slots__ = ("tower", "vars", "steps", "_towers", "_subst")

    def __init__(self, tower, vars, steps=()):
        vars = tuple(vars)
        steps = tuple(steps)
        towers = [tower]
        for step in steps:
            towers.append(step.extend_tower(towers[-1]))
        object.__setattr__(self, "tower", tower)
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "steps", steps)
        object.__setattr__(self, "_towers", tuple(towers))
        object.__setattr__(self, "_subst", None)

    def __setattr__(self, name, value):
        raise AttributeError("QdtPath is immutable")

    @property
    def length(self):
        return len(self.steps)

    def node_tower(self, i):
        return self._towers[i]

    @property
    def terminal_tower(self):
        return self._towers[-1]

    def extended(self, step):
        return QdtPath(self.tower, self.vars, self.steps + (step,))

    def suffix(self, i):
        """The tail of the path, rooted at node i."""
        return QdtPath(self._towers[i], self.vars, self.steps[i:])

    def __eq__(self, other):
        return (
            isinstance(other, QdtPath)
            and self.tower == other.tower
            and self.vars == other.vars
            and self.steps == other.steps
        )

    def __hash__(self):
        return hash((self.tower, self.vars, self.steps))

    def __repr__(self):
        bits = []
        for i, step in enumerate(self.steps):
            if step.kind == "infinity":
                bits.append("Inf")
            elif step.extends:
                bits.append("Aff(%s!)" % step.ext_name)
            else:
                bits.append("Aff(%s)" % self._towers[i + 1].render(step.c))
        return "QdtPath[%s]" % ", ".join(bits)

    def substitution(self):
        """Root coordinates as polynomials in terminal coordinates."""
        if self._subst is not None:
            return self._subst
        T = self._towers[0]
        fx = BiPoly.variable(T, self.vars, self.vars[0])
        fy = BiPoly.variable(T, self.vars, self.vars[1])
        for i, step in enumerate(self.steps):
            Tn = self._towers[i + 1]
            if fx.tower != Tn:
                fx = fx.lift_to(Tn)
                fy = fy.lift_to(Tn)
            su, sw = step_substitution(Tn, self.vars, step)
            fx = fx.substitute(su, sw)
            fy = fy.substitute(su, sw)
        object.__setattr__(self, "_subst", (fx, fy))
        return fx, fy


def step_substitution(tower, vars, step):
    """The (old u, old w) pair expressed in the new chart coordinates."""
    u = BiPoly.variable(tower, vars, vars[0])
    w = BiPoly.variable(tower, vars, vars[1])
    if step.kind == "affine":
        c = step.constant_in(tower)
        return u, u.mul(w.add(BiPoly.constant(tower, vars, c)))
    return u.mul(w), w


class LocalIdeal:
    """An ideal of the local ring at a chart origin, held by generators."""

    __slots__ = ("tower", "vars", "gens")

    def __init__(self, tower, vars, gens):
        gens = tuple(g for g in gens if not g.is_zero())
        if not gens:
            raise EmptyInput("an ideal needs at least one nonzero generator")
        for g in gens:
            if g.tower != tower or g.vars != tuple(vars):
                raise ValueError("generators disagree with the declared ring")
        object.__setattr__(self, "tower", tower)
        object.__setattr__(self, "vars", tuple(vars))
        object.__setattr__(self, "gens", gens)

    def __setattr__(self, name, value):
        raise AttributeError("LocalIdeal is immutable")

    def __repr__(self):
        return "LocalIdeal(%s)" % ", ".join(g.render() for g in self.gens)

    def is_unit(self):
        return any(g.is_unit_at_origin() for g in self.gens)

    def content(self):
        """Polynomial GCD of the generators."""
        g = self.gens[0]
        for other in self.gens[1:]:
            if g.is_constant():
                break
            g = bipoly_gcd(g, other)
        return g.normalized()

    def is_mprimary(self):
        return not self.is_unit() and self.content().is_constant()

    def min_order(self):
        if self.is_unit():
            return 0
        return min(g.ord_at_origin() for g in self.gens)


def compose_substitution(path):
    return path.substitution()


def pullback_order(path, f):
    """ord of f under the terminal ring's order valuation."""
    if f.is_zero():
        raise ZeroPolynomial("the zero element has no order")
    fx, fy = path.substitution()
    T = path.terminal_tower
    if f.tower != T:
        f = f.lift_to(T)
    return f.substitute(fx, fy).ord_at_origin()


def transform_ideal(J, step):
    """Transform of J through one step: substitute, then strip the GCD.

    The polynomial GCD and the local GCD of the substituted generators
    agree up to a local unit, so dividing by the polynomial GCD yields
    generators of the transform in the new local ring.
    """
    T2 = step.extend_tower(J.tower)
    su, sw = step_substitution(T2, J.vars, step)
    subs = []
    for g in J.gens:
        if g.tower != T2:
            g = g.lift_to(T2)
        subs.append(g.substitute(su, sw))
    common = subs[0]
    for other in subs[1:]:
        if common.is_constant():
            break
        common = bipoly_gcd(common, other)
    if not common.is_constant():
        subs = [g.exact_div(common) for g in subs]
    lead = subs[0].terms[min(subs[0].terms)]
    inv = T2.inv(lead)
    return LocalIdeal(T2, J.vars, [g.scale(inv) for g in subs])


def _min_order_forms(J):
    orders = [g.ord_at_origin() for g in J.gens]
    d = min(orders)
    return d, [g.initial_form() for g, o in zip(J.gens, orders) if o == d]


def zariski_number(J):
    """d - s: minimal order minus the degree of the initial-form GCD."""
    if J.is_unit():
        raise UnitIdeal("the unit ideal has no Zariski number")
    d, forms = _min_order_forms(J)
    s = homogeneous_gcd(forms).total_degree
    return d - s


def _direction_steps(J):
    """Candidate steps from the projective zeros of the initial-form GCD."""
    _, forms = _min_order_forms(J)
    gamma = homogeneous_gcd(forms)
    s = gamma.total_degree
    if s == 0:
        return []
    T = J.tower
    q = gamma.dehomogenized()
    plain = []
    extending = []
    if q.degree >= 1:
        _, factors = factor_univariate(q)
        for irr, _ in factors:
            if irr.degree == 1:
                plain.append(QdtStep.affine(T.neg(irr.coeff(0))))
            else:
                name = "a%d" % (T.height + 1)
                extending.append(QdtStep.affine_ext(name, irr.coeffs))
    plain.sort(key=lambda st: T.sort_key(st.c))
    extending.sort(key=lambda st: _poly_key(UniPoly(T, st.ext_minpoly)))
    steps = plain + extending
    if q.degree < s:
        steps.append(QdtStep.infinity())
    return steps


def directions_with_transforms(J):
    """(step, transform) for each confirmed base direction, canonical order."""
    out = []
    for step in _direction_steps(J):
        transform = transform_ideal(J, step)
        if not transform.is_unit():
            out.append((step, transform))
    return out


def base_directions(J):
    if J.is_unit():
        raise UnitIdeal("the unit ideal has no base directions")
    return [step for step, _ in directions_with_transforms(J)]
