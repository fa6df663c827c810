"""Prime divisors of a 2-dimensional regular local ring.

A prime divisor is the order valuation of the terminal ring of a QDT path.
Values of root elements are orders of polynomial pullbacks, the residue
field is the terminal tower, and the residue image of a value-zero rational
function is a rational function in tau = (second coordinate)/(first
coordinate) on the exceptional line.
"""

from __future__ import annotations

from .arith.linalg import kernel_basis
from .arith.polynomials import BiPoly, bipoly_gcd
from .errors import ConstantImage, NonzeroValue, ZeroInput
from .nearpoints import LocalIdeal, QdtPath, pullback_order


class RationalFn:
    """A ratio of polynomials, stored with the common factor removed."""

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        if den.is_zero():
            raise ZeroInput("denominator is zero")
        if num.is_zero():
            num = BiPoly.zero(den.tower, den.vars)
            den = BiPoly.one(den.tower, den.vars)
        else:
            g = bipoly_gcd(num, den)
            if not g.is_constant():
                num = num.exact_div(g)
                den = den.exact_div(g)
            # scale so the denominator is normalized
            lead = den.terms[min(den.terms)]
            inv = den.tower.inv(lead)
            num = num.scale(inv)
            den = den.scale(inv)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFn is immutable")

    @property
    def tower(self):
        return self.den.tower

    @property
    def vars(self):
        return self.den.vars

    def is_zero(self):
        return self.num.is_zero()

    def inverted(self):
        if self.num.is_zero():
            raise ZeroInput("cannot invert zero")
        return RationalFn(self.den, self.num)

    def __eq__(self, other):
        return (
            isinstance(other, RationalFn)
            and self.num.mul(other.den) == other.num.mul(self.den)
        )

    __hash__ = None

    def __repr__(self):
        return "RationalFn((%s)/(%s))" % (self.num.render(), self.den.render())

    def render(self):
        if self.den == BiPoly.one(self.tower, self.vars):
            return self.num.render()
        return "(%s)/(%s)" % (self.num.render(), self.den.render())


class PrimeDivisor:
    """ord of the terminal ring of a QDT path, as a valuation on the root."""

    __slots__ = ("path", "_coord_values", "_rmults", "_pbasis")

    def __init__(self, path):
        object.__setattr__(self, "path", path)
        object.__setattr__(self, "_coord_values", None)
        object.__setattr__(self, "_rmults", None)
        object.__setattr__(self, "_pbasis", None)

    def __setattr__(self, name, value):
        raise AttributeError("PrimeDivisor is immutable")

    def __eq__(self, other):
        return isinstance(other, PrimeDivisor) and self.path == other.path

    def __hash__(self):
        return hash(self.path)

    def __repr__(self):
        return "PrimeDivisor(%r)" % (self.path,)

    @property
    def tower(self):
        return self.path.tower

    @property
    def vars(self):
        return self.path.vars

    def value(self, f):
        return pullback_order(self.path, f)

    def value_rational(self, z):
        if z.is_zero():
            raise ZeroInput("the zero function has no value")
        return self.value(z.num) - self.value(z.den)

    def value_of_ideal(self, J):
        return min(self.value(g) for g in J.gens)

    def coordinate_values(self):
        if self._coord_values is None:
            T = self.path.tower
            u = BiPoly.variable(T, self.vars, self.vars[0])
            w = BiPoly.variable(T, self.vars, self.vars[1])
            object.__setattr__(self, "_coord_values", (self.value(u), self.value(w)))
        return self._coord_values

    def residue_degree(self):
        return self.path.terminal_tower.degree() // self.path.tower.degree()

    def intermediate_multiplicities(self):
        """v(M(R_i)) for each node: min order of the node's coordinates."""
        if self._rmults is None:
            out = []
            for i in range(self.path.length + 1):
                tail = self.path.suffix(i)
                T = tail.tower
                u = BiPoly.variable(T, self.vars, self.vars[0])
                w = BiPoly.variable(T, self.vars, self.vars[1])
                out.append(min(pullback_order(tail, u), pullback_order(tail, w)))
            object.__setattr__(self, "_rmults", tuple(out))
        return self._rmults

    def point_basis(self):
        """Multiplicity of the simple ideal of V at each node of the path.

        Downward recursion through the proximity relations, weighted by the
        residue degrees the path picks up.  Equal to the multiplicity
        sequence when no step extends the residue field.
        """
        if self._pbasis is None:
            path = self.path
            length = path.length
            prox = _proximity_sets(path)
            deg = [path.node_tower(i).degree() for i in range(length + 1)]
            m = [0] * (length + 1)
            m[length] = 1
            for i in range(length - 1, -1, -1):
                m[i] = sum(
                    (deg[j] // deg[i]) * m[j]
                    for j in range(i + 1, length + 1)
                    if i in prox[j]
                )
            object.__setattr__(self, "_pbasis", tuple(m))
        return self._pbasis

    def simple_ideal(self):
        return simple_ideal(self)


def _proximity_sets(path):
    """prox[t] = indices of the nodes that node t is proximate to.

    Tracks which exceptional curves pass through the current node as chart
    axes: blowing up leaves the new exceptional on the x axis of an affine
    chart and on the y axis of the infinity chart, while an older axis
    survives only when the step stays on it (x axis through the infinity
    chart, y axis through the affine chart at 0).
    """
    prox = {}
    axes = {}
    for t, step in enumerate(path.steps, start=1):
        carried = {}
        if step.kind == "affine":
            carried["x"] = t - 1
            if "y" in axes and step.c is not None:
                if path.node_tower(t - 1).is_zero(step.c):
                    carried["y"] = axes["y"]
        else:
            carried["y"] = t - 1
            if "x" in axes:
                carried["x"] = axes["x"]
        prox[t] = {t - 1} | set(carried.values())
        axes = carried
    return prox


class ResidueImage:
    """Reduced rational function in tau over the terminal residue tower."""

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("ResidueImage is immutable")

    @property
    def degree(self):
        return max(self.num.degree, self.den.degree)

    def is_constant(self):
        return self.degree == 0

    def __eq__(self, other):
        return (
            isinstance(other, ResidueImage)
            and self.num.mul(other.den) == other.num.mul(self.den)
        )

    __hash__ = None

    def render(self):
        if self.den.degree == 0 and self.den.coeffs == (self.den.tower.one(),):
            return self.num.render("tau")
        return "(%s)/(%s)" % (self.num.render("tau"), self.den.render("tau"))


def residue_image(V, z):
    """Image of a value-zero rational function in the divisor's residue field."""
    if z.is_zero():
        raise ZeroInput("the zero function has no residue image")
    fx, fy = V.path.substitution()
    T = V.path.terminal_tower
    num = z.num if z.num.tower == T else z.num.lift_to(T)
    den = z.den if z.den.tower == T else z.den.lift_to(T)
    A = num.substitute(fx, fy)
    B = den.substitute(fx, fy)
    if A.ord_at_origin() != B.ord_at_origin():
        raise NonzeroValue(
            "value %d differs from 0; the image is 0 or infinite"
            % (A.ord_at_origin() - B.ord_at_origin())
        )
    a = A.initial_form().dehomogenized()
    b = B.initial_form().dehomogenized()
    g = a.gcd(b)
    if g.degree > 0:
        a = a.exact_div(g)
        b = b.exact_div(g)
    inv = T.inv(b.lc())
    return ResidueImage(a.scale(inv), b.scale(inv))


def dicritical_degree(V, z):
    """[k'(tau) : k(zbar)] = residue degree times the reduced image degree."""
    image = residue_image(V, z)
    if image.is_constant():
        raise ConstantImage("the image is algebraic; V is not dicritical for z")
    return V.residue_degree() * image.degree


def intermediate_multiplicities(V):
    return V.intermediate_multiplicities()


def simple_ideal(V):
    """Generators of the simple complete ideal of V in the root ring.

    zeta = {f : v(f) >= c} with c the pairing of the point basis of zeta
    against the node multiplicities of v.  Membership in zeta is linear on
    coefficients once a degree bound is in hand: M^D lies inside zeta for
    D = ceil(c / v(M)), so generators are a kernel over monomials of degree
    < D plus all monomials of degree D, minimalized by Nakayama.  The result
    is checked by refactoring.
    """
    path = V.path
    T = path.tower
    vars = path.vars
    r = V.intermediate_multiplicities()
    c = sum(a * b for a, b in zip(V.point_basis(), r))
    a, b = V.coordinate_values()
    mu = min(a, b)
    D = -(-c // mu)
    fx, fy = path.substitution()
    term = path.terminal_tower
    ratio = term.degree() // T.degree()

    columns = [
        (i, j) for j in range(D) for i in range(D - j)
    ]
    columns.sort()
    xpows = [BiPoly.one(term, vars)]
    ypows = [BiPoly.one(term, vars)]
    for _ in range(D - 1):
        xpows.append(xpows[-1].mul(fx))
        ypows.append(ypows[-1].mul(fy))
    conditions = {}
    for e in columns:
        i, j = e
        pb = xpows[i].mul(ypows[j])
        for key, coeff in pb.terms.items():
            if key[0] + key[1] >= c:
                continue
            comps = term.components_over(T, coeff) if ratio > 1 else (coeff,)
            for k, comp in enumerate(comps):
                if T.is_zero(comp):
                    continue
                conditions.setdefault((key, k), {})[e] = comp
    rows = [conditions[k] for k in sorted(conditions)]
    kernel = kernel_basis(T, rows, columns)

    gens = []
    for vec in kernel:
        gens.append(BiPoly(T, vars, dict(vec)))
    for i in range(D + 1):
        gens.append(BiPoly.monomial(T, vars, (i, D - i)))

    from .idealcalc import minimal_generators

    ideal = minimal_generators(LocalIdeal(T, vars, gens), frame_degree=D)

    from .zariski import zariski_factorization

    fact = zariski_factorization(ideal)
    if len(fact.exponents) != 1 or fact.exponents[0][1] != 1:
        raise AssertionError("candidate simple ideal does not factor simply")
    if fact.exponents[0][0].path != path:
        raise AssertionError("simple ideal round trip changed the path")
    return ideal
