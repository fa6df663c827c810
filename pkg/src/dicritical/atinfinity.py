"""Points of a polynomial at infinity and the partition of its dicriticals.

Each projective zero of the degree form gets a local chart at infinity in
which the polynomial becomes numerator / z^N for the chart's reciprocal
coordinate z.  The dicritical divisors of the polynomial are the dicritical
divisors of these local rational functions, taken over all the points.
"""

from dataclasses import dataclass

from .arith import BiPoly, factor_univariate
from .arith.factor import extend
from .divisors import RationalFn
from .errors import SquarefreeUnsupported, ZeroPolynomial
from .nearpoints import LocalIdeal
from .zariski import dicritical_of_rational, special_pencil_test

FINITE_CHART = ("z", "y")
VERTICAL_CHART = ("z", "x")


@dataclass(eq=False)
class InfinityPoint:
    """A zero of the degree form on the line at infinity, with its chart."""

    kind: str  # "finite" for [1:c:0], "vertical" for [0:1:0]
    tower: object
    c: object  # finite points only
    minpoly: object  # UniPoly when the point needed a tower extension
    chart_vars: tuple
    input_vars: tuple
    z: RationalFn
    ideal: LocalIdeal

    @property
    def extension_degree(self):
        return self.minpoly.degree if self.minpoly is not None else 1

    def label(self):
        if self.kind == "vertical":
            return "[0:1:0]"
        return "[1:%s:0]" % self.tower.render(self.c)


@dataclass(eq=False)
class InfinityReport:
    f: BiPoly
    degree: int
    degree_form: BiPoly
    entries: tuple  # ((InfinityPoint, (DicriticalRecord, ...)), ...)

    @property
    def total(self):
        return sum(len(records) for _, records in self.entries)


def _finite_numerator(f, tower, c, n):
    """z^N * f(1/z, (y+c)/z) as a polynomial in the chart coordinates."""
    z = BiPoly.variable(tower, FINITE_CHART, "z")
    shifted = BiPoly.variable(tower, FINITE_CHART, "y").add(
        BiPoly.constant(tower, FINITE_CHART, c)
    )
    out = BiPoly.zero(tower, FINITE_CHART)
    ypows = [BiPoly.one(tower, FINITE_CHART)]
    for _ in range(max(j for _, j in f.terms) if f.terms else 0):
        ypows.append(ypows[-1].mul(shifted))
    for (i, j), a in sorted(f.terms.items()):
        term = ypows[j].mul_monomial((n - i - j, 0), tower.lift_from(f.tower, a))
        out = out.add(term)
    return out


def _vertical_numerator(f, n):
    """z^N * f(x/z, 1/z) in the chart at [0:1:0]."""
    terms = {(n - i - j, i): a for (i, j), a in f.terms.items()}
    return BiPoly(f.tower, VERTICAL_CHART, terms)


def points_at_infinity(f):
    """One point per irreducible factor of the degree form, vertical last."""
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial has no degree form")
    if f.is_constant():
        raise ZeroPolynomial("a constant has no points at infinity")
    n = f.total_degree
    phi = f.degree_form()
    core = phi.dehomogenized()
    points = []
    if core.degree >= 1:
        _, factors = factor_univariate(core)
    else:
        factors = []
    for zeta, _ in factors:
        if zeta.degree == 1:
            tower = f.tower
            c = tower.neg(zeta.coeff(0))
            minpoly = None
        else:
            if f.tower.char and zeta.derivative().is_zero():
                raise SquarefreeUnsupported(
                    "inseparable point at infinity is not supported"
                )
            name = "a%d" % (f.tower.height + 1)
            tower = extend(f.tower, zeta, name, check=False)
            c = tower.generator()
            minpoly = zeta
        num = _finite_numerator(f, tower, c, n)
        den = BiPoly.monomial(tower, FINITE_CHART, (n, 0))
        points.append(
            _package(f, "finite", tower, c, minpoly, FINITE_CHART, num, den)
        )
    if core.degree < n:
        num = _vertical_numerator(f, n)
        den = BiPoly.monomial(f.tower, VERTICAL_CHART, (n, 0))
        points.append(
            _package(f, "vertical", f.tower, None, None, VERTICAL_CHART, num, den)
        )
    return points


def _package(f, kind, tower, c, minpoly, chart, num, den):
    z = RationalFn(num, den)
    ideal = LocalIdeal(tower, chart, [num, den])
    assert ideal.is_mprimary()
    assert special_pencil_test(z).decision
    point = InfinityPoint(
        kind=kind,
        tower=tower,
        c=c,
        minpoly=minpoly,
        chart_vars=chart,
        input_vars=f.vars,
        z=z,
        ideal=ideal,
    )
    return point


def dicriticals_at_infinity(f, config=None):
    """The partition of f's dicritical divisors among its points at infinity."""
    points = points_at_infinity(f)
    entries = []
    for point in points:
        records = dicritical_of_rational(point.z, config)
        for record in records:
            record.global_values = _global_values(point, record.divisor)
        entries.append((point, tuple(records)))
    return InfinityReport(
        f=f, degree=f.total_degree, degree_form=f.degree_form(), entries=tuple(entries)
    )


def _global_values(point, divisor):
    """Values of the input coordinates under the divisor, via the chart."""
    tower = point.tower
    chart = point.chart_vars
    vz = divisor.value(BiPoly.variable(tower, chart, "z"))
    second = BiPoly.variable(tower, chart, chart[1])
    if point.kind == "finite":
        shifted = second.add(BiPoly.constant(tower, chart, point.c))
        vx = -vz
        vy = divisor.value(shifted) - vz
    else:
        vy = -vz
        vx = divisor.value(second) - vz
    x_name, y_name = point.input_vars
    return {x_name: vx, y_name: vy}
