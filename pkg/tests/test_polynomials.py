import pytest

from dicritical.arith import QQ, BiPoly, FieldTower, UniPoly, bipoly_gcd, homogeneous_gcd, squarefree_part
from dicritical.errors import SquarefreeUnsupported, ZeroPolynomial

F5 = FieldTower.prime_field(5)
V = ("x", "y")


def up(*coeffs):
    return UniPoly(QQ, [QQ.from_int(c) for c in coeffs])


def xy(tower=QQ):
    return (
        BiPoly.variable(tower, V, "x"),
        BiPoly.variable(tower, V, "y"),
    )


class TestUniPoly:
    def test_divmod(self):
        f = up(-1, 0, 0, 1)  # t^3 - 1
        g = up(-1, 1)  # t - 1
        q, r = f.divmod(g)
        assert r.is_zero()
        assert q == up(1, 1, 1)

    def test_gcd_is_monic(self):
        f = up(0, 2, 2)  # 2t^2 + 2t
        g = up(0, 0, 4)
        assert f.gcd(g) == up(0, 1)

    def test_compose_and_shift(self):
        f = up(1, 2, 1)  # (t+1)^2
        assert f.compose(up(-1, 1)) == up(0, 0, 1)
        assert f.shift(QQ.from_int(-1)) == up(0, 0, 1)

    def test_eval(self):
        f = up(3, 0, 1)
        assert QQ.eq(f.eval(QQ.from_int(2)), QQ.from_int(7))

    def test_pow_mod(self):
        f = UniPoly(F5, [0, 1])  # t
        m = UniPoly(F5, [3, 0, 1])  # t^2 + 3
        r = f.pow_mod(25, m)
        # t^25 = t in F25 = F5[t]/(t^2+3)
        assert r == f

    def test_render(self):
        assert up(-1, 0, 2).render("t") == "2*t^2 - 1"


class TestBiPoly:
    def test_substitute(self):
        x, y = xy()
        f = x.pow(2).add(y)
        g = f.substitute(y, x.mul(y))  # x -> y, y -> x*y
        assert g == y.pow(2).add(x.mul(y))

    def test_ord_and_forms(self):
        x, y = xy()
        f = x.pow(3).add(x.mul(y)).add(y.pow(4))
        assert f.ord_at_origin() == 2
        assert f.initial_form() == x.mul(y)
        assert f.degree_form() == y.pow(4)
        with pytest.raises(ZeroPolynomial):
            BiPoly.zero(QQ, V).ord_at_origin()

    def test_exact_div(self):
        x, y = xy()
        f = x.pow(2).sub(y.pow(2))
        g = x.sub(y)
        assert f.exact_div(g) == x.add(y)
        with pytest.raises(ValueError):
            f.exact_div(x)

    def test_normalized_scales_least_exponent(self):
        x, y = xy()
        f = x.mul(y).scale(QQ.from_int(-3)).add(x.pow(3).scale(QQ.from_int(6)))
        n = f.normalized()
        assert n.coeff(1, 1) == QQ.one()

    def test_unit_detection(self):
        x, y = xy()
        assert x.add(BiPoly.one(QQ, V)).is_unit_at_origin()
        assert not x.is_unit_at_origin()

    def test_dehomogenized(self):
        x, y = xy()
        h = x.pow(2).mul(y).add(y.pow(3))  # homogeneous of degree 3
        d = h.dehomogenized()
        assert d == UniPoly(QQ, [0, 1, 0, 1])


def test_bipoly_gcd():
    x, y = xy()
    f = x.pow(2).sub(y.pow(2)).mul(x.add(y.pow(3)))
    g = x.add(y).mul(x.pow(2))
    d = bipoly_gcd(f, g)
    assert d == x.add(y)


def test_bipoly_gcd_monomials():
    x, y = xy()
    f = x.pow(3).mul(y)
    g = x.mul(y.pow(2)).scale(QQ.from_int(7))
    assert bipoly_gcd(f, g) == x.mul(y)


def test_squarefree_part():
    x, y = xy()
    f = x.add(y).pow(3).mul(x.sub(y))
    s = squarefree_part(f)
    assert s == x.add(y).mul(x.sub(y)).normalized()


def test_squarefree_monomial_any_char():
    x, y = xy(F5)
    xf = BiPoly.variable(F5, V, "x")
    f = xf.pow(25)
    assert squarefree_part(f) == xf


def test_squarefree_small_char_rejected():
    xf = BiPoly.variable(F5, V, "x")
    yf = BiPoly.variable(F5, V, "y")
    f = xf.pow(5).add(yf.pow(5)).add(xf.mul(yf))
    with pytest.raises(SquarefreeUnsupported):
        squarefree_part(f)


def test_homogeneous_gcd():
    x, y = xy()
    forms = [x.pow(2).mul(y), x.mul(y.pow(2))]
    g = homogeneous_gcd(forms)
    assert g == x.mul(y)
    only = homogeneous_gcd([x.pow(2).sub(y.pow(2))])
    assert only == x.pow(2).sub(y.pow(2)).normalized()
    assert only.coeff(0, 2) == QQ.one()


def test_homogeneous_gcd_rejects_inhomogeneous():
    x, y = xy()
    with pytest.raises(ValueError):
        homogeneous_gcd([x.add(y.pow(2))])


def test_render_order():
    x, y = xy()
    f = y.pow(2).sub(x.pow(3))
    assert f.render() == "-x^3 + y^2"
