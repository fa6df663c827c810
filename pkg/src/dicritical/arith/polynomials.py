"""Exact univariate and sparse bivariate polynomials over a field tower.

UniPoly stores coefficients low to high and trims trailing zeros.  BiPoly is
a sparse exponent dict keyed by (i, j).  Both are value objects: operations
return fresh instances and never mutate their arguments.
"""

from __future__ import annotations

from .fields import FieldTower
from ..errors import EmptyInput, SquarefreeUnsupported, ZeroPolynomial


class UniPoly:
    """Dense univariate polynomial over a FieldTower."""

    __slots__ = ("tower", "coeffs")

    def __init__(self, tower, coeffs):
        coeffs = list(coeffs)
        while coeffs and tower.is_zero(coeffs[-1]):
            coeffs.pop()
        object.__setattr__(self, "tower", tower)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def zero(cls, tower):
        return cls(tower, ())

    @classmethod
    def one(cls, tower):
        return cls(tower, (tower.one(),))

    @classmethod
    def constant(cls, tower, c):
        return cls(tower, (c,))

    @classmethod
    def gen(cls, tower):
        return cls(tower, (tower.zero(), tower.one()))

    def is_zero(self):
        return not self.coeffs

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def lc(self):
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.tower.zero()

    def __eq__(self, other):
        return (
            isinstance(other, UniPoly)
            and self.tower == other.tower
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.tower, self.coeffs))

    def __repr__(self):
        return "UniPoly(%s)" % self.render("t")

    def add(self, other):
        T = self.tower
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(T, [T.add(self.coeff(k), other.coeff(k)) for k in range(n)])

    def sub(self, other):
        T = self.tower
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(T, [T.sub(self.coeff(k), other.coeff(k)) for k in range(n)])

    def neg(self):
        T = self.tower
        return UniPoly(T, [T.neg(c) for c in self.coeffs])

    def scale(self, c):
        T = self.tower
        return UniPoly(T, [T.mul(c, a) for a in self.coeffs])

    def mul(self, other):
        T = self.tower
        if self.is_zero() or other.is_zero():
            return UniPoly.zero(T)
        out = [T.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if T.is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = T.add(out[i + j], T.mul(a, b))
        return UniPoly(T, out)

    def mul_xk(self, k):
        if self.is_zero():
            return self
        return UniPoly(self.tower, (self.tower.zero(),) * k + self.coeffs)

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        T = self.tower
        rem = list(self.coeffs)
        d = other.degree
        inv_lc = T.inv(other.lc())
        quo = [T.zero()] * max(len(rem) - d, 0)
        while len(rem) - 1 >= d:
            while rem and T.is_zero(rem[-1]):
                rem.pop()
            if len(rem) - 1 < d:
                break
            k = len(rem) - 1 - d
            q = T.mul(rem[-1], inv_lc)
            quo[k] = q
            for i, b in enumerate(other.coeffs):
                rem[k + i] = T.sub(rem[k + i], T.mul(q, b))
        return UniPoly(T, quo), UniPoly(T, rem)

    def mod(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("division is not exact")
        return q

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(self.tower.inv(self.lc()))

    def gcd(self, other):
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.mod(b)
        return a.monic()

    def derivative(self):
        T = self.tower
        return UniPoly(
            T, [T.mul(T.from_int(k), c) for k, c in enumerate(self.coeffs)][1:]
        )

    def eval(self, point):
        T = self.tower
        acc = T.zero()
        for c in reversed(self.coeffs):
            acc = T.add(T.mul(acc, point), c)
        return acc

    def compose(self, inner):
        T = self.tower
        acc = UniPoly.zero(T)
        for c in reversed(self.coeffs):
            acc = acc.mul(inner).add(UniPoly.constant(T, c))
        return acc

    def pow(self, e):
        if e < 0:
            raise ValueError("negative exponent")
        acc = UniPoly.one(self.tower)
        base = self
        while e:
            if e & 1:
                acc = acc.mul(base)
            base = base.mul(base)
            e >>= 1
        return acc

    def pow_mod(self, e, modulus):
        if e < 0:
            raise ValueError("negative exponent")
        acc = UniPoly.one(self.tower)
        base = self.mod(modulus)
        while e:
            if e & 1:
                acc = acc.mul(base).mod(modulus)
            base = base.mul(base).mod(modulus)
            e >>= 1
        return acc

    def shift(self, c):
        # p(t + c) via composition with t + c
        T = self.tower
        return self.compose(UniPoly(T, (c, T.one())))

    def render(self, varname):
        T = self.tower
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeff(k)
            if T.is_zero(c):
                continue
            parts.append(_term_str(T, c, ((varname, k),), first=not parts))
        return " ".join(parts)


def _coeff_str(tower, c):
    s = tower.render(c)
    if any(ch in s[1:] for ch in "+-") or " " in s:
        return "(" + s + ")", False
    return s, s.startswith("-")


def _term_str(tower, c, powers, first):
    """One rendered summand; powers is ((name, exp), ...) with exp >= 0."""
    body, negative = _coeff_str(tower, c)
    if negative:
        body = body[1:]
    factors = []
    for name, e in powers:
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append("%s^%d" % (name, e))
    if factors:
        if body == "1":
            body = "*".join(factors)
        else:
            body = body + "*" + "*".join(factors)
    if first:
        return "-" + body if negative else body
    return ("- " if negative else "+ ") + body


class BiPoly:
    """Sparse bivariate polynomial: {(i, j): coeff} with named variables."""

    __slots__ = ("tower", "vars", "terms")

    def __init__(self, tower, vars, terms):
        vars = tuple(vars)
        if len(vars) != 2 or vars[0] == vars[1]:
            raise ValueError("need two distinct variable names")
        clean = {}
        for key, c in terms.items():
            i, j = key
            if i < 0 or j < 0:
                raise ValueError("negative exponent")
            if not tower.is_zero(c):
                clean[(i, j)] = c
        object.__setattr__(self, "tower", tower)
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    @classmethod
    def zero(cls, tower, vars):
        return cls(tower, vars, {})

    @classmethod
    def one(cls, tower, vars):
        return cls(tower, vars, {(0, 0): tower.one()})

    @classmethod
    def constant(cls, tower, vars, c):
        return cls(tower, vars, {(0, 0): c})

    @classmethod
    def from_int(cls, tower, vars, n):
        return cls(tower, vars, {(0, 0): tower.from_int(n)})

    @classmethod
    def variable(cls, tower, vars, name):
        vars = tuple(vars)
        if name == vars[0]:
            return cls(tower, vars, {(1, 0): tower.one()})
        if name == vars[1]:
            return cls(tower, vars, {(0, 1): tower.one()})
        raise ValueError("unknown variable %r" % name)

    @classmethod
    def monomial(cls, tower, vars, exps, c=None):
        if c is None:
            c = tower.one()
        return cls(tower, vars, {tuple(exps): c})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, BiPoly)
            and self.tower == other.tower
            and self.vars == other.vars
            and self.terms == other.terms
        )

    __hash__ = None

    def __repr__(self):
        return "BiPoly(%s)" % self.render()

    def coeff(self, i, j):
        return self.terms.get((i, j), self.tower.zero())

    def add(self, other):
        T = self.tower
        out = dict(self.terms)
        for key, c in other.terms.items():
            if key in out:
                out[key] = T.add(out[key], c)
            else:
                out[key] = c
        return BiPoly(T, self.vars, out)

    def sub(self, other):
        return self.add(other.neg())

    def neg(self):
        T = self.tower
        return BiPoly(T, self.vars, {k: T.neg(c) for k, c in self.terms.items()})

    def scale(self, c):
        T = self.tower
        return BiPoly(T, self.vars, {k: T.mul(c, a) for k, a in self.terms.items()})

    def mul(self, other):
        T = self.tower
        out = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                key = (i1 + i2, j1 + j2)
                prod = T.mul(a, b)
                if key in out:
                    out[key] = T.add(out[key], prod)
                else:
                    out[key] = prod
        return BiPoly(T, self.vars, out)

    def mul_monomial(self, exps, c=None):
        T = self.tower
        di, dj = exps
        if c is None:
            return BiPoly(T, self.vars, {(i + di, j + dj): a for (i, j), a in self.terms.items()})
        return BiPoly(
            T, self.vars, {(i + di, j + dj): T.mul(c, a) for (i, j), a in self.terms.items()}
        )

    def pow(self, e):
        if e < 0:
            raise ValueError("negative exponent")
        acc = BiPoly.one(self.tower, self.vars)
        base = self
        while e:
            if e & 1:
                acc = acc.mul(base)
            base = base.mul(base)
            e >>= 1
        return acc

    def __add__(self, other):
        return self.add(other)

    def __sub__(self, other):
        return self.sub(other)

    def __mul__(self, other):
        return self.mul(other)

    def __pow__(self, e):
        return self.pow(e)

    def __neg__(self):
        return self.neg()

    @property
    def total_degree(self):
        if not self.terms:
            return -1
        return max(i + j for i, j in self.terms)

    def degree_in(self, axis):
        if not self.terms:
            return -1
        return max(k[axis] for k in self.terms)

    def ord_at_origin(self):
        """Order of vanishing at the origin (min total degree of a term)."""
        if not self.terms:
            raise ZeroPolynomial("order of the zero polynomial is undefined")
        return min(i + j for i, j in self.terms)

    def initial_form(self):
        d = self.ord_at_origin()
        return BiPoly(
            self.tower, self.vars, {k: c for k, c in self.terms.items() if k[0] + k[1] == d}
        )

    def degree_form(self):
        if not self.terms:
            raise ZeroPolynomial("degree form of the zero polynomial is undefined")
        d = self.total_degree
        return BiPoly(
            self.tower, self.vars, {k: c for k, c in self.terms.items() if k[0] + k[1] == d}
        )

    def constant_term(self):
        return self.coeff(0, 0)

    def is_unit_at_origin(self):
        return not self.tower.is_zero(self.coeff(0, 0))

    def is_constant(self):
        return all(k == (0, 0) for k in self.terms)

    def is_monomial(self):
        return len(self.terms) == 1

    def is_homogeneous(self):
        if not self.terms:
            return True
        degs = {i + j for i, j in self.terms}
        return len(degs) == 1

    def derivative(self, axis):
        T = self.tower
        out = {}
        for (i, j), c in self.terms.items():
            e = (i, j)[axis]
            if e == 0:
                continue
            key = (i - 1, j) if axis == 0 else (i, j - 1)
            val = T.mul(T.from_int(e), c)
            if key in out:
                out[key] = T.add(out[key], val)
            else:
                out[key] = val
        return BiPoly(T, self.vars, out)

    def substitute(self, px, py):
        """Value of self with vars[0] := px and vars[1] := py."""
        if px.tower != self.tower or py.tower != self.tower:
            raise ValueError("substitution requires matching towers")
        if px.vars != py.vars:
            raise ValueError("substitution targets disagree on variables")
        T = self.tower
        max_i = self.degree_in(0)
        max_j = self.degree_in(1)
        xpows = [BiPoly.one(T, px.vars)]
        for _ in range(max(max_i, 0)):
            xpows.append(xpows[-1].mul(px))
        ypows = [BiPoly.one(T, py.vars)]
        for _ in range(max(max_j, 0)):
            ypows.append(ypows[-1].mul(py))
        acc = BiPoly.zero(T, px.vars)
        for (i, j), c in self.terms.items():
            acc = acc.add(xpows[i].mul(ypows[j]).scale(c))
        return acc

    def eval(self, ax, ay):
        T = self.tower
        acc = T.zero()
        xpow = {0: T.one()}
        ypow = {0: T.one()}

        def power(cache, base, e):
            if e not in cache:
                cache[e] = T.mul(power(cache, base, e - 1), base)
            return cache[e]

        for (i, j), c in self.terms.items():
            acc = T.add(acc, T.mul(c, T.mul(power(xpow, ax, i), power(ypow, ay, j))))
        return acc

    def lift_to(self, bigger):
        T = self.tower
        return BiPoly(
            bigger, self.vars, {k: bigger.lift_from(T, c) for k, c in self.terms.items()}
        )

    def with_vars(self, newvars):
        return BiPoly(self.tower, newvars, dict(self.terms))

    def swap_vars(self):
        return BiPoly(
            self.tower,
            (self.vars[1], self.vars[0]),
            {(j, i): c for (i, j), c in self.terms.items()},
        )

    def normalized(self):
        """Scale so the lex-least exponent has coefficient one."""
        if not self.terms:
            return self
        key = min(self.terms)
        return self.scale(self.tower.inv(self.terms[key]))

    def exact_div(self, divisor):
        """Exact division in K[x, y]; raises ValueError when not exact."""
        T = self.tower
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return self
        fy = self.to_ylist()
        gy = divisor.to_ylist()
        dg = len(gy) - 1
        if dg == 0:
            q = [p.exact_div(gy[0]) for p in fy]
            return BiPoly.from_ylist(T, self.vars, q)
        quo = [UniPoly.zero(T)] * max(len(fy) - dg, 0)
        rem = list(fy)
        while len(rem) - 1 >= dg:
            rem = _ylist_trim(rem)
            if len(rem) - 1 < dg:
                break
            k = len(rem) - 1 - dg
            t = rem[-1].exact_div(gy[-1])
            quo[k] = t
            for i in range(dg + 1):
                rem[k + i] = rem[k + i].sub(t.mul(gy[i]))
            rem = rem[:-1]
        if _ylist_trim(rem):
            raise ValueError("division is not exact")
        return BiPoly.from_ylist(T, self.vars, quo)

    def to_ylist(self):
        """Recursive view: list of UniPoly in vars[0], indexed by vars[1] power."""
        T = self.tower
        dy = self.degree_in(1)
        if dy < 0:
            return []
        rows = [dict() for _ in range(dy + 1)]
        for (i, j), c in self.terms.items():
            rows[j][i] = c
        out = []
        for row in rows:
            n = max(row) + 1 if row else 0
            out.append(UniPoly(T, [row.get(k, T.zero()) for k in range(n)]))
        while out and out[-1].is_zero():
            out.pop()
        return out

    @classmethod
    def from_ylist(cls, tower, vars, ylist):
        terms = {}
        for j, p in enumerate(ylist):
            for i, c in enumerate(p.coeffs):
                if not tower.is_zero(c):
                    terms[(i, j)] = c
        return cls(tower, vars, terms)

    def as_unipoly_in(self, axis):
        if self.degree_in(1 - axis) > 0:
            raise ValueError("polynomial involves the other variable")
        T = self.tower
        d = self.degree_in(axis)
        coeffs = [T.zero()] * (d + 1)
        for key, c in self.terms.items():
            coeffs[key[axis]] = c
        return UniPoly(T, coeffs)

    @classmethod
    def from_unipoly(cls, p, vars, axis):
        terms = {}
        for k, c in enumerate(p.coeffs):
            if not p.tower.is_zero(c):
                terms[(k, 0) if axis == 0 else (0, k)] = c
        return cls(p.tower, vars, terms)

    def dehomogenized(self):
        """For a homogeneous form h, the UniPoly h(1, t) in vars[1]."""
        if not self.is_homogeneous():
            raise ValueError("dehomogenization needs a homogeneous form")
        T = self.tower
        if not self.terms:
            return UniPoly.zero(T)
        d = self.total_degree
        coeffs = [T.zero()] * (d + 1)
        for (i, j), c in self.terms.items():
            coeffs[j] = c
        return UniPoly(T, coeffs)

    @classmethod
    def homogenized(cls, tower, vars, p, degree):
        """Inverse of dehomogenized: u^degree * p(w/u) for p of degree <= degree."""
        if p.degree > degree:
            raise ValueError("degree too small to homogenize")
        terms = {}
        for j, c in enumerate(p.coeffs):
            if not tower.is_zero(c):
                terms[(degree - j, j)] = c
        return cls(tower, vars, terms)

    def render(self):
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=lambda k: (k[0] + k[1], k[0]), reverse=True)
        parts = []
        for i, j in keys:
            powers = ((self.vars[0], i), (self.vars[1], j))
            parts.append(_term_str(self.tower, self.terms[(i, j)], powers, first=not parts))
        return " ".join(parts)

    def to_data(self):
        keys = sorted(self.terms)
        return [[list(k), self.tower.element_to_data(self.terms[k])] for k in keys]

    @classmethod
    def from_data(cls, tower, vars, data):
        terms = {}
        for key, cdata in data:
            terms[tuple(key)] = tower.element_from_data(cdata)
        return cls(tower, vars, terms)


def _ylist_content(ylist):
    """Monic gcd in K[x] of the coefficients of a K[x][y] polynomial."""
    g = None
    for p in ylist:
        g = p if g is None else g.gcd(p)
        if g.degree == 0:
            break
    return g.monic()


def _ylist_primitive(ylist):
    cont = _ylist_content(ylist)
    if cont.degree == 0:
        return [p.scale(p.tower.inv(cont.coeff(0))) for p in ylist], cont
    return [p.exact_div(cont) for p in ylist], cont


def _ylist_scale(ylist, q):
    return [p.mul(q) for p in ylist]


def _ylist_trim(ylist):
    ylist = list(ylist)
    while ylist and ylist[-1].is_zero():
        ylist.pop()
    return ylist


def _ylist_prem(f, g):
    """Pseudo-remainder of f by g in K[x][y]; both nonempty, deg f >= deg g."""
    f = list(f)
    dg = len(g) - 1
    lcg = g[-1]
    steps = len(f) - len(g) + 1
    for _ in range(steps):
        df = len(f) - 1
        top = f[-1]
        f = _ylist_scale(f, lcg)
        for k in range(dg + 1):
            f[df - dg + k] = f[df - dg + k].sub(top.mul(g[k]))
        f = _ylist_trim(f)
        if len(f) - 1 < dg:
            break
    return f


def bipoly_gcd(f, g):
    """Gcd in K[x, y], normalized so the lex-least exponent has coefficient 1."""
    if f.is_zero():
        return g.normalized()
    if g.is_zero():
        return f.normalized()
    T = f.tower
    if f.is_monomial() and g.is_monomial():
        (i1, j1), (i2, j2) = next(iter(f.terms)), next(iter(g.terms))
        return BiPoly.monomial(T, f.vars, (min(i1, i2), min(j1, j2)))
    fy = f.to_ylist()
    gy = g.to_ylist()
    if len(fy) == 1 and len(gy) == 1:
        u = fy[0].gcd(gy[0])
        return BiPoly.from_unipoly(u, f.vars, 0).normalized()
    fp, fc = _ylist_primitive(fy)
    gp, gc = _ylist_primitive(gy)
    cont = fc.gcd(gc)
    a, b = fp, gp
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _ylist_prem(a, b)
        if not r:
            a = b
            break
        a, b = b, _ylist_primitive(r)[0]
    prim, _ = _ylist_primitive(a)
    contpoly = BiPoly.from_unipoly(cont, f.vars, 0)
    return BiPoly.from_ylist(T, f.vars, prim).mul(contpoly).normalized()


def squarefree_part(f):
    """Product of the distinct irreducible factors of f, up to a scalar.

    Uses derivatives, so it requires characteristic zero or characteristic
    larger than the total degree.
    """
    if f.is_zero():
        raise ZeroPolynomial("squarefree part of the zero polynomial is undefined")
    if f.is_monomial():
        (i, j), _ = next(iter(f.terms.items()))
        return BiPoly.monomial(f.tower, f.vars, (min(i, 1), min(j, 1)))
    p = f.tower.char
    if p and p <= f.total_degree:
        raise SquarefreeUnsupported(
            "squarefree part needs characteristic 0 or > %d, got %d"
            % (f.total_degree, p)
        )
    if f.is_constant():
        return BiPoly.one(f.tower, f.vars)
    fx = f.derivative(0)
    fy = f.derivative(1)
    rep = bipoly_gcd(bipoly_gcd(f, fx), fy)
    return f.exact_div(rep).normalized()


def homogeneous_gcd(forms):
    """Gcd of a list of nonzero homogeneous forms, as a homogeneous form.

    The result is normalized (lex-least exponent has coefficient 1); its
    degree is the s of the Zariski number d - s.
    """
    forms = list(forms)
    if not forms:
        raise EmptyInput("homogeneous gcd of an empty list")
    tower = forms[0].tower
    vars = forms[0].vars
    min_u = None
    min_w = None
    reduced = []
    for h in forms:
        if h.is_zero():
            raise ZeroPolynomial("homogeneous gcd of a zero form")
        if not h.is_homogeneous():
            raise ValueError("inputs must be homogeneous")
        a = min(i for i, j in h.terms)
        b = min(j for i, j in h.terms)
        min_u = a if min_u is None else min(min_u, a)
        min_w = b if min_w is None else min(min_w, b)
        stripped = BiPoly(
            tower, vars, {(i - a, j - b): c for (i, j), c in h.terms.items()}
        )
        reduced.append(stripped.dehomogenized())
    g = reduced[0]
    for p in reduced[1:]:
        g = g.gcd(p)
        if g.degree == 0:
            break
    core = BiPoly.homogenized(tower, vars, g, g.degree)
    return core.mul_monomial((min_u, min_w)).normalized()
