"""Base-point trees and everything derived from them.

The tree of an M-primary ideal enumerates the infinitely near points where
the transform stays proper.  A node whose transform has positive Zariski
number is a dicritical divisor; the numbers are the exponents of the
factorization of the integral closure into simple complete ideals.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arith.polynomials import BiPoly, squarefree_part
from .divisors import PrimeDivisor, RationalFn, dicritical_degree, residue_image
from .errors import DepthExceeded, NodeBudgetExceeded, ZeroInput
from .nearpoints import (
    LocalIdeal,
    QdtPath,
    directions_with_transforms,
    zariski_number,
)


@dataclass(frozen=True)
class TreeConfig:
    max_depth: int = 64
    max_nodes: int = 4096


@dataclass(eq=False)
class TreeNode:
    path: QdtPath
    ideal: LocalIdeal
    zariski: int
    children: list = field(default_factory=list)


@dataclass(eq=False)
class BasePointTree:
    ideal: LocalIdeal
    principal: BiPoly
    root: TreeNode | None

    def nodes(self):
        """All nodes, depth-first in canonical child order."""
        out = []
        stack = [self.root] if self.root is not None else []
        while stack:
            node = stack.pop()
            out.append(node)
            stack.extend(reversed(node.children))
        return out


@dataclass(eq=False)
class DicriticalRecord:
    divisor: PrimeDivisor
    index: int
    values: dict
    degree: int | None = None
    global_values: dict | None = None


@dataclass(eq=False)
class Factorization:
    principal: BiPoly
    exponents: tuple  # ((PrimeDivisor, positive exponent), ...) in tree order


def strip_principal(J):
    """(normalized generator GCD, residual LocalIdeal)."""
    principal = J.content()
    if principal.is_constant():
        return principal, J
    gens = [g.exact_div(principal) for g in J.gens]
    return principal, LocalIdeal(J.tower, J.vars, gens)


def base_point_tree(J, config=None):
    config = config or TreeConfig()
    principal, residual = strip_principal(J)
    if residual.is_unit():
        return BasePointTree(ideal=J, principal=principal, root=None)
    count = [0]

    def build(path, ideal):
        if path.length > config.max_depth:
            raise DepthExceeded("tree exceeds depth %d" % config.max_depth)
        count[0] += 1
        if count[0] > config.max_nodes:
            raise NodeBudgetExceeded("tree exceeds %d nodes" % config.max_nodes)
        node = TreeNode(path=path, ideal=ideal, zariski=zariski_number(ideal))
        for step, transform in directions_with_transforms(ideal):
            node.children.append(build(path.extended(step), transform))
        return node

    root = build(QdtPath(residual.tower, residual.vars), residual)
    return BasePointTree(ideal=J, principal=principal, root=root)


def dicritical_set(J, config=None):
    """One record per base point with positive Zariski number."""
    tree = base_point_tree(J, config)
    return records_from_tree(tree)


def records_from_tree(tree):
    out = []
    for node in tree.nodes():
        if node.zariski > 0:
            V = PrimeDivisor(node.path)
            a, b = V.coordinate_values()
            vals = {V.vars[0]: a, V.vars[1]: b}
            out.append(DicriticalRecord(divisor=V, index=node.zariski, values=vals))
    return out


def zariski_factorization(J, config=None):
    tree = base_point_tree(J, config)
    records = records_from_tree(tree)
    return Factorization(
        principal=tree.principal,
        exponents=tuple((r.divisor, r.index) for r in records),
    )


def dicritical_of_rational(z, config=None):
    """Dicritical divisors of a rational function, with degrees attached.

    Empty exactly when z or 1/z already lies in the local ring, i.e. when
    the reduced denominator or numerator is a local unit.
    """
    if z.is_zero():
        raise ZeroInput("the zero function has no dicritical divisors")
    if z.num.is_unit_at_origin() or z.den.is_unit_at_origin():
        return []
    J = LocalIdeal(z.tower, z.vars, [z.num, z.den])
    records = dicritical_set(J, config)
    for r in records:
        r.degree = dicritical_degree(r.divisor, z)
    return records


@dataclass(eq=False)
class SpecialPencilResult:
    decision: bool
    witness: int | None


def special_pencil_test(z):
    """Is the local part of the denominator a power of one order-1 element?

    When true, (regular parameter)^m * z lies in the ring for m = the
    order of the denominator, which is reported as the witness.
    """
    if z.is_zero():
        raise ZeroInput("the zero function is not a pencil generator")
    den = z.den
    if den.is_unit_at_origin():
        return SpecialPencilResult(decision=True, witness=0)
    reduced = squarefree_part(den)
    if reduced.ord_at_origin() == 1:
        return SpecialPencilResult(decision=True, witness=den.ord_at_origin())
    return SpecialPencilResult(decision=False, witness=None)


def rees_certificate(J, V):
    """Equal generator values plus a transcendental residue image.

    Sound and complete against dicritical_set for two-generated M-primary
    ideals: V is a Rees valuation of (a, b) exactly when a and b take the
    minimal value and a/b stays transcendental in the residue field.
    """
    if len(J.gens) != 2:
        raise ValueError("the certificate applies to two-generated ideals")
    a, b = J.gens
    if V.value(a) != V.value(b):
        return False
    image = residue_image(V, RationalFn(a, b))
    return not image.is_constant()
