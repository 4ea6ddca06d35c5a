"""Automorphic-element verification and substitution homomorphisms.

A point for substitution is a list of witnesses: ring elements that commute
pairwise, each automorphic over the base division algebra with respect to
the corresponding ring twist.  Substitution sends t_i to the i-th element
and fixes the base algebra, and is the unique such ring homomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import divalg
from .divalg import Auto
from .errors import (
    AutomorphismMismatch,
    DegreeBoundViolated,
    NonCentralRing,
    NonCommutingPoint,
    NotAutomorphic,
    NotInF,
    ZeroElement,
)
from .skewpoly import SkewPoly


@dataclass(frozen=False, eq=True)
class Witness:
    """A ring element paired with the automorphism it twists the base by."""

    element: object
    auto: Auto


def element_alg(a) -> str:
    ring = getattr(a, "ring", None)
    if ring is not None:
        return ring.alg
    return a.alg


def check_automorphic(a) -> Auto:
    """The unique twist of an automorphic element, via term separation.

    Distinct monomials are left linearly independent in every shipped ring,
    so a sum is automorphic iff all of its terms twist by the same
    automorphism.  Raises NotAutomorphic with the first conflicting pair.
    """
    twists = a.term_twists()
    if not twists:
        raise ZeroElement("the zero element is not automorphic")
    first, _ = twists[0]
    for tw, info in twists[1:]:
        if not divalg.auto_equal(tw, first):
            raise NotAutomorphic(
                f"terms twist by different automorphisms: {twists[0][1]} vs {info}",
                twist_a=first,
                twist_b=tw,
            )
    return first


def verify_witness(w: Witness) -> None:
    """Check a b = auto(b) a on the algebra's generating set."""
    alg = element_alg(w.element)
    if w.auto.alg != alg:
        raise AutomorphismMismatch("witness automorphism on the wrong algebra")
    for b in divalg.generating_set(alg):
        lhs = w.element * w.element.embed(b)
        rhs = w.element.embed(w.auto.apply(b)) * w.element
        if lhs != rhs:
            raise AutomorphismMismatch(
                f"element is not automorphic with respect to the claimed twist at {b!r}"
            )


def substitute(f: SkewPoly, point) -> object:
    """Image of f under the homomorphism fixing D and sending t_i to point[i].

    point is a list of Witness values living in a common ring S.
    """
    ring = f.ring
    if len(point) != ring.n:
        raise AutomorphismMismatch("point arity does not match the ring")
    for w, sigma in zip(point, ring.autos):
        if not divalg.auto_equal(w.auto, sigma):
            raise AutomorphismMismatch("witness twist differs from the ring twist")
        verify_witness(w)
    for i in range(len(point)):
        for j in range(i + 1, len(point)):
            a, b = point[i].element, point[j].element
            if a * b != b * a:
                raise NonCommutingPoint(f"point coordinates {i} and {j} do not commute")
    if ring.n == 0:
        return f.terms.get((), divalg.zero(ring.alg))
    template = point[0].element
    # precompute coordinate powers
    pows = []
    for i, w in enumerate(point):
        top = f.degree_in(i)
        cur = [template.embed(divalg.one(ring.alg))]
        for _ in range(max(top, 0)):
            cur.append(cur[-1] * w.element)
        pows.append(cur)
    acc = template.embed(divalg.zero(ring.alg))
    for e, c in f.terms.items():
        prod = template.embed(c)
        for i, k in enumerate(e):
            if k:
                prod = prod * pows[i][k]
        acc = acc + prod
    return acc


def _coerce_central(alg, a):
    if isinstance(a, (int, Fraction)):
        return divalg.from_rational(alg, a)
    return a


def linear_shift(f: SkewPoly, shifts) -> SkewPoly:
    """f(t_1 + a_1 t_n, ..., t_{n-1} + a_{n-1} t_n, t_n) for central fixed a_i."""
    ring = f.ring
    n = ring.n
    if len(shifts) != n - 1:
        raise NotInF("linear shift needs n-1 central parameters")
    shifts = [_coerce_central(ring.alg, a) for a in shifts]
    for a in shifts:
        if not divalg.is_central(a):
            raise NotInF("shift parameter is not central")
        for sigma in ring.autos:
            if not divalg.is_fixed(sigma, a):
                raise NotInF("shift parameter is not fixed by a ring automorphism")
    t_n = SkewPoly.variable(ring, n - 1)
    point = []
    for i in range(n - 1):
        elem = SkewPoly.variable(ring, i) + SkewPoly.constant(ring, shifts[i]) * t_n
        point.append(Witness(elem, ring.autos[i]))
    point.append(Witness(t_n, ring.autos[n - 1]))
    return substitute(f, point)


def power_shift(f: SkewPoly, d: int) -> SkewPoly:
    """f(t_1 + t_n^{d^{n-1}}, ..., t_{n-1} + t_n^{d}, t_n) over central variables."""
    ring = f.ring
    if not ring.is_central():
        raise NonCentralRing("power shift requires identity twists")
    if d < 1 + f.total_degree():
        raise DegreeBoundViolated("power shift needs d >= 1 + total degree")
    n = ring.n
    if n <= 1:
        return f
    t_n = SkewPoly.variable(ring, n - 1)
    point = []
    for i in range(n - 1):
        elem = SkewPoly.variable(ring, i) + t_n ** (d ** (n - 1 - i))
        point.append(Witness(elem, ring.autos[i]))
    point.append(Witness(t_n, ring.autos[n - 1]))
    return substitute(f, point)
