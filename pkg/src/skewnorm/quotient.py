"""The quotient ring S = D[t1,t2; s1,s2]/(t1 t2).

The two-sided ideal (t1 t2) contains every mixed monomial (the variables
commute), so the normal form keeps a constant plus pure powers of each
variable image z1, z2 and kills everything mixed.  Every commuting pair in
S is algebraically dependent, by a counting argument over the left basis
{1, z1, ..., z1^N, z2, ..., z2^N}.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import divalg
from .divalg import Auto
from .errors import (
    CommutationRequired,
    RingMismatch,
    WitnessHypothesisFails,
)
from .skewpoly import Ring, _auto_power


class QuotientElem:
    """Normal form c0 + sum_i a_i z1^i + sum_j b_j z2^j (mixed monomials are 0)."""

    __slots__ = ("ring", "c0", "pos1", "pos2")

    def __init__(self, ring: Ring, c0, pos1: dict, pos2: dict):
        if ring.n != 2:
            raise RingMismatch("quotient ring needs exactly two variables")
        self.ring = ring
        self.c0 = c0
        self.pos1 = {k: c for k, c in pos1.items() if c}
        self.pos2 = {k: c for k, c in pos2.items() if c}

    @staticmethod
    def constant(ring, c):
        return QuotientElem(ring, c, {}, {})

    @staticmethod
    def zero(ring):
        return QuotientElem.constant(ring, divalg.zero(ring.alg))

    @staticmethod
    def one(ring):
        return QuotientElem.constant(ring, divalg.one(ring.alg))

    @staticmethod
    def z1(ring, k=1, coef=None):
        coef = divalg.one(ring.alg) if coef is None else coef
        return QuotientElem(ring, divalg.zero(ring.alg), {k: coef}, {})

    @staticmethod
    def z2(ring, k=1, coef=None):
        coef = divalg.one(ring.alg) if coef is None else coef
        return QuotientElem(ring, divalg.zero(ring.alg), {}, {k: coef})

    def embed(self, c):
        return QuotientElem.constant(self.ring, c)

    def _check(self, other):
        if not isinstance(other, QuotientElem):
            raise RingMismatch("expected a quotient element")
        if self.ring != other.ring:
            raise RingMismatch("quotient elements from different rings")

    def __bool__(self):
        return bool(self.c0) or bool(self.pos1) or bool(self.pos2)

    def __eq__(self, other):
        return (
            isinstance(other, QuotientElem)
            and self.ring == other.ring
            and self.c0 == other.c0
            and self.pos1 == other.pos1
            and self.pos2 == other.pos2
        )

    def __add__(self, other):
        self._check(other)
        p1 = dict(self.pos1)
        for k, c in other.pos1.items():
            s = p1.get(k, None)
            s = c if s is None else s + c
            if s:
                p1[k] = s
            else:
                p1.pop(k, None)
        p2 = dict(self.pos2)
        for k, c in other.pos2.items():
            s = p2.get(k, None)
            s = c if s is None else s + c
            if s:
                p2[k] = s
            else:
                p2.pop(k, None)
        return QuotientElem(self.ring, self.c0 + other.c0, p1, p2)

    def __neg__(self):
        return QuotientElem(
            self.ring,
            -self.c0,
            {k: -c for k, c in self.pos1.items()},
            {k: -c for k, c in self.pos2.items()},
        )

    def __sub__(self, other):
        return self + (-other)

    def _side_terms(self):
        """All terms as (side, exponent, coefficient); side 0 is the constant."""
        out = []
        if self.c0:
            out.append((0, 0, self.c0))
        for k, c in self.pos1.items():
            out.append((1, k, c))
        for k, c in self.pos2.items():
            out.append((2, k, c))
        return out

    def __mul__(self, other):
        self._check(other)
        s1, s2 = self.ring.autos
        c0 = divalg.zero(self.ring.alg)
        p1, p2 = {}, {}
        for side_a, ka, a in self._side_terms():
            if side_a == 0:
                tw = None
            else:
                tw = _auto_power(s1 if side_a == 1 else s2, ka)
            for side_b, kb, b in other._side_terms():
                if side_a and side_b and side_a != side_b:
                    continue  # mixed monomial, dies in the quotient
                c = a * b if tw is None else a * tw.apply(b)
                side = side_a or side_b
                k = ka + kb
                if side == 0:
                    c0 = c0 + c
                else:
                    tgt = p1 if side == 1 else p2
                    s = tgt.get(k, None)
                    s = c if s is None else s + c
                    if s:
                        tgt[k] = s
                    else:
                        tgt.pop(k, None)
        return QuotientElem(self.ring, c0, p1, p2)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a quotient element")
        acc = QuotientElem.one(self.ring)
        for _ in range(k):
            acc = acc * self
        return acc

    def scale_left(self, c):
        return QuotientElem(
            self.ring,
            c * self.c0,
            {k: c * v for k, v in self.pos1.items()},
            {k: c * v for k, v in self.pos2.items()},
        )

    def total_degree(self):
        degs = [0] if self.c0 else []
        degs += list(self.pos1) + list(self.pos2)
        return max(degs) if degs else -1

    def basis_coords(self):
        """Coordinates over D in the basis keyed ('c',0) / ('z1',i) / ('z2',j)."""
        out = {}
        if self.c0:
            out[("c", 0)] = self.c0
        for k, c in self.pos1.items():
            out[("z1", k)] = c
        for k, c in self.pos2.items():
            out[("z2", k)] = c
        return out

    def term_twists(self):
        s1, s2 = self.ring.autos
        hq = self.ring.alg == divalg.HQ
        out = []
        for side, k, c in sorted(self._side_terms()):
            if side == 0:
                tw = Auto.identity(self.ring.alg)
            else:
                tw = _auto_power(s1 if side == 1 else s2, k)
            if hq:
                tw = divalg.compose(Auto.inner(c), tw)
            out.append((tw, (side, k, c)))
        return out

    def __repr__(self):
        bits = []
        if self.c0:
            bits.append(f"({self.c0!r})")
        for k, c in sorted(self.pos1.items()):
            bits.append(f"({c!r})z1^{k}")
        for k, c in sorted(self.pos2.items()):
            bits.append(f"({c!r})z2^{k}")
        return "QuotientElem(" + (" + ".join(bits) or "0") + ")"


def q_add(f, g):
    return f + g


def q_mul(f, g):
    return f * g


@dataclass
class DependenceWitness:
    """A vanishing left combination sum c_{ij} x1^i x2^j = 0, not all zero."""

    combo: dict  # (i, j) -> DElem
    bound: int  # the N used for the monomial sweep


def dependence_degree_bound(d: int) -> int:
    """Least N with (N+2)(N+1)/2 > 2dN+1 (at most 4d+1)."""
    n = 1
    while (n + 2) * (n + 1) // 2 <= 2 * d * n + 1:
        n += 1
    return n


def find_dependence(x1: QuotientElem, x2: QuotientElem) -> DependenceWitness:
    """A nonzero vanishing left combination of monomials in two commuting
    elements, found degree by degree with an early exit on equal monomials."""
    x1._check(x2)
    if x1 * x2 != x2 * x1:
        raise CommutationRequired("find_dependence needs commuting inputs")
    d = max(x1.total_degree(), x2.total_degree(), 1)
    n_bound = dependence_degree_bound(d)
    alg = x1.ring.alg
    basis_keys = {}
    rows = []
    index = []
    seen = {}
    pow1 = [QuotientElem.one(x1.ring)]
    pow2 = [QuotientElem.one(x1.ring)]
    # enumerate monomials by total degree, building coordinate rows lazily
    monomials = []
    for total in range(n_bound + 1):
        for k1 in range(total, -1, -1):
            monomials.append((k1, total - k1))
    for k1, k2 in monomials:
        while len(pow1) <= k1:
            pow1.append(pow1[-1] * x1)
        while len(pow2) <= k2:
            pow2.append(pow2[-1] * x2)
        m = pow1[k1] * pow2[k2]
        key = frozenset(m.basis_coords().items())
        if key in seen:
            # early exit: two equal monomials
            other = seen[key]
            return DependenceWitness(
                combo={(k1, k2): divalg.one(alg), other: -divalg.one(alg)},
                bound=n_bound,
            )
        seen[key] = (k1, k2)
        coords = m.basis_coords()
        for bk in coords:
            basis_keys.setdefault(bk, len(basis_keys))
        rows.append(coords)
        index.append((k1, k2))
    width = len(basis_keys)
    vec_rows = []
    for coords in rows:
        row = [divalg.zero(alg)] * width
        for bk, c in coords.items():
            row[basis_keys[bk]] = c
        vec_rows.append(row)
    combo = divalg.first_left_dependence(vec_rows)
    if combo is None:
        raise CommutationRequired(
            "counting bound violated; this cannot happen for commuting inputs"
        )
    witness = {index[i]: c for i, c in enumerate(combo) if c}
    return DependenceWitness(combo=witness, bound=n_bound)


def evaluate_combo(combo: dict, x1: QuotientElem, x2: QuotientElem) -> QuotientElem:
    acc = QuotientElem.zero(x1.ring)
    for (k1, k2), c in combo.items():
        acc = acc + (x1**k1 * x2**k2).scale_left(c)
    return acc


def quotient_witness(ring: Ring, k1: int, k2: int, c):
    """The positive-half witness u = z1^{k1} + c z2^{k2}.

    Requires s1^{k1} o s2^{-k2} = in_c (identity over a field).  Verifies
    that u twists the base by s1^{k1}, that z1^{k1+1} = u z1 and
    z2^{k2+1} = c^{-1} u z2, and that powers of u stay independent (distinct
    leading z1-degrees) up to degree 8.
    """
    if k1 < 1 or k2 < 1 or not c:
        raise WitnessHypothesisFails("need positive exponents and a nonzero unit")
    s1, s2 = ring.autos
    composite = divalg.compose(_auto_power(s1, k1), divalg.power(s2, -k2))
    in_c = Auto.inner(c) if ring.alg == divalg.HQ else Auto.identity(ring.alg)
    if not divalg.auto_equal(composite, in_c):
        raise WitnessHypothesisFails("s1^k1 o s2^-k2 is not inner by the supplied unit")
    u = QuotientElem.z1(ring, k1) + QuotientElem.z2(ring, k2, coef=c)

    from .subst import check_automorphic

    twist = check_automorphic(u)
    if not divalg.auto_equal(twist, _auto_power(s1, k1)):
        raise WitnessHypothesisFails("witness twist differs from s1^k1")

    z1 = QuotientElem.z1(ring)
    z2 = QuotientElem.z2(ring)
    if u * z1 != QuotientElem.z1(ring, k1 + 1):
        raise WitnessHypothesisFails("z1^{k1+1} = u z1 fails")
    if u.embed(c.inv()) * u * z2 != QuotientElem.z2(ring, k2 + 1):
        raise WitnessHypothesisFails("z2^{k2+1} = c^{-1} u z2 fails")
    for j in range(1, 9):
        uj = u**j
        if max(uj.pos1) != k1 * j:
            raise WitnessHypothesisFails("powers of u lost their leading z1 term")
    return u, twist


@dataclass
class QuotientDecision:
    kind: str  # "witness" | "no-witness-up-to" | "not-normalizable"
    k1: int = None
    k2: int = None
    unit: object = None
    bound: int = None


def decide_quotient_normalizable(s1: Auto, s2: Auto, bound: int) -> QuotientDecision:
    """Bounded search for k1, k2 <= bound with s1^{k1} o s2^{-k2} inner.

    Negative answers are the bounded "no witness up to", except for QX shift
    pairs where the sign analysis settles the question outright.
    """
    if not divalg.auto_commute(s1, s2):
        raise CommutationRequired("the two automorphisms must commute")
    alg = s1.alg
    for total in range(2, 2 * bound + 1):
        for k1 in range(1, total):
            k2 = total - k1
            if k1 > bound or k2 > bound:
                continue
            comp = divalg.compose(divalg.power(s1, k1), divalg.power(s2, -k2))
            if comp.is_inner():
                unit = comp.unit if alg == divalg.HQ else divalg.one(alg)
                return QuotientDecision(kind="witness", k1=k1, k2=k2, unit=unit)
    c1, c2 = s1.shift_constant(), s2.shift_constant()
    if c1 is not None and c2 is not None:
        # k1 c1 = k2 c2 with positive k's is solvable iff c1 c2 > 0 or both 0
        if not (c1 == c2 == 0 or c1 * c2 > 0):
            return QuotientDecision(kind="not-normalizable")
    return QuotientDecision(kind="no-witness-up-to", bound=bound)
