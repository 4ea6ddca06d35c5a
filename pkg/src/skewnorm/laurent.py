"""Skew Laurent polynomials D[t, t^{-1}; s] and the first negative example.

Multiplication follows t^k a = s^k(a) t^k for every integer k, with s^{-1}
used for negative k.  The ring realizes the tuple (s, s^{-1}): normalizable
exactly when s has finite inner order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import divalg
from .divalg import Auto
from .errors import RingMismatch, WitnessHypothesisFails, ZeroElement
from .skewpoly import Ring, SkewPoly


@lru_cache(maxsize=None)
def _signed_power(sigma: Auto, k: int) -> Auto:
    return divalg.power(sigma, k)


class LaurentPoly:
    """Finite map from integer exponents to nonzero left coefficients."""

    __slots__ = ("alg", "auto", "terms")

    def __init__(self, alg, auto: Auto, terms: dict):
        self.alg = alg
        self.auto = auto
        self.terms = {k: c for k, c in terms.items() if c}

    @staticmethod
    def zero(alg, auto):
        return LaurentPoly(alg, auto, {})

    @staticmethod
    def constant(alg, auto, c):
        return LaurentPoly(alg, auto, {0: c})

    @staticmethod
    def one(alg, auto):
        return LaurentPoly.constant(alg, auto, divalg.one(alg))

    @staticmethod
    def t_power(alg, auto, k, coef=None):
        coef = divalg.one(alg) if coef is None else coef
        return LaurentPoly(alg, auto, {k: coef})

    def embed(self, c):
        return LaurentPoly.constant(self.alg, self.auto, c)

    def _check(self, other):
        if not isinstance(other, LaurentPoly):
            raise RingMismatch("expected a Laurent polynomial")
        if self.alg != other.alg or self.auto != other.auto:
            raise RingMismatch("Laurent polynomials from different rings")

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, LaurentPoly)
            and self.alg == other.alg
            and self.auto == other.auto
            and self.terms == other.terms
        )

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, None)
            s = c if s is None else s + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return LaurentPoly(self.alg, self.auto, out)

    def __neg__(self):
        return LaurentPoly(self.alg, self.auto, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        out = {}
        for i, a in self.terms.items():
            tw = _signed_power(self.auto, i)
            for j, b in other.terms.items():
                k = i + j
                c = a * tw.apply(b)
                s = out.get(k, None)
                s = c if s is None else s + c
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return LaurentPoly(self.alg, self.auto, out)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("use explicit t-power construction for negatives")
        acc = LaurentPoly.one(self.alg, self.auto)
        for _ in range(k):
            acc = acc * self
        return acc

    def scale_left(self, c):
        return LaurentPoly(self.alg, self.auto, {k: c * v for k, v in self.terms.items()})

    def degree(self):
        return max(self.terms) if self.terms else None

    def valuation(self):
        return min(self.terms) if self.terms else None

    def sorted_terms(self):
        return sorted(self.terms.items())

    def basis_coords(self):
        return dict(self.terms)

    def term_twists(self):
        """b t^k twists the base by in_b o s^k."""
        out = []
        for k, c in self.sorted_terms():
            tw = _signed_power(self.auto, k)
            if self.alg == divalg.HQ:
                tw = divalg.compose(Auto.inner(c), tw)
            out.append((tw, (k, c)))
        return out

    def __repr__(self):
        if not self.terms:
            return "LaurentPoly(0)"
        bits = [f"({c!r})t^{k}" for k, c in self.sorted_terms()]
        return "LaurentPoly(" + " + ".join(bits) + ")"


def lp_add(f, g):
    return f + g


def lp_mul(f, g):
    return f * g


@dataclass
class Classification:
    """Outcome of the automorphic test on a Laurent element."""

    kind: str  # "monomial" | "common-twist" | "not-automorphic"
    twist: Auto = None
    exponent: int = None
    coefficient: object = None
    conflict: tuple = None


def classify_automorphic(a: LaurentPoly) -> Classification:
    """Decide automorphy by comparing the per-term twists.

    Multi-term elements are automorphic only when every term twists by the
    same automorphism, which over a twist of infinite inner order forces a
    single monomial.
    """
    if not a:
        raise ZeroElement("cannot classify the zero element")
    twists = a.term_twists()
    first, info = twists[0]
    for tw, other in twists[1:]:
        if not divalg.auto_equal(tw, first):
            return Classification(
                kind="not-automorphic", conflict=((first, info), (tw, other))
            )
    if len(twists) == 1:
        k, c = info
        return Classification(kind="monomial", twist=first, exponent=k, coefficient=c)
    return Classification(kind="common-twist", twist=first)


def finite_inner_order_witness(sigma: Auto, k: int, c):
    """The positive-half witness u = t^{-k} + c^{-2} t^k.

    Requires sigma^k to be the inner automorphism by c (over a field: the
    identity).  Returns (u, relation, in_c_inv) where the relation is the
    two-variable skew polynomial c^{-2} t2^{2k} - t1 t2^k + 1 vanishing at
    (u, t), exhibiting t as left integral over D[u].
    """
    if k < 1 or not c:
        raise WitnessHypothesisFails("need k >= 1 and a nonzero unit")
    alg = sigma.alg
    in_c = Auto.inner(c) if alg == divalg.HQ else Auto.identity(alg)
    if not divalg.auto_equal(divalg.power(sigma, k), in_c):
        raise WitnessHypothesisFails("sigma^k is not inner by the supplied unit")
    c_inv2 = (c * c).inv()
    u = LaurentPoly(alg, sigma, {-k: divalg.one(alg), k: c_inv2})
    in_c_inv = Auto.inner(c.inv()) if alg == divalg.HQ else Auto.identity(alg)

    from .subst import check_automorphic

    if not divalg.auto_equal(check_automorphic(u), in_c_inv):
        raise WitnessHypothesisFails("witness fails the automorphic check")

    # c^{-2} t^{2k} - u t^k + 1 = 0, verified exactly in the Laurent ring
    t_k = LaurentPoly.t_power(alg, sigma, k)
    residue = LaurentPoly.t_power(alg, sigma, 2 * k, c_inv2) - u * t_k + LaurentPoly.one(alg, sigma)
    if residue:
        raise WitnessHypothesisFails("integral relation does not vanish")

    rel_ring = Ring(alg, (in_c_inv, sigma))
    relation = (
        SkewPoly.monomial(rel_ring, c_inv2, (0, 2 * k))
        - SkewPoly.monomial(rel_ring, divalg.one(alg), (1, k))
        + SkewPoly.one(rel_ring)
    )
    return u, relation, in_c_inv


def invert_via_integral_relation(coeffs, sigma: Auto):
    """Check a claimed integral relation for t^{-1} over D[t; sigma].

    Given f_0,...,f_{m-1} in D[t; sigma] asserting
    t^{-m} + f_{m-1} t^{-(m-1)} + ... + f_0 = 0, the only candidate for
    t^{-1} inside D[t; sigma] is -(f_{m-1} + ... + f_1 t^{m-2} + f_0 t^{m-1}).
    Returns the candidate if its product with t is 1 in the Laurent ring,
    else None (the relation was inconsistent).
    """
    m = len(coeffs)
    if m < 1:
        raise ZeroElement("need at least one coefficient")
    ring = coeffs[0].ring
    alg = ring.alg
    t = SkewPoly.variable(ring, 0)
    candidate = SkewPoly.zero(ring)
    for i, f in enumerate(coeffs):
        candidate = candidate + f * t ** (m - 1 - i)
    candidate = -candidate
    # move to the Laurent ring and test candidate * t == 1
    lp = LaurentPoly(alg, sigma, {e[0]: c for e, c in candidate.terms.items()})
    if lp * LaurentPoly.t_power(alg, sigma, 1) == LaurentPoly.one(alg, sigma):
        return candidate
    return None
