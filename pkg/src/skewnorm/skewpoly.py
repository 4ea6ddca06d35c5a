"""Multivariate skew polynomials D[t_1,...,t_n; s_1,...,s_n].

Coefficients sit on the LEFT of monomials; the defining relation is
t_i a = s_i(a) t_i.  Variables commute pairwise, and the ring requires the
twisting automorphisms to commute pairwise as well.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import divalg
from .divalg import Auto
from .errors import RingMismatch, TagMismatch, ZeroPolynomial


@dataclass(frozen=True)
class Ring:
    """Ring descriptor (algebra, variable count, twist per variable)."""

    alg: str
    autos: tuple

    def __post_init__(self):
        for a in self.autos:
            if a.alg != self.alg:
                raise TagMismatch("ring automorphism on the wrong algebra")
        for i in range(len(self.autos)):
            for j in range(i + 1, len(self.autos)):
                if not divalg.auto_commute(self.autos[i], self.autos[j]):
                    raise RingMismatch("ring automorphisms must commute pairwise")

    @property
    def n(self):
        return len(self.autos)

    def is_central(self) -> bool:
        return all(a.is_identity() for a in self.autos)

    def central_version(self) -> "Ring":
        return Ring(self.alg, tuple(Auto.identity(self.alg) for _ in self.autos))


def central_ring(alg, n) -> Ring:
    return Ring(alg, tuple(Auto.identity(alg) for _ in range(n)))


def constant_ring(alg, n, sigma: Auto) -> Ring:
    return Ring(alg, (sigma,) * n)


@lru_cache(maxsize=None)
def _auto_power(sigma: Auto, k: int) -> Auto:
    return divalg.power(sigma, k)


@lru_cache(maxsize=None)
def sigma_for_exponent(ring: Ring, exp: tuple) -> Auto:
    """The composed twist s_1^{i_1} o ... o s_n^{i_n} of a monomial t^exp."""
    acc = Auto.identity(ring.alg)
    for sigma, k in zip(ring.autos, exp):
        if k:
            acc = divalg.compose(acc, _auto_power(sigma, k))
    return acc


def grlex_key(exp):
    return (sum(exp), exp)


class SkewPoly:
    """Finite map from exponent vectors to nonzero left coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = {e: c for e, c in terms.items() if c}

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(ring: Ring) -> "SkewPoly":
        return SkewPoly(ring, {})

    @staticmethod
    def constant(ring: Ring, c) -> "SkewPoly":
        if c.alg != ring.alg:
            raise TagMismatch("constant on the wrong algebra")
        return SkewPoly(ring, {(0,) * ring.n: c})

    @staticmethod
    def one(ring: Ring) -> "SkewPoly":
        return SkewPoly.constant(ring, divalg.one(ring.alg))

    @staticmethod
    def variable(ring: Ring, i: int) -> "SkewPoly":
        exp = [0] * ring.n
        exp[i] = 1
        return SkewPoly(ring, {tuple(exp): divalg.one(ring.alg)})

    @staticmethod
    def monomial(ring: Ring, coef, exp) -> "SkewPoly":
        exp = tuple(exp)
        if len(exp) != ring.n:
            raise RingMismatch("exponent vector length mismatch")
        return SkewPoly(ring, {exp: coef} if coef else {})

    def embed(self, c) -> "SkewPoly":
        """The base-ring scalar c as an element of this polynomial's ring."""
        return SkewPoly.constant(self.ring, c)

    # -- ring structure -----------------------------------------------------

    def _check(self, other):
        if not isinstance(other, SkewPoly):
            raise RingMismatch("expected a skew polynomial")
        if self.ring != other.ring:
            raise RingMismatch("skew polynomials from different rings")

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, SkewPoly)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, None)
            s = c if s is None else s + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return SkewPoly(self.ring, out)

    def __neg__(self):
        return SkewPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            tw = sigma_for_exponent(self.ring, e1)
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * tw.apply(c2)
                s = out.get(e, None)
                s = c if s is None else s + c
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return SkewPoly(self.ring, out)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a skew polynomial")
        acc = SkewPoly.one(self.ring)
        for _ in range(k):
            acc = acc * self
        return acc

    def scale_left(self, c) -> "SkewPoly":
        return SkewPoly(self.ring, {e: c * v for e, v in self.terms.items()})

    # -- structure queries --------------------------------------------------

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, i: int) -> int:
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def leading_form(self) -> "SkewPoly":
        """Top-degree homogeneous part, reinterpreted over central variables
        (same coefficients, twists dropped) for evaluation at central points."""
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no leading form")
        m = self.total_degree()
        ring = self.ring.central_version()
        return SkewPoly(ring, {e: c for e, c in self.terms.items() if sum(e) == m})

    def coefficients_in_last(self) -> dict:
        """Decomposition f = sum_k c_k(t_1..t_{n-1}) t_n^k; keys are k."""
        out = {}
        for e, c in self.terms.items():
            k = e[-1]
            rest = e[:-1] + (0,)
            out.setdefault(k, {})[rest] = c
        return {k: SkewPoly(self.ring, t) for k, t in out.items()}

    def is_monic_in_last(self) -> bool:
        if not self.terms:
            return False
        if self.ring.n == 0:
            return False
        top = self.degree_in(self.ring.n - 1)
        zero_rest = (0,) * self.ring.n
        lead = {
            e[:-1]: c for e, c in self.terms.items() if e[-1] == top
        }
        return lead == {zero_rest[:-1]: divalg.one(self.ring.alg)}

    def sorted_terms(self):
        """Terms in descending graded-lex order (deterministic output)."""
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def basis_coords(self) -> dict:
        """Coordinates over D in the monomial basis (the terms themselves)."""
        return dict(self.terms)

    def term_list(self):
        """Terms as (coefficient, monomial SkewPoly) pairs, graded-lex order."""
        return [
            (c, SkewPoly.monomial(self.ring, divalg.one(self.ring.alg), e))
            for e, c in self.sorted_terms()
        ]

    def term_twists(self):
        """Per-term automorphism twists: b t^I twists by in_b o s^I."""
        out = []
        for e, c in self.sorted_terms():
            tw = sigma_for_exponent(self.ring, e)
            if self.ring.alg == divalg.HQ:
                tw = divalg.compose(Auto.inner(c), tw)
            out.append((tw, (e, c)))
        return out

    def __repr__(self):
        if not self.terms:
            return "SkewPoly(0)"
        bits = []
        for e, c in self.sorted_terms():
            mono = "".join(f"t{i + 1}^{k}" for i, k in enumerate(e) if k)
            bits.append(f"({c!r}){mono}" if mono else f"({c!r})")
        return "SkewPoly(" + " + ".join(bits) + ")"


def sp_mul(f, g):
    return f * g


def sp_add(f, g):
    return f + g


def sp_sub(f, g):
    return f - g


def sp_scale_left(c, f):
    return f.scale_left(c)
