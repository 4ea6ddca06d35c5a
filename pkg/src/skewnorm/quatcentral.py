"""Centrally finite machinery over the rational quaternions.

Every rational-linear component map q -> component_i(q) is a two-sided
combination sum b_st v_s q v_t over the basis (1, i, j, k); the constants
come from one exact 16-unknown linear solve per component.  This turns any
polynomial with quaternion coefficients and central variables into four
rational-coefficient polynomials generating the same subring over D.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import divalg
from .divalg import HQ, QUAT_BASIS, Quat
from .errors import NonCentralRing, RingMismatch
from .skewpoly import SkewPoly


@dataclass(frozen=True)
class ExtractionConstants:
    """table[i][(s, t)] = rational b with component_i(q) = sum b v_s q v_t."""

    basis: tuple
    table: tuple  # 4 entries, each a dict (s, t) -> Fraction

    def extract(self, i: int, q: Quat) -> Fraction:
        acc = Quat.of()
        for (s, t), b in self.table[i].items():
            acc = acc + self.basis[s] * q * self.basis[t] * b
        assert acc.b == 0 and acc.c == 0 and acc.d == 0
        return acc.a


@lru_cache(maxsize=1)
def compute_extraction_constants() -> ExtractionConstants:
    """Solve the 16-unknown exact system per component.

    Unknowns are b_st over basis pairs; plugging the four basis elements in
    for q gives four quaternion equations, hence sixteen rational ones.
    """
    pairs = [(s, t) for s in range(4) for t in range(4)]
    table = []
    for comp in range(4):
        rows = []
        rhs = []
        for m in range(4):
            products = [QUAT_BASIS[s] * QUAT_BASIS[m] * QUAT_BASIS[t] for s, t in pairs]
            for c in range(4):
                rows.append(
                    [Quat.from_rational(p.components()[c]) for p in products]
                )
                rhs.append(Quat.from_rational(1 if (m == comp and c == 0) else 0))
        sol = divalg.left_solve(rows, rhs)
        entry = {}
        for (s, t), v in zip(pairs, sol):
            assert v.b == 0 and v.c == 0 and v.d == 0
            if v.a:
                entry[(s, t)] = v.a
        table.append(entry)
    return ExtractionConstants(basis=QUAT_BASIS, table=tuple(table))


def _require_central_hq(p: SkewPoly):
    if p.ring.alg != HQ:
        raise RingMismatch("quaternion decomposition needs the quaternion algebra")
    if not p.ring.is_central():
        raise NonCentralRing("decomposition needs identity twists")


def central_components(p: SkewPoly):
    """Split p = p1 + p2 i + p3 j + p4 k with rational-coefficient parts.

    Both identities are checked exactly: the coefficient-wise rebuild and
    the extraction-constant expression of each part as a two-sided
    combination of p itself.
    """
    _require_central_hq(p)
    ring = p.ring
    parts = []
    for i in range(4):
        terms = {}
        for e, q in p.terms.items():
            c = q.components()[i]
            if c:
                terms[e] = Quat.from_rational(c)
        parts.append(SkewPoly(ring, terms))
    rebuilt = SkewPoly.zero(ring)
    for part, v in zip(parts, QUAT_BASIS):
        rebuilt = rebuilt + part * SkewPoly.constant(ring, v)
    assert rebuilt == p
    consts = compute_extraction_constants()
    for i, part in enumerate(parts):
        acc = SkewPoly.zero(ring)
        for (s, t), b in consts.table[i].items():
            left = SkewPoly.constant(ring, QUAT_BASIS[s] * b)
            right = SkewPoly.constant(ring, QUAT_BASIS[t])
            acc = acc + left * p * right
        assert acc == part
    return parts


@dataclass
class CentralizedGenerators:
    """Central generators plus the two membership certificates.

    decompositions[j] lists, for the j-th input polynomial, the four pairs
    (basis index, index into central or None when the part is zero);
    origins[k] records (input index, component index) for central[k].
    """

    central: list
    decompositions: list
    origins: list


def centralize_generators(gens) -> CentralizedGenerators:
    """Replace quaternion-coefficient generators by rational ones.

    The subring over D is unchanged: each input rebuilds from its parts and
    each part is a two-sided combination of one input.
    """
    central = []
    seen = {}
    decompositions = []
    origins = []
    for j, p in enumerate(gens):
        parts = central_components(p)
        entry = []
        for i, part in enumerate(parts):
            if not part:
                entry.append((i, None))
                continue
            key = frozenset(part.terms.items())
            if key not in seen:
                seen[key] = len(central)
                central.append(part)
                origins.append((j, i))
            entry.append((i, seen[key]))
        decompositions.append(entry)
    return CentralizedGenerators(
        central=central, decompositions=decompositions, origins=origins
    )


@dataclass
class PointIdealResult:
    """Two-sidedness verdict for the left ideal of a quaternion point."""

    kind: str  # "two-sided-real" | "commuting-non-real" | "non-commuting"
    pair: tuple = None  # indices with non-commuting coordinates
    index: int = None  # coordinate carrying the non-real witness
    witness: Quat = None  # basis unit b with a_i b != b a_i
    conjugate: Quat = None  # b^{-1} a_i b
    membership: Quat = None  # a_i - b^{-1} a_i b, a nonzero constant in M


def point_ideal_two_sided(point) -> PointIdealResult:
    """Decide whether the left ideal (t_1 - a_1, ..., t_n - a_n) is a proper
    two-sided ideal of the central quaternion polynomial ring.

    Non-commuting coordinates make the point ideal improper outright; a
    commuting non-rational coordinate a_i admits a unit b with
    (t_i - a_i) b = b (t_i - b^{-1} a_i b), so two-sidedness would force the
    nonzero constant a_i - b^{-1} a_i b into the ideal.
    """
    point = [a if isinstance(a, Quat) else Quat.from_rational(Fraction(a)) for a in point]
    for i in range(len(point)):
        for j in range(i + 1, len(point)):
            if point[i] * point[j] != point[j] * point[i]:
                return PointIdealResult(kind="non-commuting", pair=(i, j))
    for i, a in enumerate(point):
        if a.is_central():
            continue
        for b in QUAT_BASIS[1:]:
            if a * b != b * a:
                conj = b.inv() * a * b
                return PointIdealResult(
                    kind="commuting-non-real",
                    index=i,
                    witness=b,
                    conjugate=conj,
                    membership=a - conj,
                )
        raise AssertionError("non-central quaternion commutes with i, j, k")
    return PointIdealResult(kind="two-sided-real")
