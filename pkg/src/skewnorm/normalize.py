"""Constructive normalization: nonvanishing-point search over the center,
monicization of witness relations, the recursive normalization engine, and
the power-reduction preprocessing for tuples with matching powers.

Point search, linear monicization and the d-adic transform follow the
combinatorial-Nullstellensatz route: pick the graded-lex greatest monomial
of top degree as the target, search a product grid (guaranteed when each
grid beats the matching exponent) or enumerate Q in a fixed spiral.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import divalg
from .divalg import Auto
from .errors import (
    ExponentEqualityFails,
    GridTooSmall,
    ModeMismatch,
    NonCentralRing,
    NotHomogeneous,
    OracleInconsistent,
    UnsupportedAutoShape,
    ZeroPolynomial,
)
from .skewpoly import Ring, SkewPoly, grlex_key
from .subst import Witness, check_automorphic, linear_shift, power_shift, substitute


# ---------------------------------------------------------------------------
# Point search


@dataclass
class PointSearchSpec:
    """Finite grids per coordinate, or incremental enumeration of Q."""

    grids: list = None  # list of lists of Fractions
    incremental: bool = False

    @staticmethod
    def incremental_default():
        return PointSearchSpec(incremental=True)


def rational_spiral():
    """Deterministic enumeration 0, 1, -1, 2, -2, ... of the integers in Q."""
    yield Fraction(0)
    k = 1
    while True:
        yield Fraction(k)
        yield Fraction(-k)
        k += 1


def _spiral_prefix(n):
    return list(itertools.islice(rational_spiral(), n))


def evaluate_central(f: SkewPoly, point) -> object:
    """Evaluate at central fixed scalars; a ring homomorphism into D."""
    alg = f.ring.alg
    point = [a if isinstance(a, Fraction) else Fraction(a) for a in point]
    acc = divalg.zero(alg)
    for e, c in f.terms.items():
        v = Fraction(1)
        for a, k in zip(point, e):
            v *= a**k
        acc = acc + c * divalg.from_rational(alg, v)
    return acc


def _target_exponent(f: SkewPoly):
    """Graded-lex greatest exponent among the top-total-degree terms."""
    return max(f.terms, key=grlex_key)


def find_nonvanishing(f: SkewPoly, spec: PointSearchSpec):
    """A point in F^d at which f does not vanish.

    Grid mode checks |A_i| > k_i for the target monomial before searching
    and is then guaranteed to succeed; incremental mode walks the spiral.
    """
    if not f:
        raise ZeroPolynomial("cannot search a zero polynomial")
    d = f.ring.n
    if d == 0:
        return ()
    if spec.incremental:
        r = 0
        while True:
            vals = _spiral_prefix(r + 1)
            for idx in itertools.product(range(r + 1), repeat=d):
                if max(idx) != r and r > 0:
                    continue
                point = tuple(vals[i] for i in idx)
                if evaluate_central(f, point):
                    return point
            r += 1
    if spec.grids is None or len(spec.grids) != d:
        raise GridTooSmall("grid mode needs one grid per variable")
    target = _target_exponent(f)
    grids = [[Fraction(v) for v in g] for g in spec.grids]
    for g, k in zip(grids, target):
        if len(set(g)) <= k:
            raise GridTooSmall(
                f"grid of size {len(set(g))} cannot beat exponent {k}"
            )
    for point in itertools.product(*grids):
        if evaluate_central(f, point):
            return point
    raise GridTooSmall("unreachable: the Nullstellensatz bound was satisfied")


def find_projective_point(f: SkewPoly, spec: PointSearchSpec = None):
    """A point (a_1,...,a_{d-1}, 1) with f nonzero, for homogeneous f."""
    if not f:
        raise ZeroPolynomial("cannot search a zero polynomial")
    degs = {sum(e) for e in f.terms}
    if len(degs) != 1:
        raise NotHomogeneous("projective point search needs a homogeneous input")
    d = f.ring.n
    if d == 1:
        return (Fraction(1),)
    ring = Ring(f.ring.alg, f.ring.autos[:-1])
    dehom = {}
    for e, c in f.terms.items():
        key = e[:-1]
        dehom[key] = dehom.get(key, divalg.zero(f.ring.alg)) + c
    g = SkewPoly(ring, dehom)
    spec = spec or PointSearchSpec.incremental_default()
    return find_nonvanishing(g, spec) + (Fraction(1),)


# ---------------------------------------------------------------------------
# Monicization


@dataclass
class MonicizationResult:
    """g = scale . shifted(f), monic of degree m in the last variable."""

    mode: str  # "linear" | "dadic"
    scale: object  # DElem
    g: SkewPoly
    m: int
    shift: tuple = None  # central shift parameters (linear mode)
    d: int = None  # power-shift base (dadic mode)


def monicize_linear(f: SkewPoly, spec: PointSearchSpec = None) -> MonicizationResult:
    """Left-scale a linearly shifted f into a monic polynomial in t_d."""
    if not f:
        raise ZeroPolynomial("cannot monicize the zero polynomial")
    m = f.total_degree()
    lead = f.leading_form()
    point = find_projective_point(lead, spec)
    value = evaluate_central(lead, point)
    scale = value.inv()
    g = linear_shift(f, point[:-1]).scale_left(scale)
    assert g.is_monic_in_last()
    return MonicizationResult(mode="linear", scale=scale, g=g, m=m, shift=point[:-1])


def _dadic_weight(exp, d):
    n = len(exp)
    return sum(k * d ** (n - 1 - j) for j, k in enumerate(exp))


def monicize_dadic(f: SkewPoly) -> MonicizationResult:
    """Monicize over central variables via the d-adic power shift."""
    if not f:
        raise ZeroPolynomial("cannot monicize the zero polynomial")
    if not f.ring.is_central():
        raise NonCentralRing("d-adic monicization needs identity twists")
    d = 1 + f.total_degree()
    shifted = power_shift(f, d)
    top = max(f.terms, key=lambda e: _dadic_weight(e, d))
    m = _dadic_weight(top, d)
    scale = f.terms[top].inv()
    g = shifted.scale_left(scale)
    assert g.is_monic_in_last()
    return MonicizationResult(mode="dadic", scale=scale, g=g, m=m, d=d)


# ---------------------------------------------------------------------------
# Dependence oracle


@dataclass
class IndependentUpTo:
    """Honest negative: no relation among monomials up to this total degree."""

    bound: int


def _monomials_upto(nvars, bound):
    """Exponent vectors by increasing total degree, lex within a degree."""
    out = []
    for total in range(bound + 1):
        out.extend(
            e
            for e in itertools.product(range(total + 1), repeat=nvars)
            if sum(e) == total
        )
    return out


def linear_algebra_oracle(degree_bound: int):
    """Dependence oracle for elements with exact basis coordinates over D.

    Enumerates monomials in the generators by increasing degree and returns
    the first vanishing left combination, as a skew polynomial relation, or
    IndependentUpTo(degree_bound).
    """

    def oracle(gens):
        if not gens:
            return IndependentUpTo(degree_bound)
        alg = gens[0].auto.alg
        ring = Ring(alg, tuple(w.auto for w in gens))
        exps = _monomials_upto(len(gens), degree_bound)
        elements = []
        for e in exps:
            prod = gens[0].element.embed(divalg.one(alg))
            for w, k in zip(gens, e):
                for _ in range(k):
                    prod = prod * w.element
            elements.append(prod)
        keys = {}
        coords = [el.basis_coords() for el in elements]
        for c in coords:
            for k in c:
                keys.setdefault(k, len(keys))
        rows = []
        for c in coords:
            row = [divalg.zero(alg)] * len(keys)
            for k, v in c.items():
                row[keys[k]] = v
            rows.append(row)
        combo = divalg.first_left_dependence(rows)
        if combo is None:
            return IndependentUpTo(degree_bound)
        terms = {exps[i]: c for i, c in enumerate(combo) if c}
        return SkewPoly(ring, terms)

    return oracle


# ---------------------------------------------------------------------------
# Normalization engine


@dataclass
class NormalizationCert:
    """Transform chain, final independent generators, and module generators."""

    transforms: list
    independent_gens: list  # of Witness
    module_gens: list  # of ring elements
    independence_bound: int = None


def _check_mode(gens, mode):
    if mode == "central":
        if any(not w.auto.is_identity() for w in gens):
            raise ModeMismatch("central mode needs identity twists")
    elif mode == "constant":
        for w in gens[1:]:
            if not divalg.auto_equal(w.auto, gens[0].auto):
                raise ModeMismatch("constant-tuple mode needs equal twists")
    else:
        raise ModeMismatch(f"unknown mode {mode!r}")


def normalize(gens, oracle, mode, unit=None, search: PointSearchSpec = None):
    """Normalize the subring generated by commuting automorphic elements.

    Repeatedly asks the oracle for a relation, monicizes it (linear shift in
    constant-tuple mode, d-adic shift in central mode), replaces the
    generators by the shifted ones with the last generator now integral, and
    recurses; module generators multiply out along the chain.
    """
    _check_mode(gens, mode)
    if unit is None and gens:
        unit = gens[0].element.embed(divalg.one(gens[0].auto.alg))
    if not gens:
        return NormalizationCert(
            transforms=[], independent_gens=[], module_gens=[unit] if unit else []
        )
    alg = gens[0].auto.alg
    relation = oracle(gens)
    if isinstance(relation, IndependentUpTo):
        return NormalizationCert(
            transforms=[],
            independent_gens=list(gens),
            module_gens=[unit],
            independence_bound=relation.bound,
        )
    if not relation or substitute(relation, gens):
        raise OracleInconsistent("oracle relation does not vanish at the generators")
    if mode == "constant":
        mres = monicize_linear(relation, search)
    else:
        mres = monicize_dadic(relation)
    if mres.m < 1:
        raise OracleInconsistent("relation monicized to a unit")
    k = len(gens)
    zk = gens[-1]
    new_gens = []
    for i, w in enumerate(gens[:-1]):
        if mres.mode == "linear":
            b = mres.shift[i]
            shift_el = zk.element.scale_left(divalg.from_rational(alg, b))
        else:
            shift_el = zk.element ** (mres.d ** (k - 1 - i))
        new_gens.append(Witness(w.element - shift_el, w.auto))
    sub = normalize(new_gens, oracle, mode, unit=unit, search=search)
    zk_pows = [unit]
    for _ in range(mres.m - 1):
        zk_pows.append(zk_pows[-1] * zk.element)
    module = [w * p for w in sub.module_gens for p in zk_pows]
    return NormalizationCert(
        transforms=[mres] + sub.transforms,
        independent_gens=sub.independent_gens,
        module_gens=module,
        independence_bound=sub.independence_bound,
    )


def verify_certificate(cert: NormalizationCert, targets, coeff_degree=6):
    """Check each target is a left combination of module generators with
    coefficients in the subring on the independent generators.

    Candidates are mu(independent gens) * g for monomials mu of total degree
    at most coeff_degree; membership is decided by exact left elimination.
    """
    if not cert.module_gens:
        return all(not t for t in targets)
    alg = (
        cert.independent_gens[0].auto.alg
        if cert.independent_gens
        else _element_alg(cert.module_gens[0])
    )
    candidates = []
    exps = _monomials_upto(len(cert.independent_gens), coeff_degree)
    for e in exps:
        prod = cert.module_gens[0].embed(divalg.one(alg))
        for w, k in zip(cert.independent_gens, e):
            for _ in range(k):
                prod = prod * w.element
        for g in cert.module_gens:
            candidates.append(prod * g)
    keys = {}
    all_coords = [c.basis_coords() for c in candidates] + [
        t.basis_coords() for t in targets
    ]
    for c in all_coords:
        for k in c:
            keys.setdefault(k, len(keys))
    width = len(keys)

    def row_of(coords):
        row = [divalg.zero(alg)] * width
        for k, v in coords.items():
            row[keys[k]] = v
        return row

    rows = [row_of(c.basis_coords()) for c in candidates]
    ech = divalg._LeftEchelon(width, alg)
    for r in rows:
        ech.insert(r)
    for t in targets:
        if ech.express(row_of(t.basis_coords())) is None:
            return False
    return True


def _element_alg(el):
    ring = getattr(el, "ring", None)
    return ring.alg if ring is not None else el.alg


# ---------------------------------------------------------------------------
# Power reduction


@dataclass
class PowerReduction:
    sub_gens: list  # Witness list for w_i = z_i^{d_i}, all twisting by sigma
    common: Auto
    module_basis: list  # monomials z^e with 0 <= e_i < d_i


def power_reduce(gens, exponents):
    """Replace generators by powers with a common twist.

    Requires s_1^{d_1} = ... = s_n^{d_n}; the returned module basis is the
    set of monomials with exponents below the d_i, exhibiting the original
    ring as a finite left module over the reduced one.
    """
    if len(gens) != len(exponents) or not gens:
        raise ExponentEqualityFails("need one positive exponent per generator")
    powers = [divalg.power(w.auto, d) for w, d in zip(gens, exponents)]
    for p in powers[1:]:
        if not divalg.auto_equal(p, powers[0]):
            raise ExponentEqualityFails("the powered twists do not agree")
    common = powers[0]
    sub_gens = []
    for w, d in zip(gens, exponents):
        el = w.element**d
        tw = check_automorphic(el)
        if not divalg.auto_equal(tw, common):
            raise ExponentEqualityFails("powered generator twists by the wrong map")
        sub_gens.append(Witness(el, common))
    alg = common.alg
    unit = gens[0].element.embed(divalg.one(alg))
    basis = []
    for e in itertools.product(*(range(d) for d in exponents)):
        prod = unit
        for w, k in zip(gens, e):
            for _ in range(k):
                prod = prod * w.element
        basis.append(prod)
    return PowerReduction(sub_gens=sub_gens, common=common, module_basis=basis)


# ---------------------------------------------------------------------------
# Field criterion for shift tuples


@dataclass
class ShiftDecision:
    normalizable: bool
    exponents: tuple = None


def decide_tuple_normalizable_field_shifts(autos) -> ShiftDecision:
    """Exact criterion for tuples of shifts x -> x + c_i of Q(x): the tuple
    is normalizable iff positive d_i exist with d_1 c_1 = ... = d_n c_n."""
    consts = []
    for a in autos:
        c = a.shift_constant() if a.alg == divalg.QX else None
        if c is None:
            raise UnsupportedAutoShape("expected shift automorphisms of Q(x)")
        consts.append(c)
    if all(c == 0 for c in consts):
        return ShiftDecision(normalizable=True, exponents=(1,) * len(consts))
    if any(c == 0 for c in consts):
        return ShiftDecision(normalizable=False)
    if any(c > 0 for c in consts) and any(c < 0 for c in consts):
        return ShiftDecision(normalizable=False)
    # lcm of the |c_i| over Q; dividing by each |c_i| gives a positive integer
    num_lcm = 1
    den_gcd = 0
    for c in consts:
        num_lcm = num_lcm * abs(c.numerator) // math.gcd(num_lcm, abs(c.numerator))
        den_gcd = math.gcd(den_gcd, c.denominator)
    target = Fraction(num_lcm, den_gcd)
    exponents = tuple(int(target / abs(c)) for c in consts)
    return ShiftDecision(normalizable=True, exponents=exponents)
