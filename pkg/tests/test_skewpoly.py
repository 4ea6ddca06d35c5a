import itertools
import random
from fractions import Fraction

import pytest

from skewnorm import divalg, skewpoly
from skewnorm.divalg import HQ, QX, QUAT_I, QUAT_J, QUAT_K, Auto, Quat, RatFun
from skewnorm.errors import RingMismatch, ZeroPolynomial
from skewnorm.skewpoly import Ring, SkewPoly, central_ring, sp_add, sp_mul

from conftest import rand_auto, rand_delem, rand_nonzero_skewpoly, rand_skewpoly


def shift_ring(n=1, c=1):
    return Ring(QX, tuple(Auto.shift(c) for _ in range(n)))


class TestConstruction:
    def test_noncommuting_autos_rejected(self):
        with pytest.raises(RingMismatch):
            Ring(HQ, (Auto.inner(Quat.of(1, 1)), Auto.inner(QUAT_J)))

    def test_zero_coefficients_pruned(self):
        ring = central_ring(QX, 1)
        f = SkewPoly(ring, {(0,): divalg.zero(QX), (1,): divalg.one(QX)})
        assert (0,) not in f.terms


class TestMultiplication:
    def test_twist_rule_shift(self):
        ring = shift_ring()
        t = SkewPoly.variable(ring, 0)
        x = SkewPoly.constant(ring, RatFun.x())
        expected = SkewPoly.monomial(
            ring, RatFun.x() + RatFun.from_rational(1), (1,)
        )
        assert t * x == expected

    def test_multiply_by_one(self):
        rng = random.Random(21)
        ring = Ring(HQ, (Auto.inner(QUAT_I), Auto.inner(QUAT_I)))
        f = rand_skewpoly(rng, ring)
        assert f * SkewPoly.one(ring) == f
        assert SkewPoly.one(ring) * f == f

    def test_twist_rule_inner(self):
        ring = Ring(HQ, (Auto.inner(QUAT_I),))
        t = SkewPoly.variable(ring, 0)
        j = SkewPoly.constant(ring, QUAT_J)
        assert t * j == SkewPoly.monomial(ring, -QUAT_J, (1,))

    def test_commutation_identity_random(self):
        rng = random.Random(22)
        for alg in (HQ, QX):
            for _ in range(40):
                autos = tuple(
                    [Auto.identity(alg)]
                    + ([rand_auto(rng, alg)] if rng.random() < 0.5 else [])
                )
                try:
                    ring = Ring(alg, autos)
                except RingMismatch:
                    continue
                for i, sigma in enumerate(ring.autos):
                    a = rand_delem(rng, alg, 4)
                    t = SkewPoly.variable(ring, i)
                    lhs = t * SkewPoly.constant(ring, a)
                    rhs = SkewPoly.constant(ring, sigma.apply(a)) * t
                    assert lhs == rhs

    def test_associativity_distributivity(self):
        rng = random.Random(23)
        for alg in (HQ, QX):
            sigma = Auto.inner(QUAT_I) if alg == HQ else Auto.shift(1)
            ring = Ring(alg, (sigma, sigma))
            for _ in range(60):
                f, g, h = (rand_skewpoly(rng, ring, deg=2, nterms=3) for _ in range(3))
                assert (f * g) * h == f * (g * h)
                assert f * (g + h) == f * g + f * h
                assert (f + g) * h == f * h + g * h

    def test_agrees_with_commutative_oracle(self):
        # identity twists and rational coefficients reduce to ordinary
        # commutative multiplication
        rng = random.Random(24)
        ring = central_ring(QX, 2)
        for _ in range(40):
            def rand_central():
                return SkewPoly(
                    ring,
                    {
                        (rng.randint(0, 2), rng.randint(0, 2)): divalg.from_rational(
                            QX, Fraction(rng.randint(-5, 5))
                        )
                        for _ in range(3)
                    },
                )

            f, g = rand_central(), rand_central()
            expected = {}
            for (e, c), (e2, c2) in itertools.product(
                f.terms.items(), g.terms.items()
            ):
                key = (e[0] + e2[0], e[1] + e2[1])
                cur = expected.get(key, divalg.zero(QX)) + c * c2
                expected[key] = cur
            expected = {k: v for k, v in expected.items() if v}
            assert (f * g).terms == expected

    def test_degree_additive(self):
        rng = random.Random(25)
        ring = Ring(HQ, (Auto.inner(QUAT_I), Auto.inner(QUAT_I)))
        for _ in range(50):
            f = rand_nonzero_skewpoly(rng, ring, deg=3)
            g = rand_nonzero_skewpoly(rng, ring, deg=3)
            assert (f * g).total_degree() == f.total_degree() + g.total_degree()

    def test_ring_mismatch(self):
        f = SkewPoly.one(central_ring(QX, 1))
        g = SkewPoly.one(shift_ring())
        with pytest.raises(RingMismatch):
            f * g


class TestAddScale:
    def test_sub_self_is_zero(self):
        rng = random.Random(26)
        ring = central_ring(HQ, 2)
        f = rand_skewpoly(rng, ring)
        assert not (f - f)

    def test_scale_left_distributes(self):
        ring = central_ring(QX, 2)
        t1 = SkewPoly.variable(ring, 0)
        t2 = SkewPoly.variable(ring, 1)
        two = divalg.from_rational(QX, 2)
        assert (t1 + t2).scale_left(two) == t1.scale_left(two) + t2.scale_left(two)

    def test_scale_left_noncommutative(self):
        ring = central_ring(HQ, 1)
        jt = SkewPoly.monomial(ring, QUAT_J, (1,))
        assert jt.scale_left(QUAT_I) == SkewPoly.monomial(ring, QUAT_K, (1,))


class TestDegrees:
    def test_total_degree(self):
        ring = central_ring(QX, 2)
        t1, t2 = SkewPoly.variable(ring, 0), SkewPoly.variable(ring, 1)
        assert (t1 * t2 + t1).total_degree() == 2

    def test_degree_in(self):
        ring = central_ring(QX, 2)
        t1, t2 = SkewPoly.variable(ring, 0), SkewPoly.variable(ring, 1)
        assert (t1 * t2 * t2).degree_in(1) == 2

    def test_zero_degree_sentinel(self):
        ring = central_ring(QX, 2)
        assert SkewPoly.zero(ring).total_degree() == -1
        assert SkewPoly.zero(ring).degree_in(0) == -1


class TestLeadingForm:
    def test_top_part(self):
        ring = central_ring(HQ, 2)
        t1, t2 = SkewPoly.variable(ring, 0), SkewPoly.variable(ring, 1)
        lead = (t1 * t2 + t1).leading_form()
        assert lead.terms == {(1, 1): divalg.one(HQ)}
        assert lead.ring.is_central()

    def test_mixed_degrees(self):
        ring = central_ring(QX, 2)
        t1, t2 = SkewPoly.variable(ring, 0), SkewPoly.variable(ring, 1)
        two = divalg.from_rational(QX, 2)
        f = t1 * t1 + (t1 * t2).scale_left(two) + t2
        lead = f.leading_form()
        assert set(lead.terms) == {(2, 0), (1, 1)}

    def test_constant(self):
        ring = central_ring(QX, 2)
        c = SkewPoly.constant(ring, divalg.from_rational(QX, 7))
        assert c.leading_form().terms == c.terms

    def test_zero_rejected(self):
        with pytest.raises(ZeroPolynomial):
            SkewPoly.zero(central_ring(QX, 1)).leading_form()


class TestMonicInLast:
    def test_monic(self):
        ring = central_ring(QX, 2)
        t1, t2 = SkewPoly.variable(ring, 0), SkewPoly.variable(ring, 1)
        assert (t2 * t2 + t1 * t2).is_monic_in_last()

    def test_scaled_not_monic(self):
        ring = central_ring(QX, 2)
        t2 = SkewPoly.variable(ring, 1)
        two = divalg.from_rational(QX, 2)
        assert not (t2 * t2).scale_left(two).is_monic_in_last()

    def test_edges(self):
        ring = central_ring(QX, 2)
        t1 = SkewPoly.variable(ring, 0)
        assert not t1.is_monic_in_last()
        assert SkewPoly.one(ring).is_monic_in_last()
        assert not SkewPoly.zero(ring).is_monic_in_last()


class TestCoefficientDecomposition:
    def test_roundtrip(self):
        rng = random.Random(27)
        ring = Ring(QX, (Auto.shift(1), Auto.shift(-2)))
        tn = SkewPoly.variable(ring, ring.n - 1)
        for _ in range(40):
            f = rand_skewpoly(rng, ring)
            parts = f.coefficients_in_last()
            rebuilt = SkewPoly.zero(ring)
            for k, coef in parts.items():
                rebuilt = rebuilt + coef * tn**k
            assert rebuilt == f

    def test_sorted_terms_graded_lex(self):
        ring = central_ring(QX, 2)
        t1, t2 = SkewPoly.variable(ring, 0), SkewPoly.variable(ring, 1)
        f = t1 + t2 * t2 + t1 * t2
        exps = [e for e, _ in f.sorted_terms()]
        assert exps == [(1, 1), (0, 2), (1, 0)]
