"""Shared deterministic random builders for the test suite."""

import random
from fractions import Fraction

import pytest

from skewnorm import divalg, skewpoly
from skewnorm.divalg import HQ, QX, Auto, Quat, RatFun
from skewnorm.skewpoly import Ring, SkewPoly


def rand_rat(rng, mag=9):
    return Fraction(rng.randint(-mag, mag), rng.randint(1, mag))


def rand_nonzero_rat(rng, mag=9):
    while True:
        r = rand_rat(rng, mag)
        if r:
            return r


def rand_quat(rng, mag=9):
    return Quat.of(*(rand_rat(rng, mag) for _ in range(4)))


def rand_nonzero_quat(rng, mag=9):
    while True:
        q = rand_quat(rng, mag)
        if q:
            return q


def rand_ratfun(rng, deg=2, mag=5):
    num = tuple(rand_rat(rng, mag) for _ in range(rng.randint(1, deg + 1)))
    den = tuple(rand_rat(rng, mag) for _ in range(rng.randint(1, deg + 1)))
    if not any(den):
        den = (Fraction(1),)
    return RatFun.make(num, den)


def rand_delem(rng, alg, mag=9):
    if alg == HQ:
        return rand_quat(rng, mag)
    return rand_ratfun(rng, mag=min(mag, 5))


def rand_nonzero_delem(rng, alg, mag=9):
    while True:
        x = rand_delem(rng, alg, mag)
        if x:
            return x


def rand_auto(rng, alg):
    if alg == HQ:
        return Auto.inner(rand_nonzero_quat(rng, 3))
    kind = rng.randint(0, 2)
    if kind == 0:
        return Auto.identity(QX)
    if kind == 1:
        return Auto.shift(rand_rat(rng, 5))
    c = rand_nonzero_rat(rng, 5)
    return Auto.gen_image(RatFun.make((Fraction(0), c), (Fraction(1),)))


def rand_skewpoly(rng, ring, deg=3, nterms=4, mag=5):
    terms = {}
    for _ in range(nterms):
        exp = [0] * ring.n
        budget = rng.randint(0, deg)
        for _ in range(budget):
            exp[rng.randrange(ring.n)] += 1 if ring.n else 0
        terms[tuple(exp)] = rand_delem(rng, ring.alg, mag)
    return SkewPoly(ring, {e: c for e, c in terms.items() if c})


def rand_nonzero_skewpoly(rng, ring, deg=3, nterms=4, mag=5):
    while True:
        f = rand_skewpoly(rng, ring, deg, nterms, mag)
        if f:
            return f


@pytest.fixture
def rng():
    return random.Random(20260823)
