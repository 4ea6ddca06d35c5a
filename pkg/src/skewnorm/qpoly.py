"""Univariate polynomial helpers over the rationals.

Polynomials are tuples of Fractions, lowest degree first, with no trailing
zeros; the zero polynomial is the empty tuple.
"""

from __future__ import annotations

from fractions import Fraction

ZERO = ()
ONE = (Fraction(1),)
X = (Fraction(0), Fraction(1))


def trim(coeffs) -> tuple:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def deg(p) -> int:
    """Degree; -1 for the zero polynomial."""
    return len(p) - 1


def add(p, q):
    n = max(len(p), len(q))
    return trim(
        (p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)
    )


def neg(p):
    return tuple(-c for c in p)


def sub(p, q):
    return add(p, neg(q))


def mul(p, q):
    if not p or not q:
        return ZERO
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return trim(out)


def scale(c, p):
    if c == 0:
        return ZERO
    return tuple(c * a for a in p)


def divmod_(p, q):
    """Quotient and remainder; q must be nonzero."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    quo = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    lead = q[-1]
    while len(rem) >= len(q) and trim(rem):
        rem = list(trim(rem))
        if len(rem) < len(q):
            break
        k = len(rem) - len(q)
        c = rem[-1] / lead
        quo[k] = c
        for i, b in enumerate(q):
            rem[k + i] -= c * b
        rem.pop()
    return trim(quo), trim(rem)


def gcd(p, q):
    """Monic gcd."""
    a, b = trim(p), trim(q)
    while b:
        a, b = b, divmod_(a, b)[1]
    if not a:
        return ZERO
    return monic(a)


def monic(p):
    if not p:
        return ZERO
    return tuple(c / p[-1] for c in p)


def evaluate(p, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def compose_fraction(p, num, den):
    """Evaluate p at the rational function num/den.

    Returns (N, D) with p(num/den) = N / den**deg(p); D = den**deg(p).
    """
    if not p:
        return ZERO, ONE
    m = len(p) - 1
    num_pows = [ONE]
    den_pows = [ONE]
    for _ in range(m):
        num_pows.append(mul(num_pows[-1], num))
        den_pows.append(mul(den_pows[-1], den))
    acc = ZERO
    for i, c in enumerate(p):
        acc = add(acc, scale(c, mul(num_pows[i], den_pows[m - i])))
    return acc, den_pows[m]
