"""Exact arithmetic in the two shipped division algebras, automorphism
descriptors, and left linear algebra over a division ring.

The two algebras are the rational quaternions HQ and the rational function
field QX = Q(x).  Elements of either algebra are referred to as "DElem"
values; arithmetic between the two algebras is rejected.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import qpoly
from .errors import (
    DivisionByZero,
    MalformedAutomorphism,
    NoSolution,
    TagMismatch,
    ZeroBound,
)

HQ = "HQ"
QX = "QX"


def _frac(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


# ---------------------------------------------------------------------------
# Rational quaternions


@dataclass(frozen=True)
class Quat:
    """Quaternion over Q on the basis (1, i, j, k); i^2 = j^2 = k^2 = ijk = -1."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    alg = HQ

    @staticmethod
    def of(a=0, b=0, c=0, d=0) -> "Quat":
        return Quat(_frac(a), _frac(b), _frac(c), _frac(d))

    @staticmethod
    def from_rational(r) -> "Quat":
        return Quat.of(r)

    def components(self):
        return (self.a, self.b, self.c, self.d)

    def __bool__(self):
        return self.a != 0 or self.b != 0 or self.c != 0 or self.d != 0

    def _coerce(self, other):
        if isinstance(other, Quat):
            return other
        if isinstance(other, (int, Fraction)):
            return Quat.of(other)
        if isinstance(other, RatFun):
            raise TagMismatch("cannot mix HQ and QX elements")
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Quat(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    __radd__ = __add__

    def __neg__(self):
        return Quat(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a1, b1, c1, d1 = self.components()
        a2, b2, c2, d2 = o.components()
        return Quat(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def __rmul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self

    def conj(self) -> "Quat":
        return Quat(self.a, -self.b, -self.c, -self.d)

    def norm(self) -> Fraction:
        return self.a**2 + self.b**2 + self.c**2 + self.d**2

    def inv(self) -> "Quat":
        n = self.norm()
        if n == 0:
            raise DivisionByZero("zero quaternion has no inverse")
        co = self.conj()
        return Quat(co.a / n, co.b / n, co.c / n, co.d / n)

    def is_central(self) -> bool:
        return self.b == 0 and self.c == 0 and self.d == 0

    def embed(self, c):
        """Scalar embedding hook shared with the polynomial ring types."""
        return c

    def term_twists(self):
        """A nonzero quaternion is automorphic with respect to conjugation by itself."""
        if not self:
            return []
        return [(Auto.inner(self), ("const", self))]

    def __repr__(self):
        return f"Quat({self.a}, {self.b}, {self.c}, {self.d})"


QUAT_ONE = Quat.of(1)
QUAT_I = Quat.of(0, 1)
QUAT_J = Quat.of(0, 0, 1)
QUAT_K = Quat.of(0, 0, 0, 1)
QUAT_BASIS = (QUAT_ONE, QUAT_I, QUAT_J, QUAT_K)


# ---------------------------------------------------------------------------
# Rational functions over Q


@dataclass(frozen=True)
class RatFun:
    """Element of Q(x), stored as num/den with den monic and gcd(num, den) = 1."""

    num: tuple
    den: tuple

    alg = QX

    @staticmethod
    def make(num, den) -> "RatFun":
        num = qpoly.trim(_frac(c) for c in num)
        den = qpoly.trim(_frac(c) for c in den)
        if not den:
            raise DivisionByZero("rational function with zero denominator")
        if not num:
            return RatFun(qpoly.ZERO, qpoly.ONE)
        g = qpoly.gcd(num, den)
        if qpoly.deg(g) > 0:
            num = qpoly.divmod_(num, g)[0]
            den = qpoly.divmod_(den, g)[0]
        lead = den[-1]
        if lead != 1:
            num = tuple(c / lead for c in num)
            den = tuple(c / lead for c in den)
        return RatFun(num, den)

    @staticmethod
    def from_rational(r) -> "RatFun":
        r = _frac(r)
        if r == 0:
            return RatFun(qpoly.ZERO, qpoly.ONE)
        return RatFun((r,), qpoly.ONE)

    @staticmethod
    def x() -> "RatFun":
        return RatFun(qpoly.X, qpoly.ONE)

    def __bool__(self):
        return bool(self.num)

    def _coerce(self, other):
        if isinstance(other, RatFun):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFun.from_rational(other)
        if isinstance(other, Quat):
            raise TagMismatch("cannot mix HQ and QX elements")
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFun.make(
            qpoly.add(qpoly.mul(self.num, o.den), qpoly.mul(o.num, self.den)),
            qpoly.mul(self.den, o.den),
        )

    __radd__ = __add__

    def __neg__(self):
        return RatFun(qpoly.neg(self.num), self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFun.make(qpoly.mul(self.num, o.num), qpoly.mul(self.den, o.den))

    __rmul__ = __mul__

    def inv(self) -> "RatFun":
        if not self.num:
            raise DivisionByZero("zero rational function has no inverse")
        return RatFun.make(self.den, self.num)

    def is_central(self) -> bool:
        return True

    def as_rational(self):
        """The value as a Fraction if constant, else None."""
        if qpoly.deg(self.num) <= 0 and self.den == qpoly.ONE:
            return self.num[0] if self.num else Fraction(0)
        return None

    def embed(self, c):
        """Scalar embedding hook shared with the polynomial ring types."""
        return c

    def term_twists(self):
        """Field elements centralize the field."""
        if not self:
            return []
        return [(Auto.identity(QX), ("const", self))]

    def __repr__(self):
        return f"RatFun({list(self.num)}, {list(self.den)})"


RATFUN_X = RatFun.x()


# ---------------------------------------------------------------------------
# Generic DElem helpers


def zero(alg):
    return Quat.of(0) if alg == HQ else RatFun.from_rational(0)


def one(alg):
    return Quat.of(1) if alg == HQ else RatFun.from_rational(1)


def from_rational(alg, r):
    return Quat.from_rational(r) if alg == HQ else RatFun.from_rational(r)


def generating_set(alg):
    """Generators whose images pin down an automorphism of the algebra."""
    if alg == HQ:
        return (QUAT_I, QUAT_J)
    return (RATFUN_X,)


def check_same_alg(x, y):
    if x.alg != y.alg:
        raise TagMismatch(f"algebra mismatch: {x.alg} vs {y.alg}")


def arith(op, x, y=None):
    """Dispatch table for the CLI: add | sub | mul | inv."""
    if op == "inv":
        if not x:
            raise DivisionByZero("cannot invert zero")
        return x.inv()
    check_same_alg(x, y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    raise ValueError(f"unknown arithmetic op {op!r}")


def is_central(r) -> bool:
    """True iff r commutes with the algebra's generating set."""
    return r.is_central()


# ---------------------------------------------------------------------------
# Automorphism descriptors
#
# Canonical form: for HQ every exposed automorphism is inner (Skolem-Noether
# for central simple algebras) and is stored as a normalized unit; for QX an
# automorphism fixing Q is a Moebius substitution x -> (ax+b)/(cx+d), stored
# as a projectively normalized 2x2 matrix.


def _normalize_unit(u: Quat) -> Quat:
    if not u:
        raise MalformedAutomorphism("inner automorphism needs a nonzero unit")
    comps = u.components()
    if u.is_central():
        return QUAT_ONE
    denlcm = 1
    for c in comps:
        denlcm = denlcm * c.denominator // math.gcd(denlcm, c.denominator)
    ints = [int(c * denlcm) for c in comps]
    g = 0
    for v in ints:
        g = math.gcd(g, abs(v))
    ints = [v // g for v in ints]
    for v in ints:
        if v != 0:
            if v < 0:
                ints = [-w for w in ints]
            break
    return Quat.of(*ints)


def _normalize_mobius(m) -> tuple:
    a, b, c, d = (_frac(v) for v in m)
    if a * d - b * c == 0:
        raise MalformedAutomorphism("Moebius matrix must be invertible")
    for v in (a, b, c, d):
        if v != 0:
            inv = 1 / v
            return (a * inv, b * inv, c * inv, d * inv)
    raise MalformedAutomorphism("zero Moebius matrix")


IDENTITY_MOBIUS = (Fraction(1), Fraction(0), Fraction(0), Fraction(1))


@dataclass(frozen=True)
class Auto:
    """Canonical automorphism descriptor of one of the two algebras."""

    alg: str
    unit: Quat = None  # HQ payload
    mobius: tuple = None  # QX payload

    @staticmethod
    def identity(alg) -> "Auto":
        if alg == HQ:
            return Auto(HQ, unit=QUAT_ONE)
        return Auto(QX, mobius=IDENTITY_MOBIUS)

    @staticmethod
    def inner(u: Quat) -> "Auto":
        if not isinstance(u, Quat):
            raise MalformedAutomorphism("inner automorphisms are HQ-only")
        return Auto(HQ, unit=_normalize_unit(u))

    @staticmethod
    def gen_image(g: RatFun) -> "Auto":
        """Automorphism of Q(x) sending x to g; g must be a Moebius map."""
        if not isinstance(g, RatFun):
            raise MalformedAutomorphism("generator image must be a Q(x) element")
        if qpoly.deg(g.num) > 1 or qpoly.deg(g.den) > 1:
            raise MalformedAutomorphism("generator image is not a Moebius map")
        a = g.num[1] if len(g.num) > 1 else Fraction(0)
        b = g.num[0] if len(g.num) > 0 else Fraction(0)
        c = g.den[1] if len(g.den) > 1 else Fraction(0)
        d = g.den[0] if len(g.den) > 0 else Fraction(0)
        return Auto(QX, mobius=_normalize_mobius((a, b, c, d)))

    @staticmethod
    def shift(c) -> "Auto":
        """The QX shift x -> x + c."""
        return Auto(QX, mobius=_normalize_mobius((1, _frac(c), 0, 1)))

    def is_identity(self) -> bool:
        return self == Auto.identity(self.alg)

    def is_inner(self) -> bool:
        """Inner automorphisms of a field are trivial; all HQ descriptors are inner."""
        if self.alg == HQ:
            return True
        return self.is_identity()

    def gen_image_fun(self) -> RatFun:
        a, b, c, d = self.mobius
        return RatFun.make((b, a), (d, c))

    def shift_constant(self):
        """The c of x -> x + c, or None if not a shift."""
        if self.alg != QX:
            return None
        a, b, c, d = self.mobius
        if c == 0 and d != 0 and a == d:
            return b / d
        return None

    def apply(self, r):
        if r.alg != self.alg:
            raise TagMismatch("automorphism and element live on different algebras")
        if self.alg == HQ:
            return self.unit * r * self.unit.inv()
        a, b, c, d = self.mobius
        gnum = qpoly.trim((b, a))
        gden = qpoly.trim((d, c))
        n1, _ = qpoly.compose_fraction(r.num, gnum, gden)
        n2, _ = qpoly.compose_fraction(r.den, gnum, gden)
        m1, m2 = qpoly.deg(r.num), qpoly.deg(r.den)
        m = max(m1, m2)
        for _ in range(m - m1):
            n1 = qpoly.mul(n1, gden)
        for _ in range(m - m2):
            n2 = qpoly.mul(n2, gden)
        return RatFun.make(n1, n2)


def compose(sigma: Auto, tau: Auto) -> Auto:
    """sigma o tau (apply tau first)."""
    if sigma.alg != tau.alg:
        raise TagMismatch("cannot compose automorphisms of different algebras")
    if sigma.alg == HQ:
        return Auto.inner(sigma.unit * tau.unit)
    a1, b1, c1, d1 = tau.mobius
    a2, b2, c2, d2 = sigma.mobius
    # matrix product M_tau . M_sigma
    m = (
        a1 * a2 + b1 * c2,
        a1 * b2 + b1 * d2,
        c1 * a2 + d1 * c2,
        c1 * b2 + d1 * d2,
    )
    return Auto(QX, mobius=_normalize_mobius(m))


def power(sigma: Auto, k: int) -> Auto:
    if k == 0:
        return Auto.identity(sigma.alg)
    if k < 0:
        return power(invert(sigma), -k)
    acc = sigma
    for _ in range(k - 1):
        acc = compose(acc, sigma)
    return acc


def invert(sigma: Auto) -> Auto:
    if sigma.alg == HQ:
        return Auto.inner(sigma.unit.conj())  # inverse up to central scaling
    a, b, c, d = sigma.mobius
    return Auto(QX, mobius=_normalize_mobius((d, -b, -c, a)))


def auto_equal(sigma: Auto, tau: Auto) -> bool:
    if sigma.alg != tau.alg:
        raise TagMismatch("cannot compare automorphisms of different algebras")
    return sigma == tau


def auto_commute(sigma: Auto, tau: Auto) -> bool:
    return auto_equal(compose(sigma, tau), compose(tau, sigma))


def is_fixed(sigma: Auto, r) -> bool:
    return sigma.apply(r) == r


def inner_order(sigma: Auto, bound: int):
    """Least k <= bound with sigma^k inner; None when no such k exists.

    Every HQ descriptor is inner, so the answer there is 1.  For QX the only
    inner automorphism is the identity.
    """
    if bound < 1:
        raise ZeroBound("inner_order needs a positive bound")
    if sigma.alg == HQ:
        return 1
    acc = sigma
    for k in range(1, bound + 1):
        if acc.is_identity():
            return k
        acc = compose(acc, sigma)
    return None


# ---------------------------------------------------------------------------
# Left linear algebra over a division ring
#
# A "left combination" of rows v_1,...,v_m is sum_i c_i v_i with the c_i in D
# multiplying on the left; pivots are cleared by left-scaling rows with the
# pivot inverse.


def _row_sub_scaled(row, c, other):
    return [x - c * y for x, y in zip(row, other)]


class _LeftEchelon:
    """Incremental left row reduction with combination tracking."""

    def __init__(self, width, alg):
        self.width = width
        self.alg = alg
        self.pivots = {}  # column -> (reduced row, combo over inserted rows)
        self.count = 0

    def _reduce(self, row, combo):
        while True:
            lead = next((j for j, x in enumerate(row) if x), None)
            if lead is None or lead not in self.pivots:
                return row, combo, lead
            prow, pcombo = self.pivots[lead]
            c = row[lead]
            row = _row_sub_scaled(row, c, prow)
            combo = _row_sub_scaled(combo, c, pcombo)

    def insert(self, row):
        """Insert a row; returns a nonzero left combination of all rows
        inserted so far that vanishes, or None if the row was independent."""
        combo = [zero(self.alg)] * self.count + [one(self.alg)]
        self.count += 1
        for col, (_, pcombo) in self.pivots.items():
            self.pivots[col] = (_, pcombo + [zero(self.alg)])
        row, combo, lead = self._reduce(list(row), combo)
        if lead is None:
            return combo
        inv = row[lead].inv()
        row = [inv * x for x in row]
        combo = [inv * x for x in combo]
        self.pivots[lead] = (row, combo)
        return None

    def express(self, target):
        """Left coefficients over the inserted rows reproducing target, or None."""
        acc = [zero(self.alg)] * self.count
        row = list(target)
        while True:
            lead = next((j for j, x in enumerate(row) if x), None)
            if lead is None:
                return acc
            if lead not in self.pivots:
                return None
            prow, pcombo = self.pivots[lead]
            c = row[lead]
            row = _row_sub_scaled(row, c, prow)
            acc = [a + c * p for a, p in zip(acc, pcombo)]


def _matrix_alg(rows):
    algs = {x.alg for row in rows for x in row}
    if len(algs) != 1:
        raise TagMismatch("matrix entries must share one algebra")
    return algs.pop()


def left_nullspace(rows):
    """Basis of left null vectors v (v . A = 0) of the given row list."""
    if not rows:
        return []
    alg = _matrix_alg(rows)
    ech = _LeftEchelon(len(rows[0]), alg)
    out = []
    for row in rows:
        combo = ech.insert(row)
        if combo is not None:
            combo = combo + [zero(alg)] * (len(rows) - len(combo))
            out.append(combo)
    return out


def first_left_dependence(rows):
    """First nonzero left combination of a prefix of rows that vanishes."""
    if not rows:
        return None
    alg = _matrix_alg(rows)
    ech = _LeftEchelon(len(rows[0]), alg)
    for row in rows:
        combo = ech.insert(row)
        if combo is not None:
            return combo
    return None


def left_express(rows, target):
    """Left coefficients c with sum c_i rows[i] = target, or None."""
    if not rows:
        return None if any(target) else []
    alg = _matrix_alg(rows)
    ech = _LeftEchelon(len(rows[0]), alg)
    for row in rows:
        ech.insert(row)
    return ech.express(target)


def left_solve(a_rows, b):
    """Solve A x = b exactly over the division ring (x to the right of A's
    entries); raises NoSolution when the system is inconsistent.  Free
    unknowns are set to zero."""
    if not a_rows:
        if any(b):
            raise NoSolution("empty system with nonzero right side")
        return []
    alg = _matrix_alg(a_rows)
    ncols = len(a_rows[0])
    aug = [list(row) + [bi] for row, bi in zip(a_rows, b)]
    pivot_of_col = {}
    r = 0
    for col in range(ncols):
        pr = next((i for i in range(r, len(aug)) if aug[i][col]), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        inv = aug[r][col].inv()
        aug[r] = [inv * x for x in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][col]:
                aug[i] = _row_sub_scaled(aug[i], aug[i][col], aug[r])
        pivot_of_col[col] = r
        r += 1
        if r == len(aug):
            break
    for i in range(r, len(aug)):
        if aug[i][ncols]:
            raise NoSolution("inconsistent linear system")
    x = [zero(alg)] * ncols
    for col, row in pivot_of_col.items():
        x[col] = aug[row][ncols]
    return x
