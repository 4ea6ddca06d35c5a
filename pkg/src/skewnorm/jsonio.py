"""Shared JSON encodings for rationals, algebra elements, automorphisms,
rings, and the three polynomial shapes.

Rationals travel as "p/q" strings with an explicit denominator; skew
polynomial terms are emitted in descending graded-lex order so equal values
serialize to identical bytes.
"""

from __future__ import annotations

from fractions import Fraction

from . import divalg
from .divalg import HQ, QX, Auto, Quat, RatFun
from .errors import SchemaViolation
from .laurent import LaurentPoly
from .quotient import QuotientElem
from .skewpoly import Ring, SkewPoly


# ---------------------------------------------------------------------------
# Rationals


def rat_to_json(r: Fraction) -> str:
    return f"{r.numerator}/{r.denominator}"


def parse_rat(v) -> Fraction:
    if isinstance(v, bool):
        raise SchemaViolation("expected a rational, got a boolean")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        try:
            return Fraction(v)
        except (ValueError, ZeroDivisionError) as e:
            raise SchemaViolation(f"bad rational {v!r}: {e}") from None
    raise SchemaViolation(f"expected a rational, got {type(v).__name__}")


# ---------------------------------------------------------------------------
# Division algebra elements


def delem_to_json(x):
    if isinstance(x, Quat):
        return {
            "a": rat_to_json(x.a),
            "b": rat_to_json(x.b),
            "c": rat_to_json(x.c),
            "d": rat_to_json(x.d),
        }
    if isinstance(x, RatFun):
        return {
            "num": [rat_to_json(c) for c in x.num],
            "den": [rat_to_json(c) for c in x.den],
        }
    raise SchemaViolation(f"not a division algebra element: {type(x).__name__}")


def parse_delem(obj, alg):
    if isinstance(obj, (int, str)):
        return divalg.from_rational(alg, parse_rat(obj))
    if not isinstance(obj, dict):
        raise SchemaViolation("element must be an object or a rational")
    if alg == HQ:
        extra = set(obj) - {"a", "b", "c", "d"}
        if extra:
            raise SchemaViolation(f"unexpected quaternion fields {sorted(extra)}")
        return Quat.of(*(parse_rat(obj.get(k, 0)) for k in ("a", "b", "c", "d")))
    if alg == QX:
        if set(obj) - {"num", "den"}:
            raise SchemaViolation("rational function takes only num and den")
        num = tuple(parse_rat(c) for c in obj.get("num", []))
        den = tuple(parse_rat(c) for c in obj.get("den", [1]))
        if not any(den):
            raise SchemaViolation("zero denominator")
        return RatFun.make(num, den)
    raise SchemaViolation(f"unknown algebra tag {alg!r}")


def parse_alg(tag):
    if tag not in (HQ, QX):
        raise SchemaViolation(f"algebra tag must be HQ or QX, got {tag!r}")
    return tag


# ---------------------------------------------------------------------------
# Automorphisms


def auto_to_json(a: Auto):
    if a.is_identity():
        return {"kind": "identity"}
    if a.alg == HQ:
        return {"kind": "inner", "unit": delem_to_json(a.unit)}
    return {"kind": "genimage", "image": delem_to_json(a.gen_image_fun())}


def parse_auto(obj, alg=None) -> Auto:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise SchemaViolation("automorphism must be an object with a kind")
    kind = obj["kind"]
    if kind == "identity":
        if alg is None:
            raise SchemaViolation("identity automorphism needs an algebra context")
        return Auto.identity(alg)
    if kind == "inner":
        if alg not in (None, HQ):
            raise SchemaViolation("inner automorphisms live on the quaternions")
        return Auto.inner(parse_delem(obj.get("unit"), HQ))
    if kind == "genimage":
        if alg not in (None, QX):
            raise SchemaViolation("generator-image automorphisms live on Q(x)")
        return Auto.gen_image(parse_delem(obj.get("image"), QX))
    if kind == "power":
        base = parse_auto(obj.get("base"), alg)
        k = obj.get("k")
        if not isinstance(k, int) or isinstance(k, bool):
            raise SchemaViolation("power automorphism needs an integer k")
        return divalg.power(base, k)
    if kind == "compose":
        outer = parse_auto(obj.get("outer"), alg)
        inner = parse_auto(obj.get("inner"), alg)
        if outer.alg != inner.alg:
            raise SchemaViolation("composed automorphisms on different algebras")
        return divalg.compose(outer, inner)
    raise SchemaViolation(f"unknown automorphism kind {kind!r}")


# ---------------------------------------------------------------------------
# Rings and skew polynomials


def ring_to_json(ring: Ring):
    return {"alg": ring.alg, "autos": [auto_to_json(a) for a in ring.autos]}


def parse_ring(obj) -> Ring:
    if not isinstance(obj, dict):
        raise SchemaViolation("ring must be an object")
    alg = parse_alg(obj.get("alg"))
    autos = obj.get("autos")
    if not isinstance(autos, list):
        raise SchemaViolation("ring needs a list of automorphisms")
    return Ring(alg, tuple(parse_auto(a, alg) for a in autos))


def skewpoly_to_json(f: SkewPoly):
    return {
        "ring": ring_to_json(f.ring),
        "terms": [
            {"exp": list(e), "coef": delem_to_json(c)} for e, c in f.sorted_terms()
        ],
    }


def parse_skewpoly(obj, ring: Ring = None) -> SkewPoly:
    if not isinstance(obj, dict):
        raise SchemaViolation("polynomial must be an object")
    if ring is None:
        ring = parse_ring(obj.get("ring"))
    terms = {}
    for item in obj.get("terms", []):
        exp = item.get("exp")
        if (
            not isinstance(exp, list)
            or len(exp) != ring.n
            or any(not isinstance(k, int) or isinstance(k, bool) or k < 0 for k in exp)
        ):
            raise SchemaViolation(f"bad exponent vector {exp!r} for {ring.n} variables")
        key = tuple(exp)
        coef = parse_delem(item.get("coef"), ring.alg)
        if key in terms:
            raise SchemaViolation(f"duplicate exponent {exp!r}")
        if coef:
            terms[key] = coef
    return SkewPoly(ring, terms)


# ---------------------------------------------------------------------------
# Laurent polynomials


def laurent_to_json(f: LaurentPoly):
    return {
        "alg": f.alg,
        "auto": auto_to_json(f.auto),
        "terms": {str(k): delem_to_json(c) for k, c in f.sorted_terms()},
    }


def parse_laurent(obj) -> LaurentPoly:
    if not isinstance(obj, dict):
        raise SchemaViolation("Laurent polynomial must be an object")
    alg = parse_alg(obj.get("alg"))
    auto = parse_auto(obj.get("auto"), alg)
    terms = {}
    for key, coef in (obj.get("terms") or {}).items():
        try:
            k = int(key)
        except ValueError:
            raise SchemaViolation(f"Laurent exponent {key!r} is not an integer") from None
        terms[k] = parse_delem(coef, alg)
    return LaurentPoly(alg, auto, terms)


# ---------------------------------------------------------------------------
# Quotient elements


def quotient_to_json(u: QuotientElem):
    return {
        "ring": ring_to_json(u.ring),
        "c0": delem_to_json(u.c0) if u.c0 else None,
        "z1": {str(k): delem_to_json(c) for k, c in sorted(u.pos1.items())},
        "z2": {str(k): delem_to_json(c) for k, c in sorted(u.pos2.items())},
    }


def _parse_side(obj, alg):
    out = {}
    for key, coef in (obj or {}).items():
        try:
            k = int(key)
        except ValueError:
            raise SchemaViolation(f"exponent {key!r} is not an integer") from None
        if k < 1:
            raise SchemaViolation("positive-part exponents start at 1")
        out[k] = parse_delem(coef, alg)
    return out


def parse_quotient(obj, ring: Ring = None) -> QuotientElem:
    if not isinstance(obj, dict):
        raise SchemaViolation("quotient element must be an object")
    if ring is None:
        ring = parse_ring(obj.get("ring"))
    c0 = obj.get("c0")
    c0 = divalg.zero(ring.alg) if c0 is None else parse_delem(c0, ring.alg)
    return QuotientElem(
        ring, c0, _parse_side(obj.get("z1"), ring.alg), _parse_side(obj.get("z2"), ring.alg)
    )
