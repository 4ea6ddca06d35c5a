"""JSON-on-stdin command line front end.

One request per invocation: {"verb": ..., "args": {...}, "seed": optional}.
The response is {"ok": ..., "result": ..., "diagnostics": [...]} on stdout;
exit code 0 when ok, 1 on operation errors, 2 on usage errors.  Named demos
replay the worked constructions end to end with their internal checks.
"""

from __future__ import annotations

import json
import os
import sys
from fractions import Fraction

from . import divalg, jsonio, laurent, normalize, quatcentral, quotient, skewpoly
from .divalg import HQ, QX, Auto, Quat
from .errors import SchemaViolation, SkewnormError, UnknownDemo, UnknownVerb
from .laurent import LaurentPoly
from .quotient import QuotientElem
from .skewpoly import Ring, SkewPoly
from .subst import Witness, check_automorphic, linear_shift, power_shift, substitute


def _need(args, key):
    if key not in args:
        raise SchemaViolation(f"missing argument {key!r}")
    return args[key]


def _int_arg(args, key, default=None):
    v = args.get(key, default)
    if not isinstance(v, int) or isinstance(v, bool):
        raise SchemaViolation(f"argument {key!r} must be an integer")
    return v


def _parse_alg(args):
    return jsonio.parse_alg(_need(args, "alg"))


def _parse_point_spec(args):
    grids = args.get("grids")
    if args.get("incremental") or grids is None:
        return normalize.PointSearchSpec.incremental_default()
    return normalize.PointSearchSpec(
        grids=[[jsonio.parse_rat(v) for v in g] for g in grids]
    )


def _parse_witnesses(items, alg_hint=None):
    out = []
    for obj in items:
        el = jsonio.parse_skewpoly(_need(obj, "element"))
        auto = jsonio.parse_auto(_need(obj, "auto"), el.ring.alg)
        out.append(Witness(el, auto))
    return out


# ---------------------------------------------------------------------------
# Verb handlers


def _v_arith(args):
    alg = _parse_alg(args)
    x = jsonio.parse_delem(_need(args, "x"), alg)
    op = _need(args, "op")
    y = args.get("y")
    y = None if y is None else jsonio.parse_delem(y, alg)
    return jsonio.delem_to_json(divalg.arith(op, x, y))


def _v_auto_apply(args):
    alg = _parse_alg(args)
    auto = jsonio.parse_auto(_need(args, "auto"), alg)
    x = jsonio.parse_delem(_need(args, "x"), alg)
    return jsonio.delem_to_json(auto.apply(x))


def _v_auto_equal(args):
    alg = _parse_alg(args)
    a = jsonio.parse_auto(_need(args, "a"), alg)
    b = jsonio.parse_auto(_need(args, "b"), alg)
    return divalg.auto_equal(a, b)


def _v_auto_commute(args):
    alg = _parse_alg(args)
    a = jsonio.parse_auto(_need(args, "a"), alg)
    b = jsonio.parse_auto(_need(args, "b"), alg)
    return divalg.auto_commute(a, b)


def _v_delem_props(args):
    alg = _parse_alg(args)
    x = jsonio.parse_delem(_need(args, "x"), alg)
    out = {"central": divalg.is_central(x)}
    if "auto" in args:
        out["fixed"] = divalg.is_fixed(jsonio.parse_auto(args["auto"], alg), x)
    return out


def _v_inner_order(args):
    alg = _parse_alg(args)
    auto = jsonio.parse_auto(_need(args, "auto"), alg)
    return divalg.inner_order(auto, _int_arg(args, "bound"))


def _v_linalg(args):
    alg = _parse_alg(args)
    rows = [
        [jsonio.parse_delem(x, alg) for x in row] for row in _need(args, "matrix")
    ]
    op = args.get("op", "solve")
    if op == "nullspace":
        basis = divalg.left_nullspace(rows)
        return {"nullspace": [[jsonio.delem_to_json(x) for x in v] for v in basis]}
    if op != "solve":
        raise SchemaViolation("linalg op must be solve or nullspace")
    rhs = [jsonio.parse_delem(x, alg) for x in _need(args, "rhs")]
    sol = divalg.left_solve(rows, rhs)
    return {"solution": [jsonio.delem_to_json(x) for x in sol]}


def _two_polys(args):
    f = jsonio.parse_skewpoly(_need(args, "f"))
    g = jsonio.parse_skewpoly(_need(args, "g"), f.ring)
    return f, g


def _v_mul(args):
    f, g = _two_polys(args)
    return jsonio.skewpoly_to_json(f * g)


def _v_add(args):
    f, g = _two_polys(args)
    return jsonio.skewpoly_to_json(f + g)


def _v_sub(args):
    f, g = _two_polys(args)
    return jsonio.skewpoly_to_json(f - g)


def _v_scale_left(args):
    f = jsonio.parse_skewpoly(_need(args, "f"))
    c = jsonio.parse_delem(_need(args, "c"), f.ring.alg)
    return jsonio.skewpoly_to_json(f.scale_left(c))


def _v_degree(args):
    f = jsonio.parse_skewpoly(_need(args, "f"))
    out = {"total": f.total_degree()}
    if "i" in args:
        out["in"] = f.degree_in(_int_arg(args, "i"))
    return out


def _v_leading_form(args):
    f = jsonio.parse_skewpoly(_need(args, "f"))
    return jsonio.skewpoly_to_json(f.leading_form())


def _v_monic_check(args):
    return jsonio.parse_skewpoly(_need(args, "f")).is_monic_in_last()


def _parse_shaped(args):
    shape = args.get("shape", "skew")
    el = _need(args, "element")
    if shape == "skew":
        return jsonio.parse_skewpoly(el)
    if shape == "laurent":
        return jsonio.parse_laurent(el)
    if shape == "quotient":
        return jsonio.parse_quotient(el)
    raise SchemaViolation("shape must be skew, laurent, or quotient")


def _v_check_automorphic(args):
    return jsonio.auto_to_json(check_automorphic(_parse_shaped(args)))


def _v_subst(args):
    f = jsonio.parse_skewpoly(_need(args, "f"))
    point = _parse_witnesses(_need(args, "point"))
    return jsonio.skewpoly_to_json(substitute(f, point))


def _v_shift_linear(args):
    f = jsonio.parse_skewpoly(_need(args, "f"))
    shifts = [jsonio.parse_rat(v) for v in _need(args, "shifts")]
    return jsonio.skewpoly_to_json(linear_shift(f, shifts))


def _v_shift_power(args):
    f = jsonio.parse_skewpoly(_need(args, "f"))
    return jsonio.skewpoly_to_json(power_shift(f, _int_arg(args, "d")))


def _v_nullsatz_search(args):
    f = jsonio.parse_skewpoly(_need(args, "f"))
    point = normalize.find_nonvanishing(f, _parse_point_spec(args))
    return {"point": [jsonio.rat_to_json(v) for v in point]}


def _v_nullsatz_projective(args):
    f = jsonio.parse_skewpoly(_need(args, "f"))
    point = normalize.find_projective_point(f, _parse_point_spec(args))
    return {"point": [jsonio.rat_to_json(v) for v in point]}


def _monicization_json(res):
    out = {
        "mode": res.mode,
        "scale": jsonio.delem_to_json(res.scale),
        "m": res.m,
        "g": jsonio.skewpoly_to_json(res.g),
    }
    if res.mode == "linear":
        out["shift"] = [jsonio.rat_to_json(v) for v in res.shift]
    else:
        out["d"] = res.d
    return out


def _v_monicize_linear(args):
    f = jsonio.parse_skewpoly(_need(args, "f"))
    return _monicization_json(normalize.monicize_linear(f, _parse_point_spec(args)))


def _v_monicize_dadic(args):
    f = jsonio.parse_skewpoly(_need(args, "f"))
    return _monicization_json(normalize.monicize_dadic(f))


def _witness_json(w):
    return {
        "element": jsonio.skewpoly_to_json(w.element),
        "auto": jsonio.auto_to_json(w.auto),
    }


def _v_normalize_run(args):
    mode = _need(args, "mode")
    gens = _parse_witnesses(_need(args, "generators"))
    bound = _int_arg(args, "degree_bound", 4)
    oracle = normalize.linear_algebra_oracle(bound)
    cert = normalize.normalize(gens, oracle, mode)
    return {
        "transforms": [_monicization_json(t) for t in cert.transforms],
        "independent": [_witness_json(w) for w in cert.independent_gens],
        "module_gens": [jsonio.skewpoly_to_json(g) for g in cert.module_gens],
        "independence_bound": cert.independence_bound,
    }


def _v_power_reduce(args):
    gens = _parse_witnesses(_need(args, "generators"))
    exps = _need(args, "exponents")
    if not isinstance(exps, list) or any(
        not isinstance(d, int) or isinstance(d, bool) or d < 1 for d in exps
    ):
        raise SchemaViolation("exponents must be positive integers")
    red = normalize.power_reduce(gens, exps)
    return {
        "sub_gens": [_witness_json(w) for w in red.sub_gens],
        "common": jsonio.auto_to_json(red.common),
        "module_basis": [jsonio.skewpoly_to_json(b) for b in red.module_basis],
    }


def _v_decide_shifts(args):
    autos = [jsonio.parse_auto(a, QX) for a in _need(args, "autos")]
    dec = normalize.decide_tuple_normalizable_field_shifts(autos)
    out = {"normalizable": dec.normalizable}
    if dec.exponents is not None:
        out["exponents"] = list(dec.exponents)
    return out


def _v_laurent_arith(args):
    f = jsonio.parse_laurent(_need(args, "f"))
    g = jsonio.parse_laurent(_need(args, "g"))
    op = _need(args, "op")
    if op == "add":
        return jsonio.laurent_to_json(f + g)
    if op == "mul":
        return jsonio.laurent_to_json(f * g)
    raise SchemaViolation("laurent op must be add or mul")


def _v_laurent_classify(args):
    cls = laurent.classify_automorphic(jsonio.parse_laurent(_need(args, "f")))
    out = {"kind": cls.kind}
    if cls.twist is not None:
        out["twist"] = jsonio.auto_to_json(cls.twist)
    if cls.exponent is not None:
        out["exponent"] = cls.exponent
        out["coefficient"] = jsonio.delem_to_json(cls.coefficient)
    return out


def _v_laurent_witness(args):
    alg = _parse_alg(args)
    sigma = jsonio.parse_auto(_need(args, "sigma"), alg)
    c = jsonio.parse_delem(_need(args, "c"), alg)
    u, relation, twist = laurent.finite_inner_order_witness(
        sigma, _int_arg(args, "k"), c
    )
    return {
        "u": jsonio.laurent_to_json(u),
        "relation": jsonio.skewpoly_to_json(relation),
        "twist": jsonio.auto_to_json(twist),
    }


def _v_laurent_invert(args):
    coeffs = [jsonio.parse_skewpoly(c) for c in _need(args, "coeffs")]
    if not coeffs:
        raise SchemaViolation("need at least one coefficient")
    sigma = jsonio.parse_auto(_need(args, "sigma"), coeffs[0].ring.alg)
    res = laurent.invert_via_integral_relation(coeffs, sigma)
    if res is None:
        return {"consistent": False, "inverse": None}
    return {"consistent": True, "inverse": jsonio.skewpoly_to_json(res)}


def _v_quotient_arith(args):
    f = jsonio.parse_quotient(_need(args, "f"))
    g = jsonio.parse_quotient(_need(args, "g"), f.ring)
    op = _need(args, "op")
    if op == "add":
        return jsonio.quotient_to_json(f + g)
    if op == "mul":
        return jsonio.quotient_to_json(f * g)
    raise SchemaViolation("quotient op must be add or mul")


def _v_quotient_depend(args):
    x1 = jsonio.parse_quotient(_need(args, "x1"))
    x2 = jsonio.parse_quotient(_need(args, "x2"), x1.ring)
    wit = quotient.find_dependence(x1, x2)
    combo = [
        {"e1": e1, "e2": e2, "coef": jsonio.delem_to_json(c)}
        for (e1, e2), c in sorted(wit.combo.items())
    ]
    return {"combo": combo, "bound": wit.bound}


def _v_quotient_witness(args):
    ring = jsonio.parse_ring(_need(args, "ring"))
    c = jsonio.parse_delem(_need(args, "c"), ring.alg)
    u, twist = quotient.quotient_witness(
        ring, _int_arg(args, "k1"), _int_arg(args, "k2"), c
    )
    return {"u": jsonio.quotient_to_json(u), "twist": jsonio.auto_to_json(twist)}


def _v_quotient_decide(args):
    alg = _parse_alg(args)
    s1 = jsonio.parse_auto(_need(args, "sigma1"), alg)
    s2 = jsonio.parse_auto(_need(args, "sigma2"), alg)
    dec = quotient.decide_quotient_normalizable(s1, s2, _int_arg(args, "bound"))
    out = {"kind": dec.kind}
    if dec.kind == "witness":
        out.update(
            {"k1": dec.k1, "k2": dec.k2, "unit": jsonio.delem_to_json(dec.unit)}
        )
    if dec.bound is not None:
        out["bound"] = dec.bound
    return out


def _v_quat_constants(args):
    consts = quatcentral.compute_extraction_constants()
    return {
        str(i): {
            f"{s},{t}": jsonio.rat_to_json(b) for (s, t), b in sorted(tbl.items())
        }
        for i, tbl in enumerate(consts.table)
    }


def _v_quat_decompose(args):
    f = jsonio.parse_skewpoly(_need(args, "f"))
    parts = quatcentral.central_components(f)
    return [jsonio.skewpoly_to_json(p) for p in parts]


def _v_quat_centralize(args):
    gens = [jsonio.parse_skewpoly(g) for g in _need(args, "generators")]
    out = quatcentral.centralize_generators(gens)
    return {
        "central": [jsonio.skewpoly_to_json(p) for p in out.central],
        "decompositions": [
            [[i, idx] for i, idx in entry] for entry in out.decompositions
        ],
        "origins": [list(o) for o in out.origins],
    }


def _v_quat_point_ideal(args):
    point = [jsonio.parse_delem(q, HQ) for q in _need(args, "point")]
    res = quatcentral.point_ideal_two_sided(point)
    out = {"kind": res.kind}
    if res.pair is not None:
        out["pair"] = list(res.pair)
    if res.witness is not None:
        out.update(
            {
                "index": res.index,
                "witness": jsonio.delem_to_json(res.witness),
                "conjugate": jsonio.delem_to_json(res.conjugate),
                "membership": jsonio.delem_to_json(res.membership),
            }
        )
    return out


def _v_demo(args):
    return run_demo_result(_need(args, "name"))


VERBS = {
    "arith": _v_arith,
    "auto.apply": _v_auto_apply,
    "auto.equal": _v_auto_equal,
    "auto.commute": _v_auto_commute,
    "delem.props": _v_delem_props,
    "auto.inner-order": _v_inner_order,
    "linalg": _v_linalg,
    "mul": _v_mul,
    "add": _v_add,
    "sub": _v_sub,
    "scale-left": _v_scale_left,
    "degree": _v_degree,
    "leading-form": _v_leading_form,
    "monic-check": _v_monic_check,
    "check-automorphic": _v_check_automorphic,
    "subst": _v_subst,
    "shift-linear": _v_shift_linear,
    "shift-power": _v_shift_power,
    "nullsatz.search": _v_nullsatz_search,
    "nullsatz.projective": _v_nullsatz_projective,
    "monicize.linear": _v_monicize_linear,
    "monicize.dadic": _v_monicize_dadic,
    "normalize.run": _v_normalize_run,
    "power.reduce": _v_power_reduce,
    "tuple.decide-shifts": _v_decide_shifts,
    "laurent.arith": _v_laurent_arith,
    "laurent.classify": _v_laurent_classify,
    "laurent.witness": _v_laurent_witness,
    "laurent.invert-check": _v_laurent_invert,
    "quotient.arith": _v_quotient_arith,
    "quotient.depend": _v_quotient_depend,
    "quotient.witness": _v_quotient_witness,
    "quotient.decide": _v_quotient_decide,
    "quat.constants": _v_quat_constants,
    "quat.decompose": _v_quat_decompose,
    "quat.centralize": _v_quat_centralize,
    "quat.point-ideal": _v_quat_point_ideal,
    "demo": _v_demo,
}


# ---------------------------------------------------------------------------
# Demos


def _demo_laurent_negative():
    lines = []
    sigma = Auto.shift(1)
    u = LaurentPoly(QX, sigma, {-1: divalg.one(QX), 1: divalg.one(QX)})
    cls = laurent.classify_automorphic(u)
    assert cls.kind == "not-automorphic"
    lines.append("under x -> x + 1 the element t^-1 + t is not automorphic")
    mono = LaurentPoly.t_power(QX, sigma, 3, divalg.from_rational(QX, Fraction(2)))
    cls2 = laurent.classify_automorphic(mono)
    assert cls2.kind == "monomial" and cls2.exponent == 3
    lines.append("the monomial 2 t^3 is automorphic with twist sigma^3")
    checked = 0
    for ka in range(-2, 3):
        for kb in range(ka + 1, 3):
            el = LaurentPoly(QX, sigma, {ka: divalg.one(QX), kb: divalg.one(QX)})
            assert laurent.classify_automorphic(el).kind == "not-automorphic"
            checked += 1
    lines.append(f"all {checked} two-term supports in [-2,2] fail the twist test")
    return lines


def _demo_laurent_positive():
    lines = []
    sigma = Auto.inner(divalg.QUAT_I)
    c = Quat.of(-1)
    u, relation, twist = laurent.finite_inner_order_witness(sigma, 2, c)
    lines.append("sigma = conjugation by i has sigma^2 = inner(-1) = identity")
    lines.append("u = t^-2 + t^2 is automorphic and t satisfies t^4 - u t^2 + 1 = 0")
    assert twist.is_identity()
    coeffs_ring = Ring(HQ, (sigma,))
    one = SkewPoly.one(coeffs_ring)
    cand = laurent.invert_via_integral_relation([one], sigma)
    assert cand is None
    lines.append("no consistent expression for t^-1 inside D[t; sigma] exists")
    return lines


def _demo_dadic_monicize():
    lines = []
    ring = skewpoly.central_ring(HQ, 2)
    t1 = SkewPoly.variable(ring, 0)
    t2 = SkewPoly.variable(ring, 1)
    f = t1 * t2
    res = normalize.monicize_dadic(f)
    assert res.d == 3 and res.m == 4
    assert res.g == t2**4 + t1 * t2
    lines.append("f = t1 t2 has degree 2, so d = 3 and t1 -> t1 + t2^3")
    lines.append("g = t2^4 + t1 t2 is monic of degree 4 in t2")
    return lines


def _demo_linear_monicize():
    lines = []
    ring = skewpoly.central_ring(HQ, 2)
    t1 = SkewPoly.variable(ring, 0)
    t2 = SkewPoly.variable(ring, 1)
    f = t1 * t2
    res = normalize.monicize_linear(f)
    assert res.m == 2 and res.g.is_monic_in_last()
    lines.append(f"shift t1 -> t1 + {res.shift[0]} t2 makes t1 t2 monic in t2")
    lines.append("g = t2^2 + t1 t2, monic of degree 2")
    return lines


def _demo_quotient_example():
    lines = []
    dec = quotient.decide_quotient_normalizable(Auto.shift(2), Auto.shift(3), 6)
    assert dec.kind == "witness" and (dec.k1, dec.k2) == (3, 2)
    lines.append("shifts by +2 and +3 satisfy sigma1^3 = sigma2^2")
    ring = Ring(QX, (Auto.shift(2), Auto.shift(3)))
    u, twist = quotient.quotient_witness(ring, 3, 2, divalg.one(QX))
    lines.append("u = z1^3 + z2^2 is automorphic and makes both z_i integral")
    dec2 = quotient.decide_quotient_normalizable(Auto.shift(1), Auto.shift(-1), 8)
    assert dec2.kind == "not-normalizable"
    lines.append("shifts by +1 and -1 admit no witness for any bound")
    return lines


def _demo_quat_point_ideal():
    lines = []
    res = quatcentral.point_ideal_two_sided([divalg.QUAT_I])
    assert res.kind == "commuting-non-real"
    assert res.membership == Quat.of(0, 2)
    lines.append("(t1 - i) j = j (t1 + i), so 2i lands in the left ideal")
    res2 = quatcentral.point_ideal_two_sided([Fraction(1, 2), Fraction(3)])
    assert res2.kind == "two-sided-real"
    lines.append("rational points give genuinely two-sided point ideals")
    return lines


def _demo_field_shifts():
    lines = []
    dec = normalize.decide_tuple_normalizable_field_shifts(
        [Auto.shift(2), Auto.shift(3)]
    )
    assert dec.normalizable and dec.exponents == (3, 2)
    lines.append("shifts (+2, +3) align at exponents (3, 2): 3*2 = 2*3 = 6")
    dec2 = normalize.decide_tuple_normalizable_field_shifts(
        [Auto.shift(1), Auto.shift(-2)]
    )
    assert not dec2.normalizable
    lines.append("mixed-sign shifts can never align")
    return lines


def _demo_normalize_quotient():
    lines = []
    ident = Auto.identity(HQ)
    ring = Ring(HQ, (ident, ident))
    z1 = QuotientElem.z1(ring)
    z2 = QuotientElem.z2(ring)
    gens = [Witness(z1, ident), Witness(z2, ident)]
    cert = normalize.normalize(gens, normalize.linear_algebra_oracle(4), "central")
    assert len(cert.module_gens) == 4
    targets = [z1 * z1 + z2, z1 * z2, (z1 + z2) ** 3]
    assert normalize.verify_certificate(cert, targets, coeff_degree=8)
    lines.append("z1 z2 = 0 monicizes d-adically; z1 - z2^3 stays independent")
    lines.append("the ring is spanned by 1, z2, z2^2, z2^3 over the subring")
    return lines


DEMOS = {
    "laurent-negative": _demo_laurent_negative,
    "laurent-positive": _demo_laurent_positive,
    "dadic-monicize": _demo_dadic_monicize,
    "linear-monicize": _demo_linear_monicize,
    "quotient-example": _demo_quotient_example,
    "quat-point-ideal": _demo_quat_point_ideal,
    "field-shifts": _demo_field_shifts,
    "normalize-quotient": _demo_normalize_quotient,
}


def run_demo_result(name):
    if name not in DEMOS:
        raise UnknownDemo(f"no demo named {name!r}")
    return {"name": name, "transcript": DEMOS[name]()}


# ---------------------------------------------------------------------------
# Dispatch


def dispatch(request) -> dict:
    """Route one request object to its verb handler."""
    if not isinstance(request, dict):
        raise SchemaViolation("request must be a JSON object")
    verb = request.get("verb")
    if not isinstance(verb, str):
        raise SchemaViolation("request needs a string verb")
    if verb not in VERBS:
        raise UnknownVerb(f"unknown verb {verb!r}")
    args = request.get("args", {})
    if not isinstance(args, dict):
        raise SchemaViolation("args must be a JSON object")
    seed = os.environ.get("SKEWNORM_SEED", request.get("seed"))
    if seed is not None:
        args = dict(args)
        args.setdefault("seed", int(seed))
    result = VERBS[verb](args)
    return {"ok": True, "result": result, "diagnostics": []}


def run_demo(name) -> dict:
    return {"ok": True, "result": run_demo_result(name), "diagnostics": []}


def _error_response(exc: SkewnormError) -> dict:
    return {
        "ok": False,
        "result": None,
        "diagnostics": [{"code": exc.code, "message": str(exc)}],
    }


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    if argv and argv[0] == "--list-verbs":
        print(json.dumps(sorted(VERBS), indent=None))
        return 0
    if argv and argv[0] == "--demo":
        if len(argv) != 2:
            print("usage: skewnorm --demo NAME", file=sys.stderr)
            return 2
        request = {"verb": "demo", "args": {"name": argv[1]}}
    elif argv:
        print("usage: skewnorm [--demo NAME | --list-verbs] < request.json", file=sys.stderr)
        return 2
    else:
        try:
            request = json.load(sys.stdin)
        except json.JSONDecodeError as e:
            print(f"bad request JSON: {e}", file=sys.stderr)
            return 2
    try:
        response = dispatch(request)
        code = 0
    except (SchemaViolation, UnknownVerb, UnknownDemo) as e:
        response = _error_response(e)
        code = 2
    except SkewnormError as e:
        response = _error_response(e)
        code = 1
    print(json.dumps(response, sort_keys=True))
    if code:
        print(response["diagnostics"][0]["message"], file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
