"""The ``witt`` command line.

Every subcommand prints a stable text form, or with ``--json`` a single
JSON object carrying ``"schema": 1``.  Exit status is 0 on success, 1 on
a domain error and 2 on a parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import artin_hasse as ah
from . import canonical, checks, core, lambda_ring, padic, universal
from .errors import ParseError, WittError
from .profiles import DivisorStableProfile, full_profile, parse_profile
from .rings import Ring, parse_ring, split_top_level

SCHEMA = 1


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise ParseError(message)


# parsing helpers


def _vector(ring: Ring, profile: DivisorStableProfile, text: str) -> core.WittVector:
    parts = split_top_level(text)
    if len(parts) != len(profile):
        raise ParseError(
            f"expected {len(profile)} components for {profile}, got {len(parts)} in {text!r}"
        )
    return core.WittVector(profile, ring, tuple(ring.parse(s) for s in parts))


def _vector_json(x: core._Indexed, kind: str = "witt") -> dict:
    return {
        "type": kind,
        "ring": str(x.ring),
        "profile": list(x.profile.indices),
        "components": [x.ring.format(v) for v in x.values],
    }


def _series_json(f: lambda_ring.TruncatedSeries) -> dict:
    return {
        "type": "series",
        "ring": str(f.ring),
        "order": f.order,
        "coefficients": [f.ring.format(c) for c in f.coeffs],
    }


def _poly_json(poly) -> dict:
    return {"type": "polynomial", "text": str(poly), "terms": poly.to_json()}


# handlers return (text, json payload, exit code)


def cmd_universal(args):
    kind = args.kind
    if kind in ("sum", "prod", "neg"):
        _need(args, "n")
        name = {"sum": universal.Kind.SUM, "prod": universal.Kind.PRODUCT, "neg": universal.Kind.NEG}
        poly = universal.structural_poly(name[kind], args.n)
    elif kind == "witt":
        _need(args, "n")
        poly = universal.witt_polynomial(args.n)
    elif kind == "frob":
        _need(args, "n", "m")
        poly = universal.frobenius_poly(args.n, args.m)
    elif kind == "epsilon":
        _need(args, "p", "n")
        poly = universal.epsilon_poly(args.p, args.n)
    else:
        _need(args, "a", "b", "n", "m")
        poly = universal.delta_poly(args.a, args.b, args.n, args.m)
    params = {k: getattr(args, k) for k in ("n", "m", "p", "a", "b") if getattr(args, k) is not None}
    return str(poly), {"kind": kind, **params, **_poly_json(poly)}, 0


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise ParseError(f"universal {args.kind} needs " + ", ".join(f"--{n}" for n in missing))


def _ring_profile(args):
    return parse_ring(args.ring), parse_profile(args.profile)


def _vector_result(x):
    return x.format(","), _vector_json(x, "ghost" if isinstance(x, core.GhostVector) else "witt"), 0


def cmd_binary(args):
    ring, profile = _ring_profile(args)
    x, y = _vector(ring, profile, args.x), _vector(ring, profile, args.y)
    op = core.witt_add if args.command == "add" else core.witt_mul
    return _vector_result(op(x, y))


def cmd_neg(args):
    ring, profile = _ring_profile(args)
    return _vector_result(core.witt_neg(_vector(ring, profile, args.x)))


def cmd_ghost(args):
    ring, profile = _ring_profile(args)
    return _vector_result(core.ghost(_vector(ring, profile, args.x)))


def cmd_unghost(args):
    ring, profile = _ring_profile(args)
    g = _vector(ring, profile, args.x)
    return _vector_result(core.unghost(core.GhostVector(profile, ring, g.values)))


def cmd_teich(args):
    ring, profile = _ring_profile(args)
    return _vector_result(core.teichmuller(ring(args.value), profile))


def cmd_frob(args):
    ring, profile = _ring_profile(args)
    return _vector_result(core.frobenius(args.n, _vector(ring, profile, args.x)))


def cmd_versch(args):
    ring, profile = _ring_profile(args)
    source = profile.quotient(args.n)
    return _vector_result(core.verschiebung(args.n, _vector(ring, source, args.x), profile))


def cmd_project(args):
    ring, profile = _ring_profile(args)
    return _vector_result(core.project(_vector(ring, profile, args.x), parse_profile(args.to)))


def cmd_lambda(args):
    ring = parse_ring(args.ring)
    if args.op == "to":
        if args.order is None:
            raise ParseError("lambda to needs --order")
        x = _vector(ring, full_profile(args.order), args.operands[0])
        f = lambda_ring.witt_to_lambda(x)
        return str(f), _series_json(f), 0
    f = lambda_ring.parse_series(ring, args.operands[0], args.order)
    if args.op == "from":
        return _vector_result(lambda_ring.lambda_to_witt(f))
    if args.op == "d":
        out = lambda_ring.d_operator(f)
        return str(out), _series_json(out), 0
    if len(args.operands) != 2:
        raise ParseError("lambda mul needs two series")
    g = lambda_ring.parse_series(ring, args.operands[1], f.order)
    out = lambda_ring.lambda_witt_mul(f, g)
    return str(out), _series_json(out), 0


def _lambda_arity(args):
    want = 2 if args.op == "mul" else 1
    if len(args.operands) != want:
        raise ParseError(f"lambda {args.op} takes {want} operand(s), got {len(args.operands)}")


def cmd_artinhasse(args):
    fn = ah.hexp_moebius if args.moebius else ah.hexp_coeffs
    s = fn(args.p, args.terms)
    payload = {
        "p": args.p,
        "terms": args.terms,
        "method": "moebius" if args.moebius else "exp",
        "coefficients": [str(c) for c in s.coeffs],
        "p_integral": s.is_p_integral(),
    }
    return str(s), payload, 0


def cmd_phi(args):
    spec = (
        canonical.FrobeniusLiftSpec.identity()
        if args.spec == "id"
        else canonical.FrobeniusLiftSpec.power()
    )
    a = spec.ring(args.value)
    x = canonical.phi(spec, a, full_profile(args.upto))
    payload = {"spec": args.spec, "value": spec.ring.format(a.value), **_vector_json(x)}
    return x.format(","), payload, 0


def cmd_delta(args):
    ring = parse_ring(args.ring)
    x = _vector(ring, full_profile(args.a * args.b), args.input)
    y = canonical.delta(x, args.a, args.b)
    text = "; ".join(v.format(",") for v in y.inner)
    payload = {
        "type": "nested",
        "ring": str(ring),
        "a": args.a,
        "b": args.b,
        "outer_profile": list(y.outer.indices),
        "inner_profile": list(y.inner_profile.indices),
        "components": [[ring.format(c) for c in v.values] for v in y.inner],
    }
    return text, payload, 0


def cmd_oracle(args):
    report = padic.oracle_check(
        args.p, args.len, args.trials, exhaustive=args.exhaustive, seed=args.seed
    )
    mode = "exhaustive" if args.exhaustive else f"random seed={args.seed}"
    status = "PASS" if report.ok else "FAIL"
    text = f"{status} p={args.p} len={args.len} checked={report.checked} ({mode})"
    if not report.ok:
        text += "\ncounterexample: " + json.dumps(report.counterexample, sort_keys=True)
    payload = {"mode": "exhaustive" if args.exhaustive else "random", "seed": args.seed}
    payload.update(report.to_json())
    return text, payload, 0 if report.ok else 1


def cmd_selfcheck(args):
    results = checks.run_all(args.trials, args.seed)
    passed = sum(r.ok for r in results)
    lines = [("PASS " if r.ok else "FAIL ") + r.name + ("" if r.ok else f": {r.detail}") for r in results]
    lines.append(f"{passed}/{len(results)} checks passed")
    payload = {
        "trials": args.trials,
        "seed": args.seed,
        "passed": passed,
        "total": len(results),
        "checks": [{"name": r.name, "ok": r.ok, "detail": r.detail} for r in results],
    }
    return "\n".join(lines), payload, 0 if passed == len(results) else 1


# parser


def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON object")

    vec = _ArgumentParser(add_help=False)
    vec.add_argument("--ring", default="int", help="coefficient ring (default int)")
    vec.add_argument("--profile", required=True, help="full:N, ptyp:p:k or set:1,2,...")

    parser = _ArgumentParser(
        prog="witt",
        description="Exact arithmetic with truncated Witt vectors.",
        epilog="Use -- before operands that start with a minus sign.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    p = sub.add_parser("universal", parents=[common], help="print a universal polynomial")
    p.add_argument("kind", choices=["sum", "prod", "neg", "witt", "frob", "epsilon", "delta"])
    for flag in ("n", "m", "p", "a", "b"):
        p.add_argument(f"--{flag}", type=int)
    p.set_defaults(func=cmd_universal)

    for name in ("add", "mul"):
        p = sub.add_parser(name, parents=[common, vec], help=f"Witt {name}")
        p.add_argument("x")
        p.add_argument("y")
        p.set_defaults(func=cmd_binary)

    for name, fn, what in (
        ("neg", cmd_neg, "Witt negation"),
        ("ghost", cmd_ghost, "ghost components"),
        ("unghost", cmd_unghost, "Witt vector with the given ghost components"),
    ):
        p = sub.add_parser(name, parents=[common, vec], help=what)
        p.add_argument("x")
        p.set_defaults(func=fn)

    p = sub.add_parser("teich", parents=[common, vec], help="Teichmueller representative")
    p.add_argument("value")
    p.set_defaults(func=cmd_teich)

    p = sub.add_parser("frob", parents=[common, vec], help="Frobenius F_n (profile is the source)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("x")
    p.set_defaults(func=cmd_frob)

    p = sub.add_parser(
        "versch", parents=[common, vec], help="Verschiebung V_n (profile is the target)"
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("x")
    p.set_defaults(func=cmd_versch)

    p = sub.add_parser("project", parents=[common, vec], help="restrict to a smaller profile")
    p.add_argument("--to", required=True)
    p.add_argument("x")
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("lambda", parents=[common], help="the power-series model")
    p.add_argument("op", choices=["to", "from", "d", "mul"])
    p.add_argument("--ring", default="int")
    p.add_argument("--order", type=int)
    p.add_argument("operands", nargs="+")
    p.set_defaults(func=cmd_lambda)

    p = sub.add_parser("artinhasse", parents=[common], help="Artin-Hasse coefficients")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--terms", type=int, required=True)
    p.add_argument("--moebius", action="store_true", help="use the Moebius product")
    p.set_defaults(func=cmd_artinhasse)

    p = sub.add_parser("phi", parents=[common], help="canonical map from a Frobenius lift")
    p.add_argument("--spec", choices=["id", "power"], required=True)
    p.add_argument("--value", required=True)
    p.add_argument("--upto", type=int, required=True)
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("delta", parents=[common], help="comultiplication into nested Witt vectors")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--ring", default="int")
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("oracle", parents=[common], help="compare W_p(F_p) with Z/p^L")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--len", type=int, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("selfcheck", parents=[common], help="run the identity suite")
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_selfcheck)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "lambda":
            _lambda_arity(args)
        text, payload, code = args.func(args)
    except ParseError as exc:
        print(f"witt: parse error: {exc}", file=sys.stderr)
        return 2
    except WittError as exc:
        print(f"witt: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps({"schema": SCHEMA, "command": args.command, **payload}, sort_keys=True))
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
