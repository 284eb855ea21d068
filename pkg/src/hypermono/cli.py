"""Command-line interface: classification, family construction, Levelt
generators, Gram/gate reports, thinness certificates, growth probes, and the
rank-3 appendix checks, all as stable JSON (CSV for growth)."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import distgraph, growth, lattice, levelt, spin
from .appendix_data import EXAMPLES
from .exponents import (
    ExponentPair,
    FamilyError,
    FamilyId,
    classify,
    landau_integral,
    make_family,
    match_family,
    to_factorial_form,
)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_BUDGET = 3


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_INVALID):
        super().__init__(message)
        self.code = code


def _parse_rational_list(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(part) for part in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(f"malformed rational list {text!r}: {exc}")


def _rat(x) -> str:
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


def _vec(v) -> list[str]:
    return [str(int(x)) for x in v]


def _mat(m) -> list[list[str]]:
    return [[str(int(x)) for x in row] for row in m]


def _pair_json(pair: ExponentPair) -> dict:
    return {"alpha": [_rat(a) for a in pair.alpha],
            "beta": [_rat(b) for b in pair.beta]}


def _make_pair(args) -> ExponentPair:
    if args.alpha is None or args.beta is None:
        raise CliError("--alpha and --beta are required")
    alpha = _parse_rational_list(args.alpha)
    beta = _parse_rational_list(args.beta)
    if len(alpha) != len(beta):
        raise CliError("alpha and beta must have the same length")
    return ExponentPair.make(alpha, beta)


def _resolve_pair(args) -> ExponentPair:
    if args.name is not None:
        return _family_pair(args)
    return _make_pair(args)


def _family_pair(args) -> ExponentPair:
    if args.n is None:
        raise CliError("--n is required with --name")
    j = args.j if args.j is not None else 1
    fid = FamilyId(args.name, j, args.k, args.n)
    try:
        return make_family(fid)
    except (FamilyError, ValueError) as exc:
        raise CliError(f"invalid family parameters {fid}: {exc}")


def _classification_json(pair: ExponentPair) -> dict:
    cls = classify(pair)
    return {
        "cyclotomic": cls.cyclotomic,
        "disjoint": cls.disjoint,
        "category": cls.category,
        "hyperbolic": cls.hyperbolic,
        "sig_defect": cls.sig_defect,
    }


def cmd_classify(args) -> dict:
    pair = _make_pair(args)
    cls = classify(pair)
    if not cls.disjoint:
        raise CliError("alpha and beta are not disjoint")
    out = _pair_json(pair)
    out.update(_classification_json(pair))
    out["families"] = [str(f) for f in match_family(pair)]
    return out


def cmd_family(args) -> dict:
    pair = _family_pair(args)
    out = _pair_json(pair)
    out.update(_classification_json(pair))
    return out


def _build(args) -> levelt.MonodromySystem:
    pair = _resolve_pair(args)
    cls = classify(pair)
    if not (cls.cyclotomic and cls.disjoint):
        raise CliError("pair must be cyclotomic with disjoint exponents")
    return levelt.build(pair)


def cmd_build(args) -> dict:
    m = _build(args)
    return {
        **_pair_json(m.pair),
        "A": _mat(m.A),
        "B": _mat(m.B),
        "C": _mat(m.C),
        "v": _vec(m.v),
        "rotation_generator": m.rotation_generator,
        "rotation_order": m.rotation_order,
    }


def cmd_gram(args) -> dict:
    m = _build(args)
    lat = lattice.invariant_form(m)
    gate = lattice.quotient_gate(lat)
    return {
        "gram": _mat(lat.gram),
        "parity": lat.parity,
        "invariant_factors": [int(d) for d in lat.inv_factors],
        "signature": list(lat.signature),
        "gate": {"verdict": gate.verdict, "reason": gate.reason},
    }


def cmd_certify(args) -> dict:
    m = _build(args)
    cls = classify(m.pair)
    if not cls.hyperbolic:
        raise CliError("certificates require a hyperbolic pair")
    rep = distgraph.certify(m, max_depth=args.max_depth,
                            node_budget=args.budget)
    out = {
        "status": rep.status,
        "detail": rep.detail,
        "path": [_vec(p) for p in rep.path],
        "factorization": [
            {"first": _vec(a.vec), "first_norm": a.norm,
             "second": _vec(b.vec), "second_norm": b.norm}
            for a, b in rep.factorization
        ],
        "gate": {"verdict": rep.gate.verdict, "reason": rep.gate.reason},
    }
    if rep.status == distgraph.NO_PATH_FOUND and "budget" in rep.detail:
        raise CliError(json.dumps(out), EXIT_BUDGET)
    return out


def cmd_growth(args) -> tuple[str, dict]:
    m = _build(args)
    gens = [[list(r) for r in m.A], [list(r) for r in m.B]]
    if args.word_limit is not None:
        word_limit = args.word_limit
    else:
        word_limit = growth.saturated_word_limit(gens, args.tmax,
                                                 margin=args.margin)
    run = growth.growth_run(gens, args.tmin, args.tmax, args.points,
                            word_limit, margin=args.margin)
    import math
    lines = ["T,count,log10T,log10N"]
    for t, c in zip(run.t_grid, run.counts):
        logn = math.log10(c) if c > 0 else ""
        lines.append(f"{t},{c},{math.log10(t)},{logn}")
    csv = "\n".join(lines) + "\n"
    return csv, {"slope": run.slope, "residual": run.residual,
                 "word_limit": run.word_limit, "margin": run.margin}


def cmd_landau(args) -> dict:
    pair = _resolve_pair(args)
    form = to_factorial_form(pair)
    return {
        **_pair_json(pair),
        "a_list": sorted(form.a_list),
        "b_list": sorted(form.b_list),
        "d": form.d,
        "integral": landau_integral(form),
    }


def cmd_appendix(args) -> dict:
    if args.example not in EXAMPLES:
        raise CliError("example must be between 1 and 6")
    ex = EXAMPLES[args.example]
    rep = spin.verify_basis_change(args.example)
    out = {
        "example": args.example,
        "alpha": [_rat(a) for a in ex.alpha],
        "beta": [_rat(b) for b in ex.beta],
        "isotropic": ex.isotropic,
        "checks": [{"name": name, "passed": ok} for name, ok in rep.checks],
    }
    if ex.isotropic:
        gens = [[list(r) for r in ex.X], [list(r) for r in ex.Y]]
        region = spin.dirichlet_region(gens, word_depth=args.depth)
    else:
        from .exact import mat_mul
        a2 = mat_mul([list(r) for r in ex.A], [list(r) for r in ex.A])
        region = spin.dirichlet_region([a2, [list(r) for r in ex.B]],
                                       form=ex.f, word_depth=args.depth)
    out["dirichlet"] = {
        "bounded": region.bounded,
        "vertices": [[u, v] for u, v in region.vertices],
        "epsilon": region.epsilon,
    }
    return out


def _add_pair_flags(p):
    p.add_argument("--alpha", help="comma-separated rationals p/q")
    p.add_argument("--beta", help="comma-separated rationals p/q")
    p.add_argument("--name", choices=["M1", "M2", "M3", "N1", "N2", "N3", "N4"])
    p.add_argument("--j", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hypermono")
    parser.add_argument("--output", help="write the report to this path")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)

    p = sub.add_parser("family")
    p.add_argument("--name", required=True,
                   choices=["M1", "M2", "M3", "N1", "N2", "N3", "N4"])
    p.add_argument("--j", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int, required=True)

    for name in ("build", "gram", "landau"):
        p = sub.add_parser(name)
        _add_pair_flags(p)

    p = sub.add_parser("certify")
    _add_pair_flags(p)
    p.add_argument("--max-depth", type=int, default=5)
    p.add_argument("--budget", type=int, default=1_000_000)

    p = sub.add_parser("growth")
    _add_pair_flags(p)
    p.add_argument("--tmin", type=int, default=10)
    p.add_argument("--tmax", type=int, default=10_000)
    p.add_argument("--points", type=int, default=10)
    p.add_argument("--word-limit", type=int, default=None)
    p.add_argument("--margin", type=int, default=4)

    p = sub.add_parser("appendix")
    p.add_argument("--example", type=int, required=True)
    p.add_argument("--depth", type=int, default=8)
    return parser


_COMMANDS = {
    "classify": cmd_classify,
    "family": cmd_family,
    "build": cmd_build,
    "gram": cmd_gram,
    "certify": cmd_certify,
    "landau": cmd_landau,
    "appendix": cmd_appendix,
}


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code not in (0, None) else 0
    try:
        if args.command == "growth":
            csv, meta = cmd_growth(args)
            text = csv + json.dumps(meta, sort_keys=True) + "\n"
        else:
            report = _COMMANDS[args.command](args)
            text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    except CliError as exc:
        msg = str(exc)
        try:
            payload = json.loads(msg)
        except json.JSONDecodeError:
            payload = {"error": msg}
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
        return exc.code
    except (FamilyError, ValueError) as exc:
        sys.stdout.write(json.dumps({"error": str(exc)}, indent=2) + "\n")
        return EXIT_INVALID
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    sys.stdout.write(text)
    return EXIT_OK


def main() -> None:
    sys.exit(run(sys.argv[1:]))
