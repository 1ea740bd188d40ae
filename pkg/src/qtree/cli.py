"""Command-line front end.

Every command prints JSON objects carrying ``schema_version``.  Exit codes:
0 success, 1 a counterexample was reported, 2 bad input, 3 precondition
violated, 4 budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .approx import lift_factorization
from .coeffs import BiPoly, Field, HForm
from .coeffs.factor import FactorLimits
from .errors import BudgetExceeded, ParseError, PreconditionError
from .primelemma import comparability_guarantee, prime_lemma
from .rlr import (
    EssentialVal,
    Frac,
    QuadPath,
    chart,
    directions_of,
    essential_value,
    initial_form,
    member,
    ord_at,
    transform_elem,
)
from .suites import CHECKS, SUITES, run_suite
from .theorems import COUNTEREXAMPLE, SCHEMA_VERSION

EXIT_COUNTEREXAMPLE = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_BUDGET = 4

ENV_FIELD = "QTREE_FIELD"
ENV_SEED = "QTREE_SEED"


@dataclass(frozen=True)
class Config:
    field: Field
    seed: int = 0
    degree_cap: int = 32
    budget: int = 20
    output: str = "json"

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise ParseError("seed must be an unsigned 64-bit integer")
        if self.degree_cap <= 0 or self.budget <= 0:
            raise ParseError("caps and budgets must be positive")
        if self.output not in ("json", "pretty"):
            raise ParseError(f"unknown output mode {self.output!r}")

    @property
    def limits(self) -> FactorLimits:
        return FactorLimits(degree_cap=self.degree_cap)

    @classmethod
    def from_args(cls, args) -> "Config":
        field = args.field if args.field is not None else os.environ.get(ENV_FIELD, "5")
        seed = args.seed if args.seed is not None else os.environ.get(ENV_SEED, "0")
        try:
            seed = int(seed)
        except ValueError:
            raise ParseError(f"bad seed {seed!r}") from None
        return cls(Field.parse(field), seed, args.degree_cap, args.budget, args.output)


def emit(obj: dict, cfg: Config, out=None) -> None:
    out = out or sys.stdout
    obj = {"schema_version": SCHEMA_VERSION, **obj}
    if cfg.output == "pretty":
        out.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")
    else:
        out.write(json.dumps(obj, sort_keys=True) + "\n")


def _path(text: str, cfg: Config) -> QuadPath:
    return QuadPath.parse(text, cfg.field)


def _form(text: str, cfg: Config) -> HForm:
    try:
        return HForm.from_bipoly(BiPoly.parse(text, cfg.field))
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(f"{text!r}: {exc}") from None


def cmd_node(args, cfg: Config) -> int:
    beta = _path(args.path, cfg)
    ch = chart(beta)
    emit({
        "path": str(beta),
        "level": len(beta),
        "phi": str(ch.phi),
        "psi": str(ch.psi),
        "exceptional": [str(e) for e in ch.exceptional],
    }, cfg)
    return 0


def _levels(t) -> list[dict]:
    out = []
    for p, r in t.levels:
        init = HForm.from_bipoly(p.homogeneous_part(r)).normalize() if p else None
        out.append({"p": str(p), "r": r, "initial": str(init) if init else None})
    return out


def cmd_compute(args, cfg: Config) -> int:
    beta = _path(args.path, cfg)
    kind = args.kind
    if kind in ("ord", "member", "value"):
        w = Frac.parse(args.elem, cfg.field)
    else:
        w = BiPoly.parse(args.elem, cfg.field)
    if kind == "ord":
        result = ord_at(beta, w)
    elif kind == "member":
        result = member(beta, w)
    elif kind == "inform":
        result = str(initial_form(beta, w))
    elif kind == "transform":
        t = transform_elem(beta, w)
        result = {"levels": _levels(t), "passes": t.passes}
    elif kind == "directions":
        result = [
            {"form": str(g), "multiplicity": m, "direction": d.to_json()}
            for g, m, d in directions_of(beta, w)
        ]
    else:
        if not args.prime:
            raise ParseError("compute value needs --prime")
        result = essential_value(EssentialVal.checked(BiPoly.parse(args.prime, cfg.field), cfg.limits), w)
    emit({"command": "compute", "kind": kind, "path": str(beta), "elem": args.elem, "result": result}, cfg)
    return 0


def cmd_approx(args, cfg: Config) -> int:
    f = BiPoly.parse(args.elem, cfg.field)
    G, H = _form(args.g_form, cfg), _form(args.h_form, cfg)
    res = lift_factorization(f, G, H, args.order)
    emit({
        "command": "approx",
        "f": str(f),
        "G": str(G),
        "H": str(H),
        "n": args.order,
        "g": str(res.g),
        "h": str(res.h),
        "remainder": str(res.remainder),
        "order_of_remainder": res.achieved_order,
    }, cfg)
    return 0


def cmd_prime_lemma(args, cfg: Config) -> int:
    beta = _path(args.path, cfg)
    res = prime_lemma(beta, seed=cfg.seed, budget=cfg.budget, limits=cfg.limits)
    depth = args.depth_check if args.depth_check is not None else len(beta) + 1
    rep = comparability_guarantee(res.v, beta, depth)
    trace = []
    for seq in res.trace:
        trace.append({
            "levels": [
                {"p": str(lv.p), "r": lv.r, "initial": str(lv.initial), "prime_power": lv.prime_power}
                for lv in seq.levels
            ],
            "partial_sums": list(seq.partial_sums),
            "total": seq.total,
        })
    steps = [
        {"level": s.level, "G": str(s.G), "H": str(s.H), "target_order": s.target_order,
         "achieved_order": s.achieved_order, "chosen": str(s.chosen), "qualifying": s.qualifying}
        for s in res.steps
    ]
    emit({
        "command": "prime-lemma",
        "path": str(beta),
        "field": str(cfg.field.p),
        "seed": cfg.seed,
        "v": str(res.v),
        "trace": trace,
        "lifts": steps,
        "comparability": {
            "depth": depth,
            "nodes_checked": rep.nodes_checked,
            "counterexamples": [str(g) for g in rep.counterexamples],
        },
    }, cfg)
    return EXIT_COUNTEREXAMPLE if rep.counterexamples else 0


def _stream(name: str, args, cfg: Config) -> int:
    if not cfg.field.is_finite:
        raise PreconditionError("suites run over a finite field")
    worst = 0
    for report in run_suite(name, cfg.field, cfg.seed, args.count, args.size, args.depth, cfg.budget, cfg.limits):
        d = report.to_dict(timing=args.timing)
        d.pop("schema_version")
        emit(d, cfg)
        if report.status == COUNTEREXAMPLE:
            worst = EXIT_COUNTEREXAMPLE
    return worst


def cmd_check(args, cfg: Config) -> int:
    return _stream(args.kind, args, cfg)


def cmd_suite(args, cfg: Config) -> int:
    return _stream(args.name, args, cfg)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default=None, help=f"prime modulus or Q (default ${ENV_FIELD} or 5)")
    common.add_argument("--seed", default=None, help=f"unsigned 64-bit seed (default ${ENV_SEED} or 0)")
    common.add_argument("--degree-cap", type=int, default=32, help="largest degree handed to the factorizer")
    common.add_argument("--budget", type=int, default=20, help="repair rounds allowed per node")
    common.add_argument("--output", choices=("json", "pretty"), default="json")

    parser = argparse.ArgumentParser(prog="qtree", description="Quadratic trees of k[x,y] at the origin.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("node", parents=[common], help="chart and exceptional elements of a node")
    p.add_argument("path")
    p.set_defaults(func=cmd_node)

    p = sub.add_parser("compute", parents=[common], help="order, initial form, transforms, membership")
    p.add_argument("kind", choices=("ord", "inform", "transform", "member", "directions", "value"))
    p.add_argument("--path", default="[]")
    p.add_argument("--elem", required=True)
    p.add_argument("--prime", help="irreducible p for 'value'")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("approx", parents=[common], help="lift in(f) = G*H to order n")
    p.add_argument("--elem", required=True)
    p.add_argument("--g-form", required=True)
    p.add_argument("--h-form", required=True)
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("prime-lemma", parents=[common], help="essential prime through a node")
    p.add_argument("--path", required=True)
    p.add_argument("--depth-check", type=int, default=None)
    p.set_defaults(func=cmd_prime_lemma)

    for name, choices, func, dest in (
        ("check", CHECKS, cmd_check, "kind"),
        ("suite", SUITES, cmd_suite, "name"),
    ):
        p = sub.add_parser(name, parents=[common], help=f"seeded batch run ({name})")
        p.add_argument(dest, choices=choices)
        p.add_argument("--count", type=int, default=10)
        p.add_argument("--size", type=int, default=6)
        p.add_argument("--depth", type=int, default=4)
        p.add_argument("--timing", action="store_true", help="include per-instance seconds")
        p.set_defaults(func=func)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = Config.from_args(args)
        for attr, least in (("count", 1), ("size", 1), ("depth", 1)):
            if getattr(args, attr, least) < least:
                raise ParseError(f"--{attr} must be at least {least}")
        return args.func(args, cfg)
    except ParseError as exc:
        print(f"qtree: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as exc:
        print(f"qtree: precondition: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except BudgetExceeded as exc:
        print(f"qtree: budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
