"""Command-line entry point.

Complex arguments are file paths or ``builtin:<name>`` (see
:mod:`coverable.samples`). Every run prints one report; ``--format json``
gives the machine-readable form.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys

from .complex import star_cover, subdivide
from .covering import (build_covering, ball_covering, image_subgroup, universal_covering,
                       verify_covering)
from .errors import BudgetError, CoverableError
from .formats import ComplexFile, dump_complex, dump_covering, load_complex, parse_covering
from .fpgroup import Budget, Word, abelianization, simplify
from .samples import BUILTINS, builtin
from .spanier import pi1, pi_stable, spanier_equal, spanier_generators, spanier_sp_approx
from .tower import KINDS, builtin_tower, coverability_report
from .wedge import make_wedge, pi1_generation_check, t3_check

BUILTIN_PREFIX = "builtin:"


def _load(path: str, inputs: dict) -> ComplexFile:
    if path.startswith(BUILTIN_PREFIX):
        name = path[len(BUILTIN_PREFIX):]
        inputs[path] = hashlib.sha256(name.encode()).hexdigest()
        return ComplexFile(builtin(name))
    with open(path, "rb") as fh:
        inputs[path] = hashlib.sha256(fh.read()).hexdigest()
    return load_complex(path)


def _budget(args) -> Budget:
    return Budget(cosets=args.budget_cosets, word_length=args.budget_words)


def _pick_cover(f: ComplexFile, name: str | None):
    if not f.covers:
        raise CoverableError("the complex file declares no cover")
    if name is None:
        return next(iter(f.covers.values()))
    if name not in f.covers:
        raise CoverableError(f"no cover named {name!r}; have {', '.join(f.covers)}")
    return f.covers[name]


def cmd_pi1(args, inputs):
    c = _load(args.complex, inputs).complex
    p = pi1(c).presentation
    simple, _ = simplify(p)
    return {"presentation": str(p), "simplified": str(simple),
            "abelianization": str(abelianization(p))}


def cmd_spanier(args, inputs):
    f = _load(args.complex, inputs)
    u = _pick_cover(f, args.cover)
    d = spanier_generators(f.complex, u, args.cover or next(iter(f.covers)))
    return {"cover": list(u.names), "spanier": d.to_dict()}


def cmd_stable(args, inputs):
    f = _load(args.complex, inputs)
    c = f.complex
    u = _pick_cover(f, args.cover)
    universe = [v for v in f.covers.values() if v is not u]
    x = c
    for _ in range(args.depth):
        x = subdivide(x)
        universe.append(star_cover(x))
    budget = _budget(args)
    verdict = pi_stable(c, u, universe, budget=budget)
    approx = spanier_sp_approx(c, args.depth, budget)
    return {"pi_stable": verdict.to_dict(),
            "equals_sp_approximation": spanier_equal(c, u, approx.data, budget).to_dict(),
            "sp_approximation": approx.to_dict(), "universe_size": len(universe)}


def _write(path: str | None, text: str) -> str | None:
    if path is None:
        return None
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
    return path


def cmd_universal(args, inputs):
    c = _load(args.complex, inputs).complex
    r = universal_covering(c, args.depth, _budget(args), args.radius)
    out = r.to_dict()
    out["written"] = _write(args.out, dump_covering(r.covering))
    return out


def cmd_cover_build(args, inputs):
    c = _load(args.complex, inputs).complex
    words = [Word.parse(s) for s in args.subgroup]
    budget = _budget(args)
    try:
        m = build_covering(c, words, budget, normal=args.normal)
    except BudgetError as exc:
        m = ball_covering(c, words, args.radius, budget, normal=args.normal)
        note = f"finite construction failed ({exc}); truncated ball of radius {args.radius}"
    else:
        note = "complete"
    verify_covering(m)
    out = {"covering": m.to_dict(), "construction": note, "verified": True}
    if not m.truncated:
        out["image"] = image_subgroup(m, budget).to_dict()
    out["written"] = _write(args.out, dump_covering(m))
    return out


def cmd_wedge(args, inputs):
    c1 = _load(args.first, inputs).complex
    c2 = _load(args.second, inputs).complex
    w = make_wedge(c1, c2)
    report = pi1_generation_check(w, args.samples, seed=args.seed, budget=_budget(args))
    return {"wedge": {"cells": list(w.complex.counts), "basepoint": w.basepoint,
                      "presentation": str(pi1(w.complex).presentation)},
            "generation_check": report.to_dict(),
            "written": _write(args.out, dump_complex(w.complex))}


def cmd_t3(args, inputs):
    c1 = _load(args.first, inputs).complex
    c2 = _load(args.second, inputs).complex
    r = t3_check(c1, c2, args.depth, _budget(args), args.radius)
    return {"holds": not r.violation, **r.to_dict()}


def cmd_tower(args, inputs):
    t = builtin_tower(args.kind, args.n)
    inputs[f"tower:{args.kind}:{args.n}"] = hashlib.sha256(f"{args.kind} {args.n}".encode()).hexdigest()
    return coverability_report(t, args.n, _budget(args), args.depth, args.radius)


def cmd_verify(args, inputs):
    base = _load(args.base, inputs).complex
    with open(args.covering, "rb") as fh:
        raw = fh.read()
    inputs[args.covering] = hashlib.sha256(raw).hexdigest()
    m = parse_covering(raw.decode("utf-8"), base)
    verify_covering(m)
    return {"verified": True, "covering": m.to_dict()}


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget-cosets", type=int, default=50000)
    p.add_argument("--budget-words", type=int, default=64)
    p.add_argument("--depth", type=int, default=3, help="subdivision depth")
    p.add_argument("--radius", type=int, default=4, help="ball radius for infinite coverings")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("text", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coverable",
        description="Spanier groups, coverings and wild points of finite 2-complexes.",
        epilog=f"complex arguments: a file path or builtin:NAME with NAME in {', '.join(BUILTINS)}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        _add_common(p)
        p.set_defaults(func=func)
        return p

    add("pi1", cmd_pi1, "edge-path presentation and abelianization").add_argument("complex")
    for name, func, text in (("spanier", cmd_spanier, "Spanier group of a cover"),
                             ("stable", cmd_stable, "pi-stability of a cover")):
        p = add(name, func, text)
        p.add_argument("complex")
        p.add_argument("--cover", help="cover name in the file (default: first)")
    p = add("universal", cmd_universal, "universal covering with certificate")
    p.add_argument("complex")
    p.add_argument("--out", help="write the covering file here")
    p = add("cover-build", cmd_cover_build, "covering space for a subgroup")
    p.add_argument("complex")
    p.add_argument("--subgroup", action="append", default=[], metavar="WORD",
                   help="subgroup generator such as 'a b^-1' (repeatable)")
    p.add_argument("--normal", action="store_true", help="use the normal closure")
    p.add_argument("--out")
    p = add("wedge", cmd_wedge, "one-point union and generation check")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--out")
    p = add("t3", cmd_t3, "universal coverings of two factors and their wedge")
    p.add_argument("first")
    p.add_argument("second")
    p = add("tower", cmd_tower, "classify the basepoint of a built-in tower stage")
    p.add_argument("kind", choices=KINDS)
    p.add_argument("n", type=int)
    p = add("verify", cmd_verify, "check a covering file against its base")
    p.add_argument("base")
    p.add_argument("covering")
    return parser


def _render(value, indent: int = 0) -> list[str]:
    pad = "  " * indent
    if isinstance(value, dict):
        lines = []
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.extend(_render(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
        return lines
    if isinstance(value, list):
        lines = []
        for item in value:
            if isinstance(item, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(_render(item, indent + 1))
            else:
                lines.append(f"{pad}- {item}")
        return lines
    return [f"{pad}{value}"]


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for flag in ("budget_cosets", "budget_words", "depth", "radius"):
        if getattr(args, flag) < (0 if flag == "depth" else 1):
            parser.error(f"--{flag.replace('_', '-')} must be positive")
    inputs: dict[str, str] = {}
    report = {"command": args.command, "inputs": inputs, "budgets": _budget(args).to_dict(),
              "seed": args.seed}
    status = 0
    try:
        report["result"] = args.func(args, inputs)
    except (CoverableError, OSError, ValueError) as exc:
        report["error"] = {"type": type(exc).__name__, "message": str(exc)}
        status = 1 if isinstance(exc, CoverableError) else 2
    if args.format == "json":
        print(json.dumps(report, indent=2, default=str))
    else:
        print("\n".join(_render(report)))
    if status:
        print(f"error: {report['error']['message']}", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
