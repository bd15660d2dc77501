"""Command-line interface.

Exit codes: 0 success, 1 theorem counterexample (or failed pinned example),
2 input error, 3 resource bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .builtin import EXAMPLES, run_all
from .canonical import canonical_module, user_canonical
from .errors import InputError, NotSemiStandard, ResourceBoundError, SpecError, UnsupportedRing
from .harness import DEFAULT_THEOREMS, FAMILIES, CampaignConfig, TheoremInstance, check_theorem, run_campaign
from .invariants import classify, h_vector, hilbert_function
from .ringspec import load_ring_spec
from .semigroup import Limits
from .veronese import okokok_check, veronese_module, veronese_ring

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3


def _limits(args) -> Limits:
    return Limits(degree_cap=args.degree_cap, radical_cap=args.radical_cap,
                  inverse_window=args.inverse_window, veronese_window=args.veronese_window)


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None


def _load_ring(args):
    spec = load_ring_spec(_read(args.file))
    S = spec.build(_limits(args))
    omega = user_canonical(S, spec.canonical_generators) if spec.canonical_generators else None
    return spec, S, omega


def _render(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    for k, v in obj.items():
        if isinstance(v, dict):
            lines.append(f"{pad}{k}:")
            lines.extend(_render(v, indent + 1))
        else:
            lines.append(f"{pad}{k}: {json.dumps(v)}")
    return lines


def _emit(obj: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(obj, sort_keys=True, indent=2))
    else:
        print("\n".join(_render(obj)))


def _ring_report(S, omega) -> dict:
    omega = omega if omega is not None else canonical_module(S)
    rep = classify(S, omega).to_dict()
    out = {"ring": {"dim": S.dim, "generators": [list(g) for g in S.minimal_generators],
                    "grading": list(S.grading.weights), "grading_scale": S.grading.scale, "label": S.label},
           "classification": rep,
           "hilbert_function": [hilbert_function(S, n) for n in range(8)]}
    try:
        out["h_vector"] = h_vector(S).to_dict()
    except NotSemiStandard as e:
        out["h_vector"] = {"error": "NotSemiStandard", "witness": list(e.witness)}
    return out


def cmd_classify(args) -> int:
    _, S, omega = _load_ring(args)
    _emit(_ring_report(S, omega), args.json)
    return EXIT_OK


def cmd_veronese(args) -> int:
    _, S, omega = _load_ring(args)
    if args.k < 1:
        raise InputError("-k must be at least 1")
    V = veronese_ring(S, args.k)
    try:
        omega_v = canonical_module(V)
    except UnsupportedRing:
        if omega is None:
            raise
        omega_v = veronese_module(omega, args.k, V)
    out = _ring_report(V, omega_v)
    out["k"] = args.k
    code = EXIT_OK
    if args.check_okokok:
        res = okokok_check(S, args.k)
        out["veronese_check"] = res.to_dict()
        if res.status == "counterexample":
            code = EXIT_COUNTEREXAMPLE
    _emit(out, args.json)
    return code


def cmd_harness(args) -> int:
    theorems = tuple(t.strip() for t in args.theorems.split(",") if t.strip()) if args.theorems else ()
    cfg = CampaignConfig(seed=args.seed, count=args.count, theorems=theorems, family=args.family,
                         max_slope_coord=args.max_slope, grading_range=args.grading_range,
                         balanced_fraction=args.balanced_fraction, degree_cap=args.degree_cap,
                         radical_cap=args.radical_cap, inverse_window=args.inverse_window,
                         veronese_window=args.veronese_window, workers=args.workers)
    rep = run_campaign(cfg)
    if args.output:
        Path(args.output).write_text(rep.to_json() + "\n", encoding="utf-8")
    if args.json:
        print(rep.to_json())
    else:
        d = rep.to_dict()
        del d["instance_digests"]
        print("\n".join(_render(d)))
        print(f"runtime_seconds: {rep.runtime_seconds:.2f}", file=sys.stderr)
    if rep.total_counterexamples:
        print(f"COUNTEREXAMPLES FOUND: {rep.total_counterexamples}", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def cmd_check(args) -> int:
    text = _read(args.instance)
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise SpecError(f"invalid JSON: {e.msg}", line=e.lineno, column=e.colno) from None
    inst = TheoremInstance.from_dict(obj)
    res = check_theorem(inst, _limits(args))
    _emit(res.to_dict(), args.json)
    return EXIT_COUNTEREXAMPLE if res.status == "counterexample" else EXIT_OK


def cmd_examples(args) -> int:
    if not args.run_all:
        if args.json:
            print(json.dumps([{"name": ex.name, "expected": ex.expected} for ex in EXAMPLES], indent=2, default=str))
        else:
            for ex in EXAMPLES:
                print(ex.name)
        return EXIT_OK
    results = run_all()
    if args.json:
        print(json.dumps([{"name": ex.name, "pass": ok, "got": got} for ex, ok, got in results], indent=2,
                         default=str))
    else:
        for ex, ok, got in results:
            print(f"{'PASS' if ok else 'FAIL'}  {ex.name}" + ("" if ok else f"  got {got!r}"))
    failed = sum(not ok for _, ok, _ in results)
    if not args.json:
        print(f"{len(results) - failed}/{len(results)} examples reproduced")
    return EXIT_COUNTEREXAMPLE if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print one JSON document")
    common.add_argument("--degree-cap", type=int, default=512, help="largest degree enumerated (default 512)")
    common.add_argument("--inverse-window", type=int, default=None,
                        help="degree bound for inverse-module generators (default: derived per ring)")
    common.add_argument("--radical-cap", type=int, default=64,
                        help="largest power tried in radical membership on non-normal rings (default 64)")
    common.add_argument("--veronese-window", type=int, default=None,
                        help="Veronese-degree bound for Veronese generators (default: k * max generator degree)")

    p = argparse.ArgumentParser(prog="tracegor", description="Gorenstein-type classification of affine "
                                "semigroup rings via canonical trace ideals.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", parents=[common], help="classify a ring spec")
    c.add_argument("file")
    c.set_defaults(func=cmd_classify)

    v = sub.add_parser("veronese", parents=[common], help="Veronese subring and its classification")
    v.add_argument("file")
    v.add_argument("-k", type=int, required=True)
    v.add_argument("--check-okokok", action="store_true",
                   help="check that the Veronese of a nearly and pseudo-Gorenstein ring is quasi-Gorenstein")
    v.set_defaults(func=cmd_veronese)

    h = sub.add_parser("harness", parents=[common], help="run a seeded theorem campaign")
    h.add_argument("--seed", type=int, default=0)
    h.add_argument("--count", type=int, default=500)
    h.add_argument("--theorems", default=",".join(DEFAULT_THEOREMS), help="comma-separated subset of T1..T6")
    h.add_argument("--family", choices=FAMILIES, default="normal2d")
    h.add_argument("--max-slope", type=int, default=6)
    h.add_argument("--grading-range", type=int, default=3)
    h.add_argument("--balanced-fraction", type=float, default=0.5)
    h.add_argument("--workers", type=int, default=1)
    h.add_argument("--output", help="also write the JSON report to this file")
    h.set_defaults(func=cmd_harness)

    k = sub.add_parser("check", parents=[common], help="re-verify a serialized theorem instance")
    k.add_argument("--instance", required=True)
    k.set_defaults(func=cmd_check)

    e = sub.add_parser("examples", parents=[common], help="list or reproduce the pinned reference values")
    e.add_argument("--run-all", action="store_true")
    e.set_defaults(func=cmd_examples)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceBoundError as e:
        print(f"resource bound exceeded: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    raise SystemExit(main())
