"""Command-line front end.

Subcommands: ci, sweep, bench, spectrum, convert.
Exit codes: 0 ok, 1 input error, 2 methods disagree.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Optional

from . import __version__, kernels
from .bench import run_bench
from .bfcore import GeneralizedFunction, from_generalized, generalized_anf
from .ci import (
    DEFAULT_MAX_PERM_N,
    FOURIER_METHODS,
    METHODS,
    PermutationLimitError,
    ci_check,
    ci_order,
)
from .io import InputError, content_digest, parse_anf, parse_truth_table, render_truth_table
from .spectra import SpectralReport, dft_point, walsh_component, walsh_generalized
from .sweep import DEFAULT_UNIVERSE_LIMIT, all_functions, run_sweep, universe_size

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_DISAGREE = 2
SCHEMA = 1

WALSH_TRANSFORMS = ("walsh-component", "walsh-generalized", "dft")


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", metavar="PATH", help="write a JSON report ('-' for stdout)")
    parser.add_argument("--quiet", action="store_true", help="suppress text output")
    parser.add_argument("--allow-large", action="store_true",
                        help="lift the permutation cap and the sweep universe limit")


def _input_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", metavar="FILE", help="truth-table file")
    parser.add_argument("--anf", metavar="EXPR", help="ANF expression over x1..xn, mod 2^m")
    parser.add_argument("--n", type=int)
    parser.add_argument("--m", type=int)


def _load(args) -> tuple[GeneralizedFunction, str]:
    if args.input and args.anf:
        raise InputError("give either --input or --anf, not both")
    if args.input:
        try:
            text = Path(args.input).read_text(encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot read {args.input}: {exc}") from None
        return parse_truth_table(text), args.input
    if args.anf:
        if args.n is None or args.m is None:
            raise InputError("--anf needs --n and --m")
        return parse_anf(args.anf, args.n, args.m), f"anf:{args.anf}"
    raise InputError("no input: use --input FILE or --anf EXPR --n N --m M")


def _emit_json(path: Optional[str], payload: dict) -> None:
    if not path:
        return
    text = json.dumps(payload, indent=2, sort_keys=False)
    if path == "-":
        print(text)
    else:
        Path(path).write_text(text + "\n", encoding="utf-8")


def _say(args, *parts) -> None:
    if not args.quiet:
        print(*parts)


def _methods(arg: str) -> list[str]:
    if arg == "all":
        return list(METHODS)
    chosen = [s.strip() for s in arg.split(",") if s.strip()]
    unknown = [s for s in chosen if s not in METHODS]
    if unknown:
        raise InputError(f"unknown method(s): {', '.join(unknown)}")
    return chosen


def _perm_cap(args, n: int, methods) -> Optional[int]:
    if args.allow_large:
        return None
    if n > DEFAULT_MAX_PERM_N and any(m in FOURIER_METHODS for m in methods):
        raise InputError(
            f"n={n} exceeds the permutation cap n <= {DEFAULT_MAX_PERM_N} for the Fourier methods; "
            "pass --allow-large to enumerate S_n anyway"
        )
    return DEFAULT_MAX_PERM_N


def cmd_ci(args) -> int:
    g, source = _load(args)
    methods = _methods(args.method)
    cap = _perm_cap(args, g.n, methods)
    report = {
        "schema": SCHEMA,
        "version": __version__,
        "backend": kernels.BACKEND_NAME,
        "input": {"source": source, "digest": content_digest(g), "n": g.n, "m": g.m},
        "order": args.order,
        "methods": {},
    }
    outcomes = {}
    for meth in methods:
        spectral = SpectralReport(meth) if args.points else None
        start = time.perf_counter()
        if args.order == "max":
            result = ci_order(g, meth, max_perm_n=cap, report=spectral)
            verdicts = result.verdicts
            outcome = result.order
            _say(args, f"{meth:<20} ci_order = {outcome}")
        else:
            t = int(args.order)
            if not 0 <= t <= g.n:
                raise InputError(f"--order must be in 0..{g.n} or 'max'")
            verdict = ci_check(g, t, meth, max_perm_n=cap, report=spectral)
            verdicts = [verdict]
            outcome = verdict.passed
            _say(args, f"{meth:<20} t = {t}: {'pass' if outcome else 'FAIL'}")
        elapsed = time.perf_counter() - start
        outcomes[meth] = outcome
        entry = {
            "result": outcome,
            "verdicts": [v.as_dict() for v in verdicts],
            "evaluations": sum(v.evaluations for v in verdicts),
            "seconds": elapsed,
        }
        if args.order == "max":
            entry["ci_order"] = outcome
        if spectral is not None:
            entry["spectral_report"] = spectral.as_dict()
        report["methods"][meth] = entry
    agree = len(set(outcomes.values())) <= 1
    report["agree"] = agree
    _emit_json(args.json, report)
    if not agree:
        print("ERROR: methods disagree (implementation bug): "
              + ", ".join(f"{k}={v}" for k, v in outcomes.items()), file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_OK


def cmd_sweep(args) -> int:
    methods = _methods(args.methods)
    size = universe_size(args.n, args.m)
    if size > DEFAULT_UNIVERSE_LIMIT and not args.allow_large:
        raise InputError(f"universe of {size} functions exceeds {DEFAULT_UNIVERSE_LIMIT}; pass --allow-large")
    cap = _perm_cap(args, args.n, methods)
    start = time.perf_counter()
    result = run_sweep(all_functions(args.n, args.m), args.n, args.m, methods,
                       probe_single_order=args.probe_single_order, max_perm_n=cap)
    elapsed = time.perf_counter() - start
    _say(args, f"n={args.n} m={args.m}: {result.functions} functions, "
               f"{len(result.disagreements)} disagreements ({elapsed:.1f} s)")
    for meth, hist in result.order_histogram.items():
        _say(args, f"  {meth:<20} " + " ".join(f"order {k}: {v}" for k, v in sorted(hist.items())))
    if result.single_order_mismatches is not None:
        _say(args, "  single-order Fourier reading vs definition: "
                   + (", ".join(f"{k}: {v}" for k, v in sorted(result.single_order_mismatches.items())) or "no mismatches"))
    payload = {"schema": SCHEMA, "backend": kernels.BACKEND_NAME, "seconds": elapsed, **result.as_dict()}
    _emit_json(args.json, payload)
    return EXIT_OK if result.agree else EXIT_DISAGREE


def cmd_bench(args) -> int:
    inputs = None
    if args.input or args.anf:
        g, _ = _load(args)
        inputs = [g]
        n, m = g.n, g.m
    else:
        if args.n is None or args.m is None:
            raise InputError("bench needs --n and --m (or an input)")
        n, m = args.n, args.m
    if not 0 <= args.t <= n:
        raise InputError(f"--t must be in 0..{n}")
    out = run_bench(n, m, args.t, samples=args.samples, seed=args.seed, inputs=inputs)
    counts = out["counts"]
    _say(args, f"n={n} m={m} t={args.t}")
    _say(args, f"  walsh-component   points: {counts['walsh_component']['measured']} "
               f"(expected {counts['walsh_component']['expected']})")
    _say(args, f"  walsh-generalized points: {counts['walsh_generalized']['measured']} "
               f"(expected {counts['walsh_generalized']['expected']})")
    _say(args, f"  ratio: {counts['ratio']}")
    for key in ("timing_constant", "timing_inputs"):
        if key in out:
            secs = out[key]["seconds"]
            _say(args, f"  {key}: " + ", ".join(f"{k} {v * 1e3:.2f} ms" for k, v in secs.items()))
    _emit_json(args.json, {"schema": SCHEMA, "backend": kernels.BACKEND_NAME, **out})
    return EXIT_OK if counts["matches"] else EXIT_DISAGREE


def _parse_points(text: str, n: int) -> list[int]:
    pts = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        try:
            value = int(tok, 0)
        except ValueError:
            raise InputError(f"bad point {tok!r}") from None
        if not 0 <= value < (1 << n):
            raise InputError(f"point {value} out of range for n={n}")
        pts.append(value)
    return pts


def cmd_spectrum(args) -> int:
    g, source = _load(args)
    n = g.n
    if args.points is not None:
        points = _parse_points(args.points, n)
    else:
        w = n if args.weight is None else args.weight
        points = [u for u in range(1 << n) if bin(u).count("1") <= w]
    if args.transform == "dft" and args.points is None:
        points = list(range(1 << n))
    rows = []
    for p in points:
        if args.transform == "walsh-component":
            value = walsh_component(from_generalized(g), p, args.v)
            rows.append({"u": p, "v": args.v, "value": value})
        elif args.transform == "walsh-generalized":
            value = walsh_generalized(g, p, args.i)
            rows.append({"c": p, "i": args.i, "value": str(value)})
        else:
            value = dft_point(g, args.i, p)
            rows.append({"j": p, "i": args.i, "value": str(value)})
        label = f"{p:0{n}b}"[::-1] if args.transform != "dft" else str(p)
        _say(args, f"{label}  {value}")
    _emit_json(args.json, {"schema": SCHEMA, "input": {"source": source, "digest": content_digest(g)},
                           "transform": args.transform, "points": rows})
    return EXIT_OK


def cmd_convert(args) -> int:
    g, _ = _load(args)
    target = args.to or ("anf" if args.input else "table")
    text = str(generalized_anf(g)) + "\n" if target == "anf" else render_truth_table(g)
    if not args.quiet:
        sys.stdout.write(text)
    _emit_json(args.json, {"schema": SCHEMA, "n": g.n, "m": g.m,
                           "anf": str(generalized_anf(g)), "values": [int(v) for v in g.values]})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ciboolean", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ci", help="decide the CI order with one or more methods")
    _input_flags(p)
    _common(p)
    p.add_argument("--method", default="all", help="all, or a comma list of " + ", ".join(METHODS))
    p.add_argument("--order", default="max", help="order t to check, or 'max' for the CI order")
    p.add_argument("--points", action="store_true", help="include every evaluated point in the JSON report")
    p.set_defaults(func=cmd_ci)

    p = sub.add_parser("sweep", help="run methods over every (n, m)-function")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--methods", default="all")
    p.add_argument("--probe-single-order", action="store_true",
                   help="also test the Fourier criteria at order t alone")
    _common(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("bench", help="spectral-point counts and timings of the Walsh criteria")
    _input_flags(p)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--samples", type=int, default=0, help="random functions to time")
    p.add_argument("--seed", type=int, default=0)
    _common(p)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("spectrum", help="print exact spectral values")
    _input_flags(p)
    p.add_argument("--transform", choices=WALSH_TRANSFORMS, default="walsh-generalized")
    p.add_argument("--weight", type=int, help="all masks up to this Hamming weight")
    p.add_argument("--points", help="comma list of masks/frequencies (decimal, 0b.. or 0x..)")
    p.add_argument("--i", type=int, default=1, help="root index for generalized transforms")
    p.add_argument("--v", type=int, default=1, help="component mask for walsh-component")
    _common(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("convert", help="truth table <-> ANF")
    _input_flags(p)
    p.add_argument("--to", choices=("anf", "table"))
    _common(p)
    p.set_defaults(func=cmd_convert)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, PermutationLimitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
