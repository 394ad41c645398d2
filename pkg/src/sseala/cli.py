"""Command-line entry point: suite selection, matrix resolution, and
deterministic report rendering.

Reports are byte-identical for equal configurations regardless of the
worker count, so the configuration echo excludes the worker count, the
output path, and the render format; timings go to stderr only.  Exit
codes: 0 all checks pass, 1 at least one failure, 2 usage or
configuration errors.  Precondition violations raised inside a suite
become skip records instead of aborting the run.
"""

from __future__ import annotations

import argparse
import sys
import time

from .algebras import (
    ALGEBRA_NAMES,
    congruence_records,
    eala_axiom_suite,
    expected_graded_dim,
    graded_dims,
    jacobi_suite,
    make_algebra,
)
from .cocycle import (
    DEFAULT_FAMILY,
    build_system,
    cocycle_suite,
    family_vector,
)
from .cocycle import solve as solve_cocycle
from . import __version__
from .engine import SkewAlgebra
from .filtration import (
    bracket_identity_suite,
    congruence_suite,
    kernel_central_records,
    quotient_dim,
    quotient_records,
    sp_suite,
    sp_table_records,
)
from .jetmodules import highest_weight_suite, jet_suite
from .lattice import SkewForm, load_matrix, random_skew, std_J, std_J1, std_Jprime
from .parallel import worker_count
from .report import make_report, record, render_json, render_text
from .rootsweights import keala_suite, parse_reflections, symmetry_suite
from .sampling import RNG_NAME, Stream
from .scalars import parse_q, qstr

_SUITES = ("jacobi", "eala", "filtration", "sp-image", "jet",
           "highest-weight", "keala", "cocycle", "all")


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--matrix", default="J",
                        help="J, J1, Jprime, random, or a matrix file path")
    common.add_argument("--m", type=int, default=1,
                        help="block count of the standard forms")
    common.add_argument("--n", type=int, default=None,
                        help="lattice rank for matrix-independent suites "
                             "(default: the matrix size)")
    common.add_argument("--box", type=int, default=2,
                        help="degree box radius")
    common.add_argument("--samples", type=int, default=200,
                        help="random samples per check")
    common.add_argument("--seed", type=int, default=0,
                        help="64-bit stream seed")
    common.add_argument("--beta", default=None,
                        help='translation twist, comma-separated rationals '
                             'such as "1/2,-1/3"')
    common.add_argument("--mu", type=int, default=2,
                        help="current-part highest weight")
    common.add_argument("--sp-power", dest="sp_power", type=int, default=1,
                        help="symmetric power of the symplectic factor")
    common.add_argument("--q", type=int, default=3,
                        help="filtration depth bound")
    common.add_argument("--algebra", default="tauB", choices=ALGEBRA_NAMES,
                        help="algebra family for eala and dims checks")
    common.add_argument("--part", default="Ztilde",
                        choices=("Ztilde", "Htilde"),
                        help="graded component for dims graded")
    common.add_argument("--reflections", default=None,
                        help='comma-separated real roots such as '
                             '"alpha,alpha+delta[1],-alpha+delta[2]"')
    common.add_argument("--out", default=None,
                        help="also write the report to this file")
    common.add_argument("--format", dest="fmt", default="json",
                        choices=("json", "text"))

    parser = argparse.ArgumentParser(
        prog="sseala",
        description="Exact finite-truncation checks for skew-form current "
                    "algebras, their filtrations, and their modules.")
    sub = parser.add_subparsers(dest="command", required=True)
    verify = sub.add_parser("verify", parents=[common],
                            help="run a verification suite")
    verify.add_argument("suite", choices=_SUITES)
    dims = sub.add_parser("dims", parents=[common],
                          help="tabulate quotient or graded dimensions")
    dims.add_argument("kind", choices=("quotient", "graded"))
    solve = sub.add_parser("solve", parents=[common],
                           help="solve a truncated constraint system")
    solve.add_argument("target", choices=("cocycle",))
    return parser


def _resolve_matrix(args) -> SkewForm:
    if args.m < 1:
        raise ValueError("--m must be at least 1")
    name = args.matrix
    if name == "J":
        return std_J(args.m)
    if name == "J1":
        return std_J1(args.m)
    if name == "Jprime":
        return std_Jprime(args.m)
    if name == "random":
        return random_skew(2 * args.m, Stream(args.seed, "cli/matrix"),
                           nondegenerate=True)
    return load_matrix(name)


def _parse_beta(text: str | None, n: int):
    if text is None:
        return None
    parts = [p.strip() for p in text.split(",")]
    if any(not p for p in parts):
        raise ValueError("--beta has an empty entry")
    beta = tuple(parse_q(p) for p in parts)
    if len(beta) != n:
        raise ValueError(f"--beta needs {n} entries, got {len(beta)}")
    return beta


def _config_echo(args, ctx: SkewForm, beta) -> dict:
    target = (getattr(args, "suite", None) or getattr(args, "kind", None)
              or getattr(args, "target", None))
    return {
        "command": args.command,
        "target": target,
        "algebra": args.algebra,
        "matrix": ctx.describe(),
        "m": args.m,
        "n": args.n,
        "box": args.box,
        "samples": args.samples,
        "seed": args.seed,
        "mu": args.mu,
        "sp_power": args.sp_power,
        "q": args.q,
        "beta": None if beta is None else [qstr(b) for b in beta],
        "reflections": args.reflections,
        "part": args.part,
    }


def _guarded(label: str, fn) -> list[dict]:
    start = time.perf_counter()
    try:
        recs = fn()
    except ValueError as exc:
        recs = [record(label, "preconditions", "skip", reason=str(exc))]
    elapsed = (time.perf_counter() - start) * 1000.0
    print(f"[sseala] {label}: {elapsed:.0f} ms", file=sys.stderr)
    return recs


def _verify_records(args, ctx: SkewForm, beta, reflections,
                    workers: int) -> list[dict]:
    want = args.suite
    m, radius, samples, seed = args.m, args.box, args.samples, args.seed

    def on(name: str) -> bool:
        return want in (name, "all")

    out: list[dict] = []
    if on("jacobi"):
        out += _guarded("jacobi", lambda: jacobi_suite(
            m, radius, samples, seed, workers))
    if on("eala"):
        def eala_block() -> list[dict]:
            roster = [(args.algebra,
                       make_algebra(args.algebra, m=m, n=args.n, ctx=ctx))]
            if args.algebra != "keala":
                roster.append(("keala", make_algebra("keala", m=m)))
            recs: list[dict] = []
            for label, alg in roster:
                recs += eala_axiom_suite(alg, radius, samples, seed,
                                         label=f"{label}-m{m}")
            recs += congruence_records(samples, seed)
            return recs
        out += _guarded("eala", eala_block)
    if on("filtration"):
        n = args.n or ctx.N

        def filtration_block() -> list[dict]:
            recs = bracket_identity_suite(ctx, samples, seed)
            recs += congruence_suite(n, args.q, samples, seed)
            recs += quotient_records(n)
            return recs
        out += _guarded("filtration", filtration_block)
    if on("sp-image"):
        def sp_block() -> list[dict]:
            recs = sp_suite(ctx, radius, samples, seed)
            recs += sp_table_records(m)
            recs += kernel_central_records(ctx, radius, samples, seed)
            return recs
        out += _guarded("sp-image", sp_block)
    if on("jet"):
        out += _guarded("jet", lambda: jet_suite(
            m, args.sp_power, beta, samples, seed))
    if on("highest-weight"):
        def hw_block() -> list[dict]:
            recs = highest_weight_suite(args.mu, args.sp_power, beta,
                                        radius, samples, seed, m=m)
            recs += symmetry_suite(args.mu, args.sp_power, beta, radius,
                                   samples, seed, reflections=reflections,
                                   m=m)
            return recs
        out += _guarded("highest-weight", hw_block)
    if on("keala"):
        out += _guarded("keala", lambda: keala_suite(
            m, samples, seed, radius=radius))
    if on("cocycle"):
        out += _guarded("cocycle", lambda: cocycle_suite(ctx, radius))
    return out


def _graded_records(args, ctx: SkewForm) -> list[dict]:
    alg = make_algebra(args.algebra, m=args.m, n=args.n, ctx=ctx)
    dims = graded_dims(alg, args.part, args.box)
    table = {",".join(str(c) for c in r): d for r, d in dims.items()}
    value = {"part": args.part, "degrees": len(dims), "table": table}
    if not isinstance(alg, SkewAlgebra):
        return [record("eala", f"{args.algebra}/graded-{args.part}", "pass",
                       value=value,
                       annotation="no closed-form reference for this family")]
    bad = [{"degree": list(r), "computed": d,
            "expected": expected_graded_dim(alg, args.part, r)}
           for r, d in dims.items()
           if d != expected_graded_dim(alg, args.part, r)]
    return [record("eala", f"{args.algebra}/graded-{args.part}",
                   "pass" if not bad else "fail", value=value,
                   counterexample={"cells": bad[:3]} if bad else None)]


def _quotient_depth_records(n: int, q: int, radius: int) -> list[dict]:
    lo = quotient_dim(n, q, radius)
    hi = quotient_dim(n, q, radius + 1)
    ok = lo == hi
    return [record("filtration", f"dims/order-{q}-saturation",
                   "pass" if ok else "fail",
                   value={f"radius-{radius}": lo, f"radius-{radius + 1}": hi},
                   annotation="no closed-form reference at this depth",
                   counterexample=None if ok else
                   {f"radius-{radius}": lo, f"radius-{radius + 1}": hi})]


def _dims_records(args, ctx: SkewForm) -> list[dict]:
    if args.kind == "graded":
        return _guarded("eala", lambda: _graded_records(args, ctx))
    n = args.n or ctx.N
    if args.q in (2, 3):
        return _guarded("filtration", lambda: quotient_records(n))
    return _guarded("filtration",
                    lambda: _quotient_depth_records(n, args.q, args.box))


def _render_solution(system, vec) -> str:
    parts = [f"{qstr(c)}*lam[t^{list(r)}, t^{list(s)}]"
             for (r, s), c in zip(system.pairs, vec) if c != 0]
    return " + ".join(parts) if parts else "0"


def _solve_payload(args, ctx: SkewForm, config: dict) -> dict:
    system = build_system(ctx, args.box)
    ns = solve_cocycle(system)
    coords = ns.coordinates(family_vector(system, DEFAULT_FAMILY))
    return {
        "tool": {"name": "sseala", "version": __version__, "rng": RNG_NAME},
        "config": config,
        "system": {"pairs": len(system.pairs), "rows": len(system.rows),
                   "box": args.box},
        "dimension": ns.dimension,
        "family": DEFAULT_FAMILY.as_dict(),
        "family_coordinates": None if coords is None
        else [qstr(c) for c in coords],
        "basis": [_render_solution(system, vec) for vec in ns.basis],
    }


def _render_solve_text(payload: dict) -> str:
    lines = [f"sseala {payload['tool']['version']}"]
    cfg = payload["config"]
    lines.append("config: " + ", ".join(f"{k}={v}" for k, v in cfg.items()))
    sysinfo = payload["system"]
    lines.append(f"system: pairs={sysinfo['pairs']} rows={sysinfo['rows']} "
                 f"box={sysinfo['box']}")
    lines.append(f"dimension: {payload['dimension']}")
    fam = payload["family"]
    lines.append("family: " + ", ".join(f"{k}={v}" for k, v in fam.items()))
    coords = payload["family_coordinates"]
    lines.append("family coordinates: " +
                 ("outside the solution space" if coords is None
                  else ", ".join(coords)))
    for i, basis_line in enumerate(payload["basis"]):
        lines.append(f"basis[{i}]: {basis_line}")
    return "\n".join(lines) + "\n"


def _emit(text: str, out_path: str | None) -> None:
    sys.stdout.write(text)
    if out_path is not None:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.box < 0:
            raise ValueError("--box must be nonnegative")
        if args.samples < 1:
            raise ValueError("--samples must be positive")
        if args.mu < 0:
            raise ValueError("--mu must be nonnegative")
        if args.sp_power < 0:
            raise ValueError("--sp-power must be nonnegative")
        if args.q < 1:
            raise ValueError("--q must be at least 1")
        if args.n is not None and args.n < 1:
            raise ValueError("--n must be at least 1")
        workers = worker_count()
        ctx = _resolve_matrix(args)
        beta = _parse_beta(args.beta, 2 * args.m)
        reflections = (None if args.reflections is None
                       else parse_reflections(args.reflections, 2 * args.m))
    except (ValueError, OSError) as exc:
        print(f"sseala: {exc}", file=sys.stderr)
        return 2

    config = _config_echo(args, ctx, beta)
    if args.command == "solve":
        try:
            payload = _solve_payload(args, ctx, config)
        except ValueError as exc:
            print(f"sseala: {exc}", file=sys.stderr)
            return 2
        text = (render_json(payload) if args.fmt == "json"
                else _render_solve_text(payload))
        try:
            _emit(text, args.out)
        except OSError as exc:
            print(f"sseala: {exc}", file=sys.stderr)
            return 2
        return 0

    if args.command == "verify":
        records = _verify_records(args, ctx, beta, reflections, workers)
    else:
        records = _dims_records(args, ctx)
    report = make_report(config, records)
    text = render_json(report) if args.fmt == "json" else render_text(report)
    try:
        _emit(text, args.out)
    except OSError as exc:
        print(f"sseala: {exc}", file=sys.stderr)
        return 2
    return 0 if all(r["status"] != "fail" for r in records) else 1


if __name__ == "__main__":
    sys.exit(main())
