"""Timing comparison of the two scalar backends on package workloads.

Usage: python3 bench/bench_scalars.py [--samples N]

The backend is fixed at import time by SSEALA_SCALAR, so the script
re-launches itself in a subprocess per backend and prints one table.
Results are exact and identical across backends; only speed differs.
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time

BACKENDS = ("gmpy2", "fraction")


def _workloads(samples: int) -> list[tuple[str, float]]:
    from sseala.algebras import jacobi_random, make_algebra
    from sseala.cocycle import build_system, solve
    from sseala.lattice import std_J
    from sseala.sampling import Stream

    out = []

    start = time.perf_counter()
    stream = Stream(11, "bench/rational-mix")
    for _ in range(20 * samples):
        acc = stream.rational(nonzero=True)
        for _ in range(16):
            x = stream.rational(nonzero=True)
            acc = acc * x + x / acc
    out.append(("rational-mix", time.perf_counter() - start))

    start = time.perf_counter()
    alg = make_algebra("heala", m=1)
    jacobi_random(alg, Stream(11, "bench/jacobi"), 2, samples)
    out.append(("jacobi-random", time.perf_counter() - start))

    start = time.perf_counter()
    system = build_system(std_J(1), 2)
    solve(system)
    out.append(("cocycle-solve", time.perf_counter() - start))

    return out


def _run_child(backend: str, samples: int) -> dict[str, float] | None:
    env = dict(os.environ, SSEALA_SCALAR=backend)
    proc = subprocess.run(
        [sys.executable, os.path.abspath(__file__), "--worker",
         "--samples", str(samples)],
        env=env, capture_output=True, text=True)
    if proc.returncode != 0:
        sys.stderr.write(proc.stderr)
        return None
    return json.loads(proc.stdout)


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--samples", type=int, default=150)
    parser.add_argument("--worker", action="store_true")
    args = parser.parse_args()

    if args.worker:
        from sseala.scalars import BACKEND

        times = dict(_workloads(args.samples))
        print(json.dumps({"backend": BACKEND, "times": times}))
        return 0

    results = {}
    for backend in BACKENDS:
        data = _run_child(backend, args.samples)
        if data is None:
            print(f"{backend}: unavailable")
            continue
        results[backend] = data["times"]
    if len(results) < 2:
        return 0
    names = list(next(iter(results.values())))
    width = max(len(n) for n in names)
    print(f"{'workload'.ljust(width)}  {'gmpy2':>9}  {'fraction':>9}  ratio")
    for name in names:
        fast = results["gmpy2"][name]
        slow = results["fraction"][name]
        ratio = slow / fast if fast else float("inf")
        print(f"{name.ljust(width)}  {fast:8.3f}s  {slow:8.3f}s  {ratio:5.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
