"""Deterministic fan-out for the exhaustive Jacobi scan.

Work is split into contiguous index ranges whose sizes are balanced by the
triangular triple count, and results are merged in range order, so the
output (counts and the first counterexample in lexicographic triple order)
is independent of the worker count. Workers rebuild the algebra from its
descriptor; every other input is a plain picklable value.
"""

from __future__ import annotations

import multiprocessing as mp
import os


def worker_count(default_cap: int = 8) -> int:
    env = os.environ.get("SSEALA_WORKERS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise ValueError(f"SSEALA_WORKERS must be an integer, got {env!r}")
    return max(1, min(default_cap, os.cpu_count() or 1))


def split_triangle(n: int, parts: int) -> list[tuple[int, int]]:
    """Contiguous i-ranges of [0, n) with roughly equal triple counts
    sum_{i in range} C(n-1-i, 2)."""
    if n < 3 or parts <= 1:
        return [(0, n)]
    weights = [(n - 1 - i) * (n - 2 - i) // 2 for i in range(n)]
    total = sum(weights)
    target = total / parts
    out = []
    start = 0
    acc = 0
    for i in range(n):
        acc += weights[i]
        if acc >= target and len(out) < parts - 1:
            out.append((start, i + 1))
            start = i + 1
            acc = 0
    out.append((start, n))
    return [rng for rng in out if rng[0] < rng[1]]


_ALG = None
_SYMS = None


def _init_jacobi(desc: dict, syms: list) -> None:
    global _ALG, _SYMS
    from .algebras import algebra_from_descriptor

    _ALG = algebra_from_descriptor(desc)
    _SYMS = syms


def _jacobi_chunk(rng: tuple[int, int]):
    from .algebras import jacobi_triples_range

    return jacobi_triples_range(_ALG, _SYMS, rng[0], rng[1])


def run_jacobi_parallel(alg, syms: list, workers: int):
    """(total triples, first counterexample or None), worker-count invariant."""
    from .algebras import jacobi_triples_range

    if workers <= 1 or len(syms) < 64:
        return jacobi_triples_range(alg, syms, 0, len(syms))
    chunks = split_triangle(len(syms), workers * 4)
    ctx = mp.get_context("fork")
    with ctx.Pool(workers, initializer=_init_jacobi, initargs=(alg.descriptor(), syms)) as pool:
        results = pool.map(_jacobi_chunk, chunks)
    total = 0
    first = None
    for count, cex in results:
        total += count
        if first is None and cex is not None:
            first = cex
    return total, first
