"""Acceptance gate: one test per numbered criterion of the verification
contract. Each test prints a single "CRITERION n: PASS/FAIL" line (run with
pytest -s to see them inline) and fails with the offending checks listed.
All comparisons are exact; no tolerances anywhere."""

from __future__ import annotations

import contextlib
import io
import os
import time

from sseala import cli
from sseala.algebras import (congruence_records, eala_axiom_suite,
                             expected_graded_dim, graded_dims, jacobi_suite)
from sseala.cocycle import cocycle_suite
from sseala.engine import SkewAlgebra
from sseala.filtration import (bracket_identity_suite, congruence_suite,
                               kernel_central_records, quotient_records,
                               sp_suite, sp_table_records)
from sseala.jetmodules import highest_weight_suite, jet_suite
from sseala.lattice import box, random_skew, std_J, std_J1
from sseala.rootsweights import keala_suite, symmetry_suite
from sseala.sampling import Stream
from sseala.scalars import Q

SEED = 42
BETA_M1 = (Q(1, 2), Q(-2, 3))
BETA_M2 = (Q(1, 2), Q(-2, 3), Q(3, 5), Q(-1, 7))


def _failures(records: list[dict]) -> list[str]:
    return [f"{r['suite']}/{r['check']}: {r.get('counterexample')}"
            for r in records if r["status"] == "fail"]


def _must_pass(records: list[dict], *checks: str) -> list[str]:
    status = {r["check"]: r["status"] for r in records}
    return [f"{c} is {status.get(c, 'missing')}"
            for c in checks if status.get(c) != "pass"]


def _verdict(num: int, problems: list[str]) -> None:
    print(f"CRITERION {num}: {'FAIL' if problems else 'PASS'}")
    assert not problems, f"criterion {num}: " + "; ".join(problems)


def test_criterion_01_jacobi_identity():
    start = time.monotonic()
    records = jacobi_suite(1, 2, 1000, SEED, workers=1)
    elapsed = time.monotonic() - start
    problems = _failures(records)
    labels = ("toroidal-n2", "full-toroidal-n2", "tauS-n2", "heala-m1",
              "tauB-random-m1", "tauB-random-m2", "keala-m1")
    for label in labels:
        problems += _must_pass(records, f"{label}/random-r3")
    by_check = {r["check"]: r for r in records}
    for label in labels:
        rec = by_check[f"{label}/random-r3"]
        if rec["value"]["triples"] < 1000:
            problems.append(f"{label}/random-r3 ran {rec['value']['triples']} "
                            "triples, need 1000")
    for label in ("toroidal-n2", "full-toroidal-n2", "tauS-n2", "heala-m1",
                  "tauB-random-m1"):
        problems += _must_pass(records, f"{label}/exhaustive-r2")
    if elapsed >= 120:
        problems.append(f"took {elapsed:.0f}s, budget is 120s")
    _verdict(1, problems)


def test_criterion_02_graded_dimensions_and_form():
    problems: list[str] = []
    roster = [
        ("heala-m1", SkewAlgebra(std_J(1))),
        ("keala-m1", SkewAlgebra(std_J1(1))),
        ("random-m1", SkewAlgebra(
            random_skew(2, Stream(SEED, "acceptance/c2"), nondegenerate=True))),
    ]
    for label, alg in roster:
        records = eala_axiom_suite(alg, 3, 1000, SEED, label=label)
        problems += _failures(records)
        problems += _must_pass(
            records,
            f"{label}/ea1/form-symmetric", f"{label}/ea1/form-invariant",
            f"{label}/ea1/form-nondegenerate-slices",
            f"{label}/dims/Ztilde", f"{label}/dims/Htilde")
    # the four-variable block form: dimension table only, degree by degree
    big = SkewAlgebra(std_J(2))
    for part in ("Ztilde", "Htilde"):
        dims = graded_dims(big, part, 3)
        for r in box(4, 3):
            if dims.get(r, 0) != expected_graded_dim(big, part, r):
                problems.append(f"heala-m2 {part} dim at {r}: "
                                f"{dims.get(r, 0)} != expected")
                break
    _verdict(2, problems)


def test_criterion_03_congruence_isomorphisms():
    records = congruence_records(500, SEED)
    problems = _failures(records)
    problems += _must_pass(
        records, "congruence/m1-explicit-matrix", "congruence/m2-search",
        "phi-m1/intertwines-brackets", "phi-m2/intertwines-brackets",
        "phi-m1/core-and-roundtrip", "phi-m2/core-and-roundtrip")
    _verdict(3, problems)


def test_criterion_04_bracket_identities():
    problems: list[str] = []
    for ctx in (std_J(1), std_J(2)):
        records = bracket_identity_suite(ctx, 200, SEED)
        problems += _failures(records)
        problems += _must_pass(
            records,
            "bracket/generator-vs-difference",
            "bracket/generator-vs-difference-depth-one",
            "bracket/product-formula-p1q1", "bracket/product-formula-p1q2",
            "bracket/product-formula-p2q2", "bracket/product-formula-p2q3",
            "bracket/product-formula-orientation",
            "bracket/double-sum-vanishing",
            "bracket/double-sum-depth-one-boundary")
    _verdict(4, problems)


def test_criterion_05_depth_oracle():
    problems: list[str] = []
    for n, samples in ((2, 300), (3, 150)):
        records = congruence_suite(n, 4, samples, SEED)
        problems += _failures(records)
        problems += _must_pass(
            records, "congruence/depth-exact", "congruence/step-additivity",
            "congruence/base-shift", "congruence/oracle-cross-validation")
    _verdict(5, problems)


def test_criterion_06_quotient_dimensions():
    problems: list[str] = []
    for n in (2, 4):
        records = quotient_records(n)
        problems += _failures(records)
        problems += _must_pass(records, "dims/order-two",
                               "dims/order-three-saturation")
        by_check = {r["check"]: r for r in records}
        two = by_check["dims/order-two"]["value"]
        if two["computed"] != n:
            problems.append(f"n={n} order-two dimension {two['computed']}")
        juxta = by_check["dims/order-three-comparison"]["value"]
        for key in ("computed", "comparison", "agrees"):
            if key not in juxta:
                problems.append(f"n={n} comparison record lacks {key!r}")
    _verdict(6, problems)


def test_criterion_07_symplectic_realisation():
    problems: list[str] = []
    for m, samples in ((1, 500), (2, 500), (3, 100)):
        records = sp_suite(std_J(m), 2, samples, SEED)
        problems += _failures(records)
        problems += _must_pass(records, "hom/bracket-intertwine",
                               "image/dimension")
        by_check = {r["check"]: r for r in records}
        dim = by_check["image/dimension"]["value"]
        if dim["computed"] != 2 * m * m + m:
            problems.append(f"m={m} image dimension {dim['computed']}")
    problems += _failures(sp_table_records(2))
    for m in (1, 2):
        records = kernel_central_records(std_J(m), 2, 200, SEED)
        problems += _failures(records)
        problems += _must_pass(records, "kernel/dimension")
    _verdict(7, problems)


def test_criterion_08_jet_modules():
    problems: list[str] = []
    for m, beta in ((1, BETA_M1), (2, BETA_M2)):
        for k in (0, 1, 2):
            records = jet_suite(m, k, beta, 500, SEED)
            bad = _failures(records)
            bad += _must_pass(records, "translation-associative",
                              "translation-identity",
                              "reduction-bracket-matrices",
                              "realisation-kernel-zero")
            problems += [f"m={m} k={k}: {p}" for p in bad]
    _verdict(8, problems)


def test_criterion_09_level_zero_modules():
    problems: list[str] = []
    for mu, k in ((1, 0), (2, 1), (3, 2)):
        records = highest_weight_suite(mu, k, BETA_M1, 2, 500, SEED, m=1)
        bad = _failures(records)
        bad += _must_pass(records, "bracket-pairs", "central-zero",
                          "derivation-intertwine", "integrability",
                          "integrability-order-sharp", "weight-dims",
                          "reflection-dims", "reflection-step")
        problems += [f"mu={mu} k={k}: {p}" for p in bad]
    records = symmetry_suite(3, 2, BETA_M1, 2, 500, SEED)
    problems += _failures(records)
    problems += _must_pass(records, "gram-nondegenerate",
                           "coroot-via-form", "reflection-involution")
    _verdict(9, problems)


def test_criterion_10_corner_extended_family():
    problems: list[str] = []
    for m in (1, 2):
        records = keala_suite(m, 500, SEED)
        bad = _failures(records)
        bad += _must_pass(records, "slice-homomorphism", "slice-pairing",
                          "slice-central-bracket", "corner-radical-line")
        problems += [f"m={m}: {p}" for p in bad]
        if m == 1:
            by_check = {r["check"]: r for r in records}
            gen = by_check["corner-radical-line"].get("value", {})
            if gen.get("generator") != [1, -1, 1]:
                problems.append(f"radical generator {gen}")
    _verdict(10, problems)


def test_criterion_11_cocycle_system():
    records = cocycle_suite(std_J(1), 2)
    problems = [f"{r['check']}: {r['status']}"
                for r in records if r["status"] != "pass"]
    problems += _must_pass(
        records, "family-rows", "family-product-relation",
        "nullspace-resubstitution", "nullspace-family",
        "equal-nonorthogonal-shift", "equal-orthogonal-pair",
        "equal-opposite-pair")
    _verdict(11, problems)


def test_criterion_12_report_determinism():
    argv = ["verify", "all", "--m", "1", "--box", "2",
            "--samples", "500", "--seed", "42"]
    outputs = []
    start = time.monotonic()
    saved = os.environ.get("SSEALA_WORKERS")
    try:
        for workers in ("1", "8"):
            os.environ["SSEALA_WORKERS"] = workers
            for _ in range(2):
                out = io.StringIO()
                with contextlib.redirect_stdout(out), \
                        contextlib.redirect_stderr(io.StringIO()):
                    code = cli.main(list(argv))
                assert code == 0, f"exit {code} with {workers} workers"
                outputs.append(out.getvalue())
    finally:
        if saved is None:
            os.environ.pop("SSEALA_WORKERS", None)
        else:
            os.environ["SSEALA_WORKERS"] = saved
    elapsed = time.monotonic() - start
    problems = []
    if len(set(outputs)) != 1:
        problems.append("reports differ across runs or worker counts")
    if elapsed >= 300:
        problems.append(f"four runs took {elapsed:.0f}s, budget is 300s")
    _verdict(12, problems)
