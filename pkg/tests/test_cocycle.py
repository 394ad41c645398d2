from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as hs

from sseala.cocycle import (
    DEFAULT_FAMILY,
    Nullspace,
    ScalarFamily,
    build_system,
    check_family,
    cocycle_suite,
    equal_value_instances,
    family_vector,
    identity_records,
    solve,
)
from sseala.lattice import SkewForm, pairing, std_J, std_J1
from sseala.scalars import ONE, Q, ZERO

E1 = (1, 0)
E2 = (0, 1)


def _transformed_form() -> SkewForm:
    # congruence image of the standard form under [[1, 2], [0, 1]]
    a = ((1, 2), (0, 1))
    base = std_J(1)
    entries = [[sum(Q(a[k][i]) * base.B[k][l] * Q(a[l][j])
                    for k in range(2) for l in range(2))
                for j in range(2)] for i in range(2)]
    return SkewForm(entries)


def test_family_values():
    fam = ScalarFamily(Q(2, 3), Q(4, 3), Q(1, 3))
    assert fam.value(E1, E2) == Q(2, 3)
    assert fam.value(E1, (-1, 0)) == Q(4, 3)
    assert fam.value((0, 0), E1) == Q(1, 3)
    assert fam.value(E1, (0, 0)) == Q(1, 3)
    assert fam.product_defect() == ZERO


def test_family_accepts_strings_and_rejects_zero():
    fam = ScalarFamily("2/3", "4/3", "1/3")
    assert fam.generic == Q(2, 3)
    assert fam.as_dict() == {"generic": "2/3", "opposite": "4/3",
                             "zero_index": "1/3"}
    for bad in ((0, 1, 1), (1, 0, 1), (1, 1, 0)):
        with pytest.raises(ValueError):
            ScalarFamily(*bad)


def test_product_defect_nonzero():
    assert ScalarFamily(3, 5, 7).product_defect() == Q(9 - 35)


def test_build_rejects_degenerate_form_and_negative_radius():
    with pytest.raises(ValueError):
        build_system(std_J1(1), 1)
    with pytest.raises(ValueError):
        build_system(std_J(1), -1)


def test_system_sizes_frozen():
    sys1 = build_system(std_J(1), 1)
    assert (len(sys1.pairs), len(sys1.rows)) == (64, 256)
    sys2 = build_system(std_J(1), 2)
    assert (len(sys2.pairs), len(sys2.rows)) == (576, 6752)


def test_rows_never_reference_zero_index_pairs():
    sys1 = build_system(std_J(1), 1)
    for _, entries in sys1.rows:
        for col in entries:
            r, s = sys1.pairs[col]
            assert any(r) and any(s)


def test_frozen_row_coefficients():
    # shift e2, both sides e1: formal coefficients (1, 1, -2), the two
    # shifted terms land on the same unknown and accumulate
    ctx = std_J(1)
    assert pairing(ctx, E2, E1) == ONE
    assert pairing(ctx, E2, (2, 0)) == Q(2)
    sys1 = build_system(ctx, 1)
    target = (E2, E1, E1)
    found = [entries for triple, entries in sys1.rows if triple == target]
    assert len(found) == 1
    expected = {sys1.index[(E1, (1, 1))]: Q(2), sys1.index[(E1, E1)]: Q(-2)}
    assert found[0] == expected


def test_nullspace_is_the_two_value_plane():
    sys1 = build_system(std_J(1), 1)
    ns = solve(sys1)
    assert ns.dimension == 2
    for vec in ns.basis:
        generic = {vec[i] for i, (r, s) in enumerate(sys1.pairs)
                   if any(a + b for a, b in zip(r, s))}
        opposite = {vec[i] for i, (r, s) in enumerate(sys1.pairs)
                    if not any(a + b for a, b in zip(r, s))}
        assert len(generic) == 1 and len(opposite) == 1
        assert generic | opposite == {ZERO, ONE}
    assert [sys1.pairs[c] for c in ns.free] == [((1, 1), (-1, -1)),
                                                ((1, 1), (1, 1))]


def test_nullspace_dimension_two_at_radius_two():
    ns = solve(build_system(std_J(1), 2))
    assert ns.dimension == 2


def test_family_vector_in_span_and_junk_outside():
    sys1 = build_system(std_J(1), 1)
    ns = solve(sys1)
    coords = ns.coordinates(family_vector(sys1, DEFAULT_FAMILY))
    assert coords == (Q(4, 3), Q(2, 3))
    junk = [ZERO] * len(sys1.pairs)
    junk[sys1.index[(E1, E2)]] = ONE
    assert ns.coordinates(junk) is None
    with pytest.raises(ValueError):
        ns.coordinates([ZERO])


def test_check_family_records():
    sys1 = build_system(std_J(1), 1)
    recs = check_family(sys1, DEFAULT_FAMILY)
    assert [(r["check"], r["status"]) for r in recs] == [
        ("family-rows", "pass"), ("family-product-relation", "pass")]
    assert recs[0]["value"]["rows"] == 256


def test_arbitrary_family_passes_rows_but_fails_product():
    recs = check_family(build_system(std_J(1), 1), ScalarFamily(3, 5, 7))
    assert recs[0]["status"] == "pass"
    assert recs[1]["status"] == "fail"
    assert recs[1]["counterexample"] == {"defect": "-26"}


_RADIUS_ONE_SYSTEM = build_system(std_J(1), 1)


@given(hs.integers(1, 9), hs.integers(1, 9), hs.integers(1, 9))
@settings(max_examples=30, deadline=None)
def test_any_nonzero_family_satisfies_all_rows(a, b, c):
    sys1 = _RADIUS_ONE_SYSTEM
    fam = ScalarFamily(Q(a, 7), Q(b, 5), Q(c, 3))
    for _, entries in sys1.rows:
        total = sum((coeff * fam.value(*sys1.pairs[col])
                     for col, coeff in entries.items()), ZERO)
        assert total == ZERO


def test_instance_counts_frozen():
    counts = {name: len(inst)
              for name, inst in equal_value_instances(_RADIUS_ONE_SYSTEM)}
    assert counts == {"nonorthogonal-shift": 192, "orthogonal-pair": 0,
                      "opposite-pair": 7}
    sys2 = build_system(std_J(1), 2)
    counts2 = {name: len(inst) for name, inst in equal_value_instances(sys2)}
    assert counts2 == {"nonorthogonal-shift": 2240, "orthogonal-pair": 136,
                       "opposite-pair": 23}


def test_instances_never_touch_zero_sum_pairs():
    sys2 = build_system(std_J(1), 2)
    for name, instances in equal_value_instances(sys2):
        if name == "opposite-pair":
            continue
        for p, q in instances:
            assert any(a + b for a, b in zip(*p))
            assert any(a + b for a, b in zip(*q))


def test_identity_records_pass_and_skip():
    sys1 = _RADIUS_ONE_SYSTEM
    recs = identity_records(sys1, solve(sys1))
    by_name = {r["check"]: r for r in recs}
    assert by_name["equal-nonorthogonal-shift"]["status"] == "pass"
    assert by_name["equal-nonorthogonal-shift"]["value"]["instances"] == 192
    assert by_name["equal-orthogonal-pair"]["status"] == "skip"
    assert by_name["equal-orthogonal-pair"]["reason"] == "no in-box instances"
    assert by_name["equal-opposite-pair"]["status"] == "pass"


def test_identity_records_catch_a_broken_solution():
    sys1 = _RADIUS_ONE_SYSTEM
    vec = list(family_vector(sys1, DEFAULT_FAMILY))
    vec[sys1.index[(E1, E2)]] = Q(99)
    fake = Nullspace(sys1.pairs, (0,), (tuple(vec),))
    recs = identity_records(sys1, fake)
    broken = [r for r in recs if r["status"] == "fail"]
    assert broken
    assert all("counterexample" in r for r in broken)


def test_suite_record_names_frozen():
    recs = cocycle_suite(std_J(1), 1)
    assert [r["check"] for r in recs] == [
        "system-size", "family-rows", "family-product-relation",
        "nullspace-resubstitution", "nullspace-family",
        "equal-nonorthogonal-shift", "equal-orthogonal-pair",
        "equal-opposite-pair"]
    assert all(r["suite"] == "cocycle" for r in recs)
    assert all(r["status"] in ("pass", "skip") for r in recs)
    assert recs[0]["value"] == {"pairs": 64, "rows": 256, "box": 1}


def test_suite_all_pass_at_radius_two():
    recs = cocycle_suite(std_J(1), 2)
    assert all(r["status"] == "pass" for r in recs)
    by_name = {r["check"]: r for r in recs}
    assert by_name["nullspace-family"]["value"]["dimension"] == 2
    assert by_name["nullspace-family"]["value"]["coordinates"] == ["4/3", "2/3"]
    assert by_name["equal-orthogonal-pair"]["value"]["instances"] == 136


def test_empty_box_suite_is_trivially_solvable():
    recs = cocycle_suite(std_J(1), 0)
    by_name = {r["check"]: r for r in recs}
    assert by_name["system-size"]["value"] == {"pairs": 0, "rows": 0, "box": 0}
    assert by_name["nullspace-family"]["status"] == "pass"
    assert by_name["nullspace-family"]["value"]["coordinates"] == []
    skips = [r for r in recs if r["status"] == "skip"]
    assert len(skips) == 3


def test_suite_on_transformed_form():
    recs = cocycle_suite(_transformed_form(), 1)
    assert all(r["status"] in ("pass", "skip") for r in recs)
    by_name = {r["check"]: r for r in recs}
    assert by_name["nullspace-resubstitution"]["value"]["dimension"] == 2


def test_suite_deterministic():
    one = json.dumps(cocycle_suite(std_J(1), 1))
    two = json.dumps(cocycle_suite(std_J(1), 1))
    assert one == two
