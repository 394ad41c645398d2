from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as hs

from sseala.engine import SkewAlgebra
from sseala.jetmodules import build_highest_weight_module
from sseala.lattice import pairing, std_J, std_J1
from sseala.linalg import det
from sseala.rootsweights import (
    Coroot,
    ExtendedWeight,
    RealRoot,
    as_weight,
    coroot,
    default_reflections,
    eval_coroot,
    gram_matrix,
    keala_suite,
    level_zero_weight,
    parse_reflections,
    parse_root,
    radical_records,
    reflect,
    reflection_records,
    render_root,
    slice_homomorphism_records,
    symmetry_suite,
    triangular_classify,
    triangular_closure_records,
    weight_coords,
    weight_pairing,
    weyl_symmetry_records,
    wt_add,
    wt_scale,
    wt_sub,
    _table_key,
)
from sseala.scalars import ONE, Q, ZERO

BETA0 = (ZERO, ZERO)

small = hs.integers(-3, 3)


# -- the form ----------------------------------------------------------------


def test_gram_frozen():
    g = gram_matrix(2)
    assert len(g) == 5 and all(len(row) == 5 for row in g)
    assert g[0][0] == 2
    assert g[1][3] == 1 and g[3][1] == 1
    assert g[2][4] == 1 and g[4][2] == 1
    assert g[1][2] == 0 and g[3][4] == 0 and g[0][1] == 0
    assert all(g[i][j] == g[j][i] for i in range(5) for j in range(5))


def test_gram_determinant():
    for n in (1, 2, 3):
        assert det(gram_matrix(n)) == Q(2) * (-1) ** n


def test_weight_pairing_frozen():
    lam = ExtendedWeight(1, (1, 0), (0, 2))
    assert weight_pairing(lam, lam) == 2
    iso = ExtendedWeight(0, (1, 0), (3, 5))
    assert weight_pairing(iso, iso) == 6
    assert weight_pairing(ExtendedWeight(1, (1, 0)),
                          ExtendedWeight(0, (0, 0), (2, 0))) == 2


def test_weight_pairing_matches_gram():
    g = gram_matrix(2)
    xs = [ExtendedWeight(Q(1, 2), (1, -2), (3, 0)),
          ExtendedWeight(-1, (0, 1), (Q(2, 3), 1))]
    for x in xs:
        for y in xs:
            cx, cy = weight_coords(x), weight_coords(y)
            via_gram = sum(cx[i] * g[i][j] * cy[j]
                           for i in range(5) for j in range(5))
            assert weight_pairing(x, y) == via_gram


def test_weight_arithmetic():
    x = ExtendedWeight(1, (1, 0), (0, 1))
    y = ExtendedWeight(Q(1, 2), (0, 2), (1, 1))
    assert wt_add(x, y) == ExtendedWeight(Q(3, 2), (1, 2), (1, 2))
    assert wt_sub(x, y) == ExtendedWeight(Q(1, 2), (1, -2), (-1, 0))
    assert wt_scale(x, Q(-2)) == ExtendedWeight(-2, (-2, 0), (0, -2))
    with pytest.raises(ValueError):
        wt_add(x, ExtendedWeight(0, (1,)))
    with pytest.raises(ValueError):
        ExtendedWeight(0, (1, 0), (1,))
    with pytest.raises(ValueError):
        weight_pairing(x, ExtendedWeight(0, (1,)))


# -- real roots and coroots -----------------------------------------------------


def test_isotropic_root_rejected():
    with pytest.raises(ValueError):
        RealRoot(0, (1, 0))
    with pytest.raises(ValueError):
        RealRoot(2, (0, 0))


def test_root_norm_is_two():
    for sign in (1, -1):
        for shift in ((0, 0), (1, 0), (-2, 3)):
            g = as_weight(RealRoot(sign, shift))
            assert weight_pairing(g, g) == 2


def test_coroot_frozen():
    assert coroot(RealRoot(1, (0,))) == Coroot(1, (0,))
    assert coroot(RealRoot(1, (1,))) == Coroot(1, (1,))
    assert coroot(RealRoot(-1, (1,))) == Coroot(-1, (1,))
    assert coroot(RealRoot(1, (2, -1))) == Coroot(1, (2, -1))


def test_eval_coroot_frozen():
    lam = ExtendedWeight(Q(3, 2), (0, 0), (1, 2))
    assert eval_coroot(lam, coroot(RealRoot(1, (1, 1)))) == 6
    assert eval_coroot(lam, coroot(RealRoot(-1, (0, 0)))) == -3
    with pytest.raises(ValueError):
        eval_coroot(lam, Coroot(1, (1,)))


def test_eval_coroot_matches_form():
    weights = [ExtendedWeight(Q(1, 2), (1, 0), (2, -1)),
               ExtendedWeight(-2, (0, 3), (0, Q(1, 3)))]
    roots = [RealRoot(1, (0, 0)), RealRoot(-1, (1, -2)), RealRoot(1, (0, 1))]
    for lam in weights:
        for gamma in roots:
            gw = as_weight(gamma)
            assert eval_coroot(lam, coroot(gamma)) == \
                2 * weight_pairing(lam, gw) / weight_pairing(gw, gw)


# -- reflections -----------------------------------------------------------------


@given(small, small, small, small, small, hs.booleans())
def test_reflect_involution_and_isometry(a, g1, g2, m1, m2, neg):
    lam = ExtendedWeight(Q(a, 2), (g1, g2), (Q(m1), Q(m2)))
    gamma = RealRoot(-1 if neg else 1, (m2, m1))
    assert reflect(gamma, reflect(gamma, lam)) == lam
    image = reflect(gamma, lam)
    assert weight_pairing(image, image) == weight_pairing(lam, lam)


def test_reflect_fixed_point():
    gamma = RealRoot(1, (1, 0))
    lam = ExtendedWeight(1, (0, 0), (-2, 5))
    assert eval_coroot(lam, coroot(gamma)) == 0
    assert reflect(gamma, lam) == lam


def test_reflect_frozen():
    lam = level_zero_weight(2, (0, 0), BETA0)
    assert reflect(RealRoot(1, (0, 0)), lam) == level_zero_weight(-2, (0, 0), BETA0)
    image = reflect(RealRoot(1, (1, 0)), lam)
    assert _table_key(image, BETA0) == (-2, (-2, 0))


def test_level_zero_key_roundtrip():
    beta = (Q(1, 2), Q(-1, 3))
    for a in (-2, 0, 3):
        for s in ((0, 0), (1, -2)):
            lam = level_zero_weight(a, s, beta)
            assert _table_key(lam, beta) == (a, s)
    assert _table_key(ExtendedWeight(Q(1, 3), (0, 0)), BETA0) is None
    assert _table_key(ExtendedWeight(1, (Q(1, 2), 0)), BETA0) is None
    assert _table_key(ExtendedWeight(1, (0, 0), (1, 0)), BETA0) is None


# -- reflection strings -----------------------------------------------------------


def test_parse_render_roundtrip():
    for text in ("alpha", "-alpha", "alpha+delta[1]", "alpha-2delta[2]",
                 "-alpha+delta[1]-delta[2]", "alpha+3delta[2]"):
        assert render_root(parse_root(text, 2)) == text


def test_parse_details():
    assert parse_root("alpha + delta[1]", 2) == RealRoot(1, (1, 0))
    assert parse_root("alpha+delta[1]+delta[1]", 2) == RealRoot(1, (2, 0))
    assert parse_reflections("alpha, alpha+delta[2]", 2) == \
        [RealRoot(1, (0, 0)), RealRoot(1, (0, 1))]
    assert parse_reflections("", 2) == []


def test_parse_errors():
    for text in ("beta", "", "delta[1]", "alpha+delta[0]", "alpha+delta[3]",
                 "alpha++delta[1]", "alpha+delta[x]", "alpha+delta[1]junk"):
        with pytest.raises(ValueError):
            parse_root(text, 2)


def test_default_reflections():
    assert [render_root(g) for g in default_reflections(2)] == \
        ["alpha", "alpha+delta[1]", "alpha+delta[2]", "-alpha+delta[1]"]


# -- identity records --------------------------------------------------------------


def test_reflection_records_pass():
    recs = reflection_records(2, 40, 11)
    assert [r["check"] for r in recs] == [
        "gram-nondegenerate", "coroot-via-form", "reflection-involution",
        "reflection-isometry", "reflection-fixed-points"]
    assert all(r["status"] == "pass" for r in recs)
    assert recs[0]["value"] == {"size": 5, "det": "2"}
    assert recs == reflection_records(2, 40, 11)


def test_weyl_records_counts():
    mod = build_highest_weight_module(2, 1)
    recs = weyl_symmetry_records(mod, default_reflections(2), 1)
    assert len(recs) == 12
    assert all(r["status"] == "pass" for r in recs)
    by_check = {r["check"]: r for r in recs}
    assert by_check["weyl-invariance[alpha]"]["value"] == \
        {"checked": 27, "out-of-box": 0}
    assert by_check["weyl-dim-match[alpha+delta[1]]"]["value"] == \
        {"checked": 15, "out-of-box": 12}
    assert by_check["root-lowering[alpha]"]["value"] == \
        {"checked": 9, "out-of-box": 0}


def test_weyl_records_trivial_module():
    mod = build_highest_weight_module(0, 0)
    for rec in weyl_symmetry_records(mod, default_reflections(2), 1):
        if rec["check"].startswith("root-lowering"):
            assert rec["status"] == "skip"
            assert rec["reason"] == "no tabulated weight pairs positively with the root"
        else:
            assert rec["status"] == "pass"


def test_weyl_records_out_of_box_skips():
    mod = build_highest_weight_module(1, 0)
    recs = weyl_symmetry_records(mod, [RealRoot(1, (3, 3))], 1)
    assert [r["status"] for r in recs] == ["skip", "skip", "skip"]
    assert recs[0]["reason"] == "every reflected weight leaves the degree box"
    assert recs[2]["reason"] == "every root-step lands outside the degree box"


def test_weyl_records_fractional_beta():
    mod = build_highest_weight_module(1, 0, beta=(Q(1, 2), Q(1, 3)))
    recs = weyl_symmetry_records(mod, default_reflections(2), 1)
    assert all(r["status"] == "pass" for r in recs)


def test_symmetry_suite():
    recs = symmetry_suite(2, 1, None, 1, 30, 7)
    assert len(recs) == 17
    assert all(r["status"] == "pass" for r in recs)
    assert recs == symmetry_suite(2, 1, None, 1, 30, 7)


# -- triangular gradings -----------------------------------------------------------


def test_classify_by_root():
    for r in ((0, 0), (1, -2), (0, -3)):
        assert triangular_classify("tauB", ("gx", 0, r)) == "plus"
        assert triangular_classify("tauB", ("gx", 2, r)) == "minus"
        assert triangular_classify("tauB", ("gx", 1, r)) == "zero"
    assert triangular_classify("tauB", ("hb", 0, (1, 0))) == "zero"
    assert triangular_classify("tauB", ("kb", 0, (0, -2))) == "zero"
    assert triangular_classify("tauB", ("k0", 1, (0, 0))) == "zero"
    assert triangular_classify("tauB", ("du", 0, (0, 0))) == "zero"


def test_classify_by_corner():
    assert triangular_classify("keala", ("gx", 2, (0, 0, 1))) == "plus"
    assert triangular_classify("keala", ("gx", 0, (0, 0, -1))) == "minus"
    assert triangular_classify("keala", ("kb", 0, (1, 0, 2))) == "plus"
    assert triangular_classify("keala", ("hb", 0, (0, 1, -3))) == "minus"
    assert triangular_classify("keala", ("gx", 0, (1, -1, 0))) == "plus"
    assert triangular_classify("keala", ("gx", 1, (1, -1, 0))) == "zero"
    assert triangular_classify("keala", ("hb", 0, (1, -1, 0))) == "zero"
    assert triangular_classify("keala", ("du", 2, (0, 0, 0))) == "zero"
    with pytest.raises(ValueError):
        triangular_classify("toroidal", ("gx", 0, (0, 0)))


def test_closure_hand_bracket():
    alg = SkewAlgebra(std_J1(1))
    out = alg.bracket(alg.gx(0, (0, 0, 1)), alg.gx(2, (1, 0, 1)))
    assert out
    for sym in out:
        assert triangular_classify("keala", sym) == "plus"


def test_closure_records():
    recs = triangular_closure_records(SkewAlgebra(std_J(1)), "tauB", 40, 3)
    assert [r["check"] for r in recs] == [
        "tauB-closure[plus,plus]", "tauB-closure[zero,plus]",
        "tauB-closure[zero,minus]", "tauB-closure[zero,zero]",
        "tauB-closure[minus,minus]"]
    assert all(r["status"] == "pass" for r in recs)
    recs = triangular_closure_records(SkewAlgebra(std_J1(1)), "keala", 40, 3)
    assert all(r["status"] == "pass" for r in recs)


# -- the corner slice --------------------------------------------------------------


def test_corner_image_frozen():
    corner = std_J1(1)
    assert corner.apply((1, 0, 0)) == (0, -1, -1)
    assert corner.apply((0, 0, 1)) == (1, 1, 0)


def test_slice_pairing_values():
    corner, flat = std_J1(1), std_J(1)
    assert pairing(corner, (1, 0, 0), (0, 1, 0)) == -1
    assert pairing(flat, (1, 0), (0, 1)) == -1
    # the slice hypothesis is load-bearing: a corner-direction entry breaks it
    assert pairing(corner, (1, 0, 0), (0, 1, 1)) == -2


def test_slice_records():
    recs = slice_homomorphism_records(1, 60, 7)
    assert [r["check"] for r in recs] == [
        "corner-image-display", "slice-pairing", "slice-homomorphism",
        "slice-central-bracket"]
    assert all(r["status"] == "pass" for r in recs)
    assert recs[0]["value"] == {"vectors": 125}
    recs = slice_homomorphism_records(2, 25, 7)
    assert all(r["status"] == "pass" for r in recs)


def test_radical_records():
    rec = radical_records(1)[0]
    assert rec["status"] == "pass"
    assert rec["value"] == {"rank": 1, "generator": [1, -1, 1]}
    rec = radical_records(2)[0]
    assert rec["status"] == "pass"
    assert rec["value"]["generator"] == [1, 1, -1, -1, 1]


def test_keala_suite():
    recs = keala_suite(1, 40, 3)
    assert len(recs) == 15
    assert all(r["status"] == "pass" for r in recs)
    assert recs == keala_suite(1, 40, 3)
