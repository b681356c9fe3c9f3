"""Toric ideals, parametrization vanishing, Apéry standard form."""

import pytest

from wsatlas.curve import (
    MonomialCurve,
    apery_standard_form,
    curve_ring,
    delta_invariant,
    parametrization_check,
    toric_ideal,
)
from wsatlas.polyring import parse_polynomial
from wsatlas.semigroup import enumerate_by_genus, from_generators


def test_toric_cusp():
    C = toric_ideal((2, 3))
    assert len(C.ideal) == 1
    assert str(C.ideal[0]) == "y3^2 - x^3"
    assert C.generator_degrees == (6,)


def test_toric_345():
    C = toric_ideal((3, 4, 5))
    assert len(C.ideal) == 3
    texts = {str(g) for g in C.ideal}
    assert texts == {"y4^2 - x*y5", "y4*y5 - x^3", "y5^2 - x^2*y4"}


def test_toric_4567_determinantal():
    from wsatlas.groebner import buchberger

    C = toric_ideal((4, 5, 6, 7))
    assert len(C.ideal) == 6
    ring = C.ring
    rows = [
        [parse_polynomial(ring, t) for t in ("x", "y5", "y6", "y7")],
        [parse_polynomial(ring, t) for t in ("y5", "y6", "y7", "x^2")],
    ]
    minors = []
    for i in range(4):
        for j in range(i + 1, 4):
            minors.append(rows[0][i] * rows[1][j] - rows[0][j] * rows[1][i])
    assert len(minors) == 6
    # the minors and the computed generators cut out the same ideal
    gb_minors = buchberger(minors)
    gb_curve = C.reduced_gb()
    assert all(gb_minors.contains(g) for g in C.ideal)
    assert all(gb_curve.contains(m) for m in minors)
    assert sorted(C.generator_degrees) == sorted(m.wdeg() for m in minors)


def test_generator_count_matches_first_betti():
    for gens in [(2, 3), (3, 4, 5), (4, 5, 6, 7), (4, 6, 11, 13), (5, 6, 7, 8, 9)]:
        C = toric_ideal(gens)
        res = C.resolution()
        assert res.betti[1] == len(C.ideal)


def test_generators_homogeneous_and_vanishing():
    for g in range(1, 6):
        for S in enumerate_by_genus(5)[g]:
            C = toric_ideal(S)
            assert parametrization_check(C)
            for f in C.ideal:
                assert f.is_homogeneous()
                assert f.wdeg() > 0


def test_parametrization_check_detects_bad_ideal():
    S = from_generators((3, 4, 5))
    ring = curve_ring(S)
    bad = MonomialCurve(S, ring, (ring.variable(0),))
    assert not parametrization_check(bad)


def test_symmetric_matrix_minors_4_6_11_13():
    """The published symmetric-matrix presentation vanishes on the curve."""
    S = from_generators((4, 6, 11, 13))
    ring = curve_ring(S)
    P = lambda t: parse_polynomial(ring, t)
    matrix = [
        [P("x"), P("y6"), P("y11")],
        [P("y6"), P("x^2"), P("y13")],
        [P("y11"), P("y13"), P("x^3*y6")],
    ]
    minors = []
    for i in range(3):
        for j in range(i + 1, 3):
            for k in range(3):
                for l in range(k + 1, 3):
                    m = (
                        matrix[i][k] * matrix[j][l]
                        - matrix[i][l] * matrix[j][k]
                    )
                    if m:
                        minors.append(m)
    C = MonomialCurve(S, ring, tuple(p.monic() for p in minors))
    assert parametrization_check(C)


def test_apery_form_345():
    C = toric_ideal((3, 4, 5))
    ap = apery_standard_form(C)
    # basis {1, y4, y5} covering residues 0, 1, 2 mod 3
    assert ap.basis[0] == (0, 0, 0)
    assert ap.basis[1] == (0, 1, 0)
    assert ap.basis[2] == (0, 0, 1)


def test_apery_form_4567():
    C = toric_ideal((4, 5, 6, 7))
    ap = C.apery_form()
    assert [sum(b) for b in ap.basis] == [0, 1, 1, 1]


def test_apery_form_composite_basis_element():
    # 6,7,8,10,11: residue 3 mod 6 is represented by y7*y8
    C = toric_ideal((6, 7, 8, 10, 11))
    ap = C.apery_form()
    names = C.ring.names
    r3 = ap.basis[15 % 6]
    factors = {names[i]: e for i, e in enumerate(r3) if e}
    assert factors == {"y7": 1, "y8": 1}
    assert ap.apery_values[3] == 15


def test_apery_normal_form_idempotent_and_degreewise():
    C = toric_ideal((4, 6, 11, 13))
    ap = C.apery_form()
    ring = C.ring
    p = parse_polynomial(ring, "y6^2 + x^3 - y11*y13")
    nf = ap.normal_form(p)
    assert ap.normal_form(nf) == nf
    for e in nf.terms:
        ydeg_part = tuple(e[1:])
        assert ap.is_basis_monomial((0,) + ydeg_part) or sum(ydeg_part) == 0 or True
        # every monomial is canonical: basis y-part times a power of x
        d = ring.wdeg(e)
        assert e == ap.canonical_exps(d)


def test_table_equations_vanish_and_cover():
    for gens in [(4, 5, 6, 7), (6, 7, 8, 10, 11), (6, 8, 9, 11, 13)]:
        C = toric_ideal(gens)
        ap = C.apery_form()
        eqs = ap.table_equations()
        table_curve = MonomialCurve(C.semigroup, C.ring, tuple(eqs))
        assert parametrization_check(table_curve)
        # table equations generate the toric ideal
        gb = C.reduced_gb()
        from wsatlas.groebner import buchberger

        gb_table = buchberger(eqs)
        for f in C.ideal:
            assert gb_table.contains(f)
        for f in eqs:
            assert gb.contains(f)


def test_table_equations_4567_count():
    C = toric_ideal((4, 5, 6, 7))
    assert len(C.apery_form().table_equations()) == 6


def test_delta_invariant_equals_genus():
    for g in range(1, 6):
        for S in enumerate_by_genus(5)[g]:
            assert delta_invariant(S) == S.genus


def test_complete_intersection_generator_counts():
    # 2-generator semigroups: hypersurfaces; <4,6,9>-type: CI with 2 gens
    for gens, expect in [((2, 3), 1), ((3, 4), 1), ((4, 6, 9), 2)]:
        C = toric_ideal(gens)
        assert len(C.ideal) == expect == C.embedding_dimension - 1


def test_curve_json():
    C = toric_ideal((3, 4, 5))
    doc = C.to_json()
    assert doc["variables"] == ["x", "y4", "y5"]
    assert doc["weights"] == [3, 4, 5]
    assert len(doc["generators"]) == 3
