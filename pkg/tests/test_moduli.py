"""Dimension bounds, smoothing dimensions, records and table diffs."""

import pytest

from wsatlas.cotangent import t1_graded
from wsatlas.curve import toric_ideal
from wsatlas.errors import GenusTooSmall, UnknownLabel
from wsatlas.moduli import (
    CurveRecord,
    build_record,
    dimension_bounds,
    reference_table,
    smoothing_component_dimension,
    verify_reference,
)


def test_dimension_bounds_examples():
    assert dimension_bounds(7, 4, 1) == (15, 16)
    assert dimension_bounds(2, 2, 0) == (4, 4)
    assert dimension_bounds(5, 3, 0) == (11, 11)


def test_dimension_bounds_genus_guard():
    with pytest.raises(GenusTooSmall):
        dimension_bounds(1, 1, 0)


def test_smoothing_component_dimension():
    assert smoothing_component_dimension(1, 1) == 2
    assert smoothing_component_dimension(2, 2) == 5
    assert smoothing_component_dimension(7, 7) == 20
    # cusp cross-check: equals dim of the negative part of T1
    assert (
        smoothing_component_dimension(1, 1)
        == t1_graded(toric_ideal((2, 3))).negative_part()
    )


def test_reference_table_shape():
    table = reference_table()
    assert len(table.rows) == 88
    per_genus = {}
    for r in table.rows:
        per_genus[r.genus] = per_genus.get(r.genus, 0) + 1
    assert per_genus == {1: 1, 2: 2, 3: 4, 4: 7, 5: 12, 6: 23, 7: 39}


def test_lookup_unknown():
    with pytest.raises(UnknownLabel):
        reference_table().lookup((2, 3, 100))


def test_build_record_examples():
    rec = build_record((4, 6, 11, 13))
    assert (rec.genus, rec.type, rec.d_lower) == (6, 3, 11)
    assert rec.label == "N(6)_8"
    rec = build_record((2, 3))
    assert rec.label == "N(1)_1"
    assert rec.d_reference == 1
    assert rec.d_lower == 1  # certified via the explicit cusp T1
    rec = build_record((7, 8, 9, 10, 11, 12))
    assert (rec.genus, rec.type, rec.d_lower) == (7, 1, 13)
    assert rec.label == "N(7)_38"


def test_record_type_routes_agree():
    for gens in [(3, 5, 7), (4, 6, 7, 9), (5, 7, 8, 9, 11)]:
        rec = build_record(gens)
        assert rec.type_resolution == rec.type_lambda


def test_record_json_roundtrip():
    rec = build_record((3, 4, 5), include_t2=True)
    doc = rec.to_json()
    back = CurveRecord.from_json(doc)
    assert back.to_json() == doc
    assert back.t2_total == 0


def test_verify_reference_negative_control():
    recs = [build_record((2, 3)), build_record((3, 4, 5))]
    rep = verify_reference(recs)
    assert rep.ok and rep.checked == 2
    tampered = CurveRecord.from_json(recs[0].to_json())
    tampered.d_lower += 1
    rep = verify_reference([tampered, recs[1]])
    assert len(rep.mismatches) == 1


def test_verify_reference_empty():
    rep = verify_reference([])
    assert rep.ok
    assert rep.checked == 0
