"""Semigroup construction, invariants and enumeration against sieve oracles."""

import pytest

from wsatlas import semigroup as sg
from wsatlas.errors import BoundExceeded, Empty, NotMember, NotNumerical


def sieve_members(gens, bound):
    """Independent membership oracle: additive closure by brute sieve."""
    ok = [False] * (bound + 1)
    ok[0] = True
    for i in range(1, bound + 1):
        ok[i] = any(g <= i and ok[i - g] for g in gens)
    return ok


def test_from_generators_cusp():
    S = sg.from_generators([2, 3])
    assert S.generators == (2, 3)
    assert S.gaps == (1,)
    assert S.genus == 1
    assert S.frobenius == 1
    assert S.conductor == 2


def test_from_generators_minimalizes():
    S = sg.from_generators([4, 6, 8, 11, 13])
    assert S.generators == (4, 6, 11, 13)
    assert S.gaps == (1, 2, 3, 5, 7, 9)
    assert S.genus == 6


def test_from_generators_full_semigroup():
    S = sg.from_generators([1])
    assert S.generators == (1,)
    assert S.gaps == ()
    assert S.genus == 0
    assert S.frobenius == -1


def test_from_generators_errors():
    with pytest.raises(Empty):
        sg.from_generators([])
    with pytest.raises(NotNumerical):
        sg.from_generators([4, 6])
    with pytest.raises(NotNumerical):
        sg.from_generators([0, 3])


@pytest.mark.parametrize(
    "gens",
    [(2, 3), (3, 4, 5), (4, 6, 11, 13), (5, 7, 9), (6, 8, 9, 11, 13)],
)
def test_membership_agrees_with_sieve(gens):
    S = sg.from_generators(gens)
    bound = 2 * S.conductor + 5
    oracle = sieve_members(gens, bound)
    for n in range(bound + 1):
        assert S.contains(n) == oracle[n]


def test_apery_set_examples():
    S = sg.from_generators([2, 3])
    assert sg.apery_set(S, 2).representatives == (0, 3)
    S = sg.from_generators([3, 4, 5])
    assert sg.apery_set(S, 3).representatives == (0, 4, 5)
    S = sg.from_generators([1])
    assert sg.apery_set(S, 1).representatives == (0,)


def test_apery_set_properties():
    S = sg.from_generators([4, 6, 11, 13])
    for n in (4, 6, 11, 13, 12):
        ap = sg.apery_set(S, n)
        reps = ap.representatives
        assert len(reps) == n
        assert len({r % n for r in reps}) == n
        assert reps[0] == 0
        assert max(reps) == S.frobenius + n
        assert all(not S.contains(r - n) for r in reps if r >= n)


def test_apery_set_errors():
    S = sg.from_generators([3, 4, 5])
    with pytest.raises(NotMember):
        sg.apery_set(S, 0)
    with pytest.raises(NotMember):
        sg.apery_set(S, 2)


def test_type_lambda_examples():
    assert sg.type_lambda(sg.from_generators([2, 3])) == 1
    S = sg.from_generators([4, 6, 11, 13])
    assert sg.type_lambda(S) == 3
    assert sg.pseudo_frobenius(S) == (2, 7, 9)
    assert sg.type_lambda(sg.from_generators([5, 6, 7, 8, 9])) == 4


def test_type_bound_and_maximal_case():
    for g in range(1, 8):
        S = sg.from_generators(range(g + 1, 2 * g + 2))
        assert sg.type_lambda(S) == S.multiplicity - 1 == g
    for g in range(2, 8):
        for S in sg.enumerate_by_genus(g)[g]:
            assert sg.type_lambda(S) <= S.multiplicity - 1


def test_enumerate_counts():
    by_genus = sg.enumerate_by_genus(7)
    counts = [len(by_genus[g]) for g in range(8)]
    assert counts == [1, 1, 2, 4, 7, 12, 23, 39]


def test_enumerate_genus_two():
    found = {S.generators for S in sg.enumerate_by_genus(2)[2]}
    assert found == {(2, 5), (3, 4, 5)}


def test_enumerate_prefix_consistency():
    small = sg.enumerate_by_genus(4)
    big = sg.enumerate_by_genus(7)
    for g in range(5):
        assert [S.generators for S in small[g]] == [S.generators for S in big[g]]


def test_enumerate_bound():
    with pytest.raises(BoundExceeded):
        sg.enumerate_by_genus(26)


def test_genus_equals_sieve_gap_count():
    for g in range(1, 6):
        for S in sg.enumerate_by_genus(5)[g]:
            oracle = sieve_members(S.generators, S.frobenius + 1)
            gaps = [n for n in range(1, S.frobenius + 1) if not oracle[n]]
            assert list(S.gaps) == gaps
            assert S.genus == len(gaps)


def test_serialization_roundtrip():
    S = sg.from_generators([4, 6, 11, 13])
    assert str(S) == "4,6,11,13"
    assert sg.parse_generators("4,6,11,13") == (4, 6, 11, 13)
    assert sg.parse_generators("4 6 11 13") == (4, 6, 11, 13)
    doc = S.to_json()
    assert doc["generators"] == [4, 6, 11, 13]
    assert doc["genus"] == 6
    assert doc["type"] == 3
