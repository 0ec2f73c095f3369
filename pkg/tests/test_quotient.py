from itertools import combinations

import pytest

from frankl import SetFamily, dimension, is_separating, is_union_closed
from frankl.abundance import is_abundant, is_optimal
from frankl.errors import PreconditionError
from frankl.quotient import CHECKS, separating_quotient, verify_quotient

from .oracle import families, fs


def fam(*sets):
    return SetFamily.from_sets([s.split() if s else [] for s in sets])


def brute_intersections(F, Q):
    """[∩X] = ∩[X] over every nonempty subcollection X of F."""
    ms = F.members
    for r in range(1, len(ms) + 1):
        for sub in combinations(ms, r):
            meet, qmeet = F.universe, Q.quotient.universe
            for a in sub:
                meet &= a
                qmeet &= Q.project(a)
            if Q.project(meet) != qmeet:
                return False
    return True


def test_identity_quotient(key_fam):
    Q = separating_quotient(key_fam)
    assert all(len(c) == 1 for c in Q.classes)
    assert Q.quotient.labels == key_fam.labels
    assert Q.quotient.members == key_fam.members


def test_merging_two_elements():
    F = fam("1 2", "1 2 3")
    Q = separating_quotient(F)
    assert [Q.class_labels(c) for c in range(len(Q.classes))] == [("1", "2"), ("3",)]
    S = Q.quotient
    assert S.labels == ("1", "3")
    assert S.to_sets() == [("1",), ("1", "3")]
    r = verify_quotient(F, Q)
    assert r.ok and set(r.checks) == set(CHECKS)
    assert is_abundant(F, "1") and is_abundant(S, "1")


def test_single_class():
    Q = separating_quotient(fam("a b"))
    assert Q.classes == ((0, 1),)
    assert Q.quotient.to_sets() == [("a",)]


def test_optimal_not_abundant_is_identity(ona_fam):
    Q = separating_quotient(ona_fam)
    assert verify_quotient(ona_fam, Q).ok
    assert Q.quotient == ona_fam


def test_dim2_optimal_classes(dim2_fam):
    Q = separating_quotient(dim2_fam)
    S = Q.quotient
    assert [lab for lab in S.labels if is_optimal(S, lab)] == ["2", "3"]


def test_trivial_rejected():
    with pytest.raises(PreconditionError):
        separating_quotient(fam(""))


def test_json_shape():
    out = separating_quotient(fam("1 2", "1 2 3")).to_json()
    assert out["classes"][0] == {"representative": "[1]", "elements": ["1", "2"]}
    assert out["members"][1] == [["1", "2", "3"], ["1", "3"]]


def test_exhaustive_n3():
    checked = 0
    for f in families(3):
        if not f or not any(f):
            continue
        F = SetFamily.from_sets(f)
        Q = separating_quotient(F)
        r = verify_quotient(F, Q)
        assert r.ok, (f, r.checks)
        assert r.checks["intersection_commutes"] == brute_intersections(F, Q)
        S = Q.quotient
        assert is_separating(S)
        assert len(S) == len(F)
        assert dimension(S) == dimension(F)
        assert bool(is_union_closed(S)) == bool(is_union_closed(F))
        Q2 = separating_quotient(S)
        assert Q2.quotient == S
        checked += 1
    assert checked == 2 ** 8 - 2


def test_brute_intersection_oracle_catches_a_broken_map():
    F = fam("1", "2", "1 2")
    Q = separating_quotient(F)
    assert brute_intersections(F, Q)
    # pretend 1 and 2 were merged: {1} ∩ {2} = ∅, but [1] ∩ [2] = [1]
    broken = Q.__class__(F, ((0, 1),), fam("1"), (0, 0, 0))
    assert not brute_intersections(F, broken)


def test_union_commutes_for_label_sets():
    F = fam("1 2", "3", "1 2 3", "4")
    Q = separating_quotient(F)
    for a in F.members:
        for b in F.members:
            assert Q.project(a | b) == Q.project(a) | Q.project(b)
    assert {frozenset(c) for c in map(Q.class_labels, range(len(Q.classes)))} == set(fs("1 2", "3", "4"))
