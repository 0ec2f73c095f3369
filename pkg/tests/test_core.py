import json
import warnings
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frankl import (
    DomainError,
    FamilyError,
    SetFamily,
    SizeOverflowError,
    is_separating,
    is_union_closed,
    neighborhoods,
    parse_family,
    serialize_family,
    union_closure,
)
from frankl.core import ElementId, canonical_sets, label_key, member_key

from .oracle import as_sets, closure, families, fs, powerset, union_closed


def doc(*sets):
    return json.dumps({"sets": [s.split() if s else [] for s in sets]})


def test_parse_covert_example():
    F = parse_family(doc("1 2", "2 4", "1 2 4", "1 2 3", "2 3 4", "1 2 3 4"))
    assert len(F) == 6
    assert F.labels == ("1", "2", "3", "4")
    assert F.mask_of(["3"]) not in F


def test_parse_singleton():
    F = parse_family(doc("a"))
    assert F.to_sets() == [("a",)]
    assert F.labels == ("a",)


def test_parse_dedupes_with_warning():
    with pytest.warns(UserWarning, match="duplicate"):
        F = parse_family(doc("1", "1"))
    assert len(F) == 1


def test_parse_rejects_unused_label():
    with pytest.raises(FamilyError, match="not used"):
        parse_family(json.dumps({"sets": [["1"]], "labels": ["1", "2"]}))


def test_parse_rejects_empty_and_trivial():
    with pytest.raises(FamilyError):
        parse_family(doc())
    with pytest.raises(FamilyError, match="trivial"):
        parse_family(doc(""))
    assert parse_family(doc(""), allow_trivial=True).is_trivial


@pytest.mark.parametrize(
    "text",
    ["not json", "[]", '{"sets": 3}', '{"sets": [[1]]}', '{"sets": [[""]]}', '{"sets": [["1"]], "labels": 5}'],
)
def test_parse_rejects_malformed(text):
    with pytest.raises(FamilyError):
        parse_family(text)


def test_canonical_order_and_labels():
    F = SetFamily.from_sets([["10", "2"], ["b"], ["2"], ["a", "b"], []])
    assert F.labels == ("2", "10", "a", "b")
    assert list(F.members) == sorted(F.members, key=member_key)
    assert F.format_set(0) == "∅"
    assert canonical_sets(F) == [[], ["2"], ["b"], ["2", "10"], ["a", "b"]]


def test_constructor_invariants():
    with pytest.raises(FamilyError):
        SetFamily([1], ["b", "a"])
    with pytest.raises(FamilyError):
        SetFamily([1], ["a", "b"])
    with pytest.raises(DomainError):
        SetFamily.from_masks([4], ["a", "b"])
    F = SetFamily.from_masks([0b101], ["a", "b", "c"])
    assert F.labels == ("a", "c") and F.members == (0b11,)


def test_resolve_forms(covert_fam):
    F = covert_fam
    assert F.resolve("3") == 2
    assert F.resolve(2) == 2
    assert F.resolve(ElementId(2, "3")) == 2
    with pytest.raises(DomainError):
        F.resolve("9")
    with pytest.raises(DomainError):
        F.resolve(7)


def test_is_union_closed_examples(covert_fam, key_fam):
    assert is_union_closed(covert_fam)
    assert is_union_closed(key_fam)
    F = SetFamily.from_sets([["1"], ["2"]])
    v = is_union_closed(F)
    assert not v
    assert v.witness == (F.mask_of(["1"]), F.mask_of(["2"]))


def test_union_closure_examples():
    F = SetFamily.from_sets([["1"], ["2"]])
    assert as_sets(union_closure(F)) == set(fs("1", "2", "1 2"))
    G = SetFamily.from_sets([["1"], ["2"], ["3"]])
    assert as_sets(union_closure(G)) == closure(fs("1", "2", "3"))
    assert len(union_closure(G)) == 7
    assert union_closure(union_closure(G)) == union_closure(G)


def test_union_closure_cap():
    F = SetFamily.from_sets([[str(i)] for i in range(12)])
    with pytest.raises(SizeOverflowError):
        union_closure(F, cap=100)


def test_is_separating_examples(ona_fam):
    assert is_separating(ona_fam)
    v = is_separating(SetFamily.from_sets([["1", "2"]]))
    assert not v and v.witness == ("1", "2")


def test_neighborhood_examples(covert_fam, dim2_fam):
    nb = neighborhoods(covert_fam)
    ins = {frozenset(covert_fam.labels_of(m)) for m in nb.members_in("3")}
    outs = {frozenset(covert_fam.labels_of(m)) for m in nb.members_out("3")}
    assert ins == set(fs("1 2 3 4", "2 3 4", "1 2 3"))
    assert outs == set(fs("1 2 4", "1 2", "2 4"))
    single = SetFamily.from_sets([["a"]])
    assert neighborhoods(single).count_in("a") == 1
    assert neighborhoods(single).members_out("a") == ()
    nb2 = neighborhoods(dim2_fam)
    assert (nb2.count_in("2"), nb2.count_out("2")) == (5, 1)


# --- properties -------------------------------------------------------------

def test_moore_closure_laws_exhaustive():
    """Extensive, monotone and idempotent over every family on |U| <= 3."""
    fams = [f for f in families(3) if f and any(f)]
    closed = {}
    for f in fams:
        F = SetFamily.from_sets(f)
        C = as_sets(union_closure(F))
        assert set(f) <= C
        assert C == closure(f)
        assert as_sets(union_closure(union_closure(F))) == C
        closed[f] = C
    for f in fams[::7]:
        for g in fams[::11]:
            if f <= g:
                assert closed[f] <= closed[g]


def test_union_closed_agrees_with_oracle_exhaustive():
    for f in families(3):
        if not f or not any(f):
            continue
        assert bool(is_union_closed(SetFamily.from_sets(f))) == union_closed(f)


def test_arbitrary_unions_and_top_member():
    for f in families(3):
        if not f or not union_closed(f):
            continue
        members = list(f)
        for r in range(1, len(members) + 1):
            for sub in combinations(members, r):
                assert frozenset().union(*sub) in f
        F = SetFamily.from_sets(f)
        if not F.is_trivial:
            assert F.universe in F


label_sets = st.lists(
    st.frozensets(st.sampled_from(["1", "2", "3", "4", "10", "a", "b"]), max_size=4),
    min_size=1,
    max_size=10,
)


@settings(max_examples=200, deadline=None)
@given(label_sets)
def test_roundtrip_and_partition(sets):
    F = SetFamily.from_sets(sets)
    if F.is_trivial:
        return
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        G = parse_family(serialize_family(F))
    assert G == F
    assert serialize_family(G) == serialize_family(F)
    nb = neighborhoods(F)
    for x in F.labels:
        ins, outs = set(nb.members_in(x)), set(nb.members_out(x))
        assert len(ins) + len(outs) == len(F)
        assert not ins & outs
        assert all(x in F.labels_of(m) for m in ins)
        assert not any(x in F.labels_of(m) for m in outs)


def test_label_key_orders_numbers_numerically():
    assert sorted(["10", "9", "b", "a", "1"], key=label_key) == ["1", "9", "10", "a", "b"]


def test_powerset_helper():
    assert len(powerset("abc")) == 8
