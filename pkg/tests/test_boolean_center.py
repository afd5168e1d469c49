import pytest
from hypothesis import given
from hypothesis import strategies as st

from reslat.algebra import verify_axioms
from reslat.boolean_center import (NotComplementedError, boolean_center,
                                   congruence_restriction_check, has_lifting, lift_idempotent,
                                   rad_quotient, relative_algebra)
from reslat.filters import all_filters, is_filter, is_local, radical
from reslat.fixtures import fixture
from reslat.products import direct_product
from reslat.quotients import quotient

from conftest import algebras, catalog_entries, nontrivial_entries


def complemented(A):
    return {e for e in A.elements for f in A.elements
            if A.join[e][f] == A.one and A.meet[e][f] == A.zero}


def test_g6_center(G6):
    assert boolean_center(G6).labels == ["0", "1"]
    Q = rad_quotient(G6).quotient
    assert boolean_center(Q).labels == ["0", "1", "b", "c"]


def test_boolean4_is_all_center():
    A = fixture("boolean4")
    assert len(boolean_center(A)) == 4


@given(algebras(4))
def test_center_properties(A):
    B = boolean_center(A)
    assert set(B.members) == complemented(A)
    for e in B.members:
        assert A.prod[e][e] == e
        assert B.complement_of[e] == A.negations[e]
        assert A.negations[A.negations[e]] == e
        for f in B.members:
            assert A.prod[e][f] == A.meet[e][f]
            assert A.impl[e][f] in B and A.impl[e][f] == A.join[A.negations[e]][f]
    if not A.trivial:
        assert set(B.members) & radical(A).members == {A.one}


@given(nontrivial_entries(3), nontrivial_entries(3))
def test_center_of_product(A, C):
    P = direct_product([A, C])
    BP = set(boolean_center(P.algebra).members)
    expect = {P.element((x, y)) for x in boolean_center(A).members
              for y in boolean_center(C).members}
    assert BP == expect


@given(algebras(4), st.data())
def test_relative_algebras(A, data):
    B = boolean_center(A)
    e = data.draw(st.sampled_from(B.members))
    R = relative_algebra(A, e)
    assert verify_axioms(R.algebra).ok
    assert set(R.embedding) == {a for a in A.elements if A.order[e, a]}
    F = data.draw(st.sampled_from(all_filters(A)))
    G = R.restrict_filter(F)
    assert is_filter(R.algebra, G.members)
    assert congruence_restriction_check(A, F, e)


def test_relative_needs_complemented(G6):
    with pytest.raises(NotComplementedError):
        relative_algebra(G6, G6.index("a"))


def test_g6_lifting_fails_at_b_and_c(G6):
    res = has_lifting(G6)
    assert not res and res.witness_labels() == ["b/Rad", "c/Rad"]
    Q = res.rad_quotient.quotient
    assert lift_idempotent(G6, Q.index("b")) is None
    assert lift_idempotent(G6, Q.index("1")) == G6.index("1")


def test_lift_rejects_non_center():
    A = fixture("godel3")
    Q = rad_quotient(A).quotient
    assert Q.n == 2
    with pytest.raises(NotComplementedError):
        lift_idempotent(fixture("lukasiewicz3"), 1)


@given(catalog_entries(5))
def test_lifting_against_brute_force(A):
    if A.trivial:
        assert has_lifting(A)
        return
    Q = quotient(A, radical(A))
    want = all(any(Q.class_of[e] == f for e in complemented(A)) for f in complemented(Q.quotient))
    assert has_lifting(A).has_lifting == want


@given(nontrivial_entries(5))
def test_local_algebras_lift(A):
    if is_local(A):
        assert has_lifting(A)
