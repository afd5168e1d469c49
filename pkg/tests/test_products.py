import itertools
from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from reslat.algebra import verify_axioms
from reslat.filters import all_filters, dense_filter, max_filters, radical, spec, top_filter
from reslat.fixtures import FIXTURES, fixture
from reslat.morphisms import find_isomorphism
from reslat.products import (CoMaximalityError, NoLiftingError, SizeCapError, classify,
                             congruent, crt_solve, decompose, delta_elements, direct_product,
                             over_filter, perfect, perfect_literal, semilocal_decompose,
                             spec_max_of_product)

from conftest import nontrivial_entries


def test_product_layout():
    P = direct_product([fixture("chain2"), fixture("godel3")])
    A = P.algebra
    assert A.n == 6 and verify_axioms(A).ok
    assert A.labels[:3] == ("(0,0)", "(0,1/2)", "(0,1)")
    assert A.labels[A.zero] == "(0,0)" and A.labels[A.one] == "(1,1)"
    assert [A.labels[d] for d in delta_elements(P)] == ["(0,1)", "(1,0)"]
    assert all(p.verified and p.surjective for p in P.projections)


def test_size_cap(monkeypatch):
    algs = [fixture("godel3")] * 3
    with pytest.raises(SizeCapError):
        direct_product(algs, cap=20)
    monkeypatch.setenv("RESLAT_SIZE_CAP", "26")
    with pytest.raises(SizeCapError, match="cap of 26"):
        direct_product(algs + [fixture("chain2")])
    monkeypatch.setenv("RESLAT_SIZE_CAP", "27")
    assert direct_product(algs).algebra.n == 27


@given(nontrivial_entries(4), nontrivial_entries(4))
def test_spec_and_max_of_products(A, B):
    P = direct_product([A, B])
    rep = spec_max_of_product(P)
    assert rep.agree
    assert len(spec(P.algebra)) == len(spec(A)) + len(spec(B))
    assert len(max_filters(P.algebra)) == len(max_filters(A)) + len(max_filters(B))
    # Rad and filters of a product are componentwise
    assert radical(P.algebra) == P.product_filter([radical(A), radical(B)])
    assert dense_filter(P.algebra) == P.product_filter([dense_filter(A), dense_filter(B)])
    assert len(all_filters(P.algebra)) == len(all_filters(A)) * len(all_filters(B))


def test_over_filter_needs_prime():
    P = direct_product([fixture("godel3"), fixture("chain2")])
    with pytest.raises(ValueError):
        over_filter(P, 0, all_filters(P.factors[0])[-1])


def test_crt_on_g6(G6):
    M1, M2 = max_filters(G6)
    b, d = G6.index("b"), G6.index("d")
    x = crt_solve(G6, [(b, M1), (d, M2)])
    assert congruent(G6, x, b, M1) and congruent(G6, x, d, M2)
    # least witness: nothing earlier solves the system
    assert not any(congruent(G6, y, b, M1) and congruent(G6, y, d, M2) for y in range(x))


def test_crt_requires_comaximal():
    A = fixture("godel3xgodel3")
    F = top_filter(A)
    with pytest.raises(CoMaximalityError):
        crt_solve(A, [(A.zero, F), (A.one, max_filters(A)[0])])


@pytest.mark.parametrize("name", list(FIXTURES))
def test_crt_all_targets(name):
    A = fixture(name)
    for M, N in itertools.combinations(max_filters(A), 2):
        for a, b in itertools.product(A.elements, repeat=2):
            x = crt_solve(A, [(a, M), (b, N)])
            assert congruent(A, x, a, M) and congruent(A, x, b, N)


EXPECTED = {
    # name: (local, perfect, perfect_literal, radical_dense, has_lifting, |Max|)
    "G6": (False, False, False, True, False, 2),
    "chain2": (True, True, False, True, True, 1),
    "godel3": (True, True, False, True, True, 1),
    "godel4": (True, True, False, True, True, 1),
    "lukasiewicz3": (True, False, False, True, True, 1),
    "lukasiewicz4": (True, False, False, True, True, 1),
    "boolean4": (False, False, False, True, True, 2),
    "godel3xgodel3": (False, False, False, True, True, 2),
    "chain2xlukasiewicz3": (False, False, False, True, True, 2),
    "G6xchain2": (False, False, False, True, False, 3),
}


@pytest.mark.parametrize("name", list(EXPECTED))
def test_classification_of_fixtures(name):
    c = classify(fixture(name))
    got = (c.local, c.perfect, c.perfect_literal, c.radical_dense, c.has_lifting, c.n_max)
    assert got == EXPECTED[name]
    assert c.semilocal and c.maximal


def test_discrepancy_notes():
    notes = classify(fixture("G6")).notes
    assert any(n.startswith("paper-note: radical-dense but without lifting") for n in notes)
    notes = classify(fixture("chain2")).notes
    assert notes == ("paper-note: literal perfectness evaluates false, corrected evaluates true",)
    assert classify(fixture("boolean4")).notes == ()


def test_perfect_predicates_on_chain2():
    A = fixture("chain2")
    assert perfect(A) and not perfect_literal(A)


@given(nontrivial_entries(5))
def test_literal_perfectness_never_holds(A):
    # ord(1) is infinite while ord(neg 1) = ord(0) = 1
    assert not perfect_literal(A)


@pytest.mark.parametrize("name", list(FIXTURES))
def test_semilocal_iso(name):
    A = fixture(name)
    S = semilocal_decompose(A)
    assert S.iso.is_isomorphism
    assert len(S.factor_quotients) == len(max_filters(A))
    assert all(q.quotient.n >= 2 for q in S.factor_quotients)


@pytest.mark.parametrize("name,parts", [
    ("godel3xgodel3", ["godel3", "godel3"]),
    ("boolean4", ["chain2", "chain2"]),
    ("chain2xlukasiewicz3", ["chain2", "lukasiewicz3"]),
    ("godel4", ["godel4"]),
])
def test_decompose_recovers_factors(name, parts):
    D = decompose(fixture(name))
    assert D.iso.is_isomorphism and D.inverse.is_isomorphism
    assert len(D.factors) == len(parts)
    left = Counter(parts)
    for r in D.factors:
        match = [p for p in left if left[p] and find_isomorphism(r.algebra, fixture(p))]
        assert match
        left[match[0]] -= 1
    assert all(f["local"] for f in D.factor_flags)


@pytest.mark.parametrize("name", ["G6", "G6xchain2"])
def test_decompose_refuses_without_lifting(name):
    with pytest.raises(NoLiftingError, match="no lifting; unliftable idempotent"):
        decompose(fixture(name))


def test_refusal_message_on_g6(G6):
    with pytest.raises(NoLiftingError) as info:
        decompose(G6)
    assert str(info.value) == "no lifting; unliftable idempotent b/Rad"


@given(st.lists(nontrivial_entries(4), min_size=2, max_size=2))
def test_decompose_products_of_local_entries(parts):
    parts = [A for A in parts if len(max_filters(A)) == 1]
    if len(parts) < 2:
        return
    D = decompose(direct_product(parts).algebra)
    assert len(D.factors) == 2
    for r in D.factors:
        assert any(find_isomorphism(r.algebra, A) for A in parts)


def test_trivial_refused():
    from reslat.fixtures import trivial

    with pytest.raises(ValueError):
        decompose(trivial())
