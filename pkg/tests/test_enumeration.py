import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from reslat.algebra import verify_axioms
from reslat.enumeration import (OrderCapError, bounded_lattices, canonical_key, catalog_up_to,
                                enumerate_algebras, enumerate_slow)
from reslat.filters import dense_filter, radical, unities
from reslat.boolean_center import boolean_center
from reslat.laws import check_laws
from reslat.morphisms import find_isomorphism

from conftest import catalog, catalog_entries
from test_morphisms import relabel

# Regression values; n <= 4 are also reproduced by the independent slow path.
COUNTS = {1: 1, 2: 1, 3: 2, 4: 7, 5: 26}
LATTICES = {1: 1, 2: 1, 3: 1, 4: 2, 5: 5, 6: 15}


@pytest.mark.parametrize("n", sorted(COUNTS))
def test_counts(n):
    cat = enumerate_algebras(n)
    assert len(cat) == COUNTS[n] == cat.counts["total"]
    assert all(verify_axioms(A).ok for A in cat)


@pytest.mark.parametrize("n", sorted(LATTICES))
def test_lattice_counts(n):
    assert len(bounded_lattices(n)) == LATTICES[n]


@pytest.mark.slow
def test_order_six():
    assert len(enumerate_algebras(6, cap=6)) == 129


def test_cap():
    with pytest.raises(OrderCapError):
        enumerate_algebras(6)
    with pytest.raises(OrderCapError):
        enumerate_algebras(7, cap=7)
    with pytest.raises(OrderCapError):
        enumerate_algebras(0)


def test_entries_pairwise_non_isomorphic():
    for A, B in itertools.combinations(enumerate_algebras(5).entries, 2):
        assert find_isomorphism(A, B) is None


def test_deterministic():
    a = [(A.name, A.join, A.prod) for A in enumerate_algebras(5)]
    b = [(A.name, A.join, A.prod) for A in enumerate_algebras(5)]
    assert a == b


@given(catalog_entries(5), st.randoms(use_true_random=False))
def test_canonical_key_is_invariant(A, rnd):
    mid = list(range(1, A.n - 1))
    rnd.shuffle(mid)
    p = [0] + mid + ([A.n - 1] if A.n > 1 else [])
    assert canonical_key(relabel(A, p)) == canonical_key(A)


def test_slow_path_order_three():
    assert enumerate_slow(3) == COUNTS[3] == len(enumerate_algebras(3))
    assert enumerate_slow(1) == 1 and enumerate_slow(2) == 1


@pytest.mark.slow
def test_slow_path_order_four():
    assert enumerate_slow(4) == COUNTS[4]


def test_slow_path_limits():
    with pytest.raises(OrderCapError):
        enumerate_slow(4, full=True)
    with pytest.raises(OrderCapError):
        enumerate_slow(5)


def test_catalog_invariants():
    for A in catalog(4):
        assert all(r.ok for r in check_laws(A))
        if A.trivial:
            continue
        rad = radical(A)
        assert rad == unities(A)
        assert dense_filter(A) <= rad
        assert set(boolean_center(A).members) & rad.members == {A.one}


def test_tallies_order_four():
    counts = enumerate_algebras(4).counts
    assert counts["local"] == 6 and counts["has_lifting"] == 7


def test_catalog_up_to():
    assert [A.n for A in catalog_up_to(3)] == [1, 2, 3, 3]
