import pytest
from hypothesis import given

from reslat.fixtures import FIXTURES, fixture
from reslat.laws import basic_identities, boolean_identities, check_laws

from conftest import algebras
from test_algebra import with_entry


@pytest.mark.parametrize("name", list(FIXTURES))
def test_all_laws_on_fixtures(name):
    results = check_laws(fixture(name))
    assert len(results) == 18
    assert [r.law for r in results if not r.ok] == []


@given(algebras(5))
def test_all_laws_on_catalog(A):
    assert all(r.ok for r in check_laws(A))


def test_counts_on_g6(G6):
    counts = {r.law: r.checked for r in basic_identities(G6)}
    assert counts["exchange"] == 6 ** 3
    assert counts["order-by-implication"] == 36
    # B(G6) = {0, 1}
    counts = {r.law: r.checked for r in boolean_identities(G6)}
    assert counts["negated-antecedent"] == 2 * 6
    assert counts["join-distributes-over-complemented-meet"] == 2 * 2 * 6


def test_broken_table_is_caught(G6):
    # c -> d = 1 would force c <= d
    bad = with_entry(G6, "impl", G6.index("c"), G6.index("d"), G6.index("1"))
    failed = [r for r in basic_identities(bad) if not r.ok]
    assert [r.law for r in failed] == ["order-by-implication"]
    assert [bad.labels[i] for i in failed[0].witness] == ["c", "d"]
