"""Filters of a finite residuated lattice and the distinguished ones."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

import numpy as np

from .algebra import INF, Algebra, classify_element, order_of

EXHAUSTIVE_LIMIT = 12


class NotAFilterError(ValueError):
    pass


@dataclass(frozen=True)
class FilterSet:
    members: frozenset[int]
    owner: Algebra = field(compare=False, hash=False, repr=False)

    def __contains__(self, a):
        return a in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self):
        return len(self.members)

    def __le__(self, other: "FilterSet"):
        return self.members <= other.members

    def __lt__(self, other: "FilterSet"):
        return self.members < other.members

    @property
    def proper(self) -> bool:
        return self.owner.zero not in self.members

    @property
    def labels(self) -> list[str]:
        return self.owner.label_set(self.members)

    def sort_key(self):
        return (len(self.members), tuple(sorted(self.members)))

    def mask(self) -> np.ndarray:
        m = np.zeros(self.owner.n, dtype=bool)
        m[list(self.members)] = True
        return m

    def __repr__(self):
        return "{" + ", ".join(self.labels) + "}"


def _sorted(filters: Iterable[FilterSet]) -> list[FilterSet]:
    return sorted(set(filters), key=FilterSet.sort_key)


def upset(A: Algebra, X: Iterable[int]) -> frozenset[int]:
    X = list(X)
    if not X:
        return frozenset()
    return frozenset(np.flatnonzero(A.order[X].any(axis=0)).tolist())


def filter_violation(A: Algebra, S: Iterable[int]) -> str | None:
    """Name the first failed filter condition, or None if S is a filter."""
    S = frozenset(S)
    if not S:
        return "empty set"
    if A.one not in S:
        return f"does not contain {A.labels[A.one]}"
    for a in sorted(S):
        for b in np.flatnonzero(A.order[a]):
            if int(b) not in S:
                return f"not upward closed: {A.labels[a]} <= {A.labels[b]} but {A.labels[b]} is missing"
    for a in sorted(S):
        for b in sorted(S):
            if A.prod[a][b] not in S:
                return f"not closed under product: {A.labels[a]} * {A.labels[b]}"
    return None


def is_filter(A: Algebra, S: Iterable[int]) -> bool:
    return filter_violation(A, S) is None


def is_proper(A: Algebra, S: Iterable[int]) -> bool:
    S = frozenset(S)
    return is_filter(A, S) and len(S) < A.n


def as_filter(A: Algebra, S: Iterable[int]) -> FilterSet:
    S = frozenset(S)
    why = filter_violation(A, S)
    if why is not None:
        raise NotAFilterError(f"{A.label_set(S)} is not a filter of {A.name}: {why}")
    return FilterSet(S, A)


def generated_filter(A: Algebra, X: Iterable[int]) -> FilterSet:
    X = set(X)
    if not X:
        return FilterSet(frozenset([A.one]), A)
    # finite products of generators, then upward closure
    prods = set(X)
    frontier = set(X)
    while frontier:
        new = {A.prod[p][x] for p in frontier for x in X} - prods
        prods |= new
        frontier = new
    return FilterSet(upset(A, prods), A)


def principal_filter(A: Algebra, a: int) -> FilterSet:
    return generated_filter(A, [a])


def filter_join(A: Algebra, F: FilterSet, G: FilterSet) -> FilterSet:
    return generated_filter(A, F.members | G.members)


def idempotents(A: Algebra) -> list[int]:
    return [a for a in A.elements if A.prod[a][a] == a]


def all_filters(A: Algebra, method: str = "principal") -> list[FilterSet]:
    """Every filter of A in (cardinality, members) order.

    ``principal``: a finite filter contains the product p of all its members,
    p is idempotent and the filter is the up-set of p, so the filters are
    exactly the up-sets of idempotents. ``exhaustive`` tests all subsets and
    is only allowed for small algebras.
    """
    if method == "principal":
        return list(A.cached("filters", lambda: _sorted(
            FilterSet(upset(A, [e]), A) for e in idempotents(A))))
    if method == "exhaustive":
        if A.n > EXHAUSTIVE_LIMIT:
            raise ValueError(f"exhaustive filter search is limited to {EXHAUSTIVE_LIMIT} elements")
        out = []
        for r in range(1, A.n + 1):
            for S in combinations(A.elements, r):
                if is_filter(A, S):
                    out.append(FilterSet(frozenset(S), A))
        return _sorted(out)
    raise ValueError(f"unknown method {method!r}")


def is_prime(A: Algebra, F: FilterSet) -> bool:
    if not F.proper:
        return False
    m = F.mask()
    out = ~m
    J = A.arrays["join"]
    return not np.any(out[:, None] & out[None, :] & m[J])


def spec(A: Algebra) -> list[FilterSet]:
    return list(A.cached("spec", lambda: [F for F in all_filters(A) if is_prime(A, F)]))


def max_filters(A: Algebra) -> list[FilterSet]:
    """Maximal proper filters; empty for the trivial algebra."""
    return list(A.cached("max", lambda: _max_filters(A)))


def _max_filters(A: Algebra) -> list[FilterSet]:
    proper = [F for F in all_filters(A) if F.proper]
    out = [F for F in proper if not any(F < G for G in proper)]
    primes = set(spec(A))
    assert all(M in primes for M in out), "maximal filter that is not prime"
    return out


def is_local(A: Algebra) -> bool:
    return len(max_filters(A)) == 1


def radical(A: Algebra) -> FilterSet:
    if A.trivial:
        return FilterSet(frozenset([A.zero]), A)
    maxes = max_filters(A)
    return FilterSet(frozenset.intersection(*(M.members for M in maxes)), A)


def unities(A: Algebra) -> FilterSet:
    """Rad computed independently as the set of unity elements."""
    return FilterSet(frozenset(a for a in A.elements if classify_element(A, a).unity), A)


def dense_filter(A: Algebra) -> FilterSet:
    D = frozenset(a for a in A.elements if A.negations[a] == A.zero)
    return FilterSet(D, A)


def infinite_order_set(A: Algebra) -> FilterSet:
    """``{a | ord(a) = inf}``: the unique maximal filter exactly when A is local."""
    return FilterSet(frozenset(a for a in A.elements if order_of(A, a) == INF), A)


def f_m_filter(A: Algebra) -> FilterSet:
    # The exclusion sets are subsets of a finite Max(A), so every element qualifies.
    maxes = max_filters(A)
    excluded = {a: [M for M in maxes if a not in M] for a in A.elements}
    return FilterSet(frozenset(a for a, ms in excluded.items() if len(ms) < INF), A)


def filter_meet(A: Algebra, F: FilterSet, G: FilterSet) -> FilterSet:
    return FilterSet(F.members & G.members, A)


def whole(A: Algebra) -> FilterSet:
    return FilterSet(frozenset(A.elements), A)


def top_filter(A: Algebra) -> FilterSet:
    return FilterSet(frozenset([A.one]), A)
