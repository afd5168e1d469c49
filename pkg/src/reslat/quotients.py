"""Quotients A/F modulo a filter and the maps between them."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra, biimpl, verify_axioms
from .filters import FilterSet, all_filters, as_filter, max_filters
from .morphisms import Morphism, MorphismError, image_filter, preimage_filter


class QuotientError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class QuotientResult:
    parent: Algebra
    filter: FilterSet
    quotient: Algebra
    class_of: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]

    @property
    def projection(self) -> Morphism:
        return Morphism(self.parent, self.quotient, self.class_of)

    def image(self, F: FilterSet) -> FilterSet:
        """G/F for a filter G of the parent."""
        return FilterSet(frozenset(self.class_of[a] for a in F.members), self.quotient)

    def preimage(self, G: FilterSet) -> FilterSet:
        return FilterSet(frozenset(a for a in self.parent.elements if self.class_of[a] in G.members),
                         self.parent)

    def class_label(self, a: int) -> str:
        return self.quotient.labels[self.class_of[a]]


def _class_label(A: Algebra, cls: tuple[int, ...]) -> str:
    # presentation only: name a class by its constant when it holds one
    for c in (A.one, A.zero):
        if c in cls:
            return A.labels[c]
    return A.labels[cls[0]]


def quotient(A: Algebra, F: FilterSet | frozenset | set, name: str | None = None) -> QuotientResult:
    """A/F. Class representatives are least parent indices, in sorted order."""
    F = as_filter(A, F.members if isinstance(F, FilterSet) else F)
    if name is None:
        return A.cached(("quotient", F.members), lambda: _quotient(A, F, None))
    return _quotient(A, F, name)


def _quotient(A: Algebra, F: FilterSet, name: str | None) -> QuotientResult:
    rep = [-1] * A.n
    for a in A.elements:
        if rep[a] >= 0:
            continue
        for b in range(a, A.n):
            if rep[b] < 0 and biimpl(A, a, b) in F.members:
                rep[b] = a
    reps = sorted(set(rep))
    pos = {r: i for i, r in enumerate(reps)}
    class_of = tuple(pos[rep[a]] for a in A.elements)
    classes = tuple(tuple(a for a in A.elements if class_of[a] == i) for i in range(len(reps)))

    def table(T):
        return tuple(tuple(class_of[T[r][s]] for s in reps) for r in reps)

    Q = Algebra(name or f"{A.name}/{{{','.join(F.labels)}}}",
                tuple(_class_label(A, c) for c in classes),
                table(A.join), table(A.meet), table(A.prod), table(A.impl),
                class_of[A.zero], class_of[A.one])
    report = verify_axioms(Q)
    if not report.ok:
        raise QuotientError(f"quotient failed verification: {report.violations[0].describe(Q)}")
    result = QuotientResult(A, F, Q, class_of, classes)
    if not result.projection.verified:
        raise QuotientError(f"class map is not a morphism: {result.projection.violation}")
    return result


def quotient_order(Q: QuotientResult, a: int, b: int) -> bool:
    """a/F <= b/F, cross-checked against ``a -> b in F``."""
    A = Q.parent
    direct = Q.quotient.meet[Q.class_of[a]][Q.class_of[b]] == Q.class_of[a]
    via_filter = A.impl[a][b] in Q.filter.members
    if direct != via_filter:
        raise QuotientError(f"quotient order disagrees with the filter test at ({a}, {b})")
    return direct


@dataclass(frozen=True, eq=False)
class FilterCorrespondence:
    result: QuotientResult
    forward: dict[FilterSet, FilterSet]

    @property
    def backward(self) -> dict[FilterSet, FilterSet]:
        return {v: k for k, v in self.forward.items()}


def filter_correspondence(A: Algebra, F: FilterSet) -> FilterCorrespondence:
    """Bijection {filters of A containing F} <-> {filters of A/F}, checked."""
    Q = quotient(A, F)
    above = [G for G in all_filters(A) if F <= G]
    below = all_filters(Q.quotient)
    forward = {G: image_filter(Q.projection, G) for G in above}
    if sorted(forward.values(), key=FilterSet.sort_key) != below:
        raise QuotientError("image map is not onto the filters of the quotient")
    for H in below:
        G = preimage_filter(Q.projection, H)
        if forward.get(G) != H:
            raise QuotientError("preimage is not inverse to the image map")
    for G1 in above:
        for G2 in above:
            if (G1 <= G2) != (forward[G1] <= forward[G2]):
                raise QuotientError("correspondence does not preserve inclusion")
    max_a = {G for G in max_filters(A) if F <= G}
    max_q = set(max_filters(Q.quotient))
    if {forward[G] for G in max_a} != max_q:
        raise QuotientError("maximal filters do not correspond")
    return FilterCorrespondence(Q, forward)


def canonical_surjection(A: Algebra, F: FilterSet, G: FilterSet) -> Morphism:
    """A/F -> A/G, a/F |-> a/G, for F contained in G."""
    if not F <= G:
        raise QuotientError("canonical surjection needs F contained in G")
    QF, QG = quotient(A, F), quotient(A, G)
    mapping = [None] * QF.quotient.n
    for a in A.elements:
        mapping[QF.class_of[a]] = QG.class_of[a]
    phi = Morphism(QF.quotient, QG.quotient, tuple(mapping))
    if not phi.verified or not phi.surjective:
        raise MorphismError("canonical map is not a surjective morphism")
    if phi.injective != (F == G):
        raise QuotientError("canonical map bijective although F != G")
    return phi


def second_isomorphism_check(A: Algebra, F: FilterSet, G: FilterSet) -> tuple[bool, Morphism]:
    """Build (A/F)/(G/F) -> A/G, (a/F)/(G/F) |-> a/G and verify it."""
    if not F <= G:
        raise QuotientError("second isomorphism needs F contained in G")
    QF = quotient(A, F)
    QQ = quotient(QF.quotient, QF.image(G))
    QG = quotient(A, G)
    mapping = [None] * QQ.quotient.n
    for a in A.elements:
        mapping[QQ.class_of[QF.class_of[a]]] = QG.class_of[a]
    psi = Morphism(QQ.quotient, QG.quotient, tuple(mapping))
    return psi.is_isomorphism, psi

