"""Boolean center, relative algebras <e>, and lifting of idempotents."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra, biimpl, verify_axioms
from .filters import FilterSet, radical
from .quotients import QuotientResult, quotient


class NotComplementedError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class BooleanCenter:
    algebra: Algebra
    members: tuple[int, ...]
    complement_of: dict

    def __contains__(self, e):
        return e in self.complement_of

    def __len__(self):
        return len(self.members)

    @property
    def labels(self) -> list[str]:
        return self.algebra.label_set(self.members)


def boolean_center(A: Algebra) -> BooleanCenter:
    return A.cached("boolean_center", lambda: _boolean_center(A))


def _boolean_center(A: Algebra) -> BooleanCenter:
    comp = {}
    for e in A.elements:
        found = [f for f in A.elements if A.join[e][f] == A.one and A.meet[e][f] == A.zero]
        if not found:
            continue
        # complements in B(A) are unique and equal to the negation
        if found != [A.negations[e]]:
            raise AssertionError(f"complement of {A.labels[e]} is not its negation")
        comp[e] = found[0]
    B = BooleanCenter(A, tuple(sorted(comp)), comp)
    if not A.trivial:
        rad = radical(A)
        if set(B.members) & rad.members != {A.one}:
            raise AssertionError("B(A) and Rad(A) meet outside {1}")
    return B


@dataclass(frozen=True, eq=False)
class RelativeAlgebra:
    """The principal filter <e> of a complemented e, a residuated lattice
    with bottom e and implication ``a ->_e b = e v (a -> b)``."""

    base: Algebra
    e: int
    algebra: Algebra
    embedding: tuple[int, ...]

    def position(self, a: int) -> int:
        return self.embedding.index(a)

    def restrict_filter(self, F: FilterSet) -> FilterSet:
        """F cap <e> as a filter of the relative algebra.

        Also checks that it equals ``{e v a | a in F}``.
        """
        A, e = self.base, self.e
        inside = {a for a in F.members if A.order[e, a]}
        joined = {A.join[e][a] for a in F.members}
        if inside != joined:
            raise AssertionError("F cap <e> differs from {e v a | a in F}")
        return FilterSet(frozenset(self.position(a) for a in inside), self.algebra)


def relative_algebra(A: Algebra, e: int) -> RelativeAlgebra:
    if e not in boolean_center(A):
        raise NotComplementedError(f"{A.labels[e]} is not in B({A.name})")
    emb = tuple(a for a in A.elements if A.order[e, a])
    pos = {a: i for i, a in enumerate(emb)}

    def table(op):
        return tuple(tuple(pos[op(a, b)] for b in emb) for a in emb)

    R = Algebra(f"<{A.labels[e]}>", tuple(A.labels[a] for a in emb),
                table(lambda a, b: A.join[a][b]),
                table(lambda a, b: A.meet[a][b]),
                table(lambda a, b: A.prod[a][b]),
                table(lambda a, b: A.join[e][A.impl[a][b]]),
                pos[e], pos[A.one])
    report = verify_axioms(R)
    if not report.ok:
        raise AssertionError(f"<{A.labels[e]}> fails {report.violations[0].describe(R)}")
    return RelativeAlgebra(A, e, R, emb)


def congruence_restriction_check(A: Algebra, F: FilterSet, e: int) -> bool:
    """a = b (mod F) implies a v e = b v e (mod F cap <e>), over all pairs."""
    rel = relative_algebra(A, e)
    G = rel.restrict_filter(F)
    R = rel.algebra
    for a in A.elements:
        for b in A.elements:
            if biimpl(A, a, b) not in F.members:
                continue
            x, y = rel.position(A.join[a][e]), rel.position(A.join[b][e])
            if biimpl(R, x, y) not in G.members:
                return False
    return True


@dataclass(frozen=True, eq=False)
class LiftingResult:
    algebra: Algebra
    rad_quotient: QuotientResult
    lifts: dict
    unliftable: tuple[int, ...]

    @property
    def has_lifting(self) -> bool:
        return not self.unliftable

    def __bool__(self):
        return self.has_lifting

    def witness_labels(self) -> list[str]:
        return [f"{self.rad_quotient.quotient.labels[f]}/Rad" for f in self.unliftable]


def rad_quotient(A: Algebra) -> QuotientResult:
    return quotient(A, radical(A))


def has_lifting(A: Algebra) -> LiftingResult:
    """Decide whether every element of B(A/Rad A) is the class of one of B(A)."""
    return A.cached("lifting", lambda: _has_lifting(A))


def _has_lifting(A: Algebra) -> LiftingResult:
    Q = rad_quotient(A)
    BA = boolean_center(A)
    BQ = boolean_center(Q.quotient)
    lifts, missing = {}, []
    for f in BQ.members:
        pre = [e for e in BA.members if Q.class_of[e] == f]
        if len(pre) > 1:
            raise AssertionError("two idempotents share a Rad-class")
        if pre:
            lifts[f] = pre[0]
        else:
            missing.append(f)
    return LiftingResult(A, Q, lifts, tuple(missing))


def lift_idempotent(A: Algebra, f: int) -> int | None:
    """The e in B(A) with e/Rad(A) = f, or None; f indexes A/Rad(A)."""
    res = has_lifting(A)
    if f not in boolean_center(res.rad_quotient.quotient):
        raise NotComplementedError(
            f"{res.rad_quotient.quotient.labels[f]} is not in B(A/Rad(A))")
    return res.lifts.get(f)
