"""Homomorphisms between finite residuated lattices."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property

from .algebra import Algebra, order_of
from .filters import FilterSet, all_filters, is_prime, max_filters, spec

OPS = ("join", "meet", "prod", "impl")
DEFAULT_ISO_CAP = 24


class MorphismError(ValueError):
    pass


@dataclass(frozen=True)
class MorphismViolation:
    op: str
    args: tuple[int, ...]

    def __str__(self):
        return f"{self.op} not preserved at {self.args}"


@dataclass(frozen=True, eq=False)
class Morphism:
    source: Algebra
    target: Algebra
    mapping: tuple[int, ...]

    def __post_init__(self):
        mapping = tuple(int(x) for x in self.mapping)
        if len(mapping) != self.source.n:
            raise MorphismError("map must be total on the source")
        if any(not 0 <= y < self.target.n for y in mapping):
            raise MorphismError("map leaves the target")
        object.__setattr__(self, "mapping", mapping)

    def __call__(self, a: int) -> int:
        return self.mapping[a]

    @cached_property
    def violation(self) -> MorphismViolation | None:
        return first_violation(self)

    @property
    def verified(self) -> bool:
        return self.violation is None

    @property
    def injective(self) -> bool:
        return len(set(self.mapping)) == self.source.n

    @property
    def surjective(self) -> bool:
        return len(set(self.mapping)) == self.target.n

    @property
    def bijective(self) -> bool:
        return self.injective and self.surjective

    @property
    def is_isomorphism(self) -> bool:
        return self.verified and self.bijective

    def inverse(self) -> "Morphism":
        if not self.bijective:
            raise MorphismError("only a bijection has an inverse")
        inv = [0] * self.target.n
        for a, b in enumerate(self.mapping):
            inv[b] = a
        return Morphism(self.target, self.source, tuple(inv))

    def as_label_map(self) -> dict[str, str]:
        return {self.source.labels[a]: self.target.labels[b] for a, b in enumerate(self.mapping)}


def first_violation(f: Morphism) -> MorphismViolation | None:
    A, B, m = f.source, f.target, f.mapping
    if m[A.zero] != B.zero:
        return MorphismViolation("zero", (A.zero,))
    if m[A.one] != B.one:
        return MorphismViolation("one", (A.one,))
    for op in OPS:
        S, T = getattr(A, op), getattr(B, op)
        for a in A.elements:
            for b in A.elements:
                if m[S[a][b]] != T[m[a]][m[b]]:
                    return MorphismViolation(op, (a, b))
    return None


def is_morphism(f: Morphism) -> tuple[bool, MorphismViolation | None]:
    return f.violation is None, f.violation


def identity(A: Algebra) -> Morphism:
    return Morphism(A, A, tuple(A.elements))


def compose(g: Morphism, f: Morphism) -> Morphism:
    """``g o f``."""
    if f.target is not g.source and f.target != g.source:
        raise MorphismError("maps do not compose")
    return Morphism(f.source, g.target, tuple(g.mapping[x] for x in f.mapping))


def _require_verified(f: Morphism):
    if not f.verified:
        raise MorphismError(f"not a morphism: {f.violation}")


def kernel(f: Morphism) -> FilterSet:
    _require_verified(f)
    return FilterSet(frozenset(a for a in f.source.elements if f(a) == f.target.one), f.source)


def preimage_filter(f: Morphism, F: FilterSet) -> FilterSet:
    _require_verified(f)
    return FilterSet(frozenset(a for a in f.source.elements if f(a) in F.members), f.source)


def image_filter(f: Morphism, F: FilterSet) -> FilterSet:
    _require_verified(f)
    if not f.surjective:
        raise MorphismError("the image of a filter is only guaranteed a filter under a surjection")
    return FilterSet(frozenset(f(a) for a in F.members), f.target)


# -- isomorphism search -------------------------------------------------------

def invariants(A: Algebra) -> tuple:
    """Isomorphism invariants used to reject candidate pairs early."""
    from .boolean_center import boolean_center

    return (A.n, len(all_filters(A)), len(spec(A)), len(max_filters(A)),
            len(boolean_center(A).members), tuple(sorted(Counter(_profile(A)).items())))


def _profile(A: Algebra) -> list[tuple]:
    up = A.order.sum(axis=1)
    down = A.order.sum(axis=0)
    return [(order_of(A, a), A.prod[a][a] == a, int(up[a]), int(down[a]),
             A.negations[a] == A.zero) for a in A.elements]


def find_isomorphism(A: Algebra, B: Algebra, cap: int = DEFAULT_ISO_CAP) -> Morphism | None:
    """Lexicographically least isomorphism A -> B, or None."""
    if A.n != B.n:
        return None
    if A.n > cap:
        raise MorphismError(f"isomorphism search capped at {cap} elements")
    if invariants(A) != invariants(B):
        return None
    n = A.n
    pa, pb = _profile(A), _profile(B)
    cands = [[y for y in B.elements if pb[y] == pa[x]] for x in A.elements]
    for x, y in ((A.zero, B.zero), (A.one, B.one)):
        if y not in cands[x]:
            return None
        cands[x] = [y]
    tables = [(getattr(A, op), getattr(B, op)) for op in OPS]
    img = [-1] * n
    used = [False] * n

    def consistent(x: int) -> bool:
        # every fully assigned triple p op q = r is checked when its last member lands
        done = [u for u in A.elements if img[u] >= 0]
        for S, T in tables:
            for u in done:
                for p, q in ((x, u), (u, x)):
                    r = S[p][q]
                    if img[r] >= 0 and img[r] != T[img[p]][img[q]]:
                        return False
            for p in done:
                for q in done:
                    if S[p][q] == x and img[x] != T[img[p]][img[q]]:
                        return False
        return True

    # index order with sorted candidates: the first hit is the least witness
    def search(x: int) -> bool:
        if x == n:
            return True
        for y in cands[x]:
            if used[y]:
                continue
            img[x], used[y] = y, True
            if consistent(x) and search(x + 1):
                return True
            img[x], used[y] = -1, False
        return False

    if not search(0):
        return None
    f = Morphism(A, B, tuple(img))
    assert f.is_isomorphism
    return f


def isomorphic(A: Algebra, B: Algebra) -> bool:
    return find_isomorphism(A, B) is not None


# -- induced maps -----------------------------------------------------------

def dense_functor_map(f: Morphism) -> Morphism:
    """The induced map A/Ds(A) -> B/Ds(B), a/Ds(A) |-> f(a)/Ds(B)."""
    from .filters import dense_filter
    from .quotients import quotient

    _require_verified(f)
    qa = quotient(f.source, dense_filter(f.source))
    qb = quotient(f.target, dense_filter(f.target))
    induced = [None] * qa.quotient.n
    for a in f.source.elements:
        y = qb.class_of[f(a)]
        x = qa.class_of[a]
        if induced[x] is None:
            induced[x] = y
        elif induced[x] != y:
            raise MorphismError("induced map is not well defined")
    g = Morphism(qa.quotient, qb.quotient, tuple(induced))
    _require_verified(g)
    return g


@dataclass(frozen=True)
class BooleanMap:
    """Restriction of a morphism to the Boolean centers."""

    morphism: Morphism
    domain: tuple[int, ...]
    codomain: tuple[int, ...]
    mapping: dict

    @property
    def injective(self) -> bool:
        return len(set(self.mapping.values())) == len(self.domain)

    @property
    def surjective(self) -> bool:
        return set(self.mapping.values()) == set(self.codomain)

    def unhit(self) -> list[int]:
        return sorted(set(self.codomain) - set(self.mapping.values()))


def boolean_restriction(f: Morphism) -> BooleanMap:
    from .boolean_center import boolean_center

    _require_verified(f)
    A, B = f.source, f.target
    BA, BB = boolean_center(A), boolean_center(B)
    mapping = {e: f(e) for e in BA.members}
    stray = [e for e, y in mapping.items() if y not in BB.members]
    if stray:
        raise MorphismError(f"restriction leaves B({B.name}) at {A.label_set(stray)}")
    for e in BA.members:
        if mapping[BA.complement_of[e]] != BB.complement_of[mapping[e]]:
            raise MorphismError("complement not preserved")
        for g in BA.members:
            if mapping[A.join[e][g]] != B.join[mapping[e]][mapping[g]]:
                raise MorphismError("join not preserved on B")
            if mapping[A.meet[e][g]] != B.meet[mapping[e]][mapping[g]]:
                raise MorphismError("meet not preserved on B")
    return BooleanMap(f, BA.members, BB.members, mapping)


def preserves_filter_kinds(f: Morphism, G: FilterSet) -> dict[str, bool]:
    """Check that the preimage of G keeps G's proper/prime/maximal status."""
    P = preimage_filter(f, G)
    B = f.target
    return {
        "proper": (not G.proper) or P.proper,
        "prime": (not is_prime(B, G)) or is_prime(f.source, P),
        "maximal": (G not in max_filters(B)) or P in max_filters(f.source),
    }
