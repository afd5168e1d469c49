"""Direct products, CRT, classification and the structure-theorem pipeline."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import reduce
from itertools import product as cartesian
from typing import Sequence

from .algebra import INF, Algebra, biimpl, neg, order_of, verify_axioms
from .boolean_center import (BooleanCenter, RelativeAlgebra, boolean_center, has_lifting,
                             lift_idempotent, relative_algebra)
from .filters import (FilterSet, all_filters, dense_filter, filter_join, infinite_order_set,
                      is_prime, max_filters, radical, spec, whole)
from .morphisms import Morphism, preimage_filter
from .quotients import quotient

DEFAULT_SIZE_CAP = 4096


class SizeCapError(ValueError):
    pass


class CoMaximalityError(ValueError):
    pass


class NoLiftingError(ValueError):
    def __init__(self, algebra: Algebra, witnesses: list[str]):
        self.algebra = algebra
        self.witnesses = witnesses
        super().__init__(f"no lifting; unliftable idempotent {witnesses[0]}")


class InconsistencyError(AssertionError):
    pass


def size_cap() -> int:
    raw = os.environ.get("RESLAT_SIZE_CAP")
    return int(raw) if raw else DEFAULT_SIZE_CAP


def _tuple_label(parts: Sequence[str]) -> str:
    return "(" + ",".join(parts) + ")"


@dataclass(frozen=True, eq=False)
class ProductAlgebra:
    algebra: Algebra
    factors: tuple[Algebra, ...]
    coords: tuple[tuple[int, ...], ...]
    projections: tuple[Morphism, ...] = field(repr=False)
    deltas: tuple[int, ...] = ()

    def element(self, coords: Sequence[int]) -> int:
        return self._index[tuple(coords)]

    @property
    def _index(self) -> dict:
        return self.algebra.cached("coord_index", lambda: {c: i for i, c in enumerate(self.coords)})

    def product_filter(self, parts: Sequence[FilterSet]) -> FilterSet:
        members = frozenset(i for i, c in enumerate(self.coords)
                            if all(x in F.members for x, F in zip(c, parts)))
        return FilterSet(members, self.algebra)


def direct_product(algebras: Sequence[Algebra], cap: int | None = None,
                   name: str | None = None) -> ProductAlgebra:
    """Componentwise product; elements in lexicographic coordinate order."""
    algebras = tuple(algebras)
    if not algebras:
        raise ValueError("need at least one factor")
    cap = size_cap() if cap is None else cap
    size = reduce(lambda x, A: x * A.n, algebras, 1)
    if size > cap:
        raise SizeCapError(f"product has {size} elements, over the cap of {cap}")
    coords = tuple(cartesian(*(A.elements for A in algebras)))
    index = {c: i for i, c in enumerate(coords)}

    def table(op):
        tabs = [getattr(A, op) for A in algebras]
        return [[index[tuple(T[x][y] for T, x, y in zip(tabs, c, d))] for d in coords]
                for c in coords]

    if len(algebras) == 1:
        labels = algebras[0].labels
    else:
        labels = tuple(_tuple_label([A.labels[x] for A, x in zip(algebras, c)]) for c in coords)
    P = Algebra(name or " x ".join(A.name for A in algebras), labels,
                table("join"), table("meet"), table("prod"), table("impl"),
                index[tuple(A.zero for A in algebras)], index[tuple(A.one for A in algebras)])
    report = verify_axioms(P)
    if not report.ok:
        raise InconsistencyError(f"product fails {report.violations[0].describe(P)}")
    projections = tuple(Morphism(P, A, tuple(c[i] for c in coords)) for i, A in enumerate(algebras))
    deltas = tuple(index[tuple(A.zero if j == i else A.one for j, A in enumerate(algebras))]
                   for i in range(len(algebras)))
    return ProductAlgebra(P, algebras, coords, projections, deltas)


def delta_elements(P: ProductAlgebra) -> list[int]:
    A = P.algebra
    for i, di in enumerate(P.deltas):
        for k, dk in enumerate(P.deltas):
            if i != k and A.join[di][dk] != A.one:
                raise InconsistencyError("delta elements do not join to 1")
    return list(P.deltas)


def over_filter(P: ProductAlgebra, i: int, Q: FilterSet) -> FilterSet:
    """The filter of P over a prime Q of factor i: its preimage under pr_i."""
    if not is_prime(P.factors[i], Q):
        raise ValueError(f"{Q!r} is not a prime filter of factor {i}")
    O = preimage_filter(P.projections[i], Q)
    assert is_prime(P.algebra, O)
    return O


@dataclass(frozen=True)
class ProductSpecReport:
    spec: tuple[FilterSet, ...]
    max: tuple[FilterSet, ...]
    spec_over: tuple[FilterSet, ...]
    max_over: tuple[FilterSet, ...]
    factor_spec_counts: tuple[int, ...]
    factor_max_counts: tuple[int, ...]

    @property
    def agree(self) -> bool:
        return (set(self.spec) == set(self.spec_over) and set(self.max) == set(self.max_over)
                and len(self.spec) == sum(self.factor_spec_counts)
                and len(self.max) == sum(self.factor_max_counts))


def spec_max_of_product(P: ProductAlgebra) -> ProductSpecReport:
    """Spec and Max computed directly and via over-filters; they must agree."""
    spec_over, max_over = [], []
    for i, A in enumerate(P.factors):
        spec_over += [over_filter(P, i, Q) for Q in spec(A)]
        max_over += [over_filter(P, i, Q) for Q in max_filters(A)]
    rep = ProductSpecReport(tuple(spec(P.algebra)), tuple(max_filters(P.algebra)),
                            tuple(spec_over), tuple(max_over),
                            tuple(len(spec(A)) for A in P.factors),
                            tuple(len(max_filters(A)) for A in P.factors))
    if not rep.agree:
        raise InconsistencyError("prime/maximal filters of the product do not match the factors")
    return rep


def congruent(A: Algebra, a: int, b: int, F: FilterSet) -> bool:
    return biimpl(A, a, b) in F.members


def crt_solve(A: Algebra, pairs: Sequence[tuple[int, FilterSet]]) -> int:
    """Least-index x with x = a_i (mod F_i) for all i, for pairwise
    co-maximal filters F_i (a solution then exists)."""
    pairs = list(pairs)
    top = whole(A)
    for i, (_, F) in enumerate(pairs):
        for _, G in pairs[i + 1:]:
            if filter_join(A, F, G) != top:
                raise CoMaximalityError(f"{F!r} and {G!r} do not join to the whole algebra")
    for x in A.elements:
        if all(congruent(A, x, a, F) for a, F in pairs):
            return x
    raise InconsistencyError("co-maximal system without a solution")


# -- classification -----------------------------------------------------------

@dataclass(frozen=True)
class Classification:
    local: bool
    semilocal: bool
    perfect: bool
    perfect_literal: bool
    radical_dense: bool
    maximal: bool
    has_lifting: bool
    n_max: int
    n_spec: int
    n_filters: int
    notes: tuple[str, ...] = ()

    def as_dict(self) -> dict:
        return {
            "local": self.local, "semilocal": self.semilocal, "perfect": self.perfect,
            "perfect_literal": self.perfect_literal, "radical_dense": self.radical_dense,
            "maximal": self.maximal, "has_lifting": self.has_lifting,
            "n_max": self.n_max, "n_spec": self.n_spec, "n_filters": self.n_filters,
        }


def perfect_literal(A: Algebra) -> bool:
    """Local and ord(a) finite iff ord(neg a) finite, read word for word."""
    return len(max_filters(A)) == 1 and all(
        (order_of(A, a) < INF) == (order_of(A, neg(A, a)) < INF) for a in A.elements)


def perfect(A: Algebra) -> bool:
    """Local and ord(a) finite iff ord(neg a) infinite."""
    return len(max_filters(A)) == 1 and all(
        (order_of(A, a) < INF) == (order_of(A, neg(A, a)) == INF) for a in A.elements)


def classify(A: Algebra) -> Classification:
    maxes = max_filters(A)
    local = len(maxes) == 1
    if local:
        assert maxes[0] == infinite_order_set(A), "local but D(A) is not the maximal filter"
    rd = radical(A) == dense_filter(A)
    lift = has_lifting(A).has_lifting
    lit, cor = perfect_literal(A), perfect(A)
    notes = []
    if rd and not lift:
        notes.append("paper-note: radical-dense but without lifting Boolean center; "
                     "radical-density alone does not give lifting")
    if local and lit != cor:
        notes.append(f"paper-note: literal perfectness evaluates {str(lit).lower()}, corrected evaluates {str(cor).lower()}")
    # finitely many filters => maximal, and finitely many maximal filters => semilocal
    return Classification(local=local, semilocal=True, perfect=cor, perfect_literal=lit,
                          radical_dense=rd, maximal=True, has_lifting=lift,
                          n_max=len(maxes), n_spec=len(spec(A)), n_filters=len(all_filters(A)),
                          notes=tuple(notes))


# -- semilocal iso and decomposition ------------------------------------------

@dataclass(frozen=True, eq=False)
class SemilocalIso:
    rad_quotient: object
    factor_quotients: tuple
    product: ProductAlgebra
    iso: Morphism


def semilocal_decompose(A: Algebra) -> SemilocalIso:
    """a/Rad(A) |-> (a/M_1, ..., a/M_n), checked to be an isomorphism."""
    if A.trivial:
        raise ValueError("the trivial algebra has no maximal filters")
    R = quotient(A, radical(A))
    qs = tuple(quotient(A, M) for M in max_filters(A))
    P = direct_product([q.quotient for q in qs], cap=max(size_cap(), A.n))
    mapping = [None] * R.quotient.n
    for a in A.elements:
        y = P.element([q.class_of[a] for q in qs])
        x = R.class_of[a]
        if mapping[x] is not None and mapping[x] != y:
            raise InconsistencyError("semilocal map is not well defined")
        mapping[x] = y
    iso = Morphism(R.quotient, P.algebra, tuple(mapping))
    if not iso.is_isomorphism:
        raise InconsistencyError(f"A/Rad -> prod A/M_i is not an isomorphism: {iso.violation}")
    return SemilocalIso(R, qs, P, iso)


@dataclass(frozen=True, eq=False)
class DecompositionReport:
    algebra: Algebra
    idempotents: tuple[int, ...]
    factors: tuple[RelativeAlgebra, ...]
    product: ProductAlgebra
    iso: Morphism
    factor_flags: tuple[dict, ...]
    classification: Classification

    @property
    def inverse(self) -> Morphism:
        return self.iso.inverse()


def decompose(A: Algebra) -> DecompositionReport:
    """Split A into the product of the relative algebras <e_i> over lifted idempotents."""
    if A.trivial:
        raise ValueError("cannot decompose the trivial algebra")
    lifting = has_lifting(A)
    if not lifting.has_lifting:
        raise NoLiftingError(A, lifting.witness_labels())
    semi = semilocal_decompose(A)
    R, P = semi.rad_quotient, semi.product
    back = semi.iso.inverse()
    k = len(P.factors)
    es = []
    for i in range(k):
        fi = back(P.deltas[i])
        ei = lift_idempotent(A, fi)
        if ei is None:
            raise InconsistencyError("lifting reported but an idempotent has no lift")
        es.append(ei)
    BA: BooleanCenter = boolean_center(A)
    assert all(e in BA for e in es)
    if reduce(lambda x, y: A.meet[x][y], es) != A.zero:
        raise InconsistencyError("lifted idempotents do not meet to 0")
    for i in range(k):
        for j in range(k):
            if i != j and A.join[es[i]][es[j]] != A.one:
                raise InconsistencyError("lifted idempotents do not pairwise join to 1")
    rels = tuple(relative_algebra(A, e) for e in es)
    target = direct_product([r.algebra for r in rels], cap=max(size_cap(), A.n))
    mapping = tuple(target.element([r.position(A.join[a][r.e]) for r in rels]) for a in A.elements)
    iso = Morphism(A, target.algebra, mapping)
    if not iso.is_isomorphism:
        raise InconsistencyError(f"a |-> (a v e_i) is not an isomorphism: {iso.violation}")
    # inverse: (x_i) |-> meet of the x_i
    for t, c in enumerate(target.coords):
        xs = [r.embedding[ci] for r, ci in zip(rels, c)]
        if mapping[reduce(lambda x, y: A.meet[x][y], xs)] != t:
            raise InconsistencyError("meet of coordinates does not invert the decomposition")
    flags = []
    for r in rels:
        m = len(max_filters(r.algebra))
        flags.append({"local": m == 1, "nontrivial": not r.algebra.trivial})
    if not all(f["local"] and f["nontrivial"] for f in flags):
        raise InconsistencyError("a factor is trivial or not local")
    if len(max_filters(A)) != sum(len(max_filters(r.algebra)) for r in rels):
        raise InconsistencyError("maximal filter count is not additive over the factors")
    return DecompositionReport(A, tuple(es), rels, target, iso, tuple(flags), classify(A))
