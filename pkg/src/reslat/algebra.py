"""Finite commutative integral residuated bounded lattices given by tables."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

INF = math.inf

Table = tuple[tuple[int, ...], ...]


class StructureError(ValueError):
    """Malformed tables: wrong shape, out-of-range entries, duplicate labels."""


class LatticeError(StructureError):
    """A covering relation that does not describe a bounded lattice."""


@dataclass(frozen=True)
class Violation:
    law: str
    witness: tuple[int, ...]

    def describe(self, A: "Algebra") -> str:
        return f"{self.law} at ({', '.join(A.labels[i] for i in self.witness)})"


@dataclass(frozen=True)
class VerificationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def by_law(self) -> dict[str, list[Violation]]:
        out: dict[str, list[Violation]] = {}
        for v in self.violations:
            out.setdefault(v.law, []).append(v)
        return out


def _freeze(table, n: int, what: str) -> Table:
    try:
        rows = tuple(tuple(int(x) for x in row) for row in table)
    except (TypeError, ValueError) as exc:
        raise StructureError(f"{what}: table entries must be integers") from exc
    if len(rows) != n or any(len(r) != n for r in rows):
        raise StructureError(f"{what}: expected a {n}x{n} table")
    for i, r in enumerate(rows):
        for j, x in enumerate(r):
            if not 0 <= x < n:
                raise StructureError(f"{what}[{i}][{j}] = {x} is out of range [0, {n})")
    return rows


@dataclass(frozen=True)
class Algebra:
    """A finite residuated lattice on the indices ``0..n-1``.

    Labels are only used for presentation. Construction checks shapes and
    index ranges; the algebraic axioms are checked by :func:`verify_axioms`.
    """

    name: str
    labels: tuple[str, ...]
    join: Table
    meet: Table
    prod: Table
    impl: Table
    zero: int
    one: int
    metadata: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        labels = tuple(str(x) for x in self.labels)
        n = len(labels)
        if n < 1:
            raise StructureError("an algebra needs at least one element")
        if len(set(labels)) != n:
            dup = sorted({x for x in labels if labels.count(x) > 1})
            raise StructureError(f"duplicate labels: {dup}")
        object.__setattr__(self, "labels", labels)
        for op in ("join", "meet", "prod", "impl"):
            object.__setattr__(self, op, _freeze(getattr(self, op), n, op))
        for const in ("zero", "one"):
            v = getattr(self, const)
            if not isinstance(v, (int, np.integer)) or not 0 <= v < n:
                raise StructureError(f"{const} = {v!r} is not an element index")
            object.__setattr__(self, const, int(v))

    @property
    def n(self) -> int:
        return len(self.labels)

    def __len__(self):
        return self.n

    @property
    def elements(self) -> range:
        return range(self.n)

    @property
    def trivial(self) -> bool:
        return self.n == 1

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"{self.name}: no element labelled {label!r}") from None

    def indices(self, labels: Iterable[str]) -> frozenset[int]:
        return frozenset(self.index(x) for x in labels)

    def label_set(self, members: Iterable[int]) -> list[str]:
        return [self.labels[i] for i in sorted(members)]

    def renamed(self, name: str) -> "Algebra":
        return Algebra(name, self.labels, self.join, self.meet, self.prod,
                       self.impl, self.zero, self.one, dict(self.metadata))

    @cached_property
    def arrays(self) -> dict[str, np.ndarray]:
        return {op: np.array(getattr(self, op), dtype=np.intp)
                for op in ("join", "meet", "prod", "impl")}

    @cached_property
    def order(self) -> np.ndarray:
        """``order[a, b]`` is True iff a <= b, read off the meet table."""
        meet = self.arrays["meet"]
        return meet == np.arange(self.n)[:, None]

    @cached_property
    def memo(self) -> dict:
        """Per-instance cache for derived structure (filters, centers, ...)."""
        return {}

    def cached(self, key, compute):
        if key not in self.memo:
            self.memo[key] = compute()
        return self.memo[key]

    @cached_property
    def negations(self) -> tuple[int, ...]:
        return tuple(self.impl[a][self.zero] for a in self.elements)

    @classmethod
    def from_covers(cls, name: str, labels: Sequence[str], covers, prod, impl,
                    zero: int, one: int, metadata=None) -> "Algebra":
        """Build an algebra whose join and meet are derived from Hasse edges.

        ``covers`` is a list of ``(lower, upper)`` index pairs.
        """
        join, meet = lattice_from_covers(len(labels), covers)
        return cls(name, tuple(labels), join, meet, prod, impl, zero, one,
                   dict(metadata or {}))


def order_from_covers(n: int, covers) -> np.ndarray:
    leq = np.eye(n, dtype=bool)
    for lo, hi in covers:
        if not (0 <= lo < n and 0 <= hi < n):
            raise StructureError(f"cover ({lo}, {hi}) is out of range")
        leq[lo, hi] = True
    # Warshall closure
    for k in range(n):
        leq |= leq[:, k:k + 1] & leq[k:k + 1, :]
    if np.any(leq & leq.T & ~np.eye(n, dtype=bool)):
        raise LatticeError("covering relation has a cycle")
    return leq


def lattice_from_order(leq: np.ndarray) -> tuple[Table, Table]:
    """Join and meet tables of a finite partial order, or LatticeError."""
    n = leq.shape[0]
    join = [[0] * n for _ in range(n)]
    meet = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            ub = np.flatnonzero(leq[a] & leq[b])
            lub = [u for u in ub if leq[u, ub].all()]
            lb = np.flatnonzero(leq[:, a] & leq[:, b])
            glb = [v for v in lb if leq[lb, v].all()]
            if len(lub) != 1 or len(glb) != 1:
                raise LatticeError(f"elements {a} and {b} lack a join or a meet")
            join[a][b] = int(lub[0])
            meet[a][b] = int(glb[0])
    return tuple(map(tuple, join)), tuple(map(tuple, meet))


def lattice_from_covers(n: int, covers) -> tuple[Table, Table]:
    return lattice_from_order(order_from_covers(n, covers))


def covers_of(A: Algebra) -> list[tuple[int, int]]:
    """Hasse edges ``(lower, upper)`` of the lattice order."""
    leq = A.order
    lt = leq & ~np.eye(A.n, dtype=bool)
    edges = []
    for a in A.elements:
        for b in np.flatnonzero(lt[a]):
            if not np.any(lt[a] & lt[:, b]):
                edges.append((a, int(b)))
    return edges


# -- axioms -----------------------------------------------------------------

def verify_axioms(A: Algebra) -> VerificationReport:
    """Check every residuated-lattice axiom exhaustively; report all failures."""
    n = A.n
    J, M, P, I = (A.arrays[k] for k in ("join", "meet", "prod", "impl"))
    x = np.arange(n)
    out: list[Violation] = []

    def collect(law: str, bad: np.ndarray):
        for w in np.argwhere(bad):
            out.append(Violation(law, tuple(int(i) for i in w)))

    for name, T in (("join", J), ("meet", M), ("prod", P)):
        collect(f"{name} commutativity", T != T.T)
        collect(f"{name} associativity", T[T[:, :, None], x[None, None, :]] != T[x[:, None, None], T[None, :, :]])
    for name, T in (("join", J), ("meet", M)):
        collect(f"{name} idempotence", T[x, x] != x)
    collect("absorption a v (a ^ b) = a", J[x[:, None], M] != x[:, None])
    collect("absorption a ^ (a v b) = a", M[x[:, None], J] != x[:, None])
    collect("zero is bottom", M[A.zero, :] != A.zero)
    collect("one is top", J[A.one, :] != A.one)
    collect("prod unit", P[:, A.one] != x)

    leq = M == x[:, None]
    # a <= (b -> c)  iff  a (.) b <= c
    lhs = leq[x[:, None, None], I[None, :, :]]
    rhs = leq[P[:, :, None], x[None, None, :]]
    collect("residuation", lhs != rhs)
    return VerificationReport(tuple(out))


# -- element operations -----------------------------------------------------

def leq(A: Algebra, a: int, b: int) -> bool:
    return A.meet[a][b] == a


def neg(A: Algebra, a: int) -> int:
    return A.impl[a][A.zero]


def biimpl(A: Algebra, a: int, b: int) -> int:
    return A.meet[A.impl[a][b]][A.impl[b][a]]


def power(A: Algebra, a: int, k: int) -> int:
    if k < 0:
        raise ValueError("exponent must be non-negative")
    x = A.one
    for _ in range(k):
        x = A.prod[x][a]
    return x


def powers(A: Algebra, a: int) -> list[int]:
    """``[a^0, a^1, ...]`` up to the first repeat; covers every power of a."""
    seq, seen = [], set()
    x = A.one
    while x not in seen:
        seen.add(x)
        seq.append(x)
        x = A.prod[x][a]
    return seq


def order_of(A: Algebra, a: int):
    """Least n with a^n = 0, or ``INF``. The power sequence is eventually
    periodic, so a repeat before reaching 0 means 0 is never reached."""
    for k, x in enumerate(powers(A, a)):
        if x == A.zero:
            return k
    return INF


@dataclass(frozen=True)
class ElementClass:
    nilpotent: bool
    unity: bool
    finite: bool


def classify_element(A: Algebra, a: int) -> ElementClass:
    nilpotent = order_of(A, a) < INF
    unity = all(order_of(A, neg(A, x)) < INF for x in powers(A, a))
    finite = nilpotent and order_of(A, neg(A, a)) < INF
    return ElementClass(nilpotent, unity, finite)


def subalgebra_generated(A: Algebra, X: Iterable[int] = ()) -> tuple[Algebra, tuple[int, ...]]:
    """Smallest subalgebra containing X; returns it with its inclusion map."""
    members = {A.zero, A.one, *X}
    frontier = list(members)
    tables = (A.join, A.meet, A.prod, A.impl)
    while frontier:
        new = set()
        for a in frontier:
            for b in list(members):
                for T in tables:
                    for c in (T[a][b], T[b][a]):
                        if c not in members:
                            new.add(c)
        members |= new
        frontier = list(new)
    emb = tuple(sorted(members))
    pos = {a: i for i, a in enumerate(emb)}

    def restrict(T):
        return tuple(tuple(pos[T[a][b]] for b in emb) for a in emb)

    B = Algebra(f"sub({A.name})", tuple(A.labels[a] for a in emb),
                restrict(A.join), restrict(A.meet), restrict(A.prod), restrict(A.impl),
                pos[A.zero], pos[A.one])
    return B, emb
