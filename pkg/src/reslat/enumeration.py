"""Brute-force catalogs of all residuated lattices of a small order."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import permutations, product

import numpy as np

from .algebra import Algebra, LatticeError, lattice_from_order, verify_axioms

DEFAULT_ORDER_CAP = 5
HARD_ORDER_CAP = 6
_LETTERS = "abcdefghijklmnopqrstuvwxyz"


class OrderCapError(ValueError):
    pass


@dataclass
class Catalog:
    order: int
    entries: list[Algebra]
    counts: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


# -- lattices ---------------------------------------------------------------

def _relabel(T: np.ndarray, p: np.ndarray) -> np.ndarray:
    """Table of the same operation after renaming element i to p[i]."""
    q = np.argsort(p)
    return p[T[np.ix_(q, q)]]


def _middle_perms(n: int):
    for mid in permutations(range(1, n - 1)):
        yield np.array((0, *mid, n - 1))


def bounded_lattices(n: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """(join, meet) of every n-element lattice up to isomorphism; 0 = index 0
    and 1 = index n-1."""
    if n == 1:
        z = np.zeros((1, 1), dtype=np.intp)
        return [(z, z)]
    m = n - 2
    pairs = [(i, j) for i in range(m) for j in range(m) if i != j]
    seen, out = set(), []
    for bits in range(1 << len(pairs)):
        rel = np.eye(m, dtype=bool)
        for k, (i, j) in enumerate(pairs):
            if bits >> k & 1:
                rel[i, j] = True
        if np.any(rel & rel.T & ~np.eye(m, dtype=bool)):
            continue
        if np.any((rel.astype(int) @ rel.astype(int) > 0) & ~rel):
            continue
        leq = np.zeros((n, n), dtype=bool)
        leq[0, :] = True
        leq[:, n - 1] = True
        leq[1:n - 1, 1:n - 1] = rel
        try:
            join, meet = lattice_from_order(leq)
        except LatticeError:
            continue
        J = np.array(join, dtype=np.intp)
        key = min(tuple(_relabel(J, p).ravel()) for p in _middle_perms(n))
        if key in seen:
            continue
        seen.add(key)
        out.append((J, np.array(meet, dtype=np.intp)))
    return out


# -- monoid tables ----------------------------------------------------------

def _residuated_products(J: np.ndarray, M: np.ndarray):
    """Every commutative, associative, join-preserving x with unit top.

    Entries x(a, b) <= a ^ b and monotonicity are used to prune."""
    n = J.shape[0]
    top = n - 1
    leq = M == np.arange(n)[:, None]
    P = np.full((n, n), -1, dtype=np.intp)
    P[0, :] = P[:, 0] = 0
    P[top, :] = np.arange(n)
    P[:, top] = np.arange(n)
    free = [(i, j) for i in range(1, top) for j in range(i, top)]

    def monotone_ok(i, j, v):
        for a in range(n):
            for b in range(n):
                w = P[a, b]
                if w < 0:
                    continue
                if leq[a, i] and leq[b, j] and not leq[w, v]:
                    return False
                if leq[i, a] and leq[j, b] and not leq[v, w]:
                    return False
        return True

    def rec(k):
        if k == len(free):
            yield P.copy()
            return
        i, j = free[k]
        for v in np.flatnonzero(leq[:, M[i, j]]):
            v = int(v)
            P[i, j] = P[j, i] = v
            if monotone_ok(i, j, v):
                yield from rec(k + 1)
            P[i, j] = P[j, i] = -1

    x = np.arange(n)
    for T in rec(0):
        if np.any(T[T[:, :, None], x[None, None, :]] != T[x[:, None, None], T[None, :, :]]):
            continue
        # a x (b v c) = (a x b) v (a x c): x a preserves joins, so a residuum exists
        if np.any(T[x[:, None, None], J[None, :, :]] != J[T[:, :, None], T[:, None, :]]):
            continue
        yield T


def _residuum(P: np.ndarray, leq: np.ndarray, J: np.ndarray) -> np.ndarray:
    n = P.shape[0]
    I = np.zeros((n, n), dtype=np.intp)
    for a in range(n):
        for b in range(n):
            best = 0
            for c in range(n):
                if leq[P[c, a], b]:
                    best = J[best, c]
            I[a, b] = best
    return I


def canonical_key(A: Algebra) -> tuple:
    """Least (join, prod) table tuple over relabellings fixing 0 and 1."""
    J, P = A.arrays["join"], A.arrays["prod"]
    n = A.n
    rest = [x for x in A.elements if x not in (A.zero, A.one)]
    best = None
    for mid in permutations(range(1, n - 1) if n > 1 else ()):
        p = np.empty(n, dtype=np.intp)
        p[A.zero] = 0
        p[A.one] = n - 1
        for old, new in zip(rest, mid):
            p[old] = new
        key = (tuple(_relabel(J, p).ravel()), tuple(_relabel(P, p).ravel()))
        if best is None or key < best:
            best = key
    return best


def _from_key(n: int, key: tuple, name: str) -> Algebra:
    J = np.array(key[0], dtype=np.intp).reshape(n, n)
    P = np.array(key[1], dtype=np.intp).reshape(n, n)
    leq = J == np.arange(n)[None, :]
    M = np.array(lattice_from_order(leq)[1], dtype=np.intp)
    labels = ("0",) + tuple(_LETTERS[i] for i in range(n - 2)) + (("1",) if n > 1 else ())
    return Algebra(name, labels, J, M, P, _residuum(P, leq, J), 0, n - 1)


def enumerate_algebras(n: int, cap: int = DEFAULT_ORDER_CAP) -> Catalog:
    """All residuated lattices with n elements up to isomorphism."""
    if not 1 <= n <= min(cap, HARD_ORDER_CAP):
        raise OrderCapError(f"order {n} outside 1..{min(cap, HARD_ORDER_CAP)}")
    keys = set()
    for J, M in bounded_lattices(n):
        for P in _residuated_products(J, M):
            leq = J == np.arange(n)[None, :]
            I = _residuum(P, leq, J)
            A = Algebra("candidate", tuple(str(i) for i in range(n)), J, M, P, I, 0, n - 1)
            if not verify_axioms(A).ok:
                raise AssertionError("enumerated table fails the axioms")
            keys.add(canonical_key(A))
    entries = [_from_key(n, key, f"RL{n}_{k + 1}") for k, key in enumerate(sorted(keys))]
    return Catalog(n, entries, tally(entries))


def tally(entries) -> dict:
    from .products import classify

    counts = Counter()
    for A in entries:
        counts["total"] += 1
        for flag, value in classify(A).as_dict().items():
            if value is True:
                counts[flag] += 1
    return dict(sorted(counts.items()))


def catalog_up_to(n: int) -> list[Algebra]:
    out = []
    for k in range(1, n + 1):
        out.extend(enumerate_algebras(k).entries)
    return out


# -- independent slow path --------------------------------------------------

def _all_tables(n: int, one: int, full: bool):
    if full:
        yield from product(range(n), repeat=n * n)
        return
    # commutative tables with unit `one`; every other entry is free
    free = [(a, b) for a in range(n) for b in range(a, n) if one not in (a, b)]
    for vals in product(range(n), repeat=len(free)):
        flat = [0] * (n * n)
        for a in range(n):
            flat[a * n + one] = flat[one * n + a] = a
        for (a, b), v in zip(free, vals):
            flat[a * n + b] = flat[b * n + a] = v
        yield flat


def _associative(flat, n: int) -> bool:
    for a in range(n):
        for b in range(n):
            ab = flat[a * n + b]
            for c in range(n):
                if flat[ab * n + c] != flat[a * n + flat[b * n + c]]:
                    return False
    return True


def enumerate_slow(n: int, full: bool | None = None) -> int:
    """Count n-element residuated lattices by brute force.

    Shares no code with :func:`enumerate_algebras`: lattices come from all
    reflexive relations, isomorphism classes from all n! relabellings, and
    products from all n**(n*n) tables (``full``, the default up to order 3)
    or from all commutative tables with unit 1 (order 4).
    """
    full = n <= 3 if full is None else full
    if n > 4 or (full and n > 3):
        raise OrderCapError("the slow path is only practical up to order 3 (4 without full)")
    E = range(n)
    classes = set()
    for bits in product((False, True), repeat=n * n):
        le = [[bits[a * n + b] or a == b for b in E] for a in E]
        if any(le[a][b] and le[b][a] and a != b for a in E for b in E):
            continue
        if any(le[a][b] and le[b][c] and not le[a][c] for a in E for b in E for c in E):
            continue
        bottoms = [z for z in E if all(le[z][a] for a in E)]
        tops = [t for t in E if all(le[a][t] for a in E)]
        if not bottoms or not tops:
            continue
        join = {}
        ok = True
        for a in E:
            for b in E:
                ubs = [u for u in E if le[a][u] and le[b][u]]
                least = [u for u in ubs if all(le[u][v] for v in ubs)]
                lbs = [u for u in E if le[u][a] and le[u][b]]
                great = [u for u in lbs if all(le[v][u] for v in lbs)]
                if len(least) != 1 or len(great) != 1:
                    ok = False
                join[a, b] = least[0] if least else None
        if not ok:
            continue
        one = tops[0]
        for flat in _all_tables(n, one, full):
            mul = lambda a, b: flat[a * n + b]
            if any(flat[a * n + one] != a for a in E):
                continue
            if any(flat[a * n + b] != flat[b * n + a] for a in E for b in E):
                continue
            if not _associative(flat, n):
                continue
            res = {}
            for a in E:
                for b in E:
                    below = [c for c in E if le[mul(c, a)][b]]
                    top_of = [c for c in below if all(le[d][c] for d in below)]
                    if not top_of:
                        break
                    res[a, b] = top_of[0]
                else:
                    continue
                break
            if len(res) != n * n:
                continue
            if any(le[a][res[b, c]] != le[mul(a, b)][c] for a in E for b in E for c in E):
                continue
            forms = []
            for p in permutations(E):
                forms.append((tuple(le[p.index(a)][p.index(b)] for a in E for b in E),
                              tuple(p[mul(p.index(a), p.index(b))] for a in E for b in E)))
            classes.add(min(forms))
    return len(classes)
