"""Exhaustive identity suites evaluated over every tuple of elements."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import Algebra
from .boolean_center import boolean_center


@dataclass(frozen=True)
class LawResult:
    law: str
    statement: str
    checked: int
    failures: int
    witness: tuple[int, ...] | None = None

    @property
    def ok(self) -> bool:
        return self.failures == 0


def _result(law, statement, holds: np.ndarray, domain: np.ndarray | None = None, index=None):
    holds = np.asarray(holds, dtype=bool)
    dom = np.ones_like(holds) if domain is None else np.broadcast_to(domain, holds.shape)
    bad = dom & ~holds
    witness = None
    if bad.any():
        w = tuple(int(i) for i in np.argwhere(bad)[0])
        witness = tuple(index[k][i] for k, i in enumerate(w)) if index is not None else w
    return LawResult(law, statement, int(dom.sum()), int(bad.sum()), witness)


def basic_identities(A: Algebra) -> list[LawResult]:
    """The thirteen standard identities of residuated lattices."""
    J, M, P, I = (A.arrays[k] for k in ("join", "meet", "prod", "impl"))
    z, o = A.zero, A.one
    x = np.arange(A.n)
    le = A.order
    N = I[:, z]
    a3, b3, c3 = x[:, None, None], x[None, :, None], x[None, None, :]
    out = [
        _result("negation-constants", "neg 0 = 1 and neg 1 = 0",
                np.array([N[z] == o and N[o] == z])),
        _result("unit-implication", "a = 1 -> a and 1 = a -> 1",
                (I[o, :] == x) & (I[:, o] == o)),
        _result("order-by-implication", "a <= b iff a -> b = 1, and a <= neg b iff a * b = 0",
                (le == (I == o)) & (le[:, N] == (P == z))),
    ]
    # a <= b and c <= d imply a*c <= b*d, over axes (a, b, c, d)
    dom4 = le[:, :, None, None] & le[None, None, :, :]
    out.append(_result("product-monotone", "a <= b and c <= d imply a * c <= b * d",
                       le[P[:, None, :, None], P[None, :, None, :]], dom4))
    # axes (a, b, c)
    out.append(_result("implication-monotone",
                       "a <= b implies c -> a <= c -> b and b -> c <= a -> c",
                       le[I[c3, a3], I[c3, b3]] & le[I[b3, c3], I[a3, c3]], le[:, :, None]))
    out += [
        _result("product-below-meet", "a * b <= a ^ b", le[P, M]),
        _result("weakening", "a <= b -> a", le[x[:, None], I.T]),
        _result("zero-laws", "a * 0 = 0, 0 -> a = 1 and (a <-> 0) = neg a",
                (P[:, z] == z) & (I[z, :] == o) & (M[I[:, z], I[z, :]] == N)),
        _result("double-negation", "a <= neg neg a and neg neg neg a = neg a",
                le[x, N[N]] & (N[N[N]] == N)),
        _result("product-distributes", "a * (b v c) = (a * b) v (a * c)",
                P[a3, J[b3, c3]] == J[P[a3, b3], P[a3, c3]]),
        _result("join-antecedent", "(a v b) -> c = (a -> c) ^ (b -> c)",
                I[J[a3, b3], c3] == M[I[a3, c3], I[b3, c3]]),
        _result("prefixing", "a -> b <= (c -> a) -> (c -> b)",
                le[I[a3, b3], I[I[c3, a3], I[c3, b3]]]),
        _result("exchange", "a -> (b -> c) = b -> (a -> c)",
                I[a3, I[b3, c3]] == I[b3, I[a3, c3]]),
    ]
    return out


def boolean_identities(A: Algebra) -> list[LawResult]:
    """Identities for complemented e, f and arbitrary a, b."""
    J, M, I = (A.arrays[k] for k in ("join", "meet", "impl"))
    le = A.order
    N = I[:, A.zero]
    B = np.array(boolean_center(A).members, dtype=np.intp)
    x = np.arange(A.n)
    e2, a2 = B[:, None], x[None, :]
    e3, a3, b3 = B[:, None, None], x[None, :, None], x[None, None, :]
    f3 = B[None, :, None]
    idx2, idx3 = (B, x), (B, x, x)
    return [
        _result("complement-antecedent", "e <= a implies neg e -> a = a",
                I[N[e2], a2] == a2, le[e2, a2], idx2),
        _result("contraction", "e -> a = e -> (e -> a)",
                I[e2, a2] == I[e2, I[e2, a2]], index=idx2),
        _result("self-distribution", "e -> (a -> b) = (e -> a) -> (e -> b)",
                I[e3, I[a3, b3]] == I[I[e3, a3], I[e3, b3]], index=idx3),
        _result("negated-antecedent", "neg e -> a = e v a",
                I[N[e2], a2] == J[e2, a2], index=idx2),
        _result("join-distributes-over-complemented-meet", "a v (e ^ f) = (a v e) ^ (a v f)",
                (J[x[None, None, :], M[e3, f3]] == M[J[x[None, None, :], e3], J[x[None, None, :], f3]]),
                index=(B, B, x)),
    ]


def check_laws(A: Algebra) -> list[LawResult]:
    return basic_identities(A) + boolean_identities(A)
