"""Named algebras used throughout the tests and the CLI."""

from __future__ import annotations

from fractions import Fraction

from .algebra import Algebra, verify_axioms

# 0 < d < c < a < 1 and 0 < b < a; tables in the element order below.
_G6_LABELS = ("0", "a", "b", "c", "d", "1")
_G6_COVERS = (("0", "d"), ("d", "c"), ("c", "a"), ("0", "b"), ("b", "a"), ("a", "1"))
_G6_IMPL = (
    ("1", "1", "1", "1", "1", "1"),
    ("0", "1", "b", "c", "c", "1"),
    ("c", "1", "1", "c", "c", "1"),
    ("b", "1", "b", "1", "a", "1"),
    ("b", "1", "b", "1", "1", "1"),
    ("0", "a", "b", "c", "d", "1"),
)
_G6_PROD = (
    ("0", "0", "0", "0", "0", "0"),
    ("0", "a", "b", "d", "d", "a"),
    ("0", "b", "b", "0", "0", "b"),
    ("0", "d", "0", "d", "d", "c"),
    ("0", "d", "0", "d", "d", "d"),
    ("0", "a", "b", "c", "d", "1"),
)


def _idx(rows, labels):
    return [[labels.index(x) for x in row] for row in rows]


def g6() -> Algebra:
    L = _G6_LABELS
    return Algebra.from_covers(
        "G6", L, [(L.index(x), L.index(y)) for x, y in _G6_COVERS],
        _idx(_G6_PROD, L), _idx(_G6_IMPL, L), L.index("0"), L.index("1"))


def _chain_labels(n: int) -> tuple[str, ...]:
    return tuple(str(Fraction(k, n - 1)) for k in range(n))


def godel_chain(n: int) -> Algebra:
    """n-element chain with product = min."""
    r = range(n)
    return Algebra(f"godel{n}", _chain_labels(n),
                   [[max(a, b) for b in r] for a in r],
                   [[min(a, b) for b in r] for a in r],
                   [[min(a, b) for b in r] for a in r],
                   [[n - 1 if a <= b else b for b in r] for a in r],
                   0, n - 1)


def lukasiewicz_chain(n: int) -> Algebra:
    """n-element chain {0, 1/(n-1), ..., 1} with x*y = max(0, x+y-1)."""
    r, top = range(n), n - 1
    return Algebra(f"lukasiewicz{n}", _chain_labels(n),
                   [[max(a, b) for b in r] for a in r],
                   [[min(a, b) for b in r] for a in r],
                   [[max(0, a + b - top) for b in r] for a in r],
                   [[min(top, top - a + b) for b in r] for a in r],
                   0, top)


def chain2() -> Algebra:
    return godel_chain(2).renamed("chain2")


def trivial() -> Algebra:
    return Algebra("trivial", ("0",), [[0]], [[0]], [[0]], [[0]], 0, 0)


def _product(*names):
    from .products import direct_product

    return direct_product([fixture(x) for x in names]).algebra


FIXTURES = {
    "G6": g6,
    "chain2": chain2,
    "godel3": lambda: godel_chain(3),
    "godel4": lambda: godel_chain(4),
    "lukasiewicz3": lambda: lukasiewicz_chain(3),
    "lukasiewicz4": lambda: lukasiewicz_chain(4),
    "boolean4": lambda: _product("chain2", "chain2").renamed("boolean4"),
    "godel3xgodel3": lambda: _product("godel3", "godel3").renamed("godel3xgodel3"),
    "chain2xlukasiewicz3": lambda: _product("chain2", "lukasiewicz3").renamed("chain2xlukasiewicz3"),
    "G6xchain2": lambda: _product("G6", "chain2").renamed("G6xchain2"),
}


def fixture(name: str) -> Algebra:
    """Named algebra, axiom-checked on load."""
    try:
        make = FIXTURES[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(FIXTURES)}") from None
    A = make()
    report = verify_axioms(A)
    if not report.ok:
        raise AssertionError(f"fixture {name} fails {report.violations[0].describe(A)}")
    return A
