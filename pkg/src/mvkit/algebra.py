"""Finite MV-algebras and Wajsberg algebras given by Cayley tables.

Elements are addressed by their integer position in ``elements``; names
only matter for parsing and reports.  Every table is stored as a
read-only ``numpy`` array of C ints so the kernels can use it directly.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from mvkit import kernels


class AlgebraError(ValueError):
    """Raised for structurally broken tables or algebras failing a precondition."""


def _frozen_table(values, shape: tuple[int, ...], n: int, what: str) -> np.ndarray:
    arr = np.array(values, dtype=np.intc)
    if arr.shape != shape:
        raise AlgebraError(f"{what} has shape {arr.shape}, expected {shape}")
    if arr.size and (arr.min() < 0 or arr.max() >= n):
        raise AlgebraError(f"{what} refers to an element outside 0..{n - 1}")
    arr = np.ascontiguousarray(arr)
    arr.setflags(write=False)
    return arr


def _check_names(elements: Sequence[str]) -> tuple[str, ...]:
    names = tuple(str(e) for e in elements)
    if not names:
        raise AlgebraError("an algebra needs at least one element")
    for name in names:
        if not name or any(ch.isspace() for ch in name) or name.startswith("#"):
            raise AlgebraError(f"invalid element name {name!r}")
    if len(set(names)) != len(names):
        dup = next(n for n in names if names.count(n) > 1)
        raise AlgebraError(f"duplicate element name {dup!r}")
    return names


class _Carrier:
    __slots__ = ("elements", "_index", "_cache")

    def __init__(self, elements: Sequence[str]):
        self.elements = _check_names(elements)
        self._index = {name: i for i, name in enumerate(self.elements)}
        self._cache: dict = {}

    @property
    def n(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise AlgebraError(f"unknown element {name!r}") from None

    def name(self, i: int) -> str:
        return self.elements[i]

    def names(self, ids: Iterable[int]) -> tuple[str, ...]:
        return tuple(self.elements[i] for i in ids)


class FiniteMVAlgebra(_Carrier):
    """An algebra ``(X, oplus, neg, zero)`` on ``n`` named elements.

    Construction only checks that the tables are total and well-typed;
    use :func:`verify_mv_axioms` for the MV axioms themselves.
    """

    __slots__ = ("zero", "oplus", "neg")

    def __init__(self, elements: Sequence[str], zero: int, oplus, neg):
        super().__init__(elements)
        n = self.n
        if not 0 <= int(zero) < n:
            raise AlgebraError(f"zero index {zero} out of range")
        self.zero = int(zero)
        self.oplus = _frozen_table(oplus, (n, n), n, "oplus table")
        self.neg = _frozen_table(neg, (n,), n, "negation table")

    @property
    def one(self) -> int:
        return int(self.neg[self.zero])

    def add(self, x: int, y: int) -> int:
        return int(self.oplus[x, y])

    def negate(self, x: int) -> int:
        return int(self.neg[x])

    def odot(self, x: int, y: int) -> int:
        neg = self.neg
        return int(neg[self.oplus[neg[x], neg[y]]])

    def ominus(self, x: int, y: int) -> int:
        return self.odot(x, int(self.neg[y]))

    def multiple(self, m: int, x: int) -> int:
        """``x + x + ... + x`` with ``m`` summands; ``0 * x`` is zero."""
        chain = self._multiples(x)
        return chain[min(m, len(chain) - 1)]

    def _multiples(self, x: int) -> list[int]:
        key = ("multiples", x)
        chain = self._cache.get(key)
        if chain is None:
            chain = [self.zero, x]
            while True:
                nxt = int(self.oplus[chain[-1], x])
                if nxt == chain[-1]:
                    break
                if nxt in chain:
                    raise AlgebraError(f"multiples of {self.elements[x]!r} cycle without saturating")
                chain.append(nxt)
            self._cache[key] = chain
        return chain

    def renamed(self, names: Sequence[str]) -> FiniteMVAlgebra:
        return FiniteMVAlgebra(names, self.zero, self.oplus, self.neg)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteMVAlgebra):
            return NotImplemented
        return (
            self.elements == other.elements
            and self.zero == other.zero
            and np.array_equal(self.oplus, other.oplus)
            and np.array_equal(self.neg, other.neg)
        )

    def same_tables(self, other: FiniteMVAlgebra) -> bool:
        """Entrywise equality by position, ignoring element names."""
        return (
            self.n == other.n
            and self.zero == other.zero
            and np.array_equal(self.oplus, other.oplus)
            and np.array_equal(self.neg, other.neg)
        )

    def __hash__(self) -> int:
        return hash((self.elements, self.zero, self.oplus.tobytes(), self.neg.tobytes()))

    def __repr__(self) -> str:
        return f"FiniteMVAlgebra(n={self.n}, elements={' '.join(self.elements)!r})"


class WajsbergAlgebra(_Carrier):
    """An algebra ``(W, star, comp, one)``; ``star`` is the implication."""

    __slots__ = ("one", "star", "comp")

    def __init__(self, elements: Sequence[str], one: int, star, comp):
        super().__init__(elements)
        n = self.n
        if not 0 <= int(one) < n:
            raise AlgebraError(f"one index {one} out of range")
        self.one = int(one)
        self.star = _frozen_table(star, (n, n), n, "star table")
        self.comp = _frozen_table(comp, (n,), n, "complement table")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WajsbergAlgebra):
            return NotImplemented
        return (
            self.elements == other.elements
            and self.one == other.one
            and np.array_equal(self.star, other.star)
            and np.array_equal(self.comp, other.comp)
        )

    def __hash__(self) -> int:
        return hash((self.elements, self.one, self.star.tobytes(), self.comp.tobytes()))

    def __repr__(self) -> str:
        return f"WajsbergAlgebra(n={self.n}, elements={' '.join(self.elements)!r})"


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of an exhaustive axiom check: at most one witness per axiom."""

    violations: tuple[tuple[str, tuple[str, ...]], ...] = ()

    @property
    def passed(self) -> bool:
        return not self.violations

    def lines(self, title: str) -> list[str]:
        if self.passed:
            return [f"{title}: passed"]
        out = [f"{title}: FAILED"]
        for axiom, witness in self.violations:
            out.append(f"  {axiom}: ({', '.join(witness)})")
        return out


def _first(mask: np.ndarray) -> tuple[int, ...] | None:
    hits = np.argwhere(mask)
    return None if len(hits) == 0 else tuple(int(v) for v in hits[0])


def verify_mv_axioms(a: FiniteMVAlgebra) -> AxiomReport:
    cached = a._cache.get("mv_report")
    if cached is not None:
        return cached
    t, neg, n = a.oplus, a.neg, a.n
    one = a.one
    ids = np.arange(n)
    checks = [
        ("commutativity", _first(t != t.T)),
        ("associativity", kernels.assoc_witness(t)),
        ("zero identity", _first(t[:, a.zero] != ids)),
        ("absorbing one", _first(t[:, one] != one)),
        ("involution", _first(neg[neg] != ids)),
        ("lukasiewicz", kernels.lukasiewicz_witness(t, neg)),
    ]
    report = AxiomReport(tuple((name, a.names(w)) for name, w in checks if w is not None))
    a._cache["mv_report"] = report
    return report


def verify_wajsberg_axioms(w: WajsbergAlgebra) -> AxiomReport:
    cached = w._cache.get("wj_report")
    if cached is not None:
        return cached
    s, comp, one, n = w.star, w.comp, w.one, w.n
    ids = np.arange(n)
    lhs = s[s, ids[None, :]]  # (x*y)*y
    checks = [
        ("syllogism", kernels.syllogism_witness(s, one)),
        ("commutation", _first(lhs != lhs.T)),
        ("contraposition", _first(s[s[comp[:, None], comp[None, :]], s.T] != one)),
        ("unit", _first(s[one, :] != ids)),
    ]
    report = AxiomReport(tuple((name, w.names(v)) for name, v in checks if v is not None))
    w._cache["wj_report"] = report
    return report


def require_mv(a: FiniteMVAlgebra) -> None:
    report = verify_mv_axioms(a)
    if not report.passed:
        axiom, witness = report.violations[0]
        raise AlgebraError(f"not an MV-algebra: {axiom} fails at ({', '.join(witness)})")


@dataclass(frozen=True, eq=False)
class OrderStructure:
    leq: np.ndarray
    join: np.ndarray
    meet: np.ndarray
    booleans: frozenset[int]
    is_total: bool
    height: np.ndarray = field(repr=False)

    def covers(self) -> list[tuple[int, int]]:
        """Hasse diagram edges ``(x, y)`` with ``x < y`` and nothing strictly between."""
        n = self.leq.shape[0]
        lt = self.leq & ~np.eye(n, dtype=bool)
        # x < z < y for some z
        between = (lt.astype(np.int64) @ lt.astype(np.int64)) > 0
        edges = np.argwhere(lt & ~between)
        return [(int(x), int(y)) for x, y in edges]

    def down(self, x: int) -> list[int]:
        return [int(z) for z in np.flatnonzero(self.leq[:, x])]


def derive_order(a: FiniteMVAlgebra) -> OrderStructure:
    cached = a._cache.get("order")
    if cached is not None:
        return cached
    require_mv(a)
    t, neg = a.oplus, a.neg
    n = a.n
    ids = np.arange(n)
    leq = t[neg[:, None], ids[None, :]] == a.one
    join = t[neg[t[neg[:, None], ids[None, :]]], ids[None, :]]
    meet = neg[join[neg[:, None], neg[None, :]]]
    for arr in (leq, join, meet):
        arr.setflags(write=False)
    booleans = frozenset(int(x) for x in np.flatnonzero(t[ids, ids] == ids))
    is_total = bool(np.all(leq | leq.T))
    height = leq.sum(axis=0)
    order = OrderStructure(leq, join, meet, booleans, is_total, height)
    a._cache["order"] = order
    return order


def odot(a: FiniteMVAlgebra, x: int, y: int) -> int:
    return a.odot(x, y)


def ominus(a: FiniteMVAlgebra, x: int, y: int) -> int:
    return a.ominus(x, y)


def secondary_ops(a: FiniteMVAlgebra, kind: str, x: int, y: int) -> int:
    if kind == "odot":
        return a.odot(x, y)
    if kind == "ominus":
        return a.ominus(x, y)
    raise AlgebraError(f"unknown secondary operation {kind!r}")


def check_order_equivalences(a: FiniteMVAlgebra) -> AxiomReport:
    """Check that the four usual characterisations of ``x <= y`` agree on every pair."""
    t, neg, n = a.oplus, a.neg, a.n
    ids = np.arange(n)
    X, Y = ids[:, None], ids[None, :]
    # x odot neg y = neg(neg x + y)
    by_odot = neg[t[neg[X], Y]] == a.zero
    by_oplus = t[neg[X], Y] == a.one
    y_minus_x = neg[t[neg[Y], X]]
    by_difference = t[X, y_minus_x] == Y
    by_witness = np.zeros((n, n), dtype=bool)
    for x in range(n):
        by_witness[x, t[x, :]] = True
    agree = (by_odot == by_oplus) & (by_oplus == by_difference) & (by_difference == by_witness)
    hit = _first(~agree)
    if hit is None:
        return AxiomReport()
    return AxiomReport((("order equivalence", a.names(hit)),))


def to_wajsberg(a: FiniteMVAlgebra) -> WajsbergAlgebra:
    star = a.oplus[a.neg[:, None], np.arange(a.n)[None, :]]
    return WajsbergAlgebra(a.elements, a.one, star, a.neg)


def from_wajsberg(w: WajsbergAlgebra) -> FiniteMVAlgebra:
    report = verify_wajsberg_axioms(w)
    if not report.passed:
        axiom, witness = report.violations[0]
        raise AlgebraError(f"not a Wajsberg algebra: {axiom} fails at ({', '.join(witness)})")
    oplus = w.star[w.comp[:, None], np.arange(w.n)[None, :]]
    return FiniteMVAlgebra(w.elements, int(w.comp[w.one]), oplus, w.comp)


def is_mv_homomorphism(a: FiniteMVAlgebra, b: FiniteMVAlgebra, f: Sequence[int]) -> bool:
    """Brute-force check that ``f`` maps zero, negation and oplus of ``a`` onto ``b``."""
    f = np.asarray(f, dtype=np.intc)
    if f.shape != (a.n,) or (a.n and (f.min() < 0 or f.max() >= b.n)):
        return False
    if f[a.zero] != b.zero or np.any(f[a.neg] != b.neg[f]):
        return False
    return kernels.hom_witness(a.oplus, b.oplus, np.ascontiguousarray(f)) is None


def is_mv_isomorphism(a: FiniteMVAlgebra, b: FiniteMVAlgebra, f: Sequence[int]) -> bool:
    return a.n == b.n and len(set(int(v) for v in f)) == a.n and is_mv_homomorphism(a, b, f)


def _signatures(a: FiniteMVAlgebra) -> list[tuple]:
    order = derive_order(a)
    up = order.leq.sum(axis=1)
    base = [
        (x in order.booleans, int(order.height[x]), int(up[x]), len(a._multiples(x)))
        for x in range(a.n)
    ]
    t = a.oplus
    return [(base[x], tuple(sorted(base[int(z)] for z in t[x]))) for x in range(a.n)]


def find_isomorphism(a: FiniteMVAlgebra, b: FiniteMVAlgebra) -> dict[int, int] | None:
    """Search for a bijection preserving zero, negation and oplus.

    Backtracking over element images; candidates are restricted to elements
    with the same invariants and every assignment is propagated through the
    tables before branching again.
    """
    n = a.n
    if n != b.n:
        return None
    sig_a, sig_b = _signatures(a), _signatures(b)
    if sorted(sig_a) != sorted(sig_b):
        return None
    ta, tb = a.oplus.tolist(), b.oplus.tolist()
    na, nb = a.neg.tolist(), b.neg.tolist()
    f = [-1] * n
    g = [-1] * n
    trail: list[int] = []

    def assign(x: int, y: int) -> bool:
        queue = [(x, y)]
        while queue:
            u, v = queue.pop()
            if f[u] == v:
                continue
            if f[u] != -1 or g[v] != -1 or sig_a[u] != sig_b[v]:
                return False
            f[u], g[v] = v, u
            trail.append(u)
            queue.append((na[u], nb[v]))
            row_a, row_b = ta[u], tb[v]
            for w in trail:
                queue.append((row_a[w], row_b[f[w]]))
        return True

    def undo(mark: int) -> None:
        while len(trail) > mark:
            u = trail.pop()
            g[f[u]] = -1
            f[u] = -1

    def search() -> bool:
        if len(trail) == n:
            return True
        best, best_cands = -1, None
        for x in range(n):
            if f[x] != -1:
                continue
            cands = [y for y in range(n) if g[y] == -1 and sig_b[y] == sig_a[x]]
            if best_cands is None or len(cands) < len(best_cands):
                best, best_cands = x, cands
                if len(cands) <= 1:
                    break
        for y in best_cands:
            mark = len(trail)
            if assign(best, y) and search():
                return True
            undo(mark)
        return False

    if not (assign(a.zero, b.zero) and search()):
        return None
    if not is_mv_isomorphism(a, b, f):
        raise AssertionError("isomorphism search returned a map that does not preserve the tables")
    oa, ob = derive_order(a), derive_order(b)
    fa = np.array(f)
    if np.any(fa[oa.join] != ob.join[fa[:, None], fa[None, :]]) or np.any(
        fa[oa.meet] != ob.meet[fa[:, None], fa[None, :]]
    ):
        raise AssertionError("MV-isomorphism failed to preserve the lattice operations")
    return {x: f[x] for x in range(n)}
