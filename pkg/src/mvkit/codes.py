"""Boolean algebras of order 2**k and the square binary codes attached to them.

Doubling places a disjoint copy ``C`` of a Boolean algebra ``B`` in front of
``B`` itself.  Sums inside ``C`` stay in ``C``; every other sum is computed in
``B`` after sending the ``C`` operand to its positional twin.  Codes go back
the other way: a conforming code matrix has the block form
``[[0, M], [M, M]]`` and the same doubling rule rebuilds the algebra on its
codewords.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from mvkit.algebra import AlgebraError, FiniteMVAlgebra, derive_order, require_mv

BASE_MATRIX = np.array([[0, 1], [1, 1]], dtype=np.uint8)


def is_boolean(a: FiniteMVAlgebra) -> bool:
    return len(derive_order(a).booleans) == a.n


def base_boolean() -> FiniteMVAlgebra:
    """The two-element Boolean algebra on ``b < e``."""
    return FiniteMVAlgebra(["b", "e"], 0, [[0, 1], [1, 1]], [1, 0])


def _check_unique_complements(a: FiniteMVAlgebra) -> None:
    order = derive_order(a)
    for x in range(a.n):
        comps = [
            v for v in range(a.n)
            if order.join[x, v] == a.one and order.meet[x, v] == a.zero
        ]
        if comps != [a.negate(x)]:
            raise AssertionError(f"complement of {a.name(x)!r} is not unique or disagrees with neg")


def double_boolean(b: FiniteMVAlgebra) -> FiniteMVAlgebra:
    require_mv(b)
    if not is_boolean(b):
        raise AlgebraError("doubling needs a Boolean algebra (every element idempotent)")
    m = b.n
    suffix = "'"
    while any(name + suffix in b.elements for name in b.elements):
        suffix += "'"
    names = [name + suffix for name in b.elements] + list(b.elements)
    s = np.arange(2 * m) // m
    r = np.arange(2 * m) % m
    # any operand from B lifts the sum into B
    oplus = np.maximum(s[:, None], s[None, :]) * m + b.oplus[r[:, None], r[None, :]]
    neg = (1 - s) * m + b.neg[r]
    doubled = FiniteMVAlgebra(names, b.zero, oplus, neg)
    require_mv(doubled)
    if not is_boolean(doubled):
        raise AssertionError("doubling produced a non-Boolean algebra")
    _check_unique_complements(doubled)
    return doubled


def build_boolean(k: int) -> FiniteMVAlgebra:
    """Boolean algebra of order ``2**k`` by ``k - 1`` doublings of the base algebra."""
    if k < 1:
        raise AlgebraError("k must be at least 1")
    a = base_boolean()
    for _ in range(k - 1):
        a = double_boolean(a)
    return a


@dataclass(frozen=True)
class BinaryBlockCode:
    codewords: tuple[str, ...]

    def __post_init__(self):
        words = tuple(self.codewords)
        object.__setattr__(self, "codewords", words)
        if not words:
            raise AlgebraError("a code needs at least one codeword")
        n = len(words[0])
        for w in words:
            if len(w) != n:
                raise AlgebraError(f"codeword {w!r} has length {len(w)}, expected {n}")
            if set(w) - {"0", "1"}:
                raise AlgebraError(f"codeword {w!r} is not binary")
        if len(set(words)) != len(words):
            raise AlgebraError("codewords must be distinct")

    @property
    def length(self) -> int:
        return len(self.codewords[0])

    def __len__(self) -> int:
        return len(self.codewords)


@dataclass(frozen=True, eq=False)
class CodeMatrix:
    rows: np.ndarray

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CodeMatrix):
            return NotImplemented
        return np.array_equal(self.rows, other.rows)

    def format(self) -> str:
        return "\n".join(" ".join(str(int(v)) for v in row) for row in self.rows) + "\n"


def attach_code(a: FiniteMVAlgebra) -> BinaryBlockCode:
    """Row ``j`` has a 1 in column ``s`` exactly when ``e_j + e_s`` is the top element."""
    bits = a.oplus == a.one
    return BinaryBlockCode(tuple("".join("1" if v else "0" for v in row) for row in bits))


def code_matrix(c: BinaryBlockCode) -> CodeMatrix:
    if len(c) != c.length:
        raise AlgebraError(f"code has {len(c)} codewords of length {c.length}; matrix must be square")
    rows = np.array([[int(ch) for ch in w] for w in c.codewords], dtype=np.uint8)
    rows.setflags(write=False)
    return CodeMatrix(rows)


def _conforms(m: np.ndarray) -> bool:
    n = m.shape[0]
    if m.ndim != 2 or m.shape[1] != n or n < 2:
        return False
    if n == 2:
        return np.array_equal(m, BASE_MATRIX)
    if n % 2:
        return False
    h = n // 2
    top_right = m[:h, h:]
    return (
        not m[:h, :h].any()
        and np.array_equal(m[h:, :h], top_right)
        and np.array_equal(m[h:, h:], top_right)
        and _conforms(top_right)
    )


def check_matrix_recursion(m: CodeMatrix | np.ndarray) -> bool:
    rows = m.rows if isinstance(m, CodeMatrix) else np.asarray(m)
    return _conforms(rows)


def _block_table(m: np.ndarray) -> np.ndarray:
    n = m.shape[0]
    if n == 2:
        # w0 * w0 = w0, every other product is w1
        return np.array([[0, 1], [1, 1]], dtype=np.intc)
    h = n // 2
    sub = _block_table(m[:h, h:])
    i = np.arange(n)
    upper = (i >= h).astype(np.intc)
    return np.maximum(upper[:, None], upper[None, :]) * h + sub[(i % h)[:, None], (i % h)[None, :]]


def _meet_from_join(join: np.ndarray) -> np.ndarray:
    n = join.shape[0]
    ids = np.arange(n)
    leq = join == ids[None, :]
    height = leq.sum(axis=0)
    meet = np.empty((n, n), dtype=np.intc)
    for x in range(n):
        for y in range(n):
            lower = np.flatnonzero(leq[:, x] & leq[:, y])
            if len(lower) == 0:
                raise AlgebraError("join table does not induce a lattice")
            z = lower[np.argmax(height[lower])]
            if not leq[lower, z].all():
                raise AlgebraError("join table does not induce a lattice")
            meet[x, y] = z
    return meet


def code_to_boolean(c: BinaryBlockCode) -> FiniteMVAlgebra:
    """Rebuild the Boolean algebra whose elements are the codewords of ``c``."""
    m = code_matrix(c)
    if not check_matrix_recursion(m):
        raise AlgebraError("code matrix is not of the recursive form [[0, M], [M, M]]")
    words = c.codewords
    if any(u >= v for u, v in zip(words, words[1:])):
        raise AlgebraError("codewords must be in strictly increasing lexicographic order")
    join = _block_table(m.rows)
    n = len(words)
    ids = np.arange(n)
    bottom = [x for x in range(n) if np.array_equal(join[x], ids)]
    top = [x for x in range(n) if np.all(join[x] == x)]
    if len(bottom) != 1 or len(top) != 1:
        raise AlgebraError("join table has no unique bottom and top")
    bottom, top = bottom[0], top[0]
    meet = _meet_from_join(join)
    X, Y, Z = ids[:, None, None], ids[None, :, None], ids[None, None, :]
    if np.any(join[X, meet[Y, Z]] != meet[join[X, Y], join[X, Z]]) or np.any(
        meet[X, join[Y, Z]] != join[meet[X, Y], meet[X, Z]]
    ):
        raise AlgebraError("induced lattice is not distributive")
    neg = []
    for w in range(n):
        comps = np.flatnonzero((join[w] == top) & (meet[w] == bottom))
        if len(comps) != 1:
            raise AlgebraError(f"codeword {words[w]} has {len(comps)} complements")
        neg.append(int(comps[0]))
    a = FiniteMVAlgebra(words, bottom, join, neg)
    require_mv(a)
    if not is_boolean(a):
        raise AssertionError("rebuilt algebra is not Boolean")
    return a


def hamming(u: str, v: str) -> int:
    return sum(p != q for p, q in zip(u, v))


def min_distance(c: BinaryBlockCode) -> int:
    if len(c) < 2:
        raise AlgebraError("minimum distance needs at least two codewords")
    return min(hamming(u, v) for u, v in combinations(c.codewords, 2))
