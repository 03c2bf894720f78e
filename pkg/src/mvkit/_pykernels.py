"""Numpy fallback for the compiled kernels in ``_ckernels.pyx``.

Witness order is lexicographic by element index in both backends.
"""
from __future__ import annotations

import numpy as np


def _first(mask: np.ndarray) -> tuple[int, ...] | None:
    hits = np.argwhere(mask)
    if len(hits) == 0:
        return None
    return tuple(int(v) for v in hits[0])


def assoc_witness(t: np.ndarray) -> tuple[int, int, int] | None:
    for x in range(t.shape[0]):
        # rows are y, columns are z
        lhs = t[t[x, :], :]
        rhs = t[x, t]
        hit = _first(lhs != rhs)
        if hit is not None:
            return (x, *hit)
    return None


def lukasiewicz_witness(t: np.ndarray, neg: np.ndarray) -> tuple[int, int] | None:
    n = t.shape[0]
    col = np.arange(n)
    lhs = t[neg[t[neg[:, None], col[None, :]]], col[None, :]]
    return _first(lhs != lhs.T)


def syllogism_witness(s: np.ndarray, one: int) -> tuple[int, int, int] | None:
    for x in range(s.shape[0]):
        inner = s[s, s[x, :][None, :]]
        outer = s[s[x, :][:, None], inner]
        hit = _first(outer != one)
        if hit is not None:
            return (x, *hit)
    return None


def hom_witness(ta: np.ndarray, tb: np.ndarray, f: np.ndarray) -> tuple[int, int] | None:
    return _first(f[ta] != tb[f[:, None], f[None, :]])


def fib_table(t: np.ndarray, cap: int) -> tuple[np.ndarray, np.ndarray]:
    n = t.shape[0]
    p, q = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    p = p.astype(np.intc)
    q = q.astype(np.intc)
    index = np.full((n, n), -1, dtype=np.intc)
    limit = np.full((n, n), -1, dtype=np.intc)
    open_ = np.ones((n, n), dtype=bool)
    j = 0
    while j + 2 < cap and open_.any():
        r = t[p, q]
        done = open_ & (p == q) & (q == r)
        index[done] = j
        limit[done] = p[done]
        open_ &= ~done
        p, q = q, r
        j += 1
    return index, limit
