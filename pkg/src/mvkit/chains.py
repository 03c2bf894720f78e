"""Totally ordered finite MV- and Wajsberg algebras."""
from __future__ import annotations

import numpy as np

from mvkit.algebra import AlgebraError, FiniteMVAlgebra, WajsbergAlgebra, derive_order, find_isomorphism


def _chain_names(n: int) -> list[str]:
    return [f"x{i}" for i in range(n)]


def make_chain(n: int) -> FiniteMVAlgebra:
    """The Lukasiewicz chain on ``x0 < ... < x{n-1}``: truncated addition of indices."""
    if n < 1:
        raise AlgebraError("a chain needs at least one element")
    i = np.arange(n)
    oplus = np.minimum(i[:, None] + i[None, :], n - 1)
    return FiniteMVAlgebra(_chain_names(n), 0, oplus, (n - 1) - i)


def make_chain_wajsberg(n: int) -> WajsbergAlgebra:
    if n < 1:
        raise AlgebraError("a chain needs at least one element")
    top = n - 1
    star = np.empty((n, n), dtype=np.intc)
    for i in range(n):
        for j in range(n):
            if i <= j:
                star[i, j] = top
            else:
                k = top - i + j
                assert 0 <= k < top, (i, j, k)
                star[i, j] = k
    return WajsbergAlgebra(_chain_names(n), top, star, top - np.arange(n))


def chain_indices(a: FiniteMVAlgebra) -> list[int] | None:
    """Elements in ascending order when ``a`` is totally ordered, else ``None``."""
    order = derive_order(a)
    if not order.is_total:
        return None
    ranked = sorted(range(a.n), key=lambda x: int(order.height[x]))
    if find_isomorphism(a, make_chain(a.n)) is None:
        raise AssertionError("totally ordered MV-algebra is not isomorphic to the standard chain")
    return ranked
