"""Fibonacci-type sequences ``u(n+2) = u(n) + u(n+1)`` inside a finite MV-algebra.

A sequence is declared stationary at the first index ``k`` where three
consecutive terms agree: then ``u(k) + u(k) = u(k)`` and every later term
equals ``u(k)``.  Because the pair ``(u(n), u(n+1))`` takes at most
``n_elements**2`` values, ``n_elements**2 + 3`` terms suffice; running past that
bound means the sequence cycles.
"""
from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from mvkit import kernels
from mvkit.algebra import FiniteMVAlgebra, require_mv


class NonStationaryError(RuntimeError):
    """A sequence failed to become constant within the step cap."""


def default_cap(a: FiniteMVAlgebra) -> int:
    override = os.environ.get("MVKIT_MAX_STEPS")
    if override:
        return int(override)
    return a.n * a.n + 3


@dataclass(frozen=True)
class FibonacciTrace:
    x: int
    y: int
    terms: tuple[int, ...]
    stationary_index: int
    limit: int

    def report(self, a: FiniteMVAlgebra) -> str:
        lines = [f"u_{i} = {a.name(u)}" for i, u in enumerate(self.terms)]
        lines.append(f"stationary_index: {self.stationary_index}")
        lines.append(f"limit: {a.name(self.limit)}")
        return "\n".join(lines) + "\n"


def fib_trace(a: FiniteMVAlgebra, x: int, y: int, max_steps: int | None = None) -> FibonacciTrace:
    cap = default_cap(a) if max_steps is None else max_steps
    terms = [x, y]
    while True:
        if len(terms) >= 3 and terms[-3] == terms[-2] == terms[-1]:
            k = len(terms) - 3
            return FibonacciTrace(x, y, tuple(terms), k, terms[k])
        if len(terms) >= cap:
            raise NonStationaryError(
                f"sequence <{a.name(x)},{a.name(y)}> not stationary after {cap} terms"
            )
        terms.append(a.add(terms[-2], terms[-1]))


def lambda_map(a: FiniteMVAlgebra, x: int, y: int) -> int:
    """The value the sequence starting ``x, y`` settles on."""
    return fib_trace(a, x, y).limit


def lambda_table(a: FiniteMVAlgebra, max_steps: int | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Stationary indices and limits for every starting pair at once."""
    cap = default_cap(a) if max_steps is None else max_steps
    index, limit = kernels.fib_table(a.oplus, cap)
    if np.any(index < 0):
        x, y = (int(v) for v in np.argwhere(index < 0)[0])
        raise NonStationaryError(
            f"sequence <{a.name(x)},{a.name(y)}> not stationary after {cap} terms"
        )
    return index, limit


def fibonacci_number(n: int) -> int:
    """Integer Fibonacci numbers with ``f(-1) = 1``, ``f(0) = 0``, ``f(1) = 1``."""
    if n < -1:
        raise ValueError("defined for n >= -1")
    prev, cur = 1, 0
    for _ in range(n + 1):
        prev, cur = cur, prev + cur
    return prev


def _repeat_add(a: FiniteMVAlgebra, m: int, z: int) -> int:
    acc = a.zero
    for _ in range(m):
        acc = a.add(acc, z)
    return acc


def closed_form_term(a: FiniteMVAlgebra, x: int, y: int, n: int, exact: bool = False) -> int:
    """``f(n-1) * x + f(n) * y``.

    Multiples saturate in a finite algebra, so by default large coefficients
    reuse the fixed point; ``exact=True`` sums the summands one at a time.
    """
    if n < 0:
        raise ValueError("term index must be nonnegative")
    cx, cy = fibonacci_number(n - 1), fibonacci_number(n)
    if exact:
        return a.add(_repeat_add(a, cx, x), _repeat_add(a, cy, y))
    return a.add(a.multiple(cx, x), a.multiple(cy, y))


def recurrence_terms(a: FiniteMVAlgebra, x: int, y: int, count: int) -> list[int]:
    terms = [x, y]
    while len(terms) < count:
        terms.append(a.add(terms[-2], terms[-1]))
    return terms[:count]


def is_two_stationary_everywhere(a: FiniteMVAlgebra) -> bool:
    require_mv(a)
    index, _ = lambda_table(a)
    result = bool(np.all(index <= 2))
    if result:
        diag = a.oplus[np.arange(a.n), np.arange(a.n)]
        if np.any(diag != np.arange(a.n)):
            raise AssertionError("2-stationary everywhere but some element is not idempotent")
    return result


def pisano_period(m: int) -> int:
    """Period of the integer Fibonacci sequence modulo ``m``."""
    if m < 1:
        raise ValueError("modulus must be at least 1")
    if m == 1:
        return 1
    a, b = 0, 1
    p = 0
    while True:
        a, b = b, (a + b) % m
        p += 1
        if (a, b) == (0, 1):
            return p
