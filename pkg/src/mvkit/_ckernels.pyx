# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled axiom and sequence kernels.

Every function mirrors one in ``_pykernels`` and must return identical
results, including which witness is reported first.
"""
import numpy as np
cimport numpy as cnp

cnp.import_array()


def assoc_witness(const int[:, ::1] t):
    cdef Py_ssize_t n = t.shape[0], x, y, z
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if t[t[x, y], z] != t[x, t[y, z]]:
                    return (x, y, z)
    return None


def lukasiewicz_witness(const int[:, ::1] t, const int[::1] neg):
    cdef Py_ssize_t n = t.shape[0], x, y
    for x in range(n):
        for y in range(n):
            if t[neg[t[neg[x], y]], y] != t[neg[t[neg[y], x]], x]:
                return (x, y)
    return None


def syllogism_witness(const int[:, ::1] s, int one):
    cdef Py_ssize_t n = s.shape[0], x, y, z
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if s[s[x, y], s[s[y, z], s[x, z]]] != one:
                    return (x, y, z)
    return None


def hom_witness(const int[:, ::1] ta, const int[:, ::1] tb, const int[::1] f):
    cdef Py_ssize_t n = ta.shape[0], x, y
    for x in range(n):
        for y in range(n):
            if f[ta[x, y]] != tb[f[x], f[y]]:
                return (x, y)
    return None


def fib_table(const int[:, ::1] t, long cap):
    cdef Py_ssize_t n = t.shape[0], x, y
    cdef long j
    cdef int p, q, r
    index = np.full((n, n), -1, dtype=np.intc)
    limit = np.full((n, n), -1, dtype=np.intc)
    cdef int[:, ::1] idx = index
    cdef int[:, ::1] lim = limit
    for x in range(n):
        for y in range(n):
            p = <int>x
            q = <int>y
            j = 0
            while j + 2 < cap:
                r = t[p, q]
                if p == q and q == r:
                    idx[x, y] = <int>j
                    lim[x, y] = p
                    break
                p = q
                q = r
                j += 1
    return index, limit
