import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mvkit import kernels
from mvkit.chains import make_chain
from mvkit.structure import chain_product

BACKENDS = kernels.available_backends()


def test_compiled_backend_is_built():
    # the editable install compiles the extension; a missing .so means the build broke
    assert "cython" in BACKENDS


@st.composite
def tables(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    flat = draw(st.lists(st.integers(0, n - 1), min_size=n * n, max_size=n * n))
    neg = draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n))
    one = draw(st.integers(0, n - 1))
    return (
        np.array(flat, dtype=np.intc).reshape(n, n),
        np.array(neg, dtype=np.intc),
        one,
    )


@settings(max_examples=200, deadline=None)
@given(tables())
def test_backends_agree_on_random_tables(case):
    t, neg, one = case
    results = {
        name: (
            mod.assoc_witness(t),
            mod.lukasiewicz_witness(t, neg),
            mod.syllogism_witness(t, one),
            mod.hom_witness(t, t, neg),
            tuple(map(np.ndarray.tolist, mod.fib_table(t, t.shape[0] ** 2 + 3))),
        )
        for name, mod in BACKENDS.items()
    }
    assert len(set(map(repr, results.values()))) == 1


@pytest.mark.parametrize("backend", sorted(BACKENDS))
def test_assoc_witness_is_lexicographically_first(backend):
    mod = BACKENDS[backend]
    t = make_chain(4).oplus.copy()
    t[1, 2] = 1
    assert mod.assoc_witness(t) == (1, 1, 1)


@pytest.mark.parametrize("backend", sorted(BACKENDS))
def test_valid_algebra_has_no_witnesses(backend):
    mod = BACKENDS[backend]
    a = chain_product([2, 3])
    assert mod.assoc_witness(a.oplus) is None
    assert mod.lukasiewicz_witness(a.oplus, a.neg) is None
    ident = np.arange(a.n, dtype=np.intc)
    assert mod.hom_witness(a.oplus, a.oplus, ident) is None


@pytest.mark.parametrize("backend", sorted(BACKENDS))
def test_fib_table_reports_cap_overrun(backend):
    mod = BACKENDS[backend]
    # x + y = y + 1 mod 3 cycles forever
    t = np.array([[(y + 1) % 3 for y in range(3)] for _ in range(3)], dtype=np.intc)
    index, limit = mod.fib_table(t, 12)
    assert (index == -1).all() and (limit == -1).all()
