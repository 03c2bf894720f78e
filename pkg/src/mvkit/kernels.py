"""Backend selection for the hot loops.

The compiled module is used when it imports; set ``MVKIT_PURE_PYTHON=1``
to force the numpy fallback.
"""
from __future__ import annotations

import os
from types import ModuleType

from mvkit import _pykernels


def _load() -> tuple[ModuleType, str]:
    if os.environ.get("MVKIT_PURE_PYTHON"):
        return _pykernels, "python"
    try:
        from mvkit import _ckernels
    except ImportError:
        return _pykernels, "python"
    return _ckernels, "cython"


_impl, BACKEND = _load()

assoc_witness = _impl.assoc_witness
lukasiewicz_witness = _impl.lukasiewicz_witness
syllogism_witness = _impl.syllogism_witness
hom_witness = _impl.hom_witness
fib_table = _impl.fib_table


def available_backends() -> dict[str, ModuleType]:
    """Every backend importable in this environment, keyed by name."""
    found = {"python": _pykernels}
    try:
        from mvkit import _ckernels
    except ImportError:
        pass
    else:
        found["cython"] = _ckernels
    return found
