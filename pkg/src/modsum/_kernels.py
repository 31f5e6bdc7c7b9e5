"""Backend selection for the hot-loop kernels.

Two copies of `_kernels_impl` are loaded: one left as plain Python, one
with every function replaced by a numba dispatcher.  Set MODSUM_NO_NUMBA=1
(or install without numba) to make the plain copy the default.
"""
from __future__ import annotations

import importlib.util
import os
import sys
import warnings
from pathlib import Path

import numpy as np

_IMPL_PATH = Path(__file__).with_name("_kernels_impl.py")

# Jitted in this order so dependents resolve already-wrapped helpers.
_KERNEL_NAMES = (
    "powr_fill",
    "fenwick_add",
    "fenwick_prefix",
    "windows_equal",
    "find_new_sums",
    "apply_new_sums",
    "solve_loop",
    "apnp_tree_add",
    "apnp_init",
    "apnp_find",
    "apnp_run",
)


def _load_impl(modname: str):
    spec = importlib.util.spec_from_file_location(modname, _IMPL_PATH)
    mod = importlib.util.module_from_spec(spec)
    sys.modules[modname] = mod
    spec.loader.exec_module(mod)
    return mod


class Backend:
    """Namespace holding one compiled-or-interpreted set of kernels."""

    def __init__(self, name: str, mod):
        self.name = name
        for fname in _KERNEL_NAMES:
            setattr(self, fname, getattr(mod, fname))

    def __repr__(self):
        return "Backend(%r)" % (self.name,)

    def warm(self) -> None:
        """Run one tiny instance so jit compilation happens off the clock."""
        m = 4
        size = 2 * m
        tree = np.zeros(size + 1, dtype=np.int64)
        powr = np.zeros(size + 1, dtype=np.int64)
        self.powr_fill(powr, size + 1, 3, 97)
        witness = np.full(m, -1, dtype=np.int64)
        witness[0] = 0
        out = np.zeros(m, dtype=np.int64)
        sa = np.zeros(80, dtype=np.int64)
        sb = np.zeros(80, dtype=np.int64)
        self.fenwick_add(tree, size, 0, powr[0], 97)
        self.fenwick_add(tree, size, m, powr[m], 97)
        elems = np.array([1, 2], dtype=np.int64)
        counts = np.zeros(2, dtype=np.int64)
        nodes = np.zeros(2, dtype=np.int64)
        self.solve_loop(tree, size, powr, 97, m, elems, witness, out,
                        sa, sb, counts, nodes)
        n = 2
        nleaf = 2
        trees = np.zeros((n, 2 * nleaf), dtype=np.int64)
        path = np.full((n, n), -1, dtype=np.int32)
        disc = np.full((n, n), -1, dtype=np.int32)
        apowr = np.zeros(n, dtype=np.int64)
        self.powr_fill(apowr, n, 3, 97)
        ou = np.zeros(n, dtype=np.int64)
        ov = np.zeros(n, dtype=np.int64)
        op_ = np.zeros(n, dtype=np.int64)
        st = np.zeros(80, dtype=np.int64)
        self.apnp_init(trees, apowr, 97, path, n, nleaf)
        ea = np.array([0], dtype=np.int64)
        eb = np.array([1], dtype=np.int64)
        self.apnp_run(trees, apowr, 97, path, disc, ea, eb, nleaf,
                      ou, ov, op_, st)


def _make_python() -> Backend:
    return Backend("python", _load_impl("modsum._kernels_py"))


def _make_numba() -> Backend:
    from numba import njit

    mod = _load_impl("modsum._kernels_nb")
    for fname in _KERNEL_NAMES:
        setattr(mod, fname, njit(cache=True)(getattr(mod, fname)))
    return Backend("numba", mod)


_FLAG = os.environ.get("MODSUM_NO_NUMBA", "").strip().lower()
NUMBA_DISABLED = _FLAG in ("1", "true", "yes", "on")

_backends: dict[str, Backend] = {}


def get_backend(name: str | None = None) -> Backend:
    """Return a kernel namespace by name, or the process default."""
    if name is None:
        name = "python" if NUMBA_DISABLED or not numba_available() else "numba"
    if name not in ("python", "numba"):
        raise ValueError("unknown backend %r" % (name,))
    if name == "numba" and not numba_available():
        raise RuntimeError("numba backend requested but numba is unavailable")
    if name not in _backends:
        _backends[name] = _make_python() if name == "python" else _make_numba()
    return _backends[name]


_numba_ok: bool | None = None


def numba_available() -> bool:
    global _numba_ok
    if _numba_ok is None:
        try:
            import numba  # noqa: F401
            _numba_ok = True
        except ImportError:
            _numba_ok = False
            if not NUMBA_DISABLED:
                warnings.warn("numba is not importable; falling back to the "
                              "interpreted kernels", RuntimeWarning)
    return _numba_ok


def available_backends() -> list[str]:
    names = ["python"]
    if numba_available():
        names.append("numba")
    return names


def default_backend_name() -> str:
    return "python" if NUMBA_DISABLED or not numba_available() else "numba"
