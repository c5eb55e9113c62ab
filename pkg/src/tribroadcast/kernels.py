"""Kernel backend selection.

The compiled Cython module is used when it was built; otherwise the
pure-Python twin is loaded.  Set ``TRIBROADCAST_PURE=1`` to force the
fallback.
"""
import importlib
import os

from . import _pykernels

FOUND = _pykernels.FOUND
EXHAUSTED = _pykernels.EXHAUSTED
ABORTED = _pykernels.ABORTED


def load(name: str | None = None):
    """Return the kernel module for ``"cython"``, ``"python"`` or the default."""
    if name == "python":
        return _pykernels
    if name == "cython":
        return importlib.import_module("tribroadcast._ckernels")
    if os.environ.get("TRIBROADCAST_PURE"):
        return _pykernels
    try:
        return importlib.import_module("tribroadcast._ckernels")
    except ImportError:
        return _pykernels


_impl = load()
BACKEND = "python" if _impl is _pykernels else "cython"
accumulate = _impl.accumulate
search = _impl.search
