"""Picks the enumeration kernel at import: the compiled extension when it is
built, the pure-Python twin otherwise. ``PREFIXAVOID_PURE=1`` forces the
pure-Python kernel."""

from __future__ import annotations

import os

from . import _kernel_py

python_count_completions = _kernel_py.count_completions

compiled_count_completions = None
if not os.environ.get("PREFIXAVOID_PURE"):
    try:
        from ._kernel import count_completions as compiled_count_completions
    except ImportError:
        compiled_count_completions = None

if compiled_count_completions is not None:
    count_completions = compiled_count_completions
    BACKEND = "cython"
else:
    count_completions = python_count_completions
    BACKEND = "python"


def pack(patterns):
    """Turn :class:`~prefixavoid.core.Pattern` objects into kernel tuples."""
    return [(pat.perm.entries, pat.adjacency) for pat in patterns]
