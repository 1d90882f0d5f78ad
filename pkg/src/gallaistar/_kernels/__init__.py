"""Kernel selection: compiled extension when available, pure Python otherwise.

Set ``GALLAISTAR_PURE=1`` in the environment to force the pure backend.
"""

import os

from . import pure

MODE_DECIDE = pure.MODE_DECIDE
MODE_ENUMERATE = pure.MODE_ENUMERATE
STATUS_COMPLETE = pure.STATUS_COMPLETE
STATUS_BUDGET = pure.STATUS_BUDGET

backend = "pure"
_impl = pure

if not os.environ.get("GALLAISTAR_PURE"):
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]

        backend = "compiled"
    except ImportError:
        pass

dfs_search = _impl.dfs_search
canonical_coloring = _impl.canonical_coloring
