"""Backend selection for the relabeling kernel.

Imports the compiled Cython kernel when available, otherwise the interpreted
twin.  Set HOPFGRAPHS_PURE=1 to force the pure-Python backend (used by the
benchmark and the backend-agreement tests).
"""

import os

from . import _canon_py

if os.environ.get("HOPFGRAPHS_PURE") == "1":
    _impl = _canon_py
    BACKEND = "python"
else:
    try:
        from . import _canon as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        _impl = _canon_py
        BACKEND = "python"

canonical_perm = _impl.canonical_perm
automorphism_count = _impl.automorphism_count
canonical_perm_py = _canon_py.canonical_perm
automorphism_count_py = _canon_py.automorphism_count
