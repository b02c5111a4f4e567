"""Selects the composition kernel backend at import time.

The compiled extension is preferred; set ``BLOCKPERM_PURE=1`` to force the
pure-Python fallback (used by the benchmark and the agreement tests).
"""

import os

if os.environ.get("BLOCKPERM_PURE"):
    from blockperm._glue_py import canonical_labels, glue_labels

    BACKEND = "python"
else:
    try:
        from blockperm._glue import canonical_labels, glue_labels

        BACKEND = "cython"
    except ImportError:
        from blockperm._glue_py import canonical_labels, glue_labels

        BACKEND = "python"

__all__ = ["BACKEND", "canonical_labels", "glue_labels"]
