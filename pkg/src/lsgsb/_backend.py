"""Kernel backend selection.

Imports the compiled kernels (``lsgsb._speedups``) when they are built
and the environment variable ``LSGSB_PURE`` is unset; otherwise falls
back to the pure-Python kernels in ``lsgsb._pure``.  Everything above
this module imports the chosen backend through the ``kernel`` name, so
the selection is a single import-time decision.

``BACKEND`` is ``"compiled"`` or ``"pure"`` and is surfaced by the CLI
(``lsgsb --version``) and by ``benchmarks/bench_backends.py``.
"""

from __future__ import annotations

import os

if os.environ.get("LSGSB_PURE"):
    from . import _pure as kernel

    BACKEND = "pure"
else:
    try:
        from . import _speedups as kernel  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from . import _pure as kernel  # type: ignore[no-redef]

        BACKEND = "pure"

__all__ = ["kernel", "BACKEND"]
