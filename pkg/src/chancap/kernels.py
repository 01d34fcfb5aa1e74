"""Backend selection for the capacity kernels.

Prefers the compiled extension (chancap._kernels); falls back to the
pure-Python implementation when the extension is not built. Both expose
the same functions with identical semantics; ``BACKEND`` names the one in
use and ``available_backends()`` lists what can be imported (used by the
parity tests and the benchmark).
"""

from __future__ import annotations

from . import _kernels_py

try:
    from . import _kernels as _impl

    BACKEND = "compiled"
except ImportError:  # extension not built
    _impl = _kernels_py
    BACKEND = "python"

mi_binary = _impl.mi_binary
capacity_ternary = _impl.capacity_ternary
capacity_grid = _impl.capacity_grid
ba_binary = _impl.ba_binary


def available_backends() -> dict[str, object]:
    """Importable kernel implementations keyed by backend name."""
    backends: dict[str, object] = {"python": _kernels_py}
    if BACKEND == "compiled":
        backends["compiled"] = _impl
    return backends
