"""Kernel selection: compiled extension when available, pure Python otherwise.

Set ``GONQ_BACKEND=python`` or ``GONQ_BACKEND=cython`` to force a choice
(the latter raises if the extension was not built).  Both kernels produce
identical output, so the choice only affects speed.
"""

from __future__ import annotations

import os

from . import _kernel_py

_forced = os.environ.get("GONQ_BACKEND")
if _forced not in (None, "", "python", "cython"):
    raise RuntimeError(f"GONQ_BACKEND must be 'python' or 'cython', got {_forced!r}")

if _forced == "python":
    _impl = _kernel_py
    BACKEND = "python"
elif _forced == "cython":
    from . import _kernel as _impl  # type: ignore[no-redef]

    BACKEND = "cython"
else:
    try:
        from . import _kernel as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernel_py
        BACKEND = "python"

burn = _impl.burn
qreduce = _impl.qreduce


def available_backends() -> dict[str, object]:
    """Importable kernels by name; used by parity tests and the benchmark."""
    found: dict[str, object] = {"python": _kernel_py}
    try:
        from . import _kernel

        found["cython"] = _kernel
    except ImportError:
        pass
    return found
