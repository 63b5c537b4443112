"""Backend selection for the hot kernels.

The compiled ``_core`` extension is used when importable; otherwise the
pure-Python ``_fallback``. Setting ``ARTIFACT_BACKEND=python`` forces the
fallback.
"""

from __future__ import annotations

import os

from . import _fallback

_backend = _fallback
BACKEND = "python"

if os.environ.get("ARTIFACT_BACKEND", "").lower() != "python":
    try:
        from . import _core as _backend  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:  # pragma: no cover - depends on build
        _backend = _fallback

gammaincc = _backend.gammaincc
v_weights = _backend.v_weights
char_exponents = _backend.char_exponents
weight_buckets = _backend.weight_buckets
gauss_periods = _backend.gauss_periods


def backends() -> dict:
    """All importable backends by name, for benchmarks and cross-checks."""
    out = {"python": _fallback}
    try:
        from . import _core

        out["compiled"] = _core
    except ImportError:  # pragma: no cover
        pass
    return out
