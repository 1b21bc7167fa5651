"""Batch evaluation of all measures over arrays of squeezed-thermal CMs.

The compiled Cython kernel is used when it was built; otherwise the NumPy
implementation is selected at import time. Both produce the same columns.
"""
from __future__ import annotations

import numpy as np

from . import _kernels_py
from ._fields import FIELDS, INDEX

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

_BACKENDS = {"python": _kernels_py.evaluate_sts}
if _compiled is not None:
    _BACKENDS["cython"] = _compiled.evaluate_sts

#: Name of the backend used when none is requested.
BACKEND = "cython" if _compiled is not None else "python"


def available_backends() -> list[str]:
    return sorted(_BACKENDS)


def evaluate_matrix(n, m, c, backend: str | None = None) -> np.ndarray:
    """Return an ``(N, len(FIELDS))`` array of measures for flat inputs."""
    name = backend or BACKEND
    try:
        kernel = _BACKENDS[name]
    except KeyError:
        raise ValueError(f"backend {name!r} unavailable; have {available_backends()}") from None
    n = np.ascontiguousarray(n, dtype=float).ravel()
    m = np.ascontiguousarray(m, dtype=float).ravel()
    c = np.ascontiguousarray(c, dtype=float).ravel()
    if not (n.shape == m.shape == c.shape):
        raise ValueError("n, m and c must have the same size")
    out = np.empty((n.size, len(FIELDS)))
    kernel(n, m, c, out)
    return out


def evaluate(n, m, c, backend: str | None = None) -> dict[str, np.ndarray]:
    """Dict of measure arrays shaped like ``n`` (broadcast against ``m``, ``c``).

    Rows that are unphysical still get values (possibly NaN); check the
    ``physical`` field before using them.
    """
    n, m, c = np.broadcast_arrays(
        np.asarray(n, dtype=float), np.asarray(m, dtype=float), np.asarray(c, dtype=float)
    )
    shape = n.shape
    table = evaluate_matrix(n, m, c, backend)
    fields = {name: table[:, INDEX[name]].reshape(shape) for name in FIELDS}
    fields["physical"] = fields["physical"].astype(bool)
    return fields
