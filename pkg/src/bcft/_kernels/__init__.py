"""Quadrature kernel backends.

The compiled extension is optional.  The numpy kernel is used when the
extension failed to build or when ``BCFT_PURE_PYTHON`` is set to a
non-empty value.
"""

import os

from bcft._kernels import _gk_np
from bcft._kernels._gk_rules import WG15, WK15, XK15


def _load_compiled():
    try:
        from bcft._kernels import _gk_cy
    except ImportError:
        return None
    return _gk_cy


_active = None if os.environ.get("BCFT_PURE_PYTHON") else _load_compiled()

BACKEND = "numpy" if _active is None else "compiled"
panel_integrals = (_active or _gk_np).panel_integrals


def available_backends():
    """Map of backend name to its panel_integrals callable, for comparison."""
    out = {"numpy": _gk_np.panel_integrals}
    compiled = _load_compiled()
    if compiled is not None:
        out["compiled"] = compiled.panel_integrals
    return out


__all__ = ["BACKEND", "WG15", "WK15", "XK15", "available_backends", "panel_integrals"]
