"""Backend selection for the finite-field scan kernel.

The compiled extension is used when it was built; otherwise the pure-Python
implementation with the identical contract is loaded.
"""

from __future__ import annotations

from . import _scan_py

try:
    from . import _scan_ext
except ImportError:  # extension not built
    _scan_ext = None

BACKEND = "compiled" if _scan_ext is not None else "python"

_IMPLS = {"python": _scan_py.common_zeros}
if _scan_ext is not None:
    _IMPLS["compiled"] = _scan_ext.common_zeros


def available_backends() -> list[str]:
    return list(_IMPLS)


def common_zeros(polys, prime: int, backend: str | None = None):
    name = backend or BACKEND
    try:
        impl = _IMPLS[name]
    except KeyError:
        raise ValueError(f"scan backend {name!r} unavailable; have {available_backends()}") from None
    return impl(polys, prime)
