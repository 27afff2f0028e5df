"""F2 hot-path kernels with a compiled core and a pure-Python fallback.

The compiled backend (`_core`, Cython) is used when importable unless
PLCPKIT_BACKEND=pure requests the fallback.  Both expose the same four
functions; `backend_name()` reports which one is active.
"""

import os

from plcpkit._kernels import _ref
from plcpkit._kernels._ref import pack_bits, unpack_bits

_impl = _ref
if os.environ.get("PLCPKIT_BACKEND", "") != "pure":
    try:
        from plcpkit._kernels import _core as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _ref

lcp_profile = _impl.lcp_profile
hankel_parities = _impl.hankel_parities
series_inverse = _impl.series_inverse
laurent_cf = _impl.laurent_cf


def backend_name():
    return _impl.BACKEND_NAME


def available_backends():
    """Importable backends, name -> module (for tests and benchmarks)."""
    out = {_ref.BACKEND_NAME: _ref}
    try:
        from plcpkit._kernels import _core

        out[_core.BACKEND_NAME] = _core
    except ImportError:
        pass
    return out
