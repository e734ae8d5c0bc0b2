"""Selects the integer-matrix micro-kernel backend at import time.

The compiled extension is preferred; set GCHAR_PURE=1 to force the
pure-Python fallback (used by the benchmark and the cross-checking tests).
"""

import os

if os.environ.get("GCHAR_PURE") == "1":
    from . import _intkernel_py as impl
else:
    try:
        from . import _intkernel as impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _intkernel_py as impl

addmul = impl.addmul
combine2 = impl.combine2
dot = impl.dot
scal = impl.scal
IMPLEMENTATION = impl.IMPLEMENTATION
