"""Kernel selection: compiled extension when available, pure Python otherwise.

Set CONECOVER_PURE=1 to force the reference implementation (used by the
benchmark and by tests that compare the two).
"""

import os

from . import reference

if os.environ.get("CONECOVER_PURE") == "1":
    _impl = reference
else:
    try:
        from . import _speedups as _impl
    except ImportError:
        _impl = reference

IMPL = _impl.IMPL
mul_terms = _impl.mul_terms
bareiss_rank = _impl.bareiss_rank
