"""Backend selection for the hot loops.

The compiled extension ``milnorlab._kernels`` is used when it was built;
otherwise the pure-Python twin in ``_kernels_py`` runs.  Setting
``MILNORLAB_PURE_PYTHON=1`` forces the fallback.
"""

import os

from . import _kernels_py

if os.environ.get("MILNORLAB_PURE_PYTHON") == "1":
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = "cython" if _impl is not _kernels_py else "python"

poly_mul = _impl.poly_mul
fulton = _impl.fulton
sparse_rank = _impl.sparse_rank
