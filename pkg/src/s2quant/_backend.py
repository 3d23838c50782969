"""Select the arithmetic kernel implementation at import time.

The compiled ``_ckernels`` extension is used when it has been built; the
pure-Python ``_pykernels`` module is the fallback.  Setting the environment
variable ``S2QUANT_PURE_PYTHON=1`` forces the fallback.
"""
import os

kernels = None

if os.environ.get("S2QUANT_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as kernels
    except ImportError:
        kernels = None

if kernels is None:
    from . import _pykernels as kernels

BACKEND = kernels.BACKEND


def load(name):
    """Import a specific kernel module by backend name ('python' or 'cython')."""
    if name == "python":
        from . import _pykernels
        return _pykernels
    if name == "cython":
        from . import _ckernels
        return _ckernels
    raise ValueError("unknown backend %r" % name)
