"""Kernel backend selection.

Hot inner loops (im2col packing, col2im scatter, bicubic resampling,
max-pooling) exist twice: a numba @njit implementation and a pure-numpy
fallback. The active backend is chosen by the MELTWATCH_BACKEND
environment variable:

    MELTWATCH_BACKEND=auto    numba when importable, else numpy (default)
    MELTWATCH_BACKEND=numba   force numba, error if unavailable
    MELTWATCH_BACKEND=numpy   force the pure-numpy path

`benchmarks/bench_kernels.py` compares both paths on the same inputs.
"""

import os

_VALID = ("auto", "numba", "numpy")

try:
    import numba  # noqa: F401
    HAS_NUMBA = True
except ImportError:
    HAS_NUMBA = False

_backend = None


def _resolve(name):
    if name not in _VALID:
        raise ValueError(f"unknown backend {name!r}, expected one of {_VALID}")
    if name == "auto":
        return "numba" if HAS_NUMBA else "numpy"
    if name == "numba" and not HAS_NUMBA:
        raise RuntimeError("MELTWATCH_BACKEND=numba but numba is not importable")
    return name


def active_backend():
    """Name of the kernel backend in use: 'numba' or 'numpy'."""
    global _backend
    if _backend is None:
        _backend = _resolve(os.environ.get("MELTWATCH_BACKEND", "auto"))
    return _backend


def set_backend(name):
    """Override the kernel backend at runtime (mainly for tests/benchmarks)."""
    global _backend
    _backend = _resolve(name)
    return _backend
