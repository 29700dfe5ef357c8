"""Dispatch layer over the numba and pure-numpy kernel implementations.

Call sites import from here; the active implementation is resolved per
call so tests and benchmarks can flip backends with
`meltwatch.backend.set_backend`.
"""

import numpy as np

from ..backend import HAS_NUMBA, active_backend
from . import numpy_impl
from .numpy_impl import cubic_weights  # noqa: F401  (re-export for tests)

if HAS_NUMBA:
    from . import numba_impl
else:
    numba_impl = None


def _impl():
    return numba_impl if active_backend() == "numba" else numpy_impl


def im2col2d(x, kh, kw, sh=1, sw=1):
    return _impl().im2col2d(x, kh, kw, sh, sw)


def col2im2d(cols, C, Hp, Wp, kh, kw, sh=1, sw=1):
    return _impl().col2im2d(cols, C, Hp, Wp, kh, kw, sh, sw)


def im2col3d(x, kt, kh, kw, st=1, sh=1, sw=1):
    return _impl().im2col3d(x, kt, kh, kw, st, sh, sw)


def col2im3d(cols, C, Tp, Hp, Wp, kt, kh, kw, st=1, sh=1, sw=1):
    return _impl().col2im3d(cols, C, Tp, Hp, Wp, kt, kh, kw, st, sh, sw)


def bicubic_upscale(img, r):
    """Upscale the trailing two axes of `img` by integer factor r."""
    if r < 1:
        raise ValueError(f"upscale factor must be >= 1, got {r}")
    if active_backend() == "numba":
        lead = img.shape[:-2]
        H, W = img.shape[-2:]
        flat = np.ascontiguousarray(img).reshape(-1, H, W)
        out = np.empty((flat.shape[0], H * r, W * r), dtype=img.dtype)
        for i in range(flat.shape[0]):
            out[i] = numba_impl.bicubic_upscale2d(flat[i], r)
        return out.reshape(lead + (H * r, W * r))
    return numpy_impl.bicubic_upscale(img, r)


def maxpool2x_forward(x):
    return _impl().maxpool2x_forward(x)


def maxpool2x_backward(dout, idx):
    return _impl().maxpool2x_backward(dout, idx)
