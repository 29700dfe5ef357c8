"""Numba @njit kernel implementations.

Same contracts (and bitwise-identical outputs) as `numpy_impl`; see the
module docstring there. All kernels are serial so results are
deterministic and independent of thread count.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def im2col2d(x, kh, kw, sh, sw):
    C, Hp, Wp = x.shape
    Ho = (Hp - kh) // sh + 1
    Wo = (Wp - kw) // sw + 1
    cols = np.empty((C * kh * kw, Ho * Wo), dtype=x.dtype)
    row = 0
    for c in range(C):
        for ky in range(kh):
            for kx in range(kw):
                i = 0
                for y in range(Ho):
                    ys = y * sh + ky
                    for xo in range(Wo):
                        cols[row, i] = x[c, ys, xo * sw + kx]
                        i += 1
                row += 1
    return cols


@njit(cache=True)
def col2im2d(cols, C, Hp, Wp, kh, kw, sh, sw):
    Ho = (Hp - kh) // sh + 1
    Wo = (Wp - kw) // sw + 1
    dx = np.zeros((C, Hp, Wp), dtype=cols.dtype)
    row = 0
    for c in range(C):
        for ky in range(kh):
            for kx in range(kw):
                i = 0
                for y in range(Ho):
                    ys = y * sh + ky
                    for xo in range(Wo):
                        dx[c, ys, xo * sw + kx] += cols[row, i]
                        i += 1
                row += 1
    return dx


@njit(cache=True)
def im2col3d(x, kt, kh, kw, st, sh, sw):
    C, Tp, Hp, Wp = x.shape
    To = (Tp - kt) // st + 1
    Ho = (Hp - kh) // sh + 1
    Wo = (Wp - kw) // sw + 1
    cols = np.empty((C * kt * kh * kw, To * Ho * Wo), dtype=x.dtype)
    row = 0
    for c in range(C):
        for tk in range(kt):
            for ky in range(kh):
                for kx in range(kw):
                    i = 0
                    for t in range(To):
                        ts = t * st + tk
                        for y in range(Ho):
                            ys = y * sh + ky
                            for xo in range(Wo):
                                cols[row, i] = x[c, ts, ys, xo * sw + kx]
                                i += 1
                    row += 1
    return cols


@njit(cache=True)
def col2im3d(cols, C, Tp, Hp, Wp, kt, kh, kw, st, sh, sw):
    To = (Tp - kt) // st + 1
    Ho = (Hp - kh) // sh + 1
    Wo = (Wp - kw) // sw + 1
    dx = np.zeros((C, Tp, Hp, Wp), dtype=cols.dtype)
    row = 0
    for c in range(C):
        for tk in range(kt):
            for ky in range(kh):
                for kx in range(kw):
                    i = 0
                    for t in range(To):
                        ts = t * st + tk
                        for y in range(Ho):
                            ys = y * sh + ky
                            for xo in range(Wo):
                                dx[c, ts, ys, xo * sw + kx] += cols[row, i]
                                i += 1
                    row += 1
    return dx


@njit(cache=True)
def _cubic_tap_weight(t, k):
    # tap k sits at source offset k-1; Catmull-Rom family with a = -0.5
    a = -0.5
    s = abs(t - (k - 1.0))
    if s <= 1.0:
        return (a + 2.0) * s ** 3 - (a + 3.0) * s ** 2 + 1.0
    return a * s ** 3 - 5.0 * a * s ** 2 + 8.0 * a * s - 4.0 * a


@njit(cache=True)
def bicubic_upscale2d(img, r):
    H, W = img.shape
    if r == 1:
        return img.copy()
    wts = np.empty((r, 4), dtype=img.dtype)
    for p in range(r):
        for k in range(4):
            wts[p, k] = _cubic_tap_weight(p / r, k)
    # horizontal pass, then vertical, matching the numpy fallback's order
    tmp = np.empty((H, W * r), dtype=img.dtype)
    for y in range(H):
        for b in range(W):
            i0 = max(b - 1, 0)
            i2 = min(b + 1, W - 1)
            i3 = min(b + 2, W - 1)
            v0 = img[y, i0]
            v1 = img[y, b]
            v2 = img[y, i2]
            v3 = img[y, i3]
            for p in range(r):
                tmp[y, b * r + p] = (wts[p, 0] * v0 + wts[p, 1] * v1
                                     + wts[p, 2] * v2 + wts[p, 3] * v3)
    out = np.empty((H * r, W * r), dtype=img.dtype)
    for b in range(H):
        i0 = max(b - 1, 0)
        i2 = min(b + 1, H - 1)
        i3 = min(b + 2, H - 1)
        for p in range(r):
            w0 = wts[p, 0]
            w1 = wts[p, 1]
            w2 = wts[p, 2]
            w3 = wts[p, 3]
            o = b * r + p
            for x in range(W * r):
                out[o, x] = (w0 * tmp[i0, x] + w1 * tmp[b, x]
                             + w2 * tmp[i2, x] + w3 * tmp[i3, x])
    return out


@njit(cache=True)
def maxpool2x_forward(x):
    C, H, W = x.shape
    Ho = H // 2
    Wo = W // 2
    out = np.empty((C, Ho, Wo), dtype=x.dtype)
    idx = np.empty((C, Ho, Wo), dtype=np.uint8)
    for c in range(C):
        for y in range(Ho):
            for xo in range(Wo):
                y2 = y * 2
                x2 = xo * 2
                best = x[c, y2, x2]
                bi = 0
                v = x[c, y2, x2 + 1]
                if v > best:
                    best = v
                    bi = 1
                v = x[c, y2 + 1, x2]
                if v > best:
                    best = v
                    bi = 2
                v = x[c, y2 + 1, x2 + 1]
                if v > best:
                    best = v
                    bi = 3
                out[c, y, xo] = best
                idx[c, y, xo] = bi
    return out, idx


@njit(cache=True)
def maxpool2x_backward(dout, idx):
    C, Ho, Wo = dout.shape
    dx = np.zeros((C, Ho * 2, Wo * 2), dtype=dout.dtype)
    for c in range(C):
        for y in range(Ho):
            for xo in range(Wo):
                k = idx[c, y, xo]
                dx[c, y * 2 + k // 2, xo * 2 + k % 2] = dout[c, y, xo]
    return dx
