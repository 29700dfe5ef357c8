"""Pure-numpy kernel implementations.

These are the fallback path for the numba kernels in `numba_impl`; both
must produce bitwise-identical results on the same inputs. Loops here run
over kernel offsets (9 or 27 iterations), not pixels, so everything heavy
is a strided slice copy or a BLAS matmul.
"""

import numpy as np


def im2col2d(x, kh, kw, sh, sw):
    # x: [C, Hp, Wp] already padded; rows ordered (c, ky, kx)
    C, Hp, Wp = x.shape
    Ho = (Hp - kh) // sh + 1
    Wo = (Wp - kw) // sw + 1
    cols = np.empty((C, kh, kw, Ho, Wo), dtype=x.dtype)
    for ky in range(kh):
        for kx in range(kw):
            cols[:, ky, kx] = x[:, ky:ky + Ho * sh:sh, kx:kx + Wo * sw:sw]
    return cols.reshape(C * kh * kw, Ho * Wo)


def col2im2d(cols, C, Hp, Wp, kh, kw, sh, sw):
    Ho = (Hp - kh) // sh + 1
    Wo = (Wp - kw) // sw + 1
    cols = cols.reshape(C, kh, kw, Ho, Wo)
    dx = np.zeros((C, Hp, Wp), dtype=cols.dtype)
    for ky in range(kh):
        for kx in range(kw):
            dx[:, ky:ky + Ho * sh:sh, kx:kx + Wo * sw:sw] += cols[:, ky, kx]
    return dx


def im2col3d(x, kt, kh, kw, st, sh, sw):
    # x: [C, Tp, Hp, Wp]; rows ordered (c, kt, ky, kx)
    C, Tp, Hp, Wp = x.shape
    To = (Tp - kt) // st + 1
    Ho = (Hp - kh) // sh + 1
    Wo = (Wp - kw) // sw + 1
    cols = np.empty((C, kt, kh, kw, To, Ho, Wo), dtype=x.dtype)
    for tk in range(kt):
        for ky in range(kh):
            for kx in range(kw):
                cols[:, tk, ky, kx] = x[:, tk:tk + To * st:st,
                                        ky:ky + Ho * sh:sh,
                                        kx:kx + Wo * sw:sw]
    return cols.reshape(C * kt * kh * kw, To * Ho * Wo)


def col2im3d(cols, C, Tp, Hp, Wp, kt, kh, kw, st, sh, sw):
    To = (Tp - kt) // st + 1
    Ho = (Hp - kh) // sh + 1
    Wo = (Wp - kw) // sw + 1
    cols = cols.reshape(C, kt, kh, kw, To, Ho, Wo)
    dx = np.zeros((C, Tp, Hp, Wp), dtype=cols.dtype)
    for tk in range(kt):
        for ky in range(kh):
            for kx in range(kw):
                dx[:, tk:tk + To * st:st,
                   ky:ky + Ho * sh:sh,
                   kx:kx + Wo * sw:sw] += cols[:, tk, ky, kx]
    return dx


def cubic_weights(t, a=-0.5):
    """4-tap Catmull-Rom-family weights for a sample at fractional offset t.

    Taps sit at source offsets -1, 0, 1, 2 relative to floor(position).
    Weights sum to 1 for any t (partition of unity), and t == 0 gives
    (0, 1, 0, 0) so source sample sites reproduce exactly.
    """
    s = np.abs(np.array([1.0 + t, t, 1.0 - t, 2.0 - t]))
    near = (a + 2.0) * s ** 3 - (a + 3.0) * s ** 2 + 1.0
    far = a * s ** 3 - 5.0 * a * s ** 2 + 8.0 * a * s - 4.0 * a
    return np.where(s <= 1.0, near, far)


def _bicubic_axis(x, r):
    # Upscale the last axis by integer r; corner-aligned (out[r*i] == x[i]),
    # edge-replicate boundary via index clamping.
    n = x.shape[-1]
    out = np.empty(x.shape[:-1] + (n * r,), dtype=x.dtype)
    base = np.arange(n)
    for phase in range(r):
        w = cubic_weights(phase / r).astype(x.dtype)
        acc = np.zeros(x.shape[:-1] + (n,), dtype=x.dtype)
        for k in range(4):
            taps = np.clip(base + k - 1, 0, n - 1)
            acc += w[k] * x[..., taps]
        out[..., phase::r] = acc
    return out


def bicubic_upscale(img, r):
    # img: [..., H, W] -> [..., r*H, r*W], separable cubic passes
    if r == 1:
        return img.copy()
    up_w = _bicubic_axis(img, r)
    up_hw = _bicubic_axis(np.swapaxes(up_w, -1, -2), r)
    return np.ascontiguousarray(np.swapaxes(up_hw, -1, -2))


def maxpool2x_forward(x):
    # x: [C, H, W] with even H, W -> (out [C,H/2,W/2], idx of winner 0..3)
    C, H, W = x.shape
    x4 = x.reshape(C, H // 2, 2, W // 2, 2).transpose(0, 1, 3, 2, 4)
    x4 = np.ascontiguousarray(x4).reshape(C, H // 2, W // 2, 4)
    idx = x4.argmax(axis=3).astype(np.uint8)  # first max wins ties (top-left)
    out = np.take_along_axis(x4, idx[..., None].astype(np.intp), axis=3)[..., 0]
    return out, idx


def maxpool2x_backward(dout, idx):
    C, Ho, Wo = dout.shape
    d4 = np.zeros((C, Ho, Wo, 4), dtype=dout.dtype)
    np.put_along_axis(d4, idx[..., None].astype(np.intp), dout[..., None], axis=3)
    d4 = d4.reshape(C, Ho, Wo, 2, 2).transpose(0, 1, 3, 2, 4)
    return np.ascontiguousarray(d4).reshape(C, Ho * 2, Wo * 2)
