"""Pixel-space corruption implementations (Noise, Blur, Digital, Weather).

All functions take a float32 H x W x 3 image in [0, 1] plus the severity
preset parameters from the catalog, and return an image of the same shape
clipped back to [0, 1]. Stochastic corruptions draw from the supplied
numpy Generator only, so outputs are a pure function of (image, params, rng).
"""

from __future__ import annotations

import io

import numpy as np
from PIL import Image
from scipy.ndimage import convolve, gaussian_filter, map_coordinates, zoom as ndzoom


def _clip(img: np.ndarray) -> np.ndarray:
    return np.clip(img, 0.0, 1.0).astype(np.float32)


# --- Noise ---

def gaussian_noise(img, sigma, rng):
    return _clip(img + rng.normal(0.0, sigma, img.shape))


def shot_noise(img, photons, rng):
    return _clip(rng.poisson(img * photons) / photons)


def impulse_noise(img, amount, rng):
    # Salt and pepper shared across channels, half each.
    r = rng.random(img.shape[:2])
    out = img.copy()
    out[r < amount / 2] = 1.0
    out[r > 1 - amount / 2] = 0.0
    return _clip(out)


def speckle_noise(img, sigma, rng):
    return _clip(img + img * rng.normal(0.0, sigma, img.shape))


# --- Blur ---

def gaussian_blur(img, sigma):
    return _clip(gaussian_filter(img, sigma=(sigma, sigma, 0), mode="reflect"))


def _disk_kernel(radius: int, alias_blur: float) -> np.ndarray:
    size = max(8, radius)
    ax = np.arange(-size, size + 1)
    xx, yy = np.meshgrid(ax, ax)
    disk = ((xx ** 2 + yy ** 2) <= radius ** 2).astype(np.float64)
    disk /= disk.sum()
    return gaussian_filter(disk, sigma=alias_blur)


def defocus_blur(img, radius, alias_blur):
    kernel = _disk_kernel(int(radius), alias_blur)
    out = np.empty_like(img)
    for c in range(img.shape[2]):
        out[..., c] = convolve(img[..., c], kernel, mode="reflect")
    return _clip(out)


def _line_kernel(length: int, angle_deg: float) -> np.ndarray:
    kernel = np.zeros((length, length), dtype=np.float64)
    theta = np.deg2rad(angle_deg)
    c = (length - 1) / 2
    for t in np.linspace(-c, c, 2 * length):
        i = int(round(c + t * np.sin(theta)))
        j = int(round(c + t * np.cos(theta)))
        kernel[i, j] = 1.0
    kernel /= kernel.sum()
    return kernel


def motion_blur(img, length, rng):
    angle = float(rng.uniform(0.0, 180.0))
    kernel = _line_kernel(int(length), angle)
    out = np.empty_like(img)
    for c in range(img.shape[2]):
        out[..., c] = convolve(img[..., c], kernel, mode="reflect")
    return _clip(out)


def glass_blur(img, sigma, max_delta, iterations, rng):
    # Vectorized variant of the classic local pixel shuffle: blur, then
    # repeatedly gather each pixel from a random neighbour within max_delta.
    h, w = img.shape[:2]
    out = gaussian_filter(img, sigma=(sigma, sigma, 0), mode="reflect")
    ys, xs = np.mgrid[0:h, 0:w]
    d = int(max_delta)
    for _ in range(int(iterations)):
        dy = rng.integers(-d, d + 1, size=(h, w))
        dx = rng.integers(-d, d + 1, size=(h, w))
        yy = np.clip(ys + dy, 0, h - 1)
        xx = np.clip(xs + dx, 0, w - 1)
        out = out[yy, xx]
    out = gaussian_filter(out, sigma=(sigma, sigma, 0), mode="reflect")
    return _clip(out)


def _center_zoom(img, factor):
    h, w = img.shape[:2]
    ch, cw = int(np.ceil(h / factor)), int(np.ceil(w / factor))
    top, left = (h - ch) // 2, (w - cw) // 2
    zoomed = ndzoom(img[top:top + ch, left:left + cw], (factor, factor, 1), order=1)
    th, tl = (zoomed.shape[0] - h) // 2, (zoomed.shape[1] - w) // 2
    return zoomed[th:th + h, tl:tl + w]


def zoom_blur(img, max_zoom, step):
    acc = img.astype(np.float64).copy()
    factors = np.arange(1.0 + step, max_zoom + 1e-9, step)
    for z in factors:
        acc += _center_zoom(img, z)
    return _clip(acc / (len(factors) + 1))


# --- Digital ---

def brightness(img, shift):
    return _clip(img + shift)


def contrast(img, factor):
    mean = img.mean(axis=(0, 1), keepdims=True)
    return _clip((img - mean) * factor + mean)


def saturate(img, scale, shift):
    gray = (img * np.array([0.299, 0.587, 0.114])).sum(axis=2, keepdims=True)
    return _clip(gray + (img - gray) * scale + shift)


def jpeg_compression(img, quality):
    buf = io.BytesIO()
    Image.fromarray((img * 255).round().astype(np.uint8)).save(
        buf, format="JPEG", quality=int(quality)
    )
    buf.seek(0)
    decoded = np.asarray(Image.open(buf), dtype=np.float32) / 255.0
    return _clip(decoded)


def pixelate(img, scale):
    h, w = img.shape[:2]
    small = (max(1, int(w * scale)), max(1, int(h * scale)))
    pil = Image.fromarray((img * 255).round().astype(np.uint8))
    pil = pil.resize(small, Image.BOX).resize((w, h), Image.NEAREST)
    return _clip(np.asarray(pil, dtype=np.float32) / 255.0)


def elastic_transform(img, alpha_frac, sigma_frac, rng):
    # Displacement normalized so its max magnitude is exactly alpha_frac of
    # min(H, W); the catalog caps alpha_frac at 0.02 to keep boxes valid.
    h, w = img.shape[:2]
    d = min(h, w)
    sigma = sigma_frac * d
    fields = []
    for _ in range(2):
        f = gaussian_filter(rng.uniform(-1, 1, size=(h, w)), sigma, mode="reflect")
        peak = np.abs(f).max()
        fields.append(f / peak * alpha_frac * d if peak > 0 else f)
    dy, dx = fields
    ys, xs = np.mgrid[0:h, 0:w]
    coords = [ys + dy, xs + dx]
    out = np.empty_like(img)
    for c in range(img.shape[2]):
        out[..., c] = map_coordinates(img[..., c], coords, order=1, mode="reflect")
    return _clip(out)


# --- Weather (excluded from the default pool) ---

def _smooth_noise(shape, sigma, rng):
    field = gaussian_filter(rng.random(shape), sigma, mode="wrap")
    lo, hi = field.min(), field.max()
    return (field - lo) / max(hi - lo, 1e-8)


def snow(img, amount, flake_len, rng):
    h, w = img.shape[:2]
    flakes = (rng.random((h, w)) < amount).astype(np.float64)
    angle = float(rng.uniform(45.0, 135.0))
    streaks = convolve(flakes, _line_kernel(int(flake_len), angle) * flake_len,
                       mode="constant")
    streaks = np.clip(streaks, 0, 1)[..., None]
    whitened = _clip(img * 0.85 + 0.1)
    return _clip(np.maximum(whitened, streaks * 0.95))


def frost(img, strength, rng):
    h, w = img.shape[:2]
    crystals = _smooth_noise((h, w), sigma=2.0, rng=rng)[..., None]
    tint = np.array([0.88, 0.92, 1.0])
    weight = strength * crystals
    return _clip(img * (1 - weight) + tint * weight)


def fog(img, strength, rng):
    h, w = img.shape[:2]
    layer = np.zeros((h, w))
    for octave, sigma in enumerate((32.0, 16.0, 8.0)):
        layer += _smooth_noise((h, w), sigma, rng) / (2 ** octave)
    layer /= layer.max()
    weight = (strength * layer)[..., None]
    return _clip(img * (1 - weight) + 0.9 * weight)


def spatter(img, amount, rng):
    h, w = img.shape[:2]
    field = _smooth_noise((h, w), sigma=1.5, rng=rng)
    mask = (field > np.quantile(field, 1 - amount)).astype(np.float64)
    mask = gaussian_filter(mask, 0.8)[..., None]
    mud = np.array([0.25, 0.18, 0.12])
    return _clip(img * (1 - 0.8 * mask) + mud * 0.8 * mask)
