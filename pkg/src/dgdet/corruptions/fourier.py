"""Fourier-domain corruptions: phase scaling, high-pass filtering, constant
amplitude.

Each operates per channel on the 2-D DFT. Phase scaling perturbs only the
phase spectrum (amplitude is preserved exactly before clipping); the high-pass
filter zeroes all frequencies below a cutoff radius, including the DC term, so
flat images map to (clipped) zero; constant amplitude interpolates the
amplitude spectrum toward its per-channel mean, which flattens texture while
keeping phase structure.
"""

from __future__ import annotations

import numpy as np

from ..errors import InvalidSeverity
from .catalog import SEVERITIES, catalog


def _check_severity(severity: int):
    if severity not in SEVERITIES:
        raise InvalidSeverity(f"severity {severity} outside 1..5")


def _hermitian_symmetrize(scaled: np.ndarray, original: np.ndarray) -> np.ndarray:
    """Restore conjugate symmetry so the inverse transform is exactly real.

    Phase scaling maps a +pi phase and its mirrored -pi phase to values that
    are no longer conjugate, which would leak amplitude into the discarded
    imaginary part. Averaging each bin with the conjugate of its mirror is the
    identity on symmetric pairs and repairs the broken ones; the self-conjugate
    bins (DC and Nyquist combinations) must stay real, so they keep their
    original values (phase unscaled at those <= 4 bins).
    """
    h, w = scaled.shape
    mirror = scaled[np.ix_((-np.arange(h)) % h, (-np.arange(w)) % w)]
    sym = 0.5 * (scaled + np.conj(mirror))
    for i in {0, h // 2 if h % 2 == 0 else 0}:
        for j in {0, w // 2 if w % 2 == 0 else 0}:
            sym[i, j] = original[i, j]
    return sym


def phase_scale(img: np.ndarray, factor: float) -> np.ndarray:
    """Scale the phase spectrum by `factor`; unclipped, amplitude untouched."""
    out = np.empty(img.shape, dtype=np.float64)
    for c in range(img.shape[2]):
        spectrum = np.fft.fft2(img[..., c])
        amplitude = np.abs(spectrum)
        angle = np.angle(spectrum)
        scaled = _hermitian_symmetrize(amplitude * np.exp(1j * factor * angle), spectrum)
        out[..., c] = np.fft.ifft2(scaled).real
    return out


def fourier_phase_scale(img: np.ndarray, severity: int) -> np.ndarray:
    _check_severity(severity)
    factor = catalog()["phase_scaling"].params(severity)[0]
    return np.clip(phase_scale(img, factor), 0.0, 1.0).astype(np.float32)


def high_pass(img: np.ndarray, cutoff_frac: float) -> np.ndarray:
    """Zero frequencies with radius below cutoff_frac * min(H, W) / 2.

    The DC term sits at radius 0, so any positive cutoff removes it: flat
    images become (unclipped) zero. cutoff_frac = 0 keeps every frequency.
    """
    h, w = img.shape[:2]
    fy = np.fft.fftfreq(h)[:, None] * h
    fx = np.fft.fftfreq(w)[None, :] * w
    radius = np.sqrt(fy ** 2 + fx ** 2)
    mask = radius >= cutoff_frac * min(h, w) / 2.0
    out = np.empty(img.shape, dtype=np.float64)
    for c in range(img.shape[2]):
        spectrum = np.fft.fft2(img[..., c]) * mask
        out[..., c] = np.fft.ifft2(spectrum).real
    return out


def fourier_high_pass(img: np.ndarray, severity: int) -> np.ndarray:
    _check_severity(severity)
    cutoff = catalog()["high_pass_filter"].params(severity)[0]
    return np.clip(high_pass(img, cutoff), 0.0, 1.0).astype(np.float32)


def constant_amplitude(img: np.ndarray, severity: int) -> np.ndarray:
    _check_severity(severity)
    t = catalog()["constant_amplitude"].params(severity)[0]
    out = np.empty(img.shape, dtype=np.float64)
    for c in range(img.shape[2]):
        spectrum = np.fft.fft2(img[..., c])
        amplitude = np.abs(spectrum)
        angle = np.angle(spectrum)
        flat = (1 - t) * amplitude + t * amplitude.mean()
        out[..., c] = np.fft.ifft2(flat * np.exp(1j * angle)).real
    return np.clip(out, 0.0, 1.0).astype(np.float32)
