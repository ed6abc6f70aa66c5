"""Corruption catalog, application, and pool sampling."""

from __future__ import annotations

import numpy as np

from ..errors import EmptyPool, InvalidSeverity, UnknownCorruption
from . import fourier, ops
from .catalog import (
    IDENTITY,
    SEVERITIES,
    CatalogEntry,
    CorruptionPool,
    CorruptionSpec,
    catalog,
    catalog_version,
    default_pool,
    identity_pool,
    is_excluded,
    list_catalog,
    make_pool,
    sample_spec,
)

__all__ = [
    "IDENTITY",
    "SEVERITIES",
    "CatalogEntry",
    "CorruptionPool",
    "CorruptionSpec",
    "apply_corruption",
    "catalog",
    "catalog_version",
    "default_pool",
    "identity_pool",
    "is_excluded",
    "list_catalog",
    "make_pool",
    "sample_spec",
    "fourier",
    "ops",
]


def _validate_image(img: np.ndarray):
    if img.ndim != 3 or img.shape[2] != 3:
        raise ValueError(f"expected H x W x 3 image, got shape {img.shape}")
    if img.shape[0] < 16 or img.shape[1] < 16:
        raise ValueError("image smaller than 16 x 16")
    if img.min() < 0.0 or img.max() > 1.0:
        raise ValueError("pixel values outside [0, 1]")


def apply_corruption(img: np.ndarray, spec: CorruptionSpec, seed: int) -> np.ndarray:
    """Apply a catalog corruption to an image, deterministically per seed.

    Returns a new float32 array of identical shape with values in [0, 1].
    The identity spec returns the input unchanged (bitwise).
    """
    _validate_image(img)
    if spec.name == IDENTITY:
        return img.copy()
    if spec.name not in catalog():
        raise UnknownCorruption(f"unknown corruption {spec.name!r}")
    if spec.severity not in SEVERITIES:
        raise InvalidSeverity(f"severity {spec.severity} outside 1..5")

    img = np.ascontiguousarray(img, dtype=np.float32)
    params = catalog()[spec.name].params(spec.severity)
    rng = np.random.default_rng(seed)

    if spec.name == "gaussian_noise":
        return ops.gaussian_noise(img, params[0], rng)
    if spec.name == "shot_noise":
        return ops.shot_noise(img, params[0], rng)
    if spec.name == "impulse_noise":
        return ops.impulse_noise(img, params[0], rng)
    if spec.name == "speckle_noise":
        return ops.speckle_noise(img, params[0], rng)
    if spec.name == "gaussian_blur":
        return ops.gaussian_blur(img, params[0])
    if spec.name == "defocus_blur":
        return ops.defocus_blur(img, params[0], params[1])
    if spec.name == "motion_blur":
        return ops.motion_blur(img, params[0], rng)
    if spec.name == "glass_blur":
        return ops.glass_blur(img, params[0], params[1], params[2], rng)
    if spec.name == "zoom_blur":
        return ops.zoom_blur(img, params[0], params[1])
    if spec.name == "brightness":
        return ops.brightness(img, params[0])
    if spec.name == "contrast":
        return ops.contrast(img, params[0])
    if spec.name == "saturate":
        return ops.saturate(img, params[0], params[1])
    if spec.name == "jpeg_compression":
        return ops.jpeg_compression(img, params[0])
    if spec.name == "pixelate":
        return ops.pixelate(img, params[0])
    if spec.name == "elastic_transform":
        return ops.elastic_transform(img, params[0], params[1], rng)
    if spec.name == "phase_scaling":
        return fourier.fourier_phase_scale(img, spec.severity)
    if spec.name == "high_pass_filter":
        return fourier.fourier_high_pass(img, spec.severity)
    if spec.name == "constant_amplitude":
        return fourier.constant_amplitude(img, spec.severity)
    if spec.name == "snow":
        return ops.snow(img, params[0], params[1], rng)
    if spec.name == "frost":
        return ops.frost(img, params[0], rng)
    if spec.name == "fog":
        return ops.fog(img, params[0], rng)
    if spec.name == "spatter":
        return ops.spatter(img, params[0], rng)
    raise UnknownCorruption(f"no implementation for {spec.name!r}")
