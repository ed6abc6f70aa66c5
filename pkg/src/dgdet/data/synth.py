"""Synthetic shape-detection benchmark with held-out stylistic target domains.

Four classes (circle, square, triangle, star) are placed without overlap on a
128 x 128 canvas. The source domain renders saturated fills on a light
background; target domains re-render the *same* scene distribution with
renderer-level shifts that are deliberately disjoint from the corruption
catalog: a remapped palette on a dark background (stylized), striped fills on
a checkered background (textured), and value inversion (inverted). Given equal
seeds, every domain renders matched scenes, so e.g. inverted pixels are
exactly one minus the source rendering.

Rendering is done on a 4x supersampled grid and box-averaged down, which keeps
edges smooth and the whole pipeline deterministic.
"""

from __future__ import annotations

import json
import os

import numpy as np
from matplotlib.path import Path as MplPath
from PIL import Image

CLASS_NAMES = ["circle", "square", "triangle", "star"]
DOMAINS = ("source_plain", "target_stylized", "target_textured", "target_inverted")

IMAGE_SIZE = 128
SUPERSAMPLE = 4
MAX_INSTANCES = 5
PLACE_TRIES = 80
MARGIN = 3.0  # min gap between instance boxes and to the border, px

SOURCE_PALETTE = np.array([
    [0.85, 0.12, 0.12],
    [0.10, 0.62, 0.18],
    [0.15, 0.25, 0.82],
    [0.92, 0.72, 0.10],
    [0.80, 0.15, 0.72],
    [0.05, 0.65, 0.70],
])

STYLIZED_PALETTE = np.array([
    [0.62, 0.55, 0.85],
    [0.55, 0.85, 0.70],
    [0.95, 0.60, 0.50],
    [0.55, 0.75, 0.95],
    [0.85, 0.80, 0.55],
    [0.90, 0.55, 0.75],
])

SOURCE_BG = 0.93
STYLIZED_BG = 0.16


def _shape_vertices(class_name: str, cx: float, cy: float, size: float,
                    rotation: float) -> np.ndarray | None:
    """Polygon vertices in continuous pixel coords; None for the circle."""
    if class_name == "circle":
        return None
    if class_name == "square":
        corners = np.array([[-1, -1], [1, -1], [1, 1], [-1, 1]], dtype=np.float64) * size
    elif class_name == "triangle":
        angles = rotation + np.array([0.0, 2 * np.pi / 3, 4 * np.pi / 3])
        corners = np.stack([np.cos(angles), np.sin(angles)], axis=1) * size
        rotation = 0.0
    elif class_name == "star":
        angles = rotation + np.arange(10) * np.pi / 5
        radii = np.where(np.arange(10) % 2 == 0, size, 0.45 * size)
        corners = np.stack([np.cos(angles), np.sin(angles)], axis=1) * radii[:, None]
        rotation = 0.0
    else:
        raise ValueError(f"unknown class {class_name!r}")
    c, s = np.cos(rotation), np.sin(rotation)
    rot = np.array([[c, -s], [s, c]])
    return corners @ rot.T + np.array([cx, cy])


def _shape_bounds(class_name, cx, cy, size, rotation):
    if class_name == "circle":
        return cx - size, cy - size, cx + size, cy + size
    v = _shape_vertices(class_name, cx, cy, size, rotation)
    return v[:, 0].min(), v[:, 1].min(), v[:, 0].max(), v[:, 1].max()


def _boxes_disjoint(box, others, margin):
    x1, y1, x2, y2 = box
    for ox1, oy1, ox2, oy2 in others:
        if x1 < ox2 + margin and ox1 < x2 + margin and y1 < oy2 + margin and oy1 < y2 + margin:
            return False
    return True


def _sample_scene(rng: np.random.Generator) -> list[dict]:
    """Domain-independent scene description: classes, geometry, color indices."""
    n = int(rng.integers(1, MAX_INSTANCES + 1))
    shapes = []
    boxes = []
    for _ in range(n):
        class_id = int(rng.integers(1, len(CLASS_NAMES) + 1))
        name = CLASS_NAMES[class_id - 1]
        color_idx = int(rng.integers(len(SOURCE_PALETTE)))
        placed = None
        for _ in range(PLACE_TRIES):
            size = float(rng.uniform(9.0, 22.0))
            rotation = float(rng.uniform(0.0, 2 * np.pi))
            cx = float(rng.uniform(size + MARGIN, IMAGE_SIZE - size - MARGIN))
            cy = float(rng.uniform(size + MARGIN, IMAGE_SIZE - size - MARGIN))
            bounds = _shape_bounds(name, cx, cy, size, rotation)
            if _boxes_disjoint(bounds, boxes, MARGIN):
                placed = dict(class_id=class_id, name=name, cx=cx, cy=cy,
                              size=size, rotation=rotation, color_idx=color_idx,
                              bounds=bounds)
                break
        if placed is not None:
            boxes.append(placed["bounds"])
            shapes.append(placed)
    return shapes


def _coverage_mask(shape: dict, grid_x: np.ndarray, grid_y: np.ndarray) -> np.ndarray:
    if shape["name"] == "circle":
        return ((grid_x - shape["cx"]) ** 2 + (grid_y - shape["cy"]) ** 2
                <= shape["size"] ** 2)
    verts = _shape_vertices(shape["name"], shape["cx"], shape["cy"],
                            shape["size"], shape["rotation"])
    pts = np.stack([grid_x.ravel(), grid_y.ravel()], axis=1)
    return MplPath(verts).contains_points(pts).reshape(grid_x.shape)


def _render(shapes: list[dict], domain: str, rng: np.random.Generator) -> np.ndarray:
    s = SUPERSAMPLE
    hs = IMAGE_SIZE * s
    coords = (np.arange(hs) + 0.5) / s
    tint = rng.uniform(-0.03, 0.03, size=3)

    if domain in ("source_plain", "target_inverted"):
        canvas = np.ones((hs, hs, 3)) * (SOURCE_BG + tint)
        palette, fill_mode = SOURCE_PALETTE, "solid"
    elif domain == "target_stylized":
        canvas = np.ones((hs, hs, 3)) * (STYLIZED_BG + tint)
        palette, fill_mode = STYLIZED_PALETTE, "solid"
    elif domain == "target_textured":
        gx, gy = np.meshgrid(coords, coords)
        checker = (((gx // 16).astype(int) + (gy // 16).astype(int)) % 2)
        base = np.where(checker[..., None] == 0, 0.90, 0.97)
        canvas = base + tint
        palette, fill_mode = SOURCE_PALETTE, "stripes"
    else:
        raise ValueError(f"unknown domain {domain!r}")

    for shape in shapes:
        x1, y1, x2, y2 = shape["bounds"]
        j1, j2 = max(0, int(x1 * s) - 1), min(hs, int(np.ceil(x2 * s)) + 1)
        i1, i2 = max(0, int(y1 * s) - 1), min(hs, int(np.ceil(y2 * s)) + 1)
        gx, gy = np.meshgrid(coords[j1:j2], coords[i1:i2])
        mask = _coverage_mask(shape, gx, gy)
        color = palette[shape["color_idx"]]
        if fill_mode == "solid":
            fill = np.broadcast_to(color, (*mask.shape, 3))
        else:
            stripes = (((gx + gy) // 4).astype(int) % 2)
            fill = np.where(stripes[..., None] == 0, color, color * 0.45)
        region = canvas[i1:i2, j1:j2]
        canvas[i1:i2, j1:j2] = np.where(mask[..., None], fill, region)

    img = canvas.reshape(IMAGE_SIZE, s, IMAGE_SIZE, s, 3).mean(axis=(1, 3))
    if domain == "target_inverted":
        img = 1.0 - img
    return np.clip(img, 0.0, 1.0).astype(np.float32)


def synth_generate(domain: str, n: int, seed: int, out_dir: str) -> dict:
    """Write n rendered images plus annotations.json under out_dir."""
    if domain not in DOMAINS:
        raise ValueError(f"domain must be one of {DOMAINS}, got {domain!r}")
    if n < 1:
        raise ValueError("n must be >= 1")

    image_dir = os.path.join(out_dir, "images")
    os.makedirs(image_dir, exist_ok=True)

    rng = np.random.default_rng(seed)
    images, annotations = [], []
    ann_id = 1
    for i in range(n):
        shapes = _sample_scene(rng)
        img = _render(shapes, domain, rng)
        image_id = f"img_{i:05d}"
        file_name = f"{image_id}.png"
        Image.fromarray((img * 255).round().astype(np.uint8)).save(
            os.path.join(image_dir, file_name)
        )
        images.append(dict(id=image_id, file_name=file_name,
                           height=IMAGE_SIZE, width=IMAGE_SIZE))
        for shape in shapes:
            x1, y1, x2, y2 = shape["bounds"]
            annotations.append(dict(
                id=ann_id, image_id=image_id, category_id=shape["class_id"],
                bbox=[round(x1, 3), round(y1, 3),
                      round(x2 - x1, 3), round(y2 - y1, 3)],
            ))
            ann_id += 1

    payload = dict(
        info=dict(domain=domain, seed=seed, generator="dgdet-synth-v1"),
        images=images,
        annotations=annotations,
        categories=[dict(id=i + 1, name=n) for i, n in enumerate(CLASS_NAMES)],
    )
    with open(os.path.join(out_dir, "annotations.json"), "w") as f:
        json.dump(payload, f, indent=None, separators=(",", ":"), sort_keys=True)
    return dict(domain=domain, n=len(images), boxes=len(annotations), out=out_dir)
