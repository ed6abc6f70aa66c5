"""Detection dataset loading: COCO-style JSON annotations plus an image dir.

Layout expected under a dataset root:

    annotations.json   {"images": [...], "annotations": [...], "categories": [...]}
    images/            PNG or JPEG files referenced by file_name

Boxes are stored as COCO xywh and converted to absolute xyxy at load. Every
box invariant (positive extent, inside image bounds after clamping) is checked
up front; target datasets must carry exactly the source's class list.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np
from PIL import Image

from ..errors import LabelSpaceMismatch, MissingImage, SchemaError

ANNOTATION_FILE = "annotations.json"


@dataclass(frozen=True)
class BoxLabel:
    """One ground-truth object: class id in 1..K and an absolute xyxy box."""

    class_id: int
    box: tuple[float, float, float, float]


@dataclass
class DatasetSample:
    image_id: str
    image: np.ndarray  # H x W x 3 float32 in [0, 1]
    labels: list[BoxLabel]


@dataclass
class DatasetMeta:
    name: str
    num_classes: int
    class_names: list[str]
    num_samples: int
    role: str  # source | target
    root: str = ""
    image_sizes: dict[str, tuple[int, int]] = field(default_factory=dict)  # id -> (H, W)


@dataclass
class ImageRecord:
    image_id: str
    path: str
    height: int
    width: int
    labels: list[BoxLabel]


def _require(cond: bool, msg: str):
    if not cond:
        raise SchemaError(msg)


def load_annotations(root: str, role: str = "source",
                     expected_classes: list[str] | None = None,
                     name: str | None = None) -> tuple[DatasetMeta, list[ImageRecord]]:
    """Parse and validate annotations without decoding any image data."""
    ann_path = os.path.join(root, ANNOTATION_FILE)
    if not os.path.isfile(ann_path):
        raise SchemaError(f"no {ANNOTATION_FILE} under {root}")
    try:
        with open(ann_path) as f:
            raw = json.load(f)
    except json.JSONDecodeError as e:
        raise SchemaError(f"invalid JSON in {ann_path}: {e}") from e

    for key in ("images", "annotations", "categories"):
        _require(key in raw, f"missing top-level key {key!r}")

    categories = sorted(raw["categories"], key=lambda c: c["id"])
    _require(len(categories) >= 1, "empty category list")
    _require([c["id"] for c in categories] == list(range(1, len(categories) + 1)),
             "category ids must be 1..K")
    class_names = [c["name"] for c in categories]
    if expected_classes is not None and class_names != list(expected_classes):
        raise LabelSpaceMismatch(
            f"dataset classes {class_names} != expected {list(expected_classes)}"
        )

    records: dict = {}
    for im in sorted(raw["images"], key=lambda r: str(r["id"])):
        image_id = str(im["id"])
        _require(image_id not in records, f"duplicate image id {image_id}")
        path = os.path.join(root, "images", im["file_name"])
        if not os.path.isfile(path):
            raise MissingImage(f"missing image file {path}")
        records[image_id] = ImageRecord(image_id, path, int(im["height"]),
                                        int(im["width"]), [])

    k = len(class_names)
    for ann in raw["annotations"]:
        image_id = str(ann["image_id"])
        _require(image_id in records, f"annotation references unknown image {image_id}")
        rec = records[image_id]
        cid = int(ann["category_id"])
        _require(1 <= cid <= k, f"category id {cid} outside 1..{k}")
        x, y, w, h = (float(v) for v in ann["bbox"])
        _require(w > 0 and h > 0, f"non-positive box extent {ann['bbox']}")
        x1 = min(max(x, 0.0), rec.width)
        y1 = min(max(y, 0.0), rec.height)
        x2 = min(max(x + w, 0.0), rec.width)
        y2 = min(max(y + h, 0.0), rec.height)
        _require(x2 > x1 and y2 > y1,
                 f"box {ann['bbox']} degenerate after clamping to image bounds")
        rec.labels.append(BoxLabel(cid, (x1, y1, x2, y2)))

    ordered = [records[i] for i in sorted(records)]
    meta = DatasetMeta(
        name=name or os.path.basename(os.path.normpath(root)),
        num_classes=k,
        class_names=class_names,
        num_samples=len(ordered),
        role=role,
        root=root,
        image_sizes={r.image_id: (r.height, r.width) for r in ordered},
    )
    return meta, ordered


def read_image(path: str) -> np.ndarray:
    with Image.open(path) as im:
        return np.asarray(im.convert("RGB"), dtype=np.float32) / 255.0


def load_dataset(root: str, role: str = "source",
                 expected_classes: list[str] | None = None
                 ) -> tuple[DatasetMeta, Iterator[DatasetSample]]:
    """Load a dataset, yielding samples lazily in deterministic id order."""
    meta, records = load_annotations(root, role, expected_classes)

    def _iter() -> Iterator[DatasetSample]:
        for rec in records:
            img = read_image(rec.path)
            if img.shape[:2] != (rec.height, rec.width):
                raise SchemaError(
                    f"image {rec.image_id}: file is {img.shape[:2]}, "
                    f"annotations say {(rec.height, rec.width)}"
                )
            yield DatasetSample(rec.image_id, img, list(rec.labels))

    return meta, _iter()
