"""Dataset loading, view-pair construction, and the synthetic benchmark."""

from .coco import (
    ANNOTATION_FILE,
    BoxLabel,
    DatasetMeta,
    DatasetSample,
    ImageRecord,
    load_annotations,
    load_dataset,
    read_image,
)
from .pairs import ViewPair, derive_seed, make_view_pair
from .synth import CLASS_NAMES, DOMAINS, IMAGE_SIZE, synth_generate

__all__ = [
    "ANNOTATION_FILE",
    "BoxLabel",
    "CLASS_NAMES",
    "DOMAINS",
    "DatasetMeta",
    "DatasetSample",
    "IMAGE_SIZE",
    "ImageRecord",
    "ViewPair",
    "derive_seed",
    "load_annotations",
    "load_dataset",
    "make_view_pair",
    "read_image",
    "synth_generate",
]
