"""Clean/corrupted view-pair construction for two-view training.

A view pair keeps the original image, one corrupted rendering of it, and the
shared labels. All default corruptions preserve geometry, so the labels apply
to both views unchanged. Per-sample seeds derive from (global seed, epoch,
sample index) so prefetching order cannot change the result.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..corruptions import CorruptionPool, CorruptionSpec, apply_corruption, sample_spec
from .coco import BoxLabel, DatasetSample


@dataclass
class ViewPair:
    original: np.ndarray
    augmented: np.ndarray
    labels: list[BoxLabel]
    spec: CorruptionSpec
    image_id: str = ""


def derive_seed(global_seed: int, epoch: int, sample_index: int) -> int:
    """Stable per-sample seed, independent of iteration order."""
    seq = np.random.SeedSequence([int(global_seed), int(epoch), int(sample_index)])
    return int(seq.generate_state(1)[0])


def make_view_pair(sample: DatasetSample, pool: CorruptionPool,
                   rng: np.random.Generator) -> ViewPair:
    """Sample a corruption from the pool and build the two-view pair."""
    spec = sample_spec(pool, rng)
    seed = int(rng.integers(0, 2 ** 31))
    augmented = apply_corruption(sample.image, spec, seed)
    return ViewPair(
        original=sample.image,
        augmented=augmented,
        labels=list(sample.labels),
        spec=spec,
        image_id=sample.image_id,
    )
