"""Exception types shared across the toolkit.

Every error raised by a public operation derives from DgdetError so the CLI
can map any failure to a one-line machine-parsable reason and a nonzero exit.
"""


class DgdetError(Exception):
    """Base class for all toolkit errors."""


# --- corruptions ---

class UnknownCorruption(DgdetError):
    """Corruption name not present in the catalog."""


class InvalidSeverity(DgdetError):
    """Severity outside the 1..5 range."""


class EmptyPool(DgdetError):
    """Sampling from a corruption pool with no members."""


# --- datasets ---

class SchemaError(DgdetError):
    """Malformed annotation file or invariant-violating box."""


class LabelSpaceMismatch(DgdetError):
    """Target dataset classes differ from the source label space."""


class MissingImage(DgdetError):
    """Annotation references an image file that does not exist."""


# --- detector / losses ---

class ShapeMismatch(DgdetError):
    """Paired tensors disagree in shape."""


class NotADistribution(DgdetError):
    """A probability row is negative or does not sum to one."""


class NegativeWeight(DgdetError):
    """Loss weight below zero."""


class EmptyBatch(DgdetError):
    """Loss requested over zero proposals."""


class NaNLoss(DgdetError):
    """Training aborted on a non-finite loss value."""


class CheckpointMismatch(DgdetError):
    """Checkpoint config hash does not match the expected hash."""


# --- evaluation ---

class DegenerateBox(DgdetError):
    """Box with non-positive width or height."""


class EmptyDetections(DgdetError):
    """Calibration requested on an empty detection set."""


class NoDetections(DgdetError):
    """Temperature fitting requested on an empty detection set."""
