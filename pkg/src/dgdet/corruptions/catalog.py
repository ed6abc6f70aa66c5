"""Catalog of visual corruptions and the sampling pool used for training.

The catalog groups corruptions into Noise, Blur, Digital, Fourier and Weather
families, each with five severity presets loaded from a versioned config file
(catalog_v1.cfg). Weather corruptions and constant_amplitude are listed but
excluded from the default training pool: weather effects overlap with common
target-domain shifts, and constant amplitude wipes out instance-level detail.
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass, field
from importlib import resources

import numpy as np

from ..errors import EmptyPool, InvalidSeverity, UnknownCorruption

SEVERITIES = (1, 2, 3, 4, 5)

# Reserved no-op corruption; usable in pools but not part of the catalog.
IDENTITY = "identity"

GROUP_ORDER = ("Noise", "Blur", "Digital", "Fourier", "Weather")

_CATALOG_FILE = "catalog_v1.cfg"


@dataclass(frozen=True)
class CorruptionSpec:
    """A named corruption at one of the five severity levels."""

    name: str
    severity: int

    def __post_init__(self):
        if self.name != IDENTITY and self.name not in catalog():
            raise UnknownCorruption(f"unknown corruption {self.name!r}")
        if self.severity not in SEVERITIES:
            raise InvalidSeverity(
                f"severity {self.severity} outside {SEVERITIES[0]}..{SEVERITIES[-1]}"
            )


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    group: str
    excluded: bool
    # One parameter tuple per severity level, harshest last.
    severity_params: tuple[tuple[float, ...], ...]

    def params(self, severity: int) -> tuple[float, ...]:
        if severity not in SEVERITIES:
            raise InvalidSeverity(f"severity {severity} outside 1..5")
        return self.severity_params[severity - 1]


def _parse_severity(raw: str) -> tuple[tuple[float, ...], ...]:
    presets = []
    for part in raw.split("|"):
        presets.append(tuple(float(v) for v in part.split(",")))
    if len(presets) != len(SEVERITIES):
        raise ValueError(f"expected {len(SEVERITIES)} severity presets, got {len(presets)}")
    return tuple(presets)


def _load_catalog() -> dict[str, CatalogEntry]:
    parser = configparser.ConfigParser()
    text = resources.files(__package__).joinpath(_CATALOG_FILE).read_text()
    parser.read_string(text)
    if parser.getint("meta", "version") != 1:
        raise ValueError("unsupported catalog version")
    entries = {}
    for name in parser.sections():
        if name == "meta":
            continue
        sec = parser[name]
        entries[name] = CatalogEntry(
            name=name,
            group=sec["group"],
            excluded=sec.getboolean("excluded"),
            severity_params=_parse_severity(sec["severity"]),
        )
    return entries


_CATALOG: dict[str, CatalogEntry] | None = None


def catalog() -> dict[str, CatalogEntry]:
    """Catalog entries keyed by name, loaded once from the versioned file."""
    global _CATALOG
    if _CATALOG is None:
        _CATALOG = _load_catalog()
    return _CATALOG


def catalog_version() -> int:
    return 1


def list_catalog() -> list[tuple[str, str]]:
    """All (group, name) pairs in group order, excluded entries included."""
    entries = sorted(
        catalog().values(), key=lambda e: (GROUP_ORDER.index(e.group),)
    )
    return [(e.group, e.name) for e in entries]


def is_excluded(name: str) -> bool:
    if name == IDENTITY:
        return False
    try:
        return catalog()[name].excluded
    except KeyError:
        raise UnknownCorruption(f"unknown corruption {name!r}") from None


@dataclass
class CorruptionPool:
    """Ordered set of corruption names to sample from during training.

    severity_policy restricts the severities drawn for a name; names absent
    from the mapping use all five levels.
    """

    names: list[str]
    severity_policy: dict[str, tuple[int, ...]] = field(default_factory=dict)

    def __post_init__(self):
        seen = set()
        for name in self.names:
            if name != IDENTITY and name not in catalog():
                raise UnknownCorruption(f"unknown corruption {name!r}")
            if name in seen:
                raise ValueError(f"duplicate pool entry {name!r}")
            seen.add(name)
        for name, sevs in self.severity_policy.items():
            for s in sevs:
                if s not in SEVERITIES:
                    raise InvalidSeverity(f"severity {s} outside 1..5")

    def severities_for(self, name: str) -> tuple[int, ...]:
        return self.severity_policy.get(name, SEVERITIES)

    def __len__(self):
        return len(self.names)


def default_pool() -> CorruptionPool:
    """All non-excluded catalog corruptions (no weather, no constant_amplitude)."""
    return CorruptionPool([e.name for _, e in sorted(catalog().items()) if not e.excluded])


def identity_pool() -> CorruptionPool:
    return CorruptionPool([IDENTITY])


def make_pool(selector: str) -> CorruptionPool:
    """Build a pool from a config selector.

    Accepts 'default', 'identity', 'all' (includes excluded entries), or a
    comma-separated list of catalog names.
    """
    if selector == "default":
        return default_pool()
    if selector == "identity":
        return identity_pool()
    if selector == "all":
        return CorruptionPool(sorted(catalog().keys()))
    return CorruptionPool([n.strip() for n in selector.split(",") if n.strip()])


def sample_spec(pool: CorruptionPool, rng: np.random.Generator) -> CorruptionSpec:
    """Draw a (name, severity) uniformly from the pool, advancing rng."""
    if len(pool) == 0:
        raise EmptyPool("cannot sample from an empty corruption pool")
    name = pool.names[int(rng.integers(len(pool.names)))]
    allowed = pool.severities_for(name)
    severity = int(allowed[int(rng.integers(len(allowed)))])
    return CorruptionSpec(name, severity)
