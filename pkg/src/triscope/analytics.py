"""Exploration surfaces over a mined tricluster store.

The coverage map counts, per axis-pair cell, how many triclusters contain
that pair; cells back the workbench heatmap. Also here: per-cell
tricluster listings, largest-tricluster lookup and density-ordered
listings. The map carries raw counts only; color scales are presentation
policy and live in the UI.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .core import ATTRIBUTES, CONDITIONS, OBJECTS, TriadicContext, Tricluster
from .errors import InvalidAxisError, UnknownIdError
from .mining import TriclusterStore

__all__ = [
    "PLANES",
    "CoverageMap",
    "coverage_identity",
    "coverage_map",
    "largest_tricluster",
    "order_by_density",
    "triclusters_containing",
]

#: Plane codes used by the CLI and the HTTP API.
PLANES = {
    "GM": (OBJECTS, ATTRIBUTES),
    "GB": (OBJECTS, CONDITIONS),
    "MB": (ATTRIBUTES, CONDITIONS),
}

_COMPONENT = {OBJECTS: "extent", ATTRIBUTES: "intent", CONDITIONS: "modus"}


@dataclass(frozen=True)
class CoverageMap:
    """Per-cell tricluster membership counts for one axis pair."""

    plane: tuple[str, str]
    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]
    counts: np.ndarray

    @property
    def total(self) -> int:
        return int(self.counts.sum())

    def cell(self, row: int, col: int) -> int:
        return int(self.counts[row, col])

    def to_csv(self) -> str:
        """Render as CSV: label header row/column, integer cells."""
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow([""] + list(self.col_labels))
        for i, label in enumerate(self.row_labels):
            writer.writerow([label] + [int(c) for c in self.counts[i]])
        return out.getvalue()


def _resolve_plane(plane: str | tuple[str, str]) -> tuple[str, str]:
    if isinstance(plane, str):
        try:
            return PLANES[plane.upper()]
        except KeyError:
            raise InvalidAxisError(
                f"plane must be one of {sorted(PLANES)}, got {plane!r}"
            ) from None
    pair = tuple(plane)
    if pair not in PLANES.values():
        raise InvalidAxisError(f"plane must be an ordered axis pair, got {plane!r}")
    return pair  # type: ignore[return-value]


def coverage_map(
    triclusters: Iterable[Tricluster],
    context: TriadicContext,
    plane: str | tuple[str, str] = (OBJECTS, ATTRIBUTES),
) -> CoverageMap:
    """Count containing triclusters per cell of the chosen plane.

    Accumulates each tricluster's projected rectangle in one shot, so the
    cost is the total rectangle area rather than cells x store size.
    """
    rows_axis, cols_axis = _resolve_plane(plane)
    row_labels = context.axis(rows_axis).labels
    col_labels = context.axis(cols_axis).labels
    counts = np.zeros((len(row_labels), len(col_labels)), dtype=np.int64)
    row_part = _COMPONENT[rows_axis]
    col_part = _COMPONENT[cols_axis]
    for t in triclusters:
        rows = sorted(getattr(t, row_part))
        cols = sorted(getattr(t, col_part))
        counts[np.ix_(rows, cols)] += 1
    return CoverageMap((rows_axis, cols_axis), row_labels, col_labels, counts)


def triclusters_containing(store: TriclusterStore, g: int, m: int) -> list[Tricluster]:
    """Triclusters with g in the extent and m in the intent, densest first."""
    n_obj, n_att, _ = store.dims
    if not 0 <= g < n_obj:
        raise UnknownIdError(f"object id {g} outside axis of size {n_obj}")
    if not 0 <= m < n_att:
        raise UnknownIdError(f"attribute id {m} outside axis of size {n_att}")
    return [t for t in store if g in t.extent and m in t.intent]


def largest_tricluster(
    store: TriclusterStore, g: int, m: int, by: str = "volume"
) -> Tricluster | None:
    """The biggest tricluster containing the (object, attribute) pair, or None.

    "Biggest" means volume |A||B||C| by default; pass by="extent" to rank
    by extent size instead. Ties go to the denser tricluster, then to
    canonical key order.
    """
    if by == "volume":
        measure = lambda t: t.volume  # noqa: E731
    elif by == "extent":
        measure = lambda t: len(t.extent)  # noqa: E731
    else:
        raise ValueError(f"by must be 'volume' or 'extent', got {by!r}")
    candidates = triclusters_containing(store, g, m)
    if not candidates:
        return None
    return min(candidates, key=lambda t: (-measure(t), -t.density, store.key_of(t)))


def order_by_density(store: TriclusterStore) -> list[Tricluster]:
    """All stored triclusters, densest first; ties by volume then key."""
    return sorted(store, key=lambda t: (-t.density, -t.volume, store.key_of(t)))


def coverage_identity(triclusters: Sequence[Tricluster], cmap: CoverageMap) -> bool:
    """Double-counting check: sum of all cells equals the sum of rectangle areas."""
    row_part = _COMPONENT[cmap.plane[0]]
    col_part = _COMPONENT[cmap.plane[1]]
    expected = sum(
        len(getattr(t, row_part)) * len(getattr(t, col_part)) for t in triclusters
    )
    return cmap.total == expected
