"""Prime-operator tricluster mining.

One pass over the incidence triples: build the prime tricluster of each
triple, keep it when its density clears the threshold, deduplicate by a
canonical content key. The pass may fan out over worker threads; the
resulting store is immutable and canonically ordered (density descending,
then key), so the outcome is independent of iteration order and
parallelism.
"""

from __future__ import annotations

import hashlib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .core import Tricluster, TriadicContext
from .errors import TriscopeError

__all__ = [
    "ClusteringConfig",
    "TriclusterStore",
    "canonical_form",
    "canonical_key",
    "enumerate_triclusters",
]


def _rank_maps(context: TriadicContext) -> tuple[dict[int, int], ...]:
    # id -> rank of the id's label in sorted label order, per axis
    return tuple(
        {i: rank for rank, i in enumerate(sorted(axis, key=axis.label_of))}
        for axis in (context.objects, context.attributes, context.conditions)
    )


def _key_fn(context: TriadicContext):
    ranks = _rank_maps(context)

    def key_of(t: Tricluster) -> str:
        form = "|".join(
            ",".join(map(str, sorted(table[i] for i in part)))
            for table, part in zip(ranks, (t.extent, t.intent, t.modus))
        )
        return hashlib.sha256(form.encode("utf-8")).hexdigest()

    return key_of


def canonical_form(context: TriadicContext, t: Tricluster) -> str:
    """Order-independent text form of a tricluster's three sets.

    Members are written as their label's rank in sorted label order (not as
    raw ids), sorted ascending per axis, axes separated by '|'. Two contexts
    holding the same labeled data therefore agree on every form no matter
    how parsing happened to number the labels.
    """
    ranks = _rank_maps(context)
    return "|".join(
        ",".join(str(r) for r in sorted(table[i] for i in part))
        for table, part in zip(ranks, (t.extent, t.intent, t.modus))
    )


def canonical_key(context: TriadicContext, t: Tricluster) -> str:
    """Content digest of the canonical form.

    Equal labeled (extent, intent, modus) gives equal keys by construction;
    the store verifies set equality on any digest hit, so dedup correctness
    never rests on digest quality.
    """
    return hashlib.sha256(canonical_form(context, t).encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class ClusteringConfig:
    """Mining parameters: density threshold and a worker-count hint.

    ``rho_min`` accepts Fraction, int, or an exact string such as "5/6" or
    "0.25"; the inclusive test density >= rho_min is applied.
    """

    rho_min: Fraction = Fraction(0)
    workers: int = 1

    def __post_init__(self):
        object.__setattr__(self, "rho_min", Fraction(self.rho_min))
        if not 0 <= self.rho_min <= 1:
            raise ValueError(f"rho_min must lie in [0, 1], got {self.rho_min}")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")


class TriclusterStore:
    """Deduplicated result of one mining run, in canonical order.

    Iteration yields triclusters sorted by descending density, ties by
    ascending canonical key. Keys live in label-rank space, so they are
    comparable across runs that numbered the same labels differently.
    ``dims`` records the mined context's axis sizes so downstream
    consumers can validate ids without the context.
    """

    __slots__ = ("rho_min", "dims", "_ordered", "_keys", "_by_key", "_key_by_t")

    def __init__(
        self,
        triclusters: Iterable[Tricluster],
        rho_min: Fraction,
        context: TriadicContext,
    ):
        key_of = _key_fn(context)
        by_key: dict[str, Tricluster] = {}
        for t in triclusters:
            key = key_of(t)
            clash = by_key.get(key)
            if clash is not None and clash.sets() != t.sets():
                raise TriscopeError(f"canonical key collision on {key}")
            by_key.setdefault(key, t)
        ordered = sorted(by_key.items(), key=lambda kv: (-kv[1].density, kv[0]))
        self.rho_min = Fraction(rho_min)
        self.dims = context.dims
        self._keys = tuple(k for k, _ in ordered)
        self._ordered = tuple(t for _, t in ordered)
        self._by_key = dict(ordered)
        self._key_by_t = {t: k for k, t in ordered}

    def __len__(self) -> int:
        return len(self._ordered)

    def __iter__(self) -> Iterator[Tricluster]:
        return iter(self._ordered)

    def __contains__(self, key: str) -> bool:
        return key in self._by_key

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, TriclusterStore)
            and self.rho_min == other.rho_min
            and self.dims == other.dims
            and self._ordered == other._ordered
        )

    def __hash__(self) -> int:
        return hash((self.rho_min, self.dims, self._ordered))

    def __repr__(self) -> str:
        return f"TriclusterStore({len(self)} triclusters, rho_min={self.rho_min})"

    def keys(self) -> tuple[str, ...]:
        return self._keys

    def items(self) -> Iterator[tuple[str, Tricluster]]:
        return iter(zip(self._keys, self._ordered))

    def get(self, key: str) -> Tricluster | None:
        return self._by_key.get(key)

    def key_of(self, t: Tricluster) -> str:
        """Canonical key of a stored tricluster."""
        try:
            return self._key_by_t[t]
        except KeyError:
            raise TriscopeError("tricluster is not in this store") from None

    def densities(self) -> list[Fraction]:
        return [t.density for t in self._ordered]


def _mine_slice(
    context: TriadicContext,
    triples: Sequence[tuple[int, int, int]],
    rho_min: Fraction,
) -> list[Tricluster]:
    out = []
    for g, m, b in triples:
        t = context.tricluster(g, m, b)
        if t.density >= rho_min:
            out.append(t)
    return out


def enumerate_triclusters(
    context: TriadicContext,
    config: ClusteringConfig | None = None,
    *,
    rho_min: Fraction | int | str | None = None,
    workers: int | None = None,
) -> TriclusterStore:
    """Mine all prime-operator triclusters with density >= rho_min.

    Triples are processed in ascending (g, m, b) order regardless of how
    the context was assembled, and the first-seen generator in that order
    is the one a duplicate keeps, so the store is a pure function of
    (context, rho_min).
    """
    if config is None:
        config = ClusteringConfig(
            rho_min=Fraction(0) if rho_min is None else rho_min,
            workers=1 if workers is None else workers,
        )
    elif rho_min is not None or workers is not None:
        raise ValueError("pass either a config or keyword overrides, not both")

    triples = context.sorted_triples
    if config.workers > 1 and len(triples) > 1:
        n = min(config.workers, len(triples))
        step = (len(triples) + n - 1) // n
        slices = [triples[i : i + step] for i in range(0, len(triples), step)]
        with ThreadPoolExecutor(max_workers=n) as pool:
            parts = pool.map(lambda s: _mine_slice(context, s, config.rho_min), slices)
        candidates: list[Tricluster] = [t for part in parts for t in part]
    else:
        candidates = _mine_slice(context, triples, config.rho_min)

    # candidates are in ascending triple order; dedup keeps the first seen
    seen: dict[tuple, Tricluster] = {}
    for t in candidates:
        seen.setdefault(t.sets(), t)
    return TriclusterStore(seen.values(), config.rho_min, context)
