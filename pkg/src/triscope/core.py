"""Dyadic and triadic incidence algebra.

Contexts, Galois/prime derivation operators, formal concepts, OA-biclusters,
OAC-prime triclusters and their densities. Element sets are handled as
fixed-universe bit vectors over dense integer ids (Python ints double as
arbitrary-width bit vectors), so derivation and density counting reduce to
word-parallel AND plus popcount. Densities are exact `fractions.Fraction`
values; floats appear only at presentation time.

All values here are immutable after construction and every operation is a
pure function of its inputs; sharing across threads is unrestricted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple

from .errors import (
    EmptySetError,
    InvalidAxisError,
    NotIncidentError,
    UnknownIdError,
    UnknownLabelError,
)

OBJECTS = "objects"
ATTRIBUTES = "attributes"
CONDITIONS = "conditions"

#: Axis names in canonical order; axis index i of the literature is AXES[i-1].
AXES = (OBJECTS, ATTRIBUTES, CONDITIONS)


def mask_of(ids: Iterable[int]) -> int:
    """Pack ids into a bit vector."""
    m = 0
    for i in ids:
        m |= 1 << i
    return m


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit positions in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def ids_of(mask: int) -> frozenset[int]:
    """Unpack a bit vector into a frozenset of ids."""
    return frozenset(iter_bits(mask))


def full_mask(n: int) -> int:
    return (1 << n) - 1


class Element(NamedTuple):
    id: int
    label: str


class Axis:
    """Immutable name table for one context axis.

    Ids are dense 0..n-1 and bijective with labels; the label at position
    ``i`` belongs to id ``i``.
    """

    __slots__ = ("labels", "_index")

    def __init__(self, labels: Iterable[str]):
        self.labels = tuple(labels)
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        if len(self._index) != len(self.labels):
            raise ValueError("axis labels must be distinct")

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[int]:
        return iter(range(len(self.labels)))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Axis) and self.labels == other.labels

    def __hash__(self) -> int:
        return hash(self.labels)

    def __repr__(self) -> str:
        return f"Axis({list(self.labels)!r})"

    def elements(self) -> tuple[Element, ...]:
        return tuple(Element(i, lab) for i, lab in enumerate(self.labels))

    def label_of(self, i: int) -> str:
        self.check(i)
        return self.labels[i]

    def labels_of(self, ids: Iterable[int]) -> list[str]:
        return [self.label_of(i) for i in sorted(ids)]

    def id_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabelError(f"label {label!r} not on this axis") from None

    def check(self, i: int) -> None:
        if not isinstance(i, int) or not 0 <= i < len(self.labels):
            raise UnknownIdError(f"id {i!r} outside axis of size {len(self.labels)}")

    def check_all(self, ids: Iterable[int]) -> None:
        for i in ids:
            self.check(i)


def _as_axis(value: Axis | Iterable[str]) -> Axis:
    return value if isinstance(value, Axis) else Axis(value)


@dataclass(frozen=True)
class FormalConcept:
    """Pair (extent, intent) closed under the owning context's Galois maps."""

    extent: frozenset[int]
    intent: frozenset[int]


@dataclass(frozen=True)
class OABicluster:
    """Relaxed concept (m', g') generated by an incidence pair (g, m)."""

    extent: frozenset[int]
    intent: frozenset[int]
    generator: tuple[int, int]
    density: Fraction


@dataclass(frozen=True)
class Tricluster:
    """OAC-prime tricluster ((m,b)', (g,b)', (g,m)') with cached density.

    ``generator`` records one incidence triple the tricluster was built
    from (informational: several triples may generate the same sets).
    """

    extent: frozenset[int]
    intent: frozenset[int]
    modus: frozenset[int]
    generator: tuple[int, int, int]
    density: Fraction

    @property
    def volume(self) -> int:
        return len(self.extent) * len(self.intent) * len(self.modus)

    def sets(self) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
        return (self.extent, self.intent, self.modus)


@dataclass(frozen=True)
class Triconcept:
    """Maximal fully-incident box (extent, intent, modus)."""

    extent: frozenset[int]
    intent: frozenset[int]
    modus: frozenset[int]

    def sets(self) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
        return (self.extent, self.intent, self.modus)


class DyadicContext:
    """Binary object-attribute incidence with Galois derivation.

    Parameters
    ----------
    objects, attributes:
        Axis instances or label iterables.
    incidence:
        Iterable of (object_id, attribute_id) pairs.
    """

    __slots__ = ("objects", "attributes", "incidence", "_row", "_col")

    def __init__(
        self,
        objects: Axis | Iterable[str],
        attributes: Axis | Iterable[str],
        incidence: Iterable[tuple[int, int]],
    ):
        self.objects = _as_axis(objects)
        self.attributes = _as_axis(attributes)
        pairs = frozenset((int(g), int(m)) for g, m in incidence)
        row = [0] * len(self.objects)
        col = [0] * len(self.attributes)
        for g, m in pairs:
            self.objects.check(g)
            self.attributes.check(m)
            row[g] |= 1 << m
            col[m] |= 1 << g
        self.incidence = pairs
        self._row = tuple(row)
        self._col = tuple(col)

    @classmethod
    def from_label_pairs(
        cls,
        objects: Iterable[str],
        attributes: Iterable[str],
        pairs: Iterable[tuple[str, str]],
    ) -> "DyadicContext":
        obj = Axis(objects)
        att = Axis(attributes)
        return cls(obj, att, [(obj.id_of(g), att.id_of(m)) for g, m in pairs])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, DyadicContext)
            and self.objects == other.objects
            and self.attributes == other.attributes
            and self.incidence == other.incidence
        )

    def __hash__(self) -> int:
        return hash((self.objects, self.attributes, self.incidence))

    def __repr__(self) -> str:
        return (
            f"DyadicContext(|G|={len(self.objects)}, |M|={len(self.attributes)}, "
            f"|I|={len(self.incidence)})"
        )

    def has(self, g: int, m: int) -> bool:
        return (g, m) in self.incidence

    def _side(self, axis: str) -> tuple[Axis, Axis, tuple[int, ...]]:
        if axis == OBJECTS:
            return self.objects, self.attributes, self._row
        if axis == ATTRIBUTES:
            return self.attributes, self.objects, self._col
        raise InvalidAxisError(f"dyadic axis must be {OBJECTS!r} or {ATTRIBUTES!r}, got {axis!r}")

    def galois(self, ids: Iterable[int], axis: str = OBJECTS) -> frozenset[int]:
        """Derive the set of opposite-axis elements incident to all of ``ids``.

        The empty set derives to the full opposite axis (vacuous universal
        quantification), the standard FCA convention.
        """
        own, opposite, masks = self._side(axis)
        result = full_mask(len(opposite))
        for i in ids:
            own.check(i)
            result &= masks[i]
        return ids_of(result)

    def closure(self, ids: Iterable[int], axis: str = OBJECTS) -> frozenset[int]:
        """Apply the Galois derivation twice, landing back on ``axis``."""
        own, _, _ = self._side(axis)
        opposite = ATTRIBUTES if axis == OBJECTS else OBJECTS
        return self.galois(self.galois(ids, axis), opposite)

    def is_concept(self, extent: Iterable[int], intent: Iterable[int]) -> bool:
        extent = frozenset(extent)
        intent = frozenset(intent)
        return self.galois(extent, OBJECTS) == intent and self.galois(intent, ATTRIBUTES) == extent

    def concept_from(self, ids: Iterable[int], axis: str = OBJECTS) -> FormalConcept:
        """Close ``ids`` and return the generated formal concept."""
        if axis == OBJECTS:
            intent = self.galois(ids, OBJECTS)
            return FormalConcept(self.galois(intent, ATTRIBUTES), intent)
        extent = self.galois(ids, ATTRIBUTES)
        return FormalConcept(extent, self.galois(extent, OBJECTS))

    def density(self, extent: Iterable[int], intent: Iterable[int]) -> Fraction:
        """Exact |I ∩ (A×B)| / (|A||B|) for nonempty A, B."""
        A = frozenset(extent)
        B = frozenset(intent)
        if not A or not B:
            raise EmptySetError("bicluster density needs nonempty extent and intent")
        self.objects.check_all(A)
        self.attributes.check_all(B)
        mask_b = mask_of(B)
        hits = sum((self._row[g] & mask_b).bit_count() for g in A)
        return Fraction(hits, len(A) * len(B))

    def bicluster(self, g: int, m: int) -> OABicluster:
        """Build the OA-bicluster (m', g') generated by incidence pair (g, m)."""
        self.objects.check(g)
        self.attributes.check(m)
        if not self.has(g, m):
            raise NotIncidentError(f"pair ({g}, {m}) not in the incidence relation")
        extent = ids_of(self._col[m])
        intent = ids_of(self._row[g])
        return OABicluster(extent, intent, (g, m), self.density(extent, intent))


class TriadicContext:
    """Ternary object-attribute-condition incidence with prime operators."""

    __slots__ = (
        "objects",
        "attributes",
        "conditions",
        "triples",
        "_by_gm",
        "_by_gb",
        "_by_mb",
        "_sorted",
    )

    def __init__(
        self,
        objects: Axis | Iterable[str],
        attributes: Axis | Iterable[str],
        conditions: Axis | Iterable[str],
        triples: Iterable[tuple[int, int, int]],
    ):
        self.objects = _as_axis(objects)
        self.attributes = _as_axis(attributes)
        self.conditions = _as_axis(conditions)
        uniq = frozenset((int(g), int(m), int(b)) for g, m, b in triples)
        by_gm: dict[tuple[int, int], int] = {}
        by_gb: dict[tuple[int, int], int] = {}
        by_mb: dict[tuple[int, int], int] = {}
        for g, m, b in uniq:
            self.objects.check(g)
            self.attributes.check(m)
            self.conditions.check(b)
            by_gm[g, m] = by_gm.get((g, m), 0) | (1 << b)
            by_gb[g, b] = by_gb.get((g, b), 0) | (1 << m)
            by_mb[m, b] = by_mb.get((m, b), 0) | (1 << g)
        self.triples = uniq
        self._by_gm = by_gm
        self._by_gb = by_gb
        self._by_mb = by_mb
        self._sorted: tuple[tuple[int, int, int], ...] | None = None

    @classmethod
    def from_label_triples(
        cls,
        objects: Iterable[str],
        attributes: Iterable[str],
        conditions: Iterable[str],
        triples: Iterable[tuple[str, str, str]],
    ) -> "TriadicContext":
        obj = Axis(objects)
        att = Axis(attributes)
        con = Axis(conditions)
        return cls(
            obj,
            att,
            con,
            [(obj.id_of(g), att.id_of(m), con.id_of(b)) for g, m, b in triples],
        )

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, TriadicContext)
            and self.objects == other.objects
            and self.attributes == other.attributes
            and self.conditions == other.conditions
            and self.triples == other.triples
        )

    def __hash__(self) -> int:
        return hash((self.objects, self.attributes, self.conditions, self.triples))

    def __repr__(self) -> str:
        return (
            f"TriadicContext(|G|={len(self.objects)}, |M|={len(self.attributes)}, "
            f"|B|={len(self.conditions)}, |I|={len(self.triples)})"
        )

    @property
    def dims(self) -> tuple[int, int, int]:
        return (len(self.objects), len(self.attributes), len(self.conditions))

    @property
    def sorted_triples(self) -> tuple[tuple[int, int, int], ...]:
        """Triples in ascending (g, m, b) order; the canonical iteration order."""
        if self._sorted is None:
            self._sorted = tuple(sorted(self.triples))
        return self._sorted

    def axis(self, name: str) -> Axis:
        if name == OBJECTS:
            return self.objects
        if name == ATTRIBUTES:
            return self.attributes
        if name == CONDITIONS:
            return self.conditions
        raise InvalidAxisError(f"axis must be one of {AXES}, got {name!r}")

    def has(self, g: int, m: int, b: int) -> bool:
        return (g, m, b) in self.triples

    def prime(self, pair: tuple[int, int], missing: str) -> frozenset[int]:
        """Evaluate a pair prime: all ``missing``-axis elements completing the pair.

        The pair components lie on the two non-selected axes in canonical
        axis order: missing conditions takes (g, m), missing attributes
        takes (g, b), missing objects takes (m, b).
        """
        x, y = pair
        if missing == CONDITIONS:
            self.objects.check(x)
            self.attributes.check(y)
            return ids_of(self._by_gm.get((x, y), 0))
        if missing == ATTRIBUTES:
            self.objects.check(x)
            self.conditions.check(y)
            return ids_of(self._by_gb.get((x, y), 0))
        if missing == OBJECTS:
            self.attributes.check(x)
            self.conditions.check(y)
            return ids_of(self._by_mb.get((x, y), 0))
        raise InvalidAxisError(f"axis must be one of {AXES}, got {missing!r}")

    def density(
        self,
        extent: Iterable[int],
        intent: Iterable[int],
        modus: Iterable[int],
    ) -> Fraction:
        """Exact |I ∩ (A×B×C)| / (|A||B||C|) for nonempty A, B, C."""
        A = frozenset(extent)
        B = frozenset(intent)
        C = frozenset(modus)
        if not A or not B or not C:
            raise EmptySetError("tricluster density needs nonempty extent, intent and modus")
        self.objects.check_all(A)
        self.attributes.check_all(B)
        self.conditions.check_all(C)
        if len(B) * len(C) <= len(self.triples):
            mask_a = mask_of(A)
            get = self._by_mb.get
            hits = sum((get((m, b), 0) & mask_a).bit_count() for m in B for b in C)
        else:
            hits = sum(1 for g, m, b in self.triples if g in A and m in B and b in C)
        return Fraction(hits, len(A) * len(B) * len(C))

    def tricluster(self, g: int, m: int, b: int) -> Tricluster:
        """Build the prime-operator tricluster ((m,b)', (g,b)', (g,m)') for (g,m,b) ∈ I."""
        self.objects.check(g)
        self.attributes.check(m)
        self.conditions.check(b)
        if not self.has(g, m, b):
            raise NotIncidentError(f"triple ({g}, {m}, {b}) not in the incidence relation")
        extent = ids_of(self._by_mb[m, b])
        intent = ids_of(self._by_gb[g, b])
        modus = ids_of(self._by_gm[g, m])
        return Tricluster(extent, intent, modus, (g, m, b), self.density(extent, intent, modus))

    def box_objects(self, intent: Iterable[int], modus: Iterable[int]) -> frozenset[int]:
        """All objects g with {g} × B × C fully incident (maximal extent for the box)."""
        result = full_mask(len(self.objects))
        get = self._by_mb.get
        for m in intent:
            self.attributes.check(m)
            for b in modus:
                self.conditions.check(b)
                result &= get((m, b), 0)
                if not result:
                    return frozenset()
        return ids_of(result)

    def box_attributes(self, extent: Iterable[int], modus: Iterable[int]) -> frozenset[int]:
        """All attributes m with A × {m} × C fully incident."""
        result = full_mask(len(self.attributes))
        get = self._by_gb.get
        for g in extent:
            self.objects.check(g)
            for b in modus:
                self.conditions.check(b)
                result &= get((g, b), 0)
                if not result:
                    return frozenset()
        return ids_of(result)

    def box_conditions(self, extent: Iterable[int], intent: Iterable[int]) -> frozenset[int]:
        """All conditions b with A × B × {b} fully incident."""
        result = full_mask(len(self.conditions))
        get = self._by_gm.get
        for g in extent:
            self.objects.check(g)
            for m in intent:
                self.attributes.check(m)
                result &= get((g, m), 0)
                if not result:
                    return frozenset()
        return ids_of(result)

    def project(self, i: int) -> DyadicContext:
        """Flatten to the induced dyadic context K^(i), i in {1, 2, 3}.

        Rows are the axis X_i; columns the full product X_j × X_k (j < k)
        with the row-major pair encoding id = x_j * |X_k| + x_k.
        """
        if i == 1:
            rows, first, second = self.objects, self.attributes, self.conditions
            pairs = [(g, m * len(second) + b) for g, m, b in self.triples]
        elif i == 2:
            rows, first, second = self.attributes, self.objects, self.conditions
            pairs = [(m, g * len(second) + b) for g, m, b in self.triples]
        elif i == 3:
            rows, first, second = self.conditions, self.objects, self.attributes
            pairs = [(b, g * len(second) + m) for g, m, b in self.triples]
        else:
            raise InvalidAxisError(f"projection index must be 1, 2 or 3, got {i!r}")
        composite = Axis(f"({x},{y})" for x in first.labels for y in second.labels)
        return DyadicContext(rows, composite, pairs)
