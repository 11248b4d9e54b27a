"""Context I/O and synthetic data generation.

Triple files are UTF-8 text, one `object<TAB>attribute<TAB>condition`
triple per line; blank lines and lines starting with '#' are ignored.
Axes are built from distinct labels in first-appearance order; duplicate
triples collapse with a warning count.

Results documents are self-describing JSON: axis name tables, integer
triples and tricluster records with densities as exact "num/den" strings.
Documents are canonical -- axes sorted by label, triples sorted, records
ordered by descending density then key, generators minimal in canonical
id order -- so the same context and run serialize to identical bytes no
matter how the input file was permuted or how many workers mined it.

Synthetic contexts come from a fixed, documented PRNG (splitmix64 seeding
an xorshift64* stream) rather than a platform default, so fixtures are
reproducible bit-for-bit across runs and languages.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import IO, Iterable, NamedTuple

from .analytics import CoverageMap, coverage_map
from .core import Axis, TriadicContext, Tricluster
from .errors import GenerationCapError, MalformedLineError
from .mining import TriclusterStore
from .recommend import Recommendation

__all__ = [
    "DEFAULT_GENERATION_CAP",
    "DOCUMENT_FORMAT",
    "GeneratorSpec",
    "ParseResult",
    "Xorshift64Star",
    "canonicalize",
    "context_document",
    "context_from_document",
    "context_to_tsv",
    "document_bytes",
    "generate_context",
    "parse_rho",
    "parse_triples",
    "results_document",
    "write_results",
]

DOCUMENT_FORMAT = "triscope-results"
DOCUMENT_VERSION = 1
DEFAULT_GENERATION_CAP = 5_000_000

_M64 = (1 << 64) - 1


class ParseResult(NamedTuple):
    context: TriadicContext
    duplicates: int


def parse_rho(text: str | int | float | Fraction) -> Fraction:
    """Parse a density threshold: "5/6", "0.25", "1", or a number; exact."""
    rho = Fraction(str(text)) if isinstance(text, str) else Fraction(text)
    if not 0 <= rho <= 1:
        raise ValueError(f"density must lie in [0, 1], got {rho}")
    return rho


def rho_token(rho: Fraction) -> str:
    """URL-safe form of an exact rational: '5/6' -> '5_6', '1' -> '1'."""
    return str(Fraction(rho)).replace("/", "_")


def parse_rho_token(token: str) -> Fraction:
    """Inverse of rho_token; also accepts plain '0.5' / '1' / '5/6' forms."""
    return parse_rho(token.replace("_", "/"))


def parse_triples(source: str | Iterable[str]) -> ParseResult:
    """Parse a triple stream into a context plus a duplicate-line count."""
    if isinstance(source, str):
        lines: Iterable[str] = source.splitlines()
    else:
        lines = source
    obj_labels: dict[str, int] = {}
    att_labels: dict[str, int] = {}
    con_labels: dict[str, int] = {}
    triples: list[tuple[int, int, int]] = []
    seen: set[tuple[int, int, int]] = set()
    duplicates = 0
    for line_no, raw in enumerate(lines, start=1):
        line = raw.rstrip("\n").rstrip("\r")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 3:
            raise MalformedLineError(
                line_no, f"expected 3 tab-separated fields, got {len(fields)}"
            )
        labels = [f.strip() for f in fields]
        if any(not f for f in labels):
            raise MalformedLineError(line_no, "empty field")
        g = obj_labels.setdefault(labels[0], len(obj_labels))
        m = att_labels.setdefault(labels[1], len(att_labels))
        b = con_labels.setdefault(labels[2], len(con_labels))
        triple = (g, m, b)
        if triple in seen:
            duplicates += 1
        else:
            seen.add(triple)
            triples.append(triple)
    context = TriadicContext(
        Axis(obj_labels), Axis(att_labels), Axis(con_labels), triples
    )
    return ParseResult(context, duplicates)


def context_to_tsv(context: TriadicContext) -> str:
    """Serialize a context as a triple file, triples in ascending id order."""
    rows = [
        "\t".join(
            (
                context.objects.label_of(g),
                context.attributes.label_of(m),
                context.conditions.label_of(b),
            )
        )
        for g, m, b in context.sorted_triples
    ]
    return "\n".join(rows) + ("\n" if rows else "")


def canonicalize(context: TriadicContext) -> TriadicContext:
    """Re-index all axes in sorted-label order; the incidence is unchanged."""
    axes = [Axis(sorted(a.labels)) for a in (context.objects, context.attributes, context.conditions)]
    maps = [
        {old: axes[k].id_of(label) for old, label in enumerate(a.labels)}
        for k, a in enumerate((context.objects, context.attributes, context.conditions))
    ]
    triples = [(maps[0][g], maps[1][m], maps[2][b]) for g, m, b in context.triples]
    return TriadicContext(axes[0], axes[1], axes[2], triples)


def context_document(context: TriadicContext) -> dict:
    """Canonical JSON-ready form of a context (label-sorted axes, sorted triples)."""
    canon = canonicalize(context)
    return {
        "objects": list(canon.objects.labels),
        "attributes": list(canon.attributes.labels),
        "conditions": list(canon.conditions.labels),
        "triples": [list(t) for t in canon.sorted_triples],
    }


def context_from_document(doc: dict) -> TriadicContext:
    """Rebuild a context from its document form."""
    return TriadicContext(
        Axis(doc["objects"]),
        Axis(doc["attributes"]),
        Axis(doc["conditions"]),
        [tuple(t) for t in doc["triples"]],
    )


def _canonical_generator(canon: TriadicContext, t: Tricluster) -> tuple[int, int, int]:
    # smallest incidence triple (in id order) that generates exactly these sets
    for g, m, b in canon.sorted_triples:
        if g in t.extent and m in t.intent and b in t.modus:
            candidate = canon.tricluster(g, m, b)
            if candidate.sets() == t.sets():
                return (g, m, b)
    raise ValueError("tricluster has no generator in the given context")


def _fraction_str(x: Fraction) -> str:
    # documents always carry the explicit num/den form, "1/1" included
    return f"{x.numerator}/{x.denominator}"


def results_document(
    context: TriadicContext,
    store: TriclusterStore,
    recommendations: Iterable[Recommendation] | None = None,
    coverage_planes: Iterable[str] = (),
) -> dict:
    """Assemble the canonical results document for one mining run.

    Everything is re-expressed over the canonicalized context, so two runs
    over label-identical contexts yield identical documents regardless of
    input ordering or mining parallelism.
    """
    canon = canonicalize(context)
    remap = [
        {
            old.id_of(label): new.id_of(label)
            for label in old.labels
        }
        for old, new in (
            (context.objects, canon.objects),
            (context.attributes, canon.attributes),
            (context.conditions, canon.conditions),
        )
    ]

    def map_set(ids: frozenset[int], axis: int) -> frozenset[int]:
        return frozenset(remap[axis][i] for i in ids)

    # store keys are label-rank digests, so they read the same before and
    # after the remap; store order is already (density desc, key asc)
    records = []
    for key, t in store.items():
        mapped = Tricluster(
            extent=map_set(t.extent, 0),
            intent=map_set(t.intent, 1),
            modus=map_set(t.modus, 2),
            generator=t.generator,
            density=t.density,
        )
        records.append(
            {
                "key": key,
                "extent": sorted(mapped.extent),
                "intent": sorted(mapped.intent),
                "modus": sorted(mapped.modus),
                "generator": list(_canonical_generator(canon, mapped)),
                "density": _fraction_str(t.density),
                "volume": t.volume,
            }
        )

    doc = {
        "format": DOCUMENT_FORMAT,
        "version": DOCUMENT_VERSION,
        "context": context_document(context),
        "rho_min": _fraction_str(store.rho_min),
        "tricluster_count": len(store),
        "triclusters": records,
    }
    if recommendations is not None:
        doc["recommendations"] = [
            {
                "user": remap[0][r.user],
                "best": r.best_key,
                "similarity": _fraction_str(r.similarity),
                "recommended_tags": sorted(map_set(r.recommended_tags, 1)),
                "recommended_resources": sorted(map_set(r.recommended_resources, 2)),
            }
            for r in sorted(recommendations, key=lambda r: remap[0][r.user])
        ]
    planes = list(coverage_planes)
    if planes:
        mapped_store = [
            Tricluster(map_set(t.extent, 0), map_set(t.intent, 1), map_set(t.modus, 2), t.generator, t.density)
            for t in store
        ]
        doc["coverage"] = {
            plane: _coverage_section(coverage_map(mapped_store, canon, plane))
            for plane in planes
        }
    return doc


def _coverage_section(cmap: CoverageMap) -> dict:
    return {
        "rows": list(cmap.row_labels),
        "cols": list(cmap.col_labels),
        "counts": [[int(c) for c in row] for row in cmap.counts],
    }


def document_bytes(doc: dict) -> bytes:
    """Deterministic byte encoding of a document."""
    return (json.dumps(doc, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def write_results(sink: str | IO[bytes], doc: dict) -> None:
    """Write a document to a path or binary file object."""
    data = document_bytes(doc)
    if isinstance(sink, str):
        with open(sink, "wb") as fh:
            fh.write(data)
    else:
        sink.write(data)


def load_document(source: str | IO[bytes] | bytes) -> dict:
    if isinstance(source, bytes):
        return json.loads(source.decode("utf-8"))
    if isinstance(source, str):
        with open(source, "rb") as fh:
            return json.loads(fh.read().decode("utf-8"))
    return json.loads(source.read().decode("utf-8"))


class Xorshift64Star:
    """xorshift64* stream: shifts 12/25/27, multiplier 0x2545F4914F6CDD1D.

    The 64-bit seed is mixed through one splitmix64 step to produce the
    nonzero initial state, so any seed (including 0) is usable.
    """

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = _splitmix64(seed & _M64) or 0x9E3779B97F4A7C15

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x = (x ^ (x << 25)) & _M64
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & _M64


def _splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _M64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _M64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _M64
    return x ^ (x >> 31)


@dataclass(frozen=True)
class GeneratorSpec:
    """Shape and fill of a synthetic uniform-random context.

    Each of the |G||M||B| cells is included independently with probability
    ``fill_density``, judged against exact 64-bit draws from the seeded
    stream, so identical specs produce bit-identical contexts.
    """

    n_objects: int
    n_attributes: int
    n_conditions: int
    fill_density: Fraction
    seed: int

    def __post_init__(self):
        object.__setattr__(self, "fill_density", Fraction(self.fill_density))
        if min(self.n_objects, self.n_attributes, self.n_conditions) < 1:
            raise ValueError("axis sizes must be >= 1")
        if not 0 < self.fill_density <= 1:
            raise ValueError(f"fill_density must lie in (0, 1], got {self.fill_density}")

    @property
    def cells(self) -> int:
        return self.n_objects * self.n_attributes * self.n_conditions


def generate_context(
    spec: GeneratorSpec, *, max_cells: int = DEFAULT_GENERATION_CAP
) -> TriadicContext:
    """Generate a seeded uniform-random context with labels u*/t*/r*.

    Cells are visited in ascending (g, m, b) order; cell (g, m, b) is
    incident iff the next stream draw d satisfies d/2^64 < fill_density
    (compared in exact integer arithmetic).
    """
    if spec.cells > max_cells:
        raise GenerationCapError(
            f"{spec.cells} cells exceed the generation cap of {max_cells}"
        )
    rng = Xorshift64Star(spec.seed)
    num = spec.fill_density.numerator << 64
    den = spec.fill_density.denominator
    triples = []
    for g in range(spec.n_objects):
        for m in range(spec.n_attributes):
            for b in range(spec.n_conditions):
                if rng.next_u64() * den < num:
                    triples.append((g, m, b))
    return TriadicContext(
        Axis(f"u{i + 1}" for i in range(spec.n_objects)),
        Axis(f"t{i + 1}" for i in range(spec.n_attributes)),
        Axis(f"r{i + 1}" for i in range(spec.n_conditions)),
        triples,
    )
