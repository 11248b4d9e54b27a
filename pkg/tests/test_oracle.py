"""Exact concept enumeration, cross-checked against test-local brute force.

The reference enumerators below are written from the definitions alone
(close every subset / test every box) and share no code with the library,
so agreement is evidence, not tautology.
"""

import itertools
import random

import pytest

from triscope.core import DyadicContext, TriadicContext
from triscope.errors import CapExceededError
from triscope.mining import enumerate_triclusters
from triscope.oracle import (
    enumerate_formal_concepts,
    enumerate_triconcepts,
    is_triconcept,
)

from .conftest import random_dyadic, random_triadic


def reference_concepts(ctx: DyadicContext) -> set:
    """All formal concepts by closing every subset of BOTH axes."""
    found = set()
    n_obj, n_att = len(ctx.objects), len(ctx.attributes)
    for r in range(n_obj + 1):
        for subset in itertools.combinations(range(n_obj), r):
            intent = ctx.galois(subset, "objects")
            extent = ctx.galois(intent, "attributes")
            found.add((extent, intent))
    for r in range(n_att + 1):
        for subset in itertools.combinations(range(n_att), r):
            extent = ctx.galois(subset, "attributes")
            intent = ctx.galois(extent, "objects")
            found.add((extent, intent))
    return found


def reference_triconcepts(ctx: TriadicContext) -> set:
    """All maximal fully-incident boxes, by checking every candidate box."""
    ng, nm, nb = ctx.dims
    full_boxes = []
    for ga in _nonempty_subsets(ng):
        for ma in _nonempty_subsets(nm):
            for ba in _nonempty_subsets(nb):
                if all(ctx.has(g, m, b) for g in ga for m in ma for b in ba):
                    full_boxes.append((ga, ma, ba))
    as_sets = [(frozenset(a), frozenset(b), frozenset(c)) for a, b, c in full_boxes]
    maximal = set()
    for box in as_sets:
        dominated = any(
            other != box
            and box[0] <= other[0]
            and box[1] <= other[1]
            and box[2] <= other[2]
            for other in as_sets
        )
        if not dominated:
            maximal.add(box)
    return maximal


def _nonempty_subsets(n: int):
    for mask in range(1, 1 << n):
        yield tuple(i for i in range(n) if mask >> i & 1)


class TestFormalConcepts:
    def test_worked_example_interest_site_table(self):
        # interest x site: i1 on s1,s3; i2 on s2,s4
        ctx = DyadicContext.from_label_pairs(
            ["i1", "i2"],
            ["s1", "s2", "s3", "s4"],
            [("i1", "s1"), ("i1", "s3"), ("i2", "s2"), ("i2", "s4")],
        )
        concepts = {
            (
                tuple(ctx.objects.labels_of(c.extent)),
                tuple(ctx.attributes.labels_of(c.intent)),
            )
            for c in enumerate_formal_concepts(ctx)
        }
        assert (("i1",), ("s1", "s3")) in concepts
        assert (("i2",), ("s2", "s4")) in concepts

    def test_full_context_collapses_to_one_concept(self):
        ctx = DyadicContext(["a", "b"], ["x", "y"], [(g, m) for g in range(2) for m in range(2)])
        concepts = enumerate_formal_concepts(ctx)
        assert len(concepts) == 1
        assert concepts[0].extent == frozenset({0, 1})
        assert concepts[0].intent == frozenset({0, 1})

    def test_empty_context_has_both_boundary_concepts(self):
        ctx = DyadicContext(["a", "b"], ["x", "y"], [])
        found = {(c.extent, c.intent) for c in enumerate_formal_concepts(ctx)}
        assert (frozenset({0, 1}), frozenset()) in found
        assert (frozenset(), frozenset({0, 1})) in found

    def test_matches_reference_on_random_contexts(self):
        rng = random.Random(211)
        for _ in range(80):
            ctx = random_dyadic(rng, max_dim=4)
            ours = {(c.extent, c.intent) for c in enumerate_formal_concepts(ctx)}
            assert ours == reference_concepts(ctx)

    def test_every_output_is_a_concept(self):
        rng = random.Random(212)
        for _ in range(40):
            ctx = random_dyadic(rng)
            for c in enumerate_formal_concepts(ctx):
                assert ctx.is_concept(c.extent, c.intent)

    def test_output_is_sorted_and_duplicate_free(self):
        rng = random.Random(213)
        for _ in range(20):
            ctx = random_dyadic(rng)
            out = enumerate_formal_concepts(ctx)
            keys = [(len(c.extent), sorted(c.extent), sorted(c.intent)) for c in out]
            assert keys == sorted(keys)
            assert len({(c.extent, c.intent) for c in out}) == len(out)

    def test_cap_enforced(self):
        ctx = DyadicContext(
            [f"g{i}" for i in range(6)], [f"m{i}" for i in range(6)], [(0, 0)]
        )
        with pytest.raises(CapExceededError):
            enumerate_formal_concepts(ctx, cap=5)


class TestTriconcepts:
    def test_worked_example(self, bookmarks):
        found = {
            (
                tuple(bookmarks.objects.labels_of(c.extent)),
                tuple(bookmarks.attributes.labels_of(c.intent)),
                tuple(bookmarks.conditions.labels_of(c.modus)),
            )
            for c in enumerate_triconcepts(bookmarks)
        }
        assert found == {
            (("u1", "u2", "u3"), ("i1",), ("s1", "s3")),
            (("u1", "u2", "u3"), ("i2",), ("s2",)),
            (("u1", "u3"), ("i2",), ("s2", "s4")),
        }

    def test_single_triple_context(self):
        ctx = TriadicContext(["g"], ["m"], ["b"], [(0, 0, 0)])
        out = enumerate_triconcepts(ctx)
        assert len(out) == 1
        assert out[0].sets() == (frozenset({0}), frozenset({0}), frozenset({0}))

    def test_every_triconcept_is_fully_dense(self):
        rng = random.Random(214)
        for _ in range(40):
            ctx = random_triadic(rng, max_dim=4)
            for c in enumerate_triconcepts(ctx):
                assert ctx.density(c.extent, c.intent, c.modus) == 1

    def test_matches_reference_on_random_contexts(self):
        rng = random.Random(215)
        for _ in range(60):
            ctx = random_triadic(rng, max_dim=4)
            ours = {c.sets() for c in enumerate_triconcepts(ctx)}
            assert ours == reference_triconcepts(ctx)

    def test_components_rederive_each_other(self):
        rng = random.Random(216)
        for _ in range(30):
            ctx = random_triadic(rng, max_dim=4)
            for c in enumerate_triconcepts(ctx):
                assert ctx.box_objects(c.intent, c.modus) == c.extent
                assert ctx.box_attributes(c.extent, c.modus) == c.intent
                assert ctx.box_conditions(c.extent, c.intent) == c.modus

    def test_is_triconcept_agrees_with_enumeration(self):
        rng = random.Random(217)
        for _ in range(25):
            ctx = random_triadic(rng, max_dim=3)
            enumerated = {c.sets() for c in enumerate_triconcepts(ctx)}
            ng, nm, nb = ctx.dims
            for ga in _nonempty_subsets(ng):
                for ma in _nonempty_subsets(nm):
                    for ba in _nonempty_subsets(nb):
                        box = (frozenset(ga), frozenset(ma), frozenset(ba))
                        assert is_triconcept(ctx, *box) == (box in enumerated)

    def test_dense_mining_output_is_always_a_triconcept(self):
        rng = random.Random(218)
        for _ in range(50):
            ctx = random_triadic(rng, max_dim=4)
            concepts = {c.sets() for c in enumerate_triconcepts(ctx)}
            for t in enumerate_triclusters(ctx, rho_min=1):
                assert t.sets() in concepts

    def test_cap_enforced(self):
        ctx = TriadicContext(
            [f"g{i}" for i in range(4)], ["m"], ["b"], [(0, 0, 0)]
        )
        with pytest.raises(CapExceededError):
            enumerate_triconcepts(ctx, cap=3)
