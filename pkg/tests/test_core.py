"""Context algebra: derivation operators, concepts, biclusters, triclusters.

The bookmark fixture values used here were derived by hand from the 11
triples and double-checked with a brute-force script before the library
existed; they are frozen as literals on purpose.
"""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from triscope.core import (
    ATTRIBUTES,
    CONDITIONS,
    OBJECTS,
    Axis,
    DyadicContext,
    TriadicContext,
)
from triscope.errors import (
    EmptySetError,
    InvalidAxisError,
    NotIncidentError,
    UnknownIdError,
    UnknownLabelError,
)

from .conftest import random_dyadic


class TestAxis:
    def test_ids_are_dense_and_bijective(self):
        axis = Axis(["a", "b", "c"])
        assert [axis.id_of(l) for l in "abc"] == [0, 1, 2]
        assert [axis.label_of(i) for i in range(3)] == ["a", "b", "c"]

    def test_duplicate_labels_rejected(self):
        with pytest.raises(ValueError):
            Axis(["x", "x"])

    def test_unknown_label_and_id(self):
        axis = Axis(["a"])
        with pytest.raises(UnknownLabelError):
            axis.id_of("zz")
        with pytest.raises(UnknownIdError):
            axis.label_of(5)


class TestGalois:
    def test_pair_of_users_shares_all_sites(self, user_site_table):
        # u1 and u3 both bookmarked every site
        ids = [user_site_table.objects.id_of(u) for u in ("u1", "u3")]
        derived = user_site_table.galois(ids, OBJECTS)
        assert user_site_table.attributes.labels_of(derived) == ["s1", "s2", "s3", "s4"]

    def test_empty_set_derives_to_full_opposite_axis(self, user_site_table):
        assert user_site_table.galois([], OBJECTS) == frozenset(range(4))
        assert user_site_table.galois([], ATTRIBUTES) == frozenset(range(3))

    def test_unknown_id_rejected(self, user_site_table):
        with pytest.raises(UnknownIdError):
            user_site_table.galois([99], OBJECTS)

    def test_antitone_and_closure_properties(self):
        # S ⊆ T ⇒ T' ⊆ S'; closure is extensive, monotone, idempotent
        rng = random.Random(101)
        for _ in range(40):
            ctx = random_dyadic(rng, max_dim=4)
            n = len(ctx.objects)
            subsets = [frozenset(i for i in range(n) if mask >> i & 1) for mask in range(1 << n)]
            for s in subsets:
                for t in subsets:
                    if s <= t:
                        assert ctx.galois(t, OBJECTS) <= ctx.galois(s, OBJECTS)
                closed = ctx.closure(s, OBJECTS)
                assert s <= closed
                assert ctx.closure(closed, OBJECTS) == closed

    def test_triple_derivation_idempotence(self):
        rng = random.Random(77)
        for _ in range(30):
            ctx = random_dyadic(rng, max_dim=4)
            n = len(ctx.objects)
            for mask in range(1 << n):
                s = [i for i in range(n) if mask >> i & 1]
                once = ctx.galois(s, OBJECTS)
                thrice = ctx.galois(ctx.galois(once, ATTRIBUTES), OBJECTS)
                assert once == thrice


class TestBicluster:
    def test_worked_example_pair(self, user_site_table):
        g = user_site_table.objects.id_of("u2")
        m = user_site_table.attributes.id_of("s1")
        bc = user_site_table.bicluster(g, m)
        assert user_site_table.objects.labels_of(bc.extent) == ["u1", "u2", "u3"]
        assert user_site_table.attributes.labels_of(bc.intent) == ["s1", "s2", "s3"]

    def test_generator_always_inside(self):
        rng = random.Random(5)
        for _ in range(50):
            ctx = random_dyadic(rng)
            for g, m in ctx.incidence:
                bc = ctx.bicluster(g, m)
                assert g in bc.extent and m in bc.intent
                assert 0 <= bc.density <= 1

    def test_not_incident_rejected(self, user_site_table):
        g = user_site_table.objects.id_of("u2")
        m = user_site_table.attributes.id_of("s4")
        with pytest.raises(NotIncidentError):
            user_site_table.bicluster(g, m)

    def test_singleton_exclusive_pair_is_unit_square(self):
        ctx = DyadicContext(["g"], ["m"], [(0, 0)])
        bc = ctx.bicluster(0, 0)
        assert (bc.extent, bc.intent) == (frozenset({0}), frozenset({0}))
        assert bc.density == 1

    def test_full_density_implies_formal_concept(self):
        rng = random.Random(31)
        for _ in range(60):
            ctx = random_dyadic(rng)
            for g, m in ctx.incidence:
                bc = ctx.bicluster(g, m)
                if bc.density == 1:
                    assert ctx.is_concept(bc.extent, bc.intent)

    def test_sandwich_between_two_concepts(self):
        # (g'', g') and (m', m'') are concepts bracketing the bicluster
        rng = random.Random(13)
        for _ in range(40):
            ctx = random_dyadic(rng)
            for g, m in ctx.incidence:
                g_prime = ctx.galois([g], OBJECTS)
                g_closed = ctx.galois(g_prime, ATTRIBUTES)
                m_prime = ctx.galois([m], ATTRIBUTES)
                m_closed = ctx.galois(m_prime, OBJECTS)
                assert ctx.is_concept(g_closed, g_prime)
                assert ctx.is_concept(m_prime, m_closed)
                assert g_closed <= m_prime
                assert m_closed <= g_prime


class TestDyadicDensity:
    def test_worked_example_table(self, user_site_table):
        assert user_site_table.density(range(3), range(4)) == Fraction(11, 12)

    def test_full_and_empty_blocks(self):
        ctx = DyadicContext(["a", "b"], ["x", "y"], [(0, 0), (0, 1), (1, 0), (1, 1)])
        assert ctx.density([0, 1], [0, 1]) == 1
        sparse = DyadicContext(["a", "b"], ["x", "y"], [(0, 0)])
        assert sparse.density([1], [1]) == 0

    def test_empty_side_rejected(self, user_site_table):
        with pytest.raises(EmptySetError):
            user_site_table.density([], [0])


class TestPrime:
    def test_worked_example_pairs(self, bookmarks):
        u1 = bookmarks.objects.id_of("u1")
        i1 = bookmarks.attributes.id_of("i1")
        s1 = bookmarks.conditions.id_of("s1")
        assert bookmarks.conditions.labels_of(bookmarks.prime((u1, i1), CONDITIONS)) == ["s1", "s3"]
        assert bookmarks.objects.labels_of(bookmarks.prime((i1, s1), OBJECTS)) == ["u1", "u2", "u3"]

    def test_never_cooccurring_pair_is_empty(self, bookmarks):
        u2 = bookmarks.objects.id_of("u2")
        s4 = bookmarks.conditions.id_of("s4")
        assert bookmarks.prime((u2, s4), ATTRIBUTES) == frozenset()

    def test_invalid_axis_selector(self, bookmarks):
        with pytest.raises(InvalidAxisError):
            bookmarks.prime((0, 0), "sideways")


class TestProjection:
    def test_worked_example_shape(self, bookmarks):
        k1 = bookmarks.project(1)
        assert len(k1.objects) == 3
        assert len(k1.attributes) == 8
        assert len(k1.incidence) == 11

    def test_all_projections_preserve_incidence_count(self, bookmarks):
        assert len({len(bookmarks.project(i).incidence) for i in (1, 2, 3)}) == 1

    def test_empty_incidence_projects_empty(self):
        ctx = TriadicContext(["g"], ["m"], ["b"], [])
        assert ctx.project(2).incidence == frozenset()

    def test_invalid_index(self, bookmarks):
        with pytest.raises(InvalidAxisError):
            bookmarks.project(4)


class TestTriadicDensity:
    def test_whole_context(self, bookmarks):
        rho = bookmarks.density(range(3), range(2), range(4))
        assert rho == Fraction(11, 24)

    def test_triconcept_box_is_full(self, bookmarks):
        ids = lambda axis, labels: [axis.id_of(l) for l in labels]
        rho = bookmarks.density(
            ids(bookmarks.objects, ["u1", "u2", "u3"]),
            ids(bookmarks.attributes, ["i1"]),
            ids(bookmarks.conditions, ["s1", "s3"]),
        )
        assert rho == 1

    def test_disjoint_box_is_zero(self):
        ctx = TriadicContext(["a", "b"], ["x"], ["p", "q"], [(0, 0, 0)])
        assert ctx.density([1], [0], [1]) == 0

    def test_empty_component_rejected(self, bookmarks):
        with pytest.raises(EmptySetError):
            bookmarks.density([0], [], [0])

    @given(st.integers(min_value=0, max_value=2**30 - 1), st.integers(min_value=1, max_value=3))
    @settings(max_examples=60, deadline=None)
    def test_density_always_within_unit_interval(self, bits, dims):
        cells = [(g, m, b) for g in range(dims) for m in range(dims) for b in range(dims)]
        triples = [c for i, c in enumerate(cells) if bits >> i & 1]
        names = [f"e{i}" for i in range(dims)]
        ctx = TriadicContext(names, list("XYZ")[:dims], [f"c{i}" for i in range(dims)], triples)
        rho = ctx.density(range(dims), range(dims), range(dims))
        assert 0 <= rho <= 1
        assert rho == Fraction(len(triples), dims**3)


class TestTricluster:
    def test_worked_example_generators(self, bookmarks):
        u1 = bookmarks.objects.id_of("u1")
        i1 = bookmarks.attributes.id_of("i1")
        i2 = bookmarks.attributes.id_of("i2")
        s1 = bookmarks.conditions.id_of("s1")
        s2 = bookmarks.conditions.id_of("s2")

        t = bookmarks.tricluster(u1, i1, s1)
        assert bookmarks.objects.labels_of(t.extent) == ["u1", "u2", "u3"]
        assert bookmarks.attributes.labels_of(t.intent) == ["i1"]
        assert bookmarks.conditions.labels_of(t.modus) == ["s1", "s3"]
        assert t.density == 1

        t = bookmarks.tricluster(u1, i2, s2)
        assert bookmarks.objects.labels_of(t.extent) == ["u1", "u2", "u3"]
        assert bookmarks.attributes.labels_of(t.intent) == ["i2"]
        assert bookmarks.conditions.labels_of(t.modus) == ["s2", "s4"]
        assert t.density == Fraction(5, 6)

    def test_single_triple_context(self):
        ctx = TriadicContext(["g"], ["m"], ["b"], [(0, 0, 0)])
        t = ctx.tricluster(0, 0, 0)
        assert t.sets() == (frozenset({0}), frozenset({0}), frozenset({0}))
        assert t.density == 1

    def test_generator_contained_componentwise(self, bookmarks):
        for g, m, b in bookmarks.triples:
            t = bookmarks.tricluster(g, m, b)
            assert g in t.extent and m in t.intent and b in t.modus
            assert t.generator == (g, m, b)

    def test_not_incident_rejected(self, bookmarks):
        u2 = bookmarks.objects.id_of("u2")
        i2 = bookmarks.attributes.id_of("i2")
        s4 = bookmarks.conditions.id_of("s4")
        assert not bookmarks.has(u2, i2, s4)
        with pytest.raises(NotIncidentError):
            bookmarks.tricluster(u2, i2, s4)

    def test_volume(self, bookmarks):
        u1 = bookmarks.objects.id_of("u1")
        i2 = bookmarks.attributes.id_of("i2")
        s2 = bookmarks.conditions.id_of("s2")
        assert bookmarks.tricluster(u1, i2, s2).volume == 6
