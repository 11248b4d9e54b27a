"""Tricluster-backed tag/resource recommendations.

For each user the best-matching tricluster is the one maximizing the
averaged Jaccard similarity between the user's own tag/resource sets and
the tricluster's intent/modus; recommendations are what the winner has
and the user lacks. A Jaccard term over an empty union counts as 0: an
empty profile carries no evidence of similarity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import TriadicContext, Tricluster
from .errors import EmptyStoreError
from .mining import TriclusterStore

__all__ = [
    "Recommendation",
    "UserProfile",
    "recommend",
    "recommend_all",
    "similarity",
    "user_profile",
]


@dataclass(frozen=True)
class UserProfile:
    """One user's own footprint: every tag and resource from their triples."""

    user: int
    tags: frozenset[int]
    resources: frozenset[int]


@dataclass(frozen=True)
class Recommendation:
    """Per-user output: the winning tricluster and the novel tags/resources."""

    user: int
    best_key: str
    similarity: Fraction
    recommended_tags: frozenset[int]
    recommended_resources: frozenset[int]


def user_profile(context: TriadicContext, user: int) -> UserProfile:
    """Collect the user's tags {m | (u,m,b) ∈ I} and resources {b | (u,m,b) ∈ I}."""
    context.objects.check(user)
    tags = set()
    resources = set()
    for g, m, b in context.triples:
        if g == user:
            tags.add(m)
            resources.add(b)
    return UserProfile(user, frozenset(tags), frozenset(resources))


def _jaccard(a: frozenset[int], b: frozenset[int]) -> Fraction:
    union = a | b
    if not union:
        return Fraction(0)
    return Fraction(len(a & b), len(union))


def similarity(profile: UserProfile, t: Tricluster) -> Fraction:
    """Average of the resource-set and tag-set Jaccard similarities, in [0, 1]."""
    return (_jaccard(profile.resources, t.modus) + _jaccard(profile.tags, t.intent)) / 2


def recommend(context: TriadicContext, store: TriclusterStore, user: int) -> Recommendation:
    """Pick the most similar tricluster and recommend its novel tags/resources.

    Ties on similarity go to the denser tricluster, then to canonical key
    order; since the store iterates in exactly that order, keeping the
    first strict maximum realizes the tie-break.
    """
    if len(store) == 0:
        raise EmptyStoreError("cannot recommend from an empty tricluster store")
    profile = user_profile(context, user)
    best_key = None
    best = None
    best_sim = Fraction(-1)
    for key, t in store.items():
        sim = similarity(profile, t)
        if sim > best_sim:
            best_key, best, best_sim = key, t, sim
    assert best is not None and best_key is not None
    return Recommendation(
        user=user,
        best_key=best_key,
        similarity=best_sim,
        recommended_tags=best.intent - profile.tags,
        recommended_resources=best.modus - profile.resources,
    )


def recommend_all(context: TriadicContext, store: TriclusterStore) -> list[Recommendation]:
    """One recommendation per object id, in id order."""
    return [recommend(context, store, u) for u in context.objects]
