import random
from pathlib import Path

import pytest

from triscope.core import DyadicContext, TriadicContext

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"

# the worked bookmark example: 3 users, 2 interest tags, 4 sites, 11 triples
BOOKMARK_TRIPLES = [
    ("u1", "i1", "s1"),
    ("u1", "i1", "s3"),
    ("u1", "i2", "s2"),
    ("u1", "i2", "s4"),
    ("u2", "i1", "s1"),
    ("u2", "i1", "s3"),
    ("u2", "i2", "s2"),
    ("u3", "i1", "s1"),
    ("u3", "i1", "s3"),
    ("u3", "i2", "s2"),
    ("u3", "i2", "s4"),
]


@pytest.fixture(scope="session")
def bookmarks() -> TriadicContext:
    return TriadicContext.from_label_triples(
        ["u1", "u2", "u3"],
        ["i1", "i2"],
        ["s1", "s2", "s3", "s4"],
        BOOKMARK_TRIPLES,
    )


@pytest.fixture(scope="session")
def bookmarks_tsv() -> Path:
    return FIXTURE_DIR / "bookmarks.tsv"


@pytest.fixture(scope="session")
def user_site_table() -> DyadicContext:
    # the flattened user x site view of the same data: which user bookmarked
    # which site under any tag
    pairs = sorted({(u, s) for u, _, s in BOOKMARK_TRIPLES})
    return DyadicContext.from_label_pairs(
        ["u1", "u2", "u3"], ["s1", "s2", "s3", "s4"], pairs
    )


def random_triadic(rng: random.Random, max_dim: int = 5) -> TriadicContext:
    """Small random context built with the stdlib RNG, independent of the
    package's own generator."""
    ng = rng.randint(1, max_dim)
    nm = rng.randint(1, max_dim)
    nb = rng.randint(1, max_dim)
    cells = [(g, m, b) for g in range(ng) for m in range(nm) for b in range(nb)]
    p = rng.uniform(0.1, 0.7)
    triples = [c for c in cells if rng.random() < p]
    return TriadicContext(
        [f"g{i}" for i in range(ng)],
        [f"m{i}" for i in range(nm)],
        [f"b{i}" for i in range(nb)],
        triples,
    )


def random_dyadic(rng: random.Random, max_dim: int = 5) -> DyadicContext:
    ng = rng.randint(1, max_dim)
    nm = rng.randint(1, max_dim)
    p = rng.uniform(0.1, 0.8)
    pairs = [
        (g, m) for g in range(ng) for m in range(nm) if rng.random() < p
    ]
    return DyadicContext(
        [f"g{i}" for i in range(ng)], [f"m{i}" for i in range(nm)], pairs
    )
