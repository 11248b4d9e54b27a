"""Desk-scale brute-force concept enumerators.

Exhaustive listings of formal concepts and triadic concepts, used as
independent correctness oracles in the test suite and exposed to the
analyst for tiny contexts. Caps are enforced, not worked around; larger
contexts belong to the tricluster relaxation.
"""

from __future__ import annotations

from .core import (
    ATTRIBUTES,
    OBJECTS,
    DyadicContext,
    FormalConcept,
    TriadicContext,
    Triconcept,
)
from .errors import CapExceededError

__all__ = [
    "DEFAULT_CONCEPT_CAP",
    "DEFAULT_TRICONCEPT_CAP",
    "enumerate_formal_concepts",
    "enumerate_triconcepts",
    "is_triconcept",
]

DEFAULT_CONCEPT_CAP = 20
DEFAULT_TRICONCEPT_CAP = 12


def _subset(ids: tuple[int, ...], bits: int) -> frozenset[int]:
    return frozenset(ids[i] for i in range(len(ids)) if bits >> i & 1)


def enumerate_formal_concepts(
    context: DyadicContext, cap: int = DEFAULT_CONCEPT_CAP
) -> list[FormalConcept]:
    """List every formal concept by closing all subsets of the smaller axis.

    Boundary concepts with empty extent or intent are included. Output is
    duplicate-free, sorted by extent size then lexicographically. Raises
    CapExceededError when the enumerated axis exceeds ``cap``.
    """
    n_obj, n_att = len(context.objects), len(context.attributes)
    side = ATTRIBUTES if n_att <= n_obj else OBJECTS
    n = min(n_obj, n_att)
    if n > cap:
        raise CapExceededError(
            f"concept enumeration over {n} elements exceeds cap {cap}; "
            "use the tricluster relaxation for larger contexts"
        )
    ids = tuple(range(n))
    seen: set[tuple[frozenset[int], frozenset[int]]] = set()
    for bits in range(1 << n):
        concept = context.concept_from(_subset(ids, bits), side)
        seen.add((concept.extent, concept.intent))
    ordered = sorted(seen, key=lambda c: (len(c[0]), sorted(c[0]), sorted(c[1])))
    return [FormalConcept(extent, intent) for extent, intent in ordered]


def is_triconcept(context: TriadicContext, extent, intent, modus) -> bool:
    """Check the maximal fully-incident box property via the derivation maps.

    (A, B, C) is a triconcept iff each component is exactly the set derived
    from the other two, which forces A×B×C ⊆ I and single-axis maximality.
    """
    A, B, C = frozenset(extent), frozenset(intent), frozenset(modus)
    if not (A and B and C):
        return False
    return (
        context.box_objects(B, C) == A
        and context.box_attributes(A, C) == B
        and context.box_conditions(A, B) == C
    )


def enumerate_triconcepts(
    context: TriadicContext, cap: int = DEFAULT_TRICONCEPT_CAP
) -> list[Triconcept]:
    """List every triadic concept: maximal nonempty boxes A×B×C ⊆ I.

    Brute force over subset pairs of the two smallest axes; the third
    component is derived, then maximality of the enumerated pair is
    verified independently along each axis. Raises CapExceededError when
    any axis exceeds ``cap``.
    """
    dims = context.dims
    if max(dims) > cap:
        raise CapExceededError(
            f"triconcept enumeration over axes {dims} exceeds per-axis cap {cap}; "
            "use the tricluster relaxation for larger contexts"
        )
    # derive along the largest axis, enumerate subsets of the other two
    derived = max(range(3), key=lambda i: dims[i])
    found: list[Triconcept] = []
    if derived == 0:
        n1, n2 = dims[1], dims[2]
        ids1, ids2 = tuple(range(n1)), tuple(range(n2))
        for bits1 in range(1, 1 << n1):
            B = _subset(ids1, bits1)
            for bits2 in range(1, 1 << n2):
                C = _subset(ids2, bits2)
                A = context.box_objects(B, C)
                if A and context.box_attributes(A, C) == B and context.box_conditions(A, B) == C:
                    found.append(Triconcept(A, B, C))
    elif derived == 1:
        n1, n2 = dims[0], dims[2]
        ids1, ids2 = tuple(range(n1)), tuple(range(n2))
        for bits1 in range(1, 1 << n1):
            A = _subset(ids1, bits1)
            for bits2 in range(1, 1 << n2):
                C = _subset(ids2, bits2)
                B = context.box_attributes(A, C)
                if B and context.box_objects(B, C) == A and context.box_conditions(A, B) == C:
                    found.append(Triconcept(A, B, C))
    else:
        n1, n2 = dims[0], dims[1]
        ids1, ids2 = tuple(range(n1)), tuple(range(n2))
        for bits1 in range(1, 1 << n1):
            A = _subset(ids1, bits1)
            for bits2 in range(1, 1 << n2):
                B = _subset(ids2, bits2)
                C = context.box_conditions(A, B)
                if C and context.box_objects(B, C) == A and context.box_attributes(A, C) == B:
                    found.append(Triconcept(A, B, C))
    found.sort(key=lambda t: (sorted(t.extent), sorted(t.intent), sorted(t.modus)))
    return found
