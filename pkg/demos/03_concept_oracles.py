"""Exhaustive concept enumeration as a cross-check on the fast miner."""

from triscope import (
    enumerate_formal_concepts,
    enumerate_triclusters,
    enumerate_triconcepts,
    is_triconcept,
    parse_triples,
)

ctx, _ = parse_triples(open("fixtures/bookmarks.tsv").read())

# triadic concepts: maximal boxes of incidences, found by brute force
concepts = enumerate_triconcepts(ctx)
print(f"{len(concepts)} triadic concepts:")
for c in concepts:
    print("  [%s | %s | %s]" % (
        ",".join(sorted(ctx.objects.label_of(g) for g in c.extent)),
        ",".join(sorted(ctx.attributes.label_of(m) for m in c.intent)),
        ",".join(sorted(ctx.conditions.label_of(b) for b in c.modus)),
    ))

# every density-1 tricluster the miner emits is one of those maximal boxes
dense = enumerate_triclusters(ctx, rho_min=1)
hits = sum(is_triconcept(ctx, t.extent, t.intent, t.modus) for t in dense)
print(f"\nminer at rho_min=1: {len(dense)} boxes, {hits} confirmed maximal")

# dyadic concepts of the flattened user x (tag,site) view, smallest extents first
flat = ctx.project(1)
pairs = enumerate_formal_concepts(flat)
print(f"\nK^(1) has {len(pairs)} formal concepts:")
for c in pairs:
    lhs = ",".join(sorted(flat.objects.label_of(g) for g in c.extent)) or "-"
    rhs = ",".join(sorted(flat.attributes.label_of(m) for m in c.intent)) or "-"
    print(f"  ({lhs}) x ({rhs})")
