"""Coverage counts per user x tag cell, plus the drill-downs behind them."""

from triscope import (
    coverage_identity,
    coverage_map,
    enumerate_triclusters,
    largest_tricluster,
    parse_triples,
    triclusters_containing,
)

ctx, _ = parse_triples(open("fixtures/bookmarks.tsv").read())
store = enumerate_triclusters(ctx)

cmap = coverage_map(store, ctx, "GM")
print(cmap.to_csv())

# the cell count is exactly the number of triclusters through that pair,
# so the sum over all cells equals the sum of projected rectangle areas
print("double-counting identity holds:", coverage_identity(list(store), cmap))

u2 = ctx.objects.id_of("u2")
i2 = ctx.attributes.id_of("i2")
print("\ntriclusters through (u2, i2), densest first:")
for t in triclusters_containing(store, u2, i2):
    sites = ",".join(sorted(ctx.conditions.label_of(b) for b in t.modus))
    print(f"  rho={t.density}  sites {{{sites}}}")

big = largest_tricluster(store, ctx.objects.id_of("u1"), i2)
print(f"\nlargest through (u1, i2): volume {big.volume}, density {big.density}")

# the other two planes answer different questions about the same store
for plane in ("GB", "MB"):
    m = coverage_map(store, ctx, plane)
    print(f"\n{plane} plane totals {m.total} over a {m.counts.shape} grid")
