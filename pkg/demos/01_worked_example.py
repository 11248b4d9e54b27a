"""Walk the small bookmark dataset through the basic operators by hand."""

from triscope import TriadicContext

users = ["u1", "u2", "u3"]
tags = ["i1", "i2"]
sites = ["s1", "s2", "s3", "s4"]
triples = [
    ("u1", "i1", "s1"), ("u1", "i1", "s3"), ("u1", "i2", "s2"), ("u1", "i2", "s4"),
    ("u2", "i1", "s1"), ("u2", "i1", "s3"), ("u2", "i2", "s2"),
    ("u3", "i1", "s1"), ("u3", "i1", "s3"), ("u3", "i2", "s2"), ("u3", "i2", "s4"),
]

ctx = TriadicContext.from_label_triples(users, tags, sites, triples)
print(f"context: {ctx.dims[0]} users x {ctx.dims[1]} tags x {ctx.dims[2]} sites, "
      f"{len(ctx.triples)} incidences")
fill = ctx.density(set(ctx.objects), set(ctx.attributes), set(ctx.conditions))
print(f"overall fill: {fill}")
print()

# the prime of a (user, tag) pair collects every site they share
u1 = ctx.objects.id_of("u1")
i1 = ctx.attributes.id_of("i1")
shared = ctx.prime((u1, i1), missing="conditions")
print("sites behind (u1, i1):", sorted(ctx.conditions.label_of(b) for b in shared))

# flatten to the dyadic view K^(1): users against (tag, site) pairs
flat = ctx.project(1)
flat_fill = flat.density(set(flat.objects), set(flat.attributes))
print(f"K^(1) is {len(flat.objects)} users x {len(flat.attributes)} composite "
      f"columns, fill {flat_fill}")

# seed one incident triple and expand it to its prime-operator box
t = ctx.tricluster(u1, i1, ctx.conditions.id_of("s1"))
print()
print("tricluster seeded from (u1, i1, s1):")
print("  users:", sorted(ctx.objects.label_of(g) for g in t.extent))
print("  tags: ", sorted(ctx.attributes.label_of(m) for m in t.intent))
print("  sites:", sorted(ctx.conditions.label_of(b) for b in t.modus))
print(f"  density {t.density} over a volume of {t.volume} cells")

# a sparser seed gives a box that is not fully incident
loose = ctx.tricluster(u1, ctx.attributes.id_of("i2"), ctx.conditions.id_of("s2"))
print()
print(f"seeded from (u1, i2, s2) instead: density {loose.density}, "
      f"volume {loose.volume}")
