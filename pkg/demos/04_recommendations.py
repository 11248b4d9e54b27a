"""Recommend unseen tags and sites from each user's best-matching tricluster."""

from triscope import (
    enumerate_triclusters,
    parse_triples,
    recommend_all,
    similarity,
    user_profile,
)

ctx, _ = parse_triples(open("fixtures/bookmarks.tsv").read())
store = enumerate_triclusters(ctx)

tag = ctx.attributes.label_of
site = ctx.conditions.label_of

# a profile is just everything the user already touched
for u in ctx.objects:
    p = user_profile(ctx, u)
    print(f"{ctx.objects.label_of(u)}: tags {sorted(tag(m) for m in p.tags)}, "
          f"sites {sorted(site(b) for b in p.resources)}")

# score each stored tricluster against u2, the sparsest profile
print("\nsimilarity of each tricluster to u2:")
u2 = ctx.objects.id_of("u2")
profile = user_profile(ctx, u2)
for key, t in store.items():
    print(f"  {key[:12]}  sim={similarity(profile, t)}")

# the winner is the most similar tricluster; ties go denser-first
print("\nrecommendations:")
for rec in recommend_all(ctx, store):
    name = ctx.objects.label_of(rec.user)
    tags = sorted(tag(m) for m in rec.recommended_tags)
    sites = sorted(site(b) for b in rec.recommended_resources)
    print(f"  {name}: best {rec.best_key[:12]} at {rec.similarity}, "
          f"new tags {tags or '-'}, new sites {sites or '-'}")
