"""Command-line front end.

Subcommands mirror the library surface: cluster, concepts, recommend,
heatmap, generate, serve. Exit codes: 2 for usage errors (argparse), 3 for
data errors (unreadable input, malformed lines, unknown labels), 4 when an
enumeration or generation cap is exceeded.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import analytics, ingest, oracle
from .core import TriadicContext
from .errors import CapExceededError, GenerationCapError, TriscopeError
from .mining import TriclusterStore, enumerate_triclusters
from .recommend import recommend, recommend_all

__all__ = ["main"]

EXIT_DATA = 3
EXIT_CAP = 4


def _load_context(path: str) -> tuple[TriadicContext, int]:
    if path.endswith(".json"):
        doc = ingest.load_document(path)
        return ingest.context_from_document(doc), 0
    with open(path, "r", encoding="utf-8") as fh:
        result = ingest.parse_triples(fh)
    return result.context, result.duplicates


def _mine(context: TriadicContext, args) -> TriclusterStore:
    rho = ingest.parse_rho(args.rho_min)
    return enumerate_triclusters(context, rho_min=rho, workers=args.threads)


def _fmt_density(x: Fraction) -> str:
    return f"{x} ({float(x):.4f})"


def _fmt_labels(axis, ids) -> str:
    return ",".join(axis.labels_of(ids))


def cmd_cluster(args) -> int:
    context, duplicates = _load_context(args.input)
    store = _mine(context, args)
    print(f"context: {len(context.objects)} objects, {len(context.attributes)} attributes, "
          f"{len(context.conditions)} conditions, {len(context.triples)} incidences"
          + (f" ({duplicates} duplicate lines ignored)" if duplicates else ""))
    print(f"triclusters at rho_min={ingest.parse_rho(args.rho_min)}: {len(store)}")
    for key, t in store.items():
        print(f"  {key[:12]}  density={_fmt_density(t.density)}  "
              f"{len(t.extent)}x{len(t.intent)}x{len(t.modus)}  "
              f"[{_fmt_labels(context.objects, t.extent)} | "
              f"{_fmt_labels(context.attributes, t.intent)} | "
              f"{_fmt_labels(context.conditions, t.modus)}]")
    if args.output:
        ingest.write_results(args.output, ingest.results_document(context, store))
        print(f"results written to {args.output}")
    return 0


def cmd_concepts(args) -> int:
    context, _ = _load_context(args.input)
    if args.project:
        dyadic = context.project(args.project)
        cap = oracle.DEFAULT_CONCEPT_CAP if args.cap is None else args.cap
        concepts = oracle.enumerate_formal_concepts(dyadic, cap=cap)
        print(f"formal concepts of projection ({len(concepts)}):")
        for c in concepts:
            print(f"  [{_fmt_labels(dyadic.objects, c.extent)}] / "
                  f"[{_fmt_labels(dyadic.attributes, c.intent)}]")
    else:
        cap = oracle.DEFAULT_TRICONCEPT_CAP if args.cap is None else args.cap
        concepts = oracle.enumerate_triconcepts(context, cap=cap)
        print(f"triadic concepts ({len(concepts)}):")
        for c in concepts:
            print(f"  [{_fmt_labels(context.objects, c.extent)} | "
                  f"{_fmt_labels(context.attributes, c.intent)} | "
                  f"{_fmt_labels(context.conditions, c.modus)}]")
    return 0


def cmd_recommend(args) -> int:
    context, _ = _load_context(args.input)
    store = _mine(context, args)
    if args.user is not None:
        recs = [recommend(context, store, context.objects.id_of(args.user))]
    else:
        recs = recommend_all(context, store)
    for rec in recs:
        label = context.objects.label_of(rec.user)
        best = store.get(rec.best_key)
        assert best is not None
        print(f"{label}: similarity={_fmt_density(rec.similarity)} "
              f"best=[{_fmt_labels(context.objects, best.extent)} | "
              f"{_fmt_labels(context.attributes, best.intent)} | "
              f"{_fmt_labels(context.conditions, best.modus)}]")
        print(f"  new tags: {_fmt_labels(context.attributes, rec.recommended_tags) or '(none)'}")
        print(f"  new resources: {_fmt_labels(context.conditions, rec.recommended_resources) or '(none)'}")
    return 0


def cmd_heatmap(args) -> int:
    context, _ = _load_context(args.input)
    store = _mine(context, args)
    cmap = analytics.coverage_map(store, context, args.plane)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            fh.write(cmap.to_csv())
        print(f"heatmap written to {args.csv}")
    else:
        sys.stdout.write(cmap.to_csv())
    return 0


def cmd_generate(args) -> int:
    spec = ingest.GeneratorSpec(
        n_objects=args.objects,
        n_attributes=args.attributes,
        n_conditions=args.conditions,
        fill_density=ingest.parse_rho(args.density),
        seed=args.seed,
    )
    context = ingest.generate_context(spec)
    text = ingest.context_to_tsv(context)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"{len(context.triples)} triples written to {args.output}")
    else:
        sys.stdout.write(text)
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(args.data_dir, triconcept_cap=args.oracle_cap)
    uvicorn.run(app, host="127.0.0.1", port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="triscope",
        description="Dense tricluster mining and exploration for triadic incidence data.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_mining_args(p):
        p.add_argument("--input", required=True, help="triple file (TSV) or context document (.json)")
        p.add_argument("--rho-min", default="0", help="density threshold, exact: '5/6', '0.25', '1'")
        p.add_argument("--threads", type=int, default=1, help="worker threads for the mining pass")

    p = sub.add_parser("cluster", help="mine dense triclusters")
    add_mining_args(p)
    p.add_argument("--output", help="write the canonical results document here")
    p.set_defaults(func=cmd_cluster)

    p = sub.add_parser("concepts", help="enumerate exact concepts (small contexts only)")
    p.add_argument("--input", required=True)
    p.add_argument("--tri", action="store_true", help="triadic concepts (the default)")
    p.add_argument("--project", type=int, choices=(1, 2, 3),
                   help="instead: formal concepts of dyadic projection 1, 2, or 3")
    p.add_argument("--cap", type=int, default=None, help="axis-size cap for enumeration")
    p.set_defaults(func=cmd_concepts)

    p = sub.add_parser("recommend", help="tag and resource suggestions from the best-matching tricluster")
    add_mining_args(p)
    p.add_argument("--user", help="object label; all objects when omitted")
    p.set_defaults(func=cmd_recommend)

    p = sub.add_parser("heatmap", help="coverage counts for a plane, as CSV")
    add_mining_args(p)
    p.add_argument("--plane", default="GM", choices=sorted(analytics.PLANES))
    p.add_argument("--csv", help="output path; stdout when omitted")
    p.set_defaults(func=cmd_heatmap)

    p = sub.add_parser("generate", help="seeded uniform-random context as a triple file")
    p.add_argument("--objects", type=int, required=True)
    p.add_argument("--attributes", type=int, required=True)
    p.add_argument("--conditions", type=int, required=True)
    p.add_argument("--density", default="0.1", help="fill probability, exact")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", help="output path; stdout when omitted")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("serve", help="run the HTTP workbench backend")
    p.add_argument("--port", type=int, default=8765)
    p.add_argument("--data-dir", default=None, help="annotation log directory "
                   "(default: $TRISCOPE_DATA_DIR or ./triscope-data)")
    p.add_argument("--oracle-cap", type=int, default=oracle.DEFAULT_TRICONCEPT_CAP,
                   help="axis-size cap for the exact concept endpoint")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CapExceededError, GenerationCapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (TriscopeError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
