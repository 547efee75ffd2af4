"""Command-line interface.

    lexdiv ingest <data-dir> [--snapshot FILE]
    lexdiv validate <data-dir>
    lexdiv analyze similarity|clusters|diversity [--data-dir DIR] [options]
    lexdiv layout [--data-dir DIR] [--threshold T] [--seed N] [--iterations N]
    lexdiv export raw|lexicon|lexicon-set ... [--out FILE]
    lexdiv serve [--data-dir DIR] [--port N] [--min-overlap N] [--seed N]

Outputs go to stdout as TSV unless --out is given; diagnostics go to
stderr. Exit status is non-zero when validation fails or arguments are
unusable.
"""

from __future__ import annotations

import argparse
import sys
from contextlib import contextmanager

from . import analytics, export, layout
from .errors import LexDivError
from .ingest import ingest_data_dir
from .service import ServiceConfig, serve
from .store import Database


def _build_store(data_dir: str) -> Database:
    db = Database()
    report = ingest_data_dir(data_dir, db)
    if report.rejected:
        print(f"warning: {len(report.rejected)} record(s) rejected during ingest",
              file=sys.stderr)
    return db


@contextmanager
def _sink(path: str | None):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def cmd_ingest(args) -> int:
    db = Database()
    report = ingest_data_dir(args.data_dir, db)
    print(report.summary())
    for rejected in report.rejected:
        print(f"rejected [{rejected.rule}] {rejected.raw}", file=sys.stderr)
    for conflict in report.conflicts:
        print(f"conflict {conflict.record}: {conflict.resolution}", file=sys.stderr)
    if args.snapshot:
        db.save_snapshot(args.snapshot)
        print(f"snapshot written to {args.snapshot}")
    return 0


def cmd_validate(args) -> int:
    db = _build_store(args.data_dir)
    violations = db.validate()
    if not violations:
        print("ok: store satisfies all invariants")
        return 0
    for violation in violations:
        provenance = f" (source {violation.source_id})" if violation.source_id else ""
        print(f"violation [{violation.invariant}] {violation.message}{provenance}")
    return 1


def cmd_analyze(args) -> int:
    db = _build_store(args.data_dir)
    with _sink(args.out) as sink:
        if args.what == "similarity":
            sink.write("lang_a\tlang_b\tscore\toverlap\tcognate_overlap\n")
            for record in analytics.similarity_matrix(db, args.min_overlap):
                sink.write(f"{record.lang_a}\t{record.lang_b}\t{record.score!r}"
                           f"\t{record.overlap}\t{record.cognate_overlap}\n")
        elif args.what == "clusters":
            concepts = [args.concept] if args.concept else sorted(db.concepts)
            sink.write("concept\tcluster\tlanguage\tlemma\n")
            for concept_id in concepts:
                clustering = analytics.cognate_clusters(db, concept_id)
                for index, members in enumerate(clustering.clusters):
                    for sense in members:
                        sink.write(f"{concept_id}\t{index}\t{sense.language}\t{sense.lemma}\n")
        else:
            concepts = [args.concept] if args.concept else sorted(db.concepts)
            sink.write("concept\tindex\tn\tk\n")
            for concept_id in concepts:
                try:
                    result = analytics.diversity_index(db, concept_id)
                except LexDivError:
                    continue  # unlexicalised concepts have no index
                sink.write(f"{concept_id}\t{result.index!r}\t"
                           f"{result.lexicalising_languages}\t{result.clusters}\n")
    return 0


def cmd_layout(args) -> int:
    db = _build_store(args.data_dir)
    records = analytics.similarity_matrix(db, args.min_overlap)
    graph = layout.build_graph(records, args.threshold)
    params = layout.LayoutParams(seed=args.seed)
    positions = layout.run(graph, params, max_iters=args.iterations)
    with _sink(args.out) as sink:
        layout.write_positions_tsv(positions, sink)
    return 0


def cmd_export(args) -> int:
    db = _build_store(args.data_dir)
    with _sink(args.out) as sink:
        if args.what == "raw":
            export.export_raw(db, args.kind, sink, min_overlap=args.min_overlap)
        elif args.what == "lexicon":
            export.export_lexicon(db, args.language, args.format, sink)
        else:
            export.export_lexicon_set(db, args.languages, sink)
    return 0


def cmd_serve(args) -> int:
    config = ServiceConfig(
        data_dir=args.data_dir,
        port=args.port,
        min_overlap=args.min_overlap,
        layout_params=layout.LayoutParams(seed=args.seed),
    )
    serve(config)
    return 0


def _add_data_dir(parser, positional: bool = False):
    if positional:
        parser.add_argument("data_dir", help="directory of interchange TSV files")
    else:
        parser.add_argument("--data-dir", default=".", dest="data_dir",
                            help="directory of interchange TSV files (default: .)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lexdiv", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p_ingest = sub.add_parser("ingest", help="parse and merge a data directory, print the report")
    _add_data_dir(p_ingest, positional=True)
    p_ingest.add_argument("--snapshot", help="also write a binary store snapshot")
    p_ingest.set_defaults(func=cmd_ingest)

    p_validate = sub.add_parser("validate", help="check every store invariant")
    _add_data_dir(p_validate, positional=True)
    p_validate.set_defaults(func=cmd_validate)

    p_analyze = sub.add_parser("analyze", help="diversity analytics as TSV")
    p_analyze.add_argument("what", choices=["similarity", "clusters", "diversity"])
    _add_data_dir(p_analyze)
    p_analyze.add_argument("--min-overlap", type=int, default=analytics.DEFAULT_MIN_OVERLAP)
    p_analyze.add_argument("--concept", help="restrict clusters/diversity to one concept")
    p_analyze.add_argument("--out", help="output file (default stdout)")
    p_analyze.set_defaults(func=cmd_analyze)

    p_layout = sub.add_parser("layout", help="similarity graph positions as TSV")
    _add_data_dir(p_layout)
    p_layout.add_argument("--threshold", type=float, default=0.0)
    p_layout.add_argument("--seed", type=int, default=0)
    p_layout.add_argument("--iterations", type=int, default=200)
    p_layout.add_argument("--min-overlap", type=int, default=analytics.DEFAULT_MIN_OVERLAP)
    p_layout.add_argument("--out", help="output file (default stdout)")
    p_layout.set_defaults(func=cmd_layout)

    p_export = sub.add_parser("export", help="catalogue artifacts")
    export_sub = p_export.add_subparsers(dest="what", required=True)
    p_raw = export_sub.add_parser("raw", help="raw dataset TSV")
    p_raw.add_argument("kind", choices=list(export.RAW_KINDS))
    _add_data_dir(p_raw)
    p_raw.add_argument("--min-overlap", type=int, default=analytics.DEFAULT_MIN_OVERLAP)
    p_raw.add_argument("--out")
    p_raw.set_defaults(func=cmd_export)
    p_lex = export_sub.add_parser("lexicon", help="single-lexicon document")
    p_lex.add_argument("language")
    p_lex.add_argument("--format", choices=["lmf-xml", "tsv"], default="tsv")
    _add_data_dir(p_lex)
    p_lex.add_argument("--out")
    p_lex.set_defaults(func=cmd_export)
    p_set = export_sub.add_parser("lexicon-set", help="concept-aligned multilingual TSV")
    p_set.add_argument("languages", nargs="+", help="two or more language codes")
    _add_data_dir(p_set)
    p_set.add_argument("--out")
    p_set.set_defaults(func=cmd_export)

    p_serve = sub.add_parser("serve", help="run the JSON HTTP API")
    _add_data_dir(p_serve)
    p_serve.add_argument("--port", type=int, default=8080)
    p_serve.add_argument("--min-overlap", type=int, default=analytics.DEFAULT_MIN_OVERLAP)
    p_serve.add_argument("--seed", type=int, default=0)
    p_serve.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except LexDivError as exc:
        print(f"error [{exc.code}]: {exc.message}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
