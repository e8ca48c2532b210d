"""annotate: raw summaries (+ optional SCU spans) -> engine corpus JSONL."""

import argparse
import json
import pathlib
import sys

from . import pipeline
from .embed import AnnotationBackendError, make_embedder
from .pipeline import RawDataError
from .validate import validate_against_engine


def build_parser():
    parser = argparse.ArgumentParser(
        prog="annotate",
        description="Tokenize, tag, parse, and (optionally) embed raw "
                    "summaries into the align-eval corpus format")
    parser.add_argument("--input", required=True, type=pathlib.Path,
                        help="raw instances JSONL")
    parser.add_argument("--scus", type=pathlib.Path,
                        help="SCU span JSONL (optional)")
    parser.add_argument("--out", required=True, type=pathlib.Path,
                        help="corpus JSONL to write")
    parser.add_argument("--embed", action="store_true",
                        help="attach per-token embeddings")
    parser.add_argument("--embed-dim", type=int, default=32,
                        help="dimension for the hashed backend")
    parser.add_argument("--backend", choices=("hashed", "transformers"),
                        default="hashed")
    parser.add_argument("--model", type=pathlib.Path,
                        help="local model directory (transformers backend)")
    parser.add_argument("--validate", action="store_true",
                        help="run the engine's loader on the output")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        raw_instances = pipeline.load_raw(args.input)
        if args.scus:
            pipeline.load_scus(args.scus, raw_instances)
        embedder = None
        if args.embed:
            embedder = make_embedder(args.backend, args.embed_dim,
                                     args.model)
        payloads = [pipeline.annotate(raw, embedder)
                    for raw in raw_instances]
        pipeline.write_corpus(payloads, args.out)
        meta_path = args.out.with_name(args.out.name + ".meta.json")
        meta_path.write_text(
            json.dumps(pipeline.metadata(embedder), sort_keys=True) + "\n",
            encoding="utf-8")
    except (RawDataError, AnnotationBackendError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 2

    if args.validate:
        report = validate_against_engine(args.out)
        if not report.ok:
            for message in report.messages:
                print(message, file=sys.stderr)
            return 1
        print(f"validated: {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
