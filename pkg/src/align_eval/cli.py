"""align-eval command line: score, contributions, scu-prop, compare,
correlate.

Every subcommand validates its inputs fully, computes everything in memory,
and only then writes its output files (atomically, temp + rename), so a
failing run leaves no partial data behind. Outputs are byte-identical
across repeated runs on the same inputs. Exit codes: 0 success, 1
validation error, 2 I/O error.
"""

import argparse
import pathlib
import sys
from dataclasses import dataclass, field

from . import categories, scu, stats as corr
from .alignment import bertscore_score, rouge1_score
from .corpus import (ScoreMatrix, corpus_has_embeddings, load_corpus,
                     load_score_matrix, render_score_csv)
from .errors import ValidationError
from .reports import (FLOAT6, INT, PCT1, STR, Table, render, write_atomic,
                      write_json_payload)

METRIC_CHOICES = ("auto", "rouge1", "bertscore")


@dataclass
class RunConfig:
    """Options shared by the analysis subcommands."""

    corpus_path: pathlib.Path | None
    out_dir: pathlib.Path
    report_format: str = "tsv"
    metrics: tuple[str, ...] = ("auto",)
    bins: int = 20
    level: str = corr.LEVEL_SUMMARY
    mode: str = corr.MODE_AVERAGED
    bert_direction: str = "recall"
    pooled: bool = False
    seed: int = 0  # reserved; every computation is deterministic
    extra: dict = field(default_factory=dict)


def _resolve_metrics(config, corpus):
    wanted = config.metrics
    if "auto" in wanted:
        metrics = ["rouge1"]
        if corpus_has_embeddings(corpus):
            metrics.append("bertscore")
        return metrics
    metrics = list(dict.fromkeys(wanted))
    if "bertscore" in metrics and not corpus_has_embeddings(corpus):
        raise ValidationError(
            "bertscore requested but the corpus has no embeddings")
    return metrics


def _out_path(config, name):
    return config.out_dir / name


def _write_table(config, stem, table):
    text = render(table, config.report_format)
    write_atomic(_out_path(config, f"{stem}.{config.report_format}"), text)


def cmd_score(config):
    corpus = load_corpus(config.corpus_path)
    metrics = _resolve_metrics(config, corpus)
    outputs = []
    for metric in metrics:
        cells = {"precision": {}, "recall": {}, "f1": {}}
        for instance in corpus:
            for system_id in instance.system_ids:
                candidate = instance.candidates[system_id]
                if metric == "rouge1":
                    score = rouge1_score(instance.references, candidate)
                else:
                    score, _ = bertscore_score(instance.references, candidate)
                key = (system_id, instance.instance_id)
                cells["precision"][key] = score.precision
                cells["recall"][key] = score.recall
                cells["f1"][key] = score.f1
        for stat, entries in cells.items():
            matrix = ScoreMatrix(metric_name=f"{metric}_{stat}",
                                 entries=entries)
            outputs.append((f"{metric}_{stat}.csv", render_score_csv(matrix)))
    for name, text in outputs:
        write_atomic(_out_path(config, name), text)
    return 0


def cmd_contributions(config):
    corpus = load_corpus(config.corpus_path)
    metrics = _resolve_metrics(config, corpus)
    cat_rows = []
    group_rows = []
    for metric in metrics:
        label = categories.metric_label(metric, config.bert_direction)
        cats, groups, n_pairs = categories.corpus_contributions(
            corpus, metric, config.bert_direction, pooled=config.pooled)
        cat_rows.extend((name, label, cats[name], n_pairs)
                        for name in categories.CATEGORY_ORDER)
        group_rows.extend((name, label, groups[name], n_pairs)
                          for name in categories.CONTENT_GROUPS)
    _write_table(config, "contributions", Table(
        ("category", "metric", "mean_contribution_pct", "n_summaries"),
        (STR, STR, PCT1, INT), cat_rows))
    _write_table(config, "content_type_contributions", Table(
        ("group", "metric", "mean_contribution_pct", "n_summaries"),
        (STR, STR, PCT1, INT), group_rows))
    return 0


def cmd_scu(config):
    corpus = load_corpus(config.corpus_path)
    metrics = _resolve_metrics(config, corpus)
    rows = []
    histograms = []
    for metric in metrics:
        label = categories.metric_label(metric, config.bert_direction)
        records, skipped = scu.prop_scu(corpus, metric,
                                        config.bert_direction)
        if skipped:
            print(f"warning: {skipped} zero-weight alignment(s) skipped "
                  f"for {metric}", file=sys.stderr)
        rows.extend((r.instance_id, r.system_id, r.metric_kind,
                     r.w_total, r.w_scu, r.prop) for r in records)
        dist = scu.distribution_summary(records, bins=config.bins)
        histograms.append((f"scu_histogram_{label}.json",
                           dist.histogram_payload()))
    _write_table(config, "scu_prop", Table(
        ("instance_id", "system_id", "metric", "w_total", "w_scu", "prop"),
        (STR, STR, STR, FLOAT6, FLOAT6, FLOAT6), rows))
    for name, payload in histograms:
        write_json_payload(_out_path(config, name), payload)
    return 0


def cmd_compare(config):
    corpus = load_corpus(config.corpus_path)
    metrics = _resolve_metrics(config, corpus)
    metric = metrics[0]
    sys_a = config.extra["system_a"]
    sys_b = config.extra["system_b"]
    rows = categories.system_comparison(corpus, (sys_a, sys_b), metric)
    _write_table(config, "comparison", Table(
        ("category", f"f1_{sys_a}", f"f1_{sys_b}", "delta", "rel_delta_pct"),
        (STR, PCT1, PCT1, PCT1, PCT1), rows))
    return 0


def cmd_correlate(config):
    targets = {}
    for path in config.extra["scores"]:
        matrix = load_score_matrix(path)
        if matrix.metric_name in targets:
            raise ValidationError(
                f"metric {matrix.metric_name!r} appears in more than one "
                f"scores file")
        targets[matrix.metric_name] = matrix
    anchor_a = config.extra["anchor_a"]
    anchor_b = config.extra["anchor_b"]

    delta_rows = corr.delta_table(targets, anchor_a, anchor_b,
                                  level=config.level, mode=config.mode,
                                  coefficient=config.extra["coefficient"])
    level_rows = []
    for name in sorted(n for n in targets if n != anchor_b):
        summary_reports = {
            c: corr.correlate(targets[name], targets[anchor_b],
                              corr.LEVEL_SUMMARY, c, corr.MODE_AVERAGED)
            for c in (corr.PEARSON, corr.SPEARMAN)}
        system_reports = {
            c: corr.correlate(targets[name], targets[anchor_b],
                              corr.LEVEL_SYSTEM, c)
            for c in (corr.PEARSON, corr.SPEARMAN)}
        level_rows.append((name, corr.LEVEL_SUMMARY,
                           summary_reports[corr.PEARSON].value,
                           summary_reports[corr.SPEARMAN].value,
                           summary_reports[corr.PEARSON].n,
                           summary_reports[corr.PEARSON].skipped))
        level_rows.append((name, corr.LEVEL_SYSTEM,
                           system_reports[corr.PEARSON].value,
                           system_reports[corr.SPEARMAN].value,
                           system_reports[corr.PEARSON].n,
                           system_reports[corr.PEARSON].skipped))

    _write_table(config, "correlation_delta", Table(
        ("metric", f"corr_{anchor_a}", f"corr_{anchor_b}", "delta"),
        (STR, FLOAT6, FLOAT6, FLOAT6), delta_rows))
    _write_table(config, "correlation_levels", Table(
        ("metric", "level", "pearson", "spearman", "n", "skipped"),
        (STR, STR, FLOAT6, FLOAT6, INT, INT), level_rows))
    return 0


def _add_common(parser, needs_corpus=True):
    if needs_corpus:
        parser.add_argument("--corpus", required=True, type=pathlib.Path,
                            help="annotated corpus JSONL")
    parser.add_argument("--out", required=True, type=pathlib.Path,
                        help="output directory (created if missing)")
    parser.add_argument("--format", choices=("tsv", "json", "md"),
                        default="tsv", help="report file format")
    parser.add_argument("--seed", type=int, default=0,
                        help="reserved; all computation is deterministic")


def _add_metric(parser):
    parser.add_argument("--metric", action="append", choices=METRIC_CHOICES,
                        default=None,
                        help="metric to analyze (repeatable; default auto)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="align-eval",
        description="Token-alignment analysis of summarization metrics")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("score", help="write P/R/F1 score matrices")
    _add_common(p)
    _add_metric(p)

    p = sub.add_parser("contributions",
                       help="per-category and content-type contributions")
    _add_common(p)
    _add_metric(p)
    p.add_argument("--bert-direction", choices=("recall", "precision"),
                   default="recall")
    p.add_argument("--pooled", action="store_true",
                   help="pool weights corpus-wide instead of averaging "
                        "per-summary contributions")

    p = sub.add_parser("scu-prop",
                       help="SCU-explained proportion per summary")
    _add_common(p)
    _add_metric(p)
    p.add_argument("--bins", type=int, default=20)
    p.add_argument("--bert-direction", choices=("recall", "precision"),
                   default="recall")

    p = sub.add_parser("compare",
                       help="category-specific F1 comparison of two systems")
    _add_common(p)
    p.add_argument("--metric", action="append",
                   choices=("rouge1", "bertscore"), default=None)
    p.add_argument("--system-a", required=True)
    p.add_argument("--system-b", required=True)

    p = sub.add_parser("correlate",
                       help="correlate score matrices against two anchors")
    _add_common(p, needs_corpus=False)
    p.add_argument("--scores", action="append", required=True,
                   type=pathlib.Path, help="score CSV (repeatable)")
    p.add_argument("--anchor-a", required=True)
    p.add_argument("--anchor-b", required=True)
    p.add_argument("--level", choices=(corr.LEVEL_SUMMARY, corr.LEVEL_SYSTEM),
                   default=corr.LEVEL_SUMMARY)
    p.add_argument("--mode", choices=(corr.MODE_AVERAGED, corr.MODE_POOLED),
                   default=corr.MODE_AVERAGED)
    p.add_argument("--coefficient", choices=(corr.PEARSON, corr.SPEARMAN),
                   default=corr.PEARSON)
    return parser


_COMMANDS = {
    "score": cmd_score,
    "contributions": cmd_contributions,
    "scu-prop": cmd_scu,
    "compare": cmd_compare,
    "correlate": cmd_correlate,
}


def _config_from_args(args):
    extra = {}
    for key in ("system_a", "system_b", "scores", "anchor_a", "anchor_b",
                "coefficient"):
        if hasattr(args, key):
            extra[key] = getattr(args, key)
    return RunConfig(
        corpus_path=getattr(args, "corpus", None),
        out_dir=args.out,
        report_format=args.format,
        metrics=tuple(args.metric) if getattr(args, "metric", None)
        else ("auto",),
        bins=getattr(args, "bins", 20),
        level=getattr(args, "level", corr.LEVEL_SUMMARY),
        mode=getattr(args, "mode", corr.MODE_AVERAGED),
        bert_direction=getattr(args, "bert_direction", "recall"),
        pooled=getattr(args, "pooled", False),
        seed=args.seed,
        extra=extra,
    )


def main(argv=None):
    args = build_parser().parse_args(argv)
    config = _config_from_args(args)
    try:
        config.out_dir.mkdir(parents=True, exist_ok=True)
        return _COMMANDS[args.command](config)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
