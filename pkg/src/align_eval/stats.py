"""Pearson/Spearman correlation of score matrices at two granularities.

Summary level correlates scores across systems within each instance
(averaging the per-instance coefficients, or pooling all cells); system
level correlates per-system means. Only cells present in both matrices are
used.
"""

import math
from dataclasses import dataclass

from .errors import AnalysisError

LEVEL_SUMMARY = "summary"
LEVEL_SYSTEM = "system"
PEARSON = "pearson"
SPEARMAN = "spearman"
MODE_AVERAGED = "averaged"
MODE_POOLED = "pooled"


@dataclass(frozen=True)
class CorrelationReport:
    metric_a: str
    metric_b: str
    level: str
    coefficient: str
    value: float
    n: int
    mode: str | None = None
    skipped: int = 0


def pearson(xs, ys):
    """Product-moment correlation; rejects degenerate input."""
    if len(xs) != len(ys):
        raise ValueError("sequences must have equal length")
    if len(xs) < 2:
        raise AnalysisError("need at least 2 points to correlate")
    n = len(xs)
    mean_x = sum(xs) / n
    mean_y = sum(ys) / n
    var_x = sum((x - mean_x) ** 2 for x in xs)
    var_y = sum((y - mean_y) ** 2 for y in ys)
    if var_x == 0 or var_y == 0:
        raise AnalysisError("zero variance; correlation undefined")
    cov = sum((x - mean_x) * (y - mean_y) for x, y in zip(xs, ys))
    return cov / math.sqrt(var_x * var_y)


def average_ranks(xs):
    """1-based ranks; tied values share the mean of their rank range."""
    order = sorted(range(len(xs)), key=lambda k: xs[k])
    ranks = [0.0] * len(xs)
    pos = 0
    while pos < len(order):
        end = pos
        while end + 1 < len(order) and xs[order[end + 1]] == xs[order[pos]]:
            end += 1
        mean_rank = (pos + end) / 2 + 1
        for k in range(pos, end + 1):
            ranks[order[k]] = mean_rank
        pos = end + 1
    return ranks


def spearman(xs, ys):
    """Pearson on average-ranked data."""
    return pearson(average_ranks(xs), average_ranks(ys))


_COEFFICIENTS = {PEARSON: pearson, SPEARMAN: spearman}


def _shared_cells(a, b):
    shared = sorted(set(a.entries) & set(b.entries))
    systems = sorted({s for s, _ in shared})
    instances = sorted({i for _, i in shared})
    if len(systems) < 2 or not instances:
        raise AnalysisError(
            f"insufficient overlap between {a.metric_name!r} and "
            f"{b.metric_name!r}: {len(systems)} shared systems, "
            f"{len(instances)} shared instances")
    return shared, systems, instances


def correlate(a, b, level=LEVEL_SUMMARY, coefficient=PEARSON,
              mode=MODE_AVERAGED):
    coeff = _COEFFICIENTS[coefficient]
    shared, systems, instances = _shared_cells(a, b)

    if level == LEVEL_SYSTEM:
        xs, ys = [], []
        for system in systems:
            cells = [i for s, i in shared if s == system]
            xs.append(sum(a.entries[(system, i)] for i in cells) / len(cells))
            ys.append(sum(b.entries[(system, i)] for i in cells) / len(cells))
        return CorrelationReport(a.metric_name, b.metric_name, level,
                                 coefficient, coeff(xs, ys), len(systems))

    if level != LEVEL_SUMMARY:
        raise ValueError(f"unknown level {level!r}")

    if mode == MODE_POOLED:
        xs = [a.entries[key] for key in shared]
        ys = [b.entries[key] for key in shared]
        return CorrelationReport(a.metric_name, b.metric_name, level,
                                 coefficient, coeff(xs, ys), len(shared),
                                 mode=mode)

    if mode != MODE_AVERAGED:
        raise ValueError(f"unknown mode {mode!r}")
    values = []
    skipped = 0
    for instance in instances:
        cells = sorted(s for s, i in shared if i == instance)
        if len(cells) < 2:
            skipped += 1
            continue
        xs = [a.entries[(s, instance)] for s in cells]
        ys = [b.entries[(s, instance)] for s in cells]
        try:
            values.append(coeff(xs, ys))
        except AnalysisError:
            skipped += 1
    if not values:
        raise AnalysisError("every shared instance is degenerate; "
                            "no correlation can be averaged")
    return CorrelationReport(a.metric_name, b.metric_name, level,
                             coefficient, sum(values) / len(values),
                             len(values), mode=mode, skipped=skipped)


def delta_table(targets, anchor_a, anchor_b, level=LEVEL_SUMMARY,
                coefficient=PEARSON, mode=MODE_AVERAGED):
    """Per metric: correlation to each anchor and their difference.

    Rows come back as (metric, corr_a, corr_b, delta), anchors first.
    """
    for anchor in (anchor_a, anchor_b):
        if anchor not in targets:
            raise AnalysisError(f"anchor metric {anchor!r} not among the "
                                f"loaded score matrices")
    order = [anchor_a, anchor_b]
    order.extend(sorted(name for name in targets
                        if name not in (anchor_a, anchor_b)))
    rows = []
    for name in order:
        corr_a = correlate(targets[name], targets[anchor_a], level,
                           coefficient, mode).value
        corr_b = correlate(targets[name], targets[anchor_b], level,
                           coefficient, mode).value
        rows.append((name, corr_a, corr_b, corr_a - corr_b))
    return rows
