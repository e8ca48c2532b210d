"""How much of an alignment joins tokens that carry a common SCU id.

SCU (summary content unit) annotations mark phrases that express the same
information; the proportion of alignment weight between same-SCU tokens is
the information-overlap share of the metric's score. For ROUGE the
SCU-maximizing alignment is used, making the proportion an upper bound.
"""

from dataclasses import dataclass

from .alignment import (bert_similarity, bertscore_alignment,
                        bertscore_score, scu_max_rouge_alignment)
from .errors import AnalysisError


@dataclass(frozen=True)
class ScuProportion:
    instance_id: str
    system_id: str
    metric_kind: str
    w_total: float
    w_scu: float

    @property
    def prop(self):
        return self.w_scu / self.w_total


def scu_filter(alignment, reference, candidate):
    """Edges whose endpoint SCU sets intersect."""
    return tuple((i, j, w) for i, j, w in alignment.edges
                 if reference[i].scus & candidate[j].scus)


def _corpus_has_scus(corpus):
    return any(tok.scus
               for inst in corpus
               for summary in (*inst.references, *inst.candidates.values())
               for tok in summary)


def prop_scu(corpus, metric_kind, direction="recall"):
    """One SCU-proportion record per (instance, system).

    ROUGE pools the SCU-maximizing alignments across references (micro);
    BERTScore uses the F1-chosen reference's alignment. Returns
    (records, skipped) where skipped counts zero-weight alignments.
    """
    if not _corpus_has_scus(corpus):
        raise AnalysisError("no token in the corpus carries an SCU id; "
                            "SCU analysis is meaningless")
    label = metric_kind if metric_kind == "rouge1" else f"bertscore_{direction}"
    records = []
    skipped = 0
    for instance in corpus:
        for system_id in instance.system_ids:
            candidate = instance.candidates[system_id]
            if metric_kind == "rouge1":
                pairs = [(ref, scu_max_rouge_alignment(ref, candidate))
                         for ref in instance.references]
            elif metric_kind == "bertscore":
                _, chosen = bertscore_score(instance.references, candidate)
                ref = instance.references[chosen]
                sim = bert_similarity(ref, candidate)
                pairs = [(ref, bertscore_alignment(sim, direction))]
            else:
                raise ValueError(f"unknown metric kind {metric_kind!r}")
            w_total = sum(a.weight for _, a in pairs)
            if w_total == 0:
                skipped += 1
                continue
            w_scu = sum(sum(w for _, _, w in scu_filter(a, ref, candidate))
                        for ref, a in pairs)
            records.append(ScuProportion(
                instance_id=instance.instance_id, system_id=system_id,
                metric_kind=label, w_total=w_total, w_scu=w_scu))
    return records, skipped


@dataclass(frozen=True)
class Distribution:
    bins: int
    edges: tuple[float, ...]
    counts: tuple[int, ...]
    mean: float
    stddev: float
    quartiles: tuple[float, float, float]

    def histogram_payload(self):
        """The JSON-file shape: bins, edges, counts, mean, stddev.

        File floats follow the 6-decimal convention; the in-memory fields
        stay at full precision.
        """
        return {
            "bins": self.bins,
            "edges": [round(e, 6) for e in self.edges],
            "counts": list(self.counts),
            "mean": round(self.mean, 6),
            "stddev": round(self.stddev, 6),
        }


def distribution_summary(props, bins=20):
    """Equal-width histogram over [0, 1] plus mean/stddev/quartiles.

    Bins are closed on the left except the last, which also includes 1.0.
    Accepts ScuProportion records or bare floats.
    """
    values = [p.prop if isinstance(p, ScuProportion) else float(p)
              for p in props]
    if not values:
        raise AnalysisError("cannot summarize an empty distribution")
    if bins < 1:
        raise ValueError("bins must be positive")
    counts = [0] * bins
    for v in values:
        counts[min(int(v * bins), bins - 1)] += 1
    mean = sum(values) / len(values)
    variance = sum((v - mean) ** 2 for v in values) / len(values)
    ordered = sorted(values)
    quartiles = tuple(_quantile(ordered, q) for q in (0.25, 0.5, 0.75))
    return Distribution(
        bins=bins,
        edges=tuple(k / bins for k in range(bins + 1)),
        counts=tuple(counts),
        mean=mean,
        stddev=variance ** 0.5,
        quartiles=quartiles,
    )


def _quantile(ordered, q):
    pos = (len(ordered) - 1) * q
    lo = int(pos)
    hi = min(lo + 1, len(ordered) - 1)
    return ordered[lo] + (ordered[hi] - ordered[lo]) * (pos - lo)
