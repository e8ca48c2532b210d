"""Weighted token alignments behind ROUGE-1 and BERTScore.

Both metrics are computed *through* an explicit edge set between reference
and candidate tokens: ROUGE-1 pairs equal lowercased unigrams one-to-one
with unit weight; BERTScore connects each token on one side to its
most-similar token on the other side with the cosine similarity as the
weight. All downstream analyses (SCU proportions, category contributions)
filter these edge sets.
"""

import json
from dataclasses import dataclass

import numpy as np

from .errors import EmbeddingError

KIND_ROUGE1 = "rouge1"
KIND_BERT_RECALL = "bert_recall"
KIND_BERT_PRECISION = "bert_precision"


@dataclass(frozen=True)
class WeightedAlignment:
    """Edge set (ref_index, cand_index, weight in (0, 1]), sorted by indices.

    rouge1 alignments are one-to-one with unit weights. bert_recall carries
    one edge per reference token (bert_precision per candidate token),
    except that edges whose best similarity is not positive are dropped;
    the dropped tokens still count in the score denominators.
    """

    edges: tuple[tuple[int, int, float], ...]
    ref_len: int
    cand_len: int
    kind: str

    @property
    def weight(self):
        return sum(w for _, _, w in self.edges)


@dataclass(frozen=True)
class MetricScore:
    precision: float
    recall: float
    f1: float

    @classmethod
    def from_pr(cls, precision, recall):
        return cls(precision, recall, harmonic_mean(precision, recall))


@dataclass(frozen=True)
class SimilarityMatrix:
    """Pairwise cosine similarities; values[i][j] compares reference token i
    with candidate token j."""

    values: np.ndarray

    @property
    def m(self):
        return self.values.shape[0]

    @property
    def n(self):
        return self.values.shape[1]


def harmonic_mean(precision, recall):
    if precision + recall == 0:
        return 0.0
    return 2 * precision * recall / (precision + recall)


def normalize_unigram(text):
    """Lowercase only; no stemming, no stopword removal."""
    return text.lower()


def _positions_by_unigram(summary):
    positions = {}
    for tok in summary:
        positions.setdefault(normalize_unigram(tok.text), []).append(tok.index)
    return positions


def rouge1_alignment(reference, candidate):
    """Pair min(c_R(u), c_S(u)) occurrences of every shared unigram u.

    Occurrences are paired left-to-right, which fixes one canonical
    alignment among the many of equal weight.
    """
    rpos = _positions_by_unigram(reference)
    spos = _positions_by_unigram(candidate)
    edges = []
    for unigram in sorted(set(rpos) & set(spos)):
        k = min(len(rpos[unigram]), len(spos[unigram]))
        edges.extend((i, j, 1.0)
                     for i, j in zip(rpos[unigram][:k], spos[unigram][:k]))
    return WeightedAlignment(edges=tuple(sorted(edges)),
                             ref_len=len(reference), cand_len=len(candidate),
                             kind=KIND_ROUGE1)


def rouge1_score(reference_set, candidate):
    """Micro-averaged unigram precision/recall/F1 over the references."""
    if not reference_set:
        raise ValueError("at least one reference is required")
    total = sum(rouge1_alignment(ref, candidate).weight
                for ref in reference_set)
    recall = total / sum(len(ref) for ref in reference_set)
    precision = total / (len(reference_set) * len(candidate))
    return MetricScore.from_pr(precision, recall)


def bert_similarity(reference, candidate):
    """Cosine-similarity matrix of the two summaries' token embeddings."""
    for summary, side in ((reference, "reference"), (candidate, "candidate")):
        for tok in summary:
            if tok.embedding is None:
                raise EmbeddingError(f"{side} token {tok.index} has no "
                                     f"embedding")
    ref_vecs = np.array([tok.embedding for tok in reference], dtype=float)
    cand_vecs = np.array([tok.embedding for tok in candidate], dtype=float)
    if ref_vecs.shape[1] != cand_vecs.shape[1]:
        raise EmbeddingError(
            f"embedding dimensions differ: {ref_vecs.shape[1]} vs "
            f"{cand_vecs.shape[1]}")
    for vecs, summary, side in ((ref_vecs, reference, "reference"),
                                (cand_vecs, candidate, "candidate")):
        norms = np.linalg.norm(vecs, axis=1)
        if np.any(norms == 0):
            bad = int(np.argmin(norms))
            raise EmbeddingError(f"{side} token {bad} has a zero-norm "
                                 f"embedding; cosine similarity is undefined")

    ref_unit = ref_vecs / np.linalg.norm(ref_vecs, axis=1, keepdims=True)
    cand_unit = cand_vecs / np.linalg.norm(cand_vecs, axis=1, keepdims=True)
    values = np.clip(ref_unit @ cand_unit.T, -1.0, 1.0)
    values.setflags(write=False)
    return SimilarityMatrix(values=values)


def bertscore_alignment(similarity, direction):
    """Greedy best-match alignment over rows (recall) or columns (precision).

    Ties go to the lowest index. Edges with non-positive weight are dropped;
    the corresponding tokens still count in the score denominator.
    """
    values = similarity.values
    edges = []
    if direction == "recall":
        for i in range(similarity.m):
            j = int(np.argmax(values[i]))
            w = float(values[i, j])
            if w > 0:
                edges.append((i, j, w))
        kind = KIND_BERT_RECALL
    elif direction == "precision":
        for j in range(similarity.n):
            i = int(np.argmax(values[:, j]))
            w = float(values[i, j])
            if w > 0:
                edges.append((i, j, w))
        kind = KIND_BERT_PRECISION
    else:
        raise ValueError(f"unknown direction {direction!r}")
    return WeightedAlignment(edges=tuple(sorted(edges)),
                             ref_len=similarity.m, cand_len=similarity.n,
                             kind=kind)


def bertscore_score(reference_set, candidate):
    """(score, chosen reference index).

    Precision and recall each take their maximum across references; the
    chosen index is the reference with the best per-reference F1 and is the
    one whose alignments feed the downstream analyses.
    """
    if not reference_set:
        raise ValueError("at least one reference is required")
    per_ref = []
    for ref in reference_set:
        sim = bert_similarity(ref, candidate)
        recall = bertscore_alignment(sim, "recall").weight / len(ref)
        precision = (bertscore_alignment(sim, "precision").weight
                     / len(candidate))
        per_ref.append((precision, recall, harmonic_mean(precision, recall)))
    chosen = max(range(len(per_ref)), key=lambda k: (per_ref[k][2], -k))
    precision = max(p for p, _, _ in per_ref)
    recall = max(r for _, r, _ in per_ref)
    return MetricScore.from_pr(precision, recall), chosen


def _maximum_matching(adjacency, left):
    """Maximum bipartite matching (Kuhn's augmenting paths).

    adjacency maps each left vertex to an ordered list of right vertices;
    returns {left: right}. Deterministic for a fixed adjacency order.
    """
    match_right = {}

    def try_augment(u, banned):
        for v in adjacency[u]:
            if v in banned:
                continue
            banned.add(v)
            if v not in match_right or try_augment(match_right[v], banned):
                match_right[v] = u
                return True
        return False

    for u in left:
        try_augment(u, set())
    return {u: v for v, u in match_right.items()}


def scu_max_rouge_alignment(reference, candidate):
    """A canonical-weight ROUGE alignment maximizing SCU-sharing edges.

    ROUGE edges only join equal unigrams, so the optimization decomposes per
    unigram: take a maximum matching of the occurrence pairs whose SCU sets
    intersect, then extend left-to-right to the full min-count pairing.
    """
    rpos = _positions_by_unigram(reference)
    spos = _positions_by_unigram(candidate)
    edges = []
    for unigram in sorted(set(rpos) & set(spos)):
        rs, ss = rpos[unigram], spos[unigram]
        k = min(len(rs), len(ss))
        adjacency = {
            i: [j for j in ss
                if reference[i].scus & candidate[j].scus]
            for i in rs
        }
        matched = _maximum_matching(adjacency, rs)
        edges.extend((i, j, 1.0) for i, j in sorted(matched.items()))
        free_r = [i for i in rs if i not in matched]
        free_s = [j for j in ss if j not in set(matched.values())]
        fill = k - len(matched)
        edges.extend((i, j, 1.0) for i, j in zip(free_r[:fill], free_s[:fill]))
    return WeightedAlignment(edges=tuple(sorted(edges)),
                             ref_len=len(reference), cand_len=len(candidate),
                             kind=KIND_ROUGE1)


def dump_alignments(records, fh):
    """Write alignment records as JSONL with 6-decimal edge weights.

    records yields (instance_id, system_id, reference_index, alignment).
    """
    for instance_id, system_id, ref_index, alignment in records:
        edges = ",".join(f"[{i},{j},{w:.6f}]" for i, j, w in alignment.edges)
        head = json.dumps({"instance_id": instance_id,
                           "system_id": system_id,
                           "reference_index": ref_index,
                           "kind": alignment.kind}, sort_keys=True)
        fh.write(f'{head[:-1]},"edges":[{edges}]}}\n')
