"""Category selectors and category-filtered alignment analysis.

A category maps a summary to a set of token-index tuples: arity-1
categories (stopwords, POS classes, named entities, NP-chunk membership,
dependency labels) select single indices, and the three dependency-tuple
categories select (verb, subject), (verb, object), and
(verb, subject, object) index tuples. Filtering keeps only the edges of an
alignment covered by the category on both sides; for tuple categories an
edge survives only as a slot of a fully-aligned tuple pair.
"""

import functools
from dataclasses import dataclass
from typing import Callable

from .alignment import (WeightedAlignment, harmonic_mean, rouge1_alignment,
                        rouge1_score, bert_similarity, bertscore_alignment,
                        bertscore_score)
from .corpus import Summary
from .errors import AnalysisError


@dataclass(frozen=True)
class Category:
    """Named selector of token-index tuples of a fixed arity.

    edge_rule, when set, is an extra per-edge predicate over the two
    endpoint tokens (used by NER to require matching entity classes).
    """

    name: str
    arity: int
    selector: Callable[[Summary], frozenset[tuple[int, ...]]]
    edge_rule: Callable | None = None


@dataclass(frozen=True)
class FilteredAlignment:
    base: WeightedAlignment
    category: Category
    edges: tuple[tuple[int, int, float], ...]
    aligned_tuples: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...] = ()

    @property
    def weight(self):
        return sum(w for _, _, w in self.edges)


def _index_selector(predicate):
    def selector(summary):
        return frozenset((tok.index,) for tok in summary if predicate(tok))
    return selector


def _verb_tuple_selector(want_subject, want_object):
    def selector(summary):
        out = []
        for verb in summary:
            if verb.pos != "VB":
                continue
            subjects = [t.index for t in summary
                        if t.dep_head == verb.index and t.dep_label == "nsubj"]
            objects = [t.index for t in summary
                       if t.dep_head == verb.index and t.dep_label == "dobj"]
            if want_subject and want_object:
                out.extend((verb.index, s, o) for s in subjects for o in objects)
            elif want_subject:
                out.extend((verb.index, s) for s in subjects)
            else:
                out.extend((verb.index, o) for o in objects)
        return frozenset(out)
    return selector


def _same_entity_class(ref, cand, i, j):
    return ref[i].ner == cand[j].ner


def _make_categories():
    cats = [Category("STOPWORDS", 1, _index_selector(lambda t: t.stopword))]
    for pos in ("NN", "NNP", "VB", "ADJ", "ADV", "NUM"):
        cats.append(Category(
            pos, 1, _index_selector(lambda t, pos=pos: t.pos == pos)))
    cats.append(Category("NER", 1, _index_selector(lambda t: t.ner != "NONE"),
                         edge_rule=_same_entity_class))
    cats.append(Category(
        "NP-CHUNKS", 1, _index_selector(lambda t: t.np_chunk is not None)))
    for label in ("root", "nsubj", "dobj"):
        cats.append(Category(
            label.upper(), 1,
            _index_selector(lambda t, lab=label: t.dep_label == lab)))
    cats.append(Category("VB+NSUBJ", 2, _verb_tuple_selector(True, False)))
    cats.append(Category("VB+DOBJ", 2, _verb_tuple_selector(False, True)))
    cats.append(Category("VB+NSUBJ+DOBJ", 3, _verb_tuple_selector(True, True)))
    return {c.name: c for c in cats}


CATEGORIES = _make_categories()
CATEGORY_ORDER = tuple(CATEGORIES)

CONTENT_GROUPS = {
    "TOPIC": ("NN", "NNP", "VB", "ADJ", "ADV", "NUM", "NER", "NP-CHUNKS",
              "ROOT", "NSUBJ", "DOBJ"),
    "INFORMATION": ("VB+NSUBJ", "VB+DOBJ", "VB+NSUBJ+DOBJ"),
    "STOPWORDS": ("STOPWORDS",),
}


@functools.lru_cache(maxsize=4096)
def select(category, summary):
    """Apply a category selector; cached, summaries are immutable."""
    selected = category.selector(summary)
    for index_tuple in selected:
        if len(index_tuple) != category.arity:
            raise ValueError(f"{category.name}: selected tuple {index_tuple} "
                             f"has wrong arity")
    return selected


def filter_alignment(alignment, category, reference, candidate):
    """Restrict an alignment to the edges covered by the category."""
    ref_sel = select(category, reference)
    cand_sel = select(category, candidate)

    if category.arity == 1:
        kept = [
            (i, j, w) for i, j, w in alignment.edges
            if (i,) in ref_sel and (j,) in cand_sel
            and (category.edge_rule is None
                 or category.edge_rule(reference, candidate, i, j))
        ]
        return FilteredAlignment(base=alignment, category=category,
                                 edges=tuple(kept))

    edge_pairs = {(i, j) for i, j, _ in alignment.edges}
    aligned = []
    covered = set()
    for ref_tuple in sorted(ref_sel):
        for cand_tuple in sorted(cand_sel):
            slots = list(zip(ref_tuple, cand_tuple))
            if all(pair in edge_pairs for pair in slots):
                aligned.append((ref_tuple, cand_tuple))
                covered.update(slots)
    kept = [(i, j, w) for i, j, w in alignment.edges if (i, j) in covered]
    return FilteredAlignment(base=alignment, category=category,
                             edges=tuple(kept),
                             aligned_tuples=tuple(aligned))


def contribution(alignment, category, reference, candidate):
    """Fraction of the alignment weight explained by the category."""
    total = alignment.weight
    if total == 0:
        raise AnalysisError(
            "contribution is undefined on a zero-weight alignment")
    return filter_alignment(alignment, category, reference, candidate).weight / total


def grouped_contribution(alignment, group, reference, candidate):
    """Contribution of the union of a content-type group's edge sets.

    Union, not sum: an edge explained by several member categories counts
    once.
    """
    total = alignment.weight
    if total == 0:
        raise AnalysisError(
            "contribution is undefined on a zero-weight alignment")
    union = _group_edge_keys(alignment, group, reference, candidate)
    weight = sum(w for i, j, w in alignment.edges if (i, j) in union)
    return weight / total


def _group_edge_keys(alignment, group, reference, candidate):
    union = set()
    for name in CONTENT_GROUPS[group]:
        kept = filter_alignment(alignment, CATEGORIES[name],
                                reference, candidate)
        union.update((i, j) for i, j, _ in kept.edges)
    return union


def _slot_count(selected):
    return sum(len(t) for t in selected)


@dataclass(frozen=True)
class CategoryScore:
    """Category-specific precision/recall/F1; None marks a score whose
    denominator is empty (absent, deliberately not zero)."""

    precision: float | None
    recall: float | None

    @property
    def f1(self):
        if self.precision is None or self.recall is None:
            return None
        return harmonic_mean(self.precision, self.recall)


def category_pr(alignment, category, reference, candidate):
    """Metric restricted to the category: filtered weight over the selected slot
    counts of each side."""
    w_c = filter_alignment(alignment, category, reference, candidate).weight
    denom_r = _slot_count(select(category, reference))
    denom_s = _slot_count(select(category, candidate))
    return CategoryScore(
        precision=w_c / denom_s if denom_s else None,
        recall=w_c / denom_r if denom_r else None,
    )


# ---------------------------------------------------------------------------
# corpus-level drivers
# ---------------------------------------------------------------------------

def metric_label(metric_kind, direction):
    return metric_kind if metric_kind == "rouge1" else f"bertscore_{direction}"


def alignment_groups(instance, system_id, metric_kind, direction="recall"):
    """Per reference (ROUGE) or for the F1-chosen reference (BERTScore):
    (reference, candidate, alignment) triples for one candidate summary."""
    candidate = instance.candidates[system_id]
    if metric_kind == "rouge1":
        return [(ref, candidate, rouge1_alignment(ref, candidate))
                for ref in instance.references]
    if metric_kind == "bertscore":
        _, chosen = bertscore_score(instance.references, candidate)
        ref = instance.references[chosen]
        sim = bert_similarity(ref, candidate)
        return [(ref, candidate, bertscore_alignment(sim, direction))]
    raise ValueError(f"unknown metric kind {metric_kind!r}")


def corpus_contributions(corpus, metric_kind, direction="recall", pooled=False):
    """Mean (or pooled) per-category and per-group contributions.

    Returns (category -> value, group -> value, number of summaries).
    Zero-weight candidate summaries are skipped. The default averages each
    (instance, system) pair's contribution; pooled divides summed filtered
    weight by summed total weight corpus-wide.
    """
    cat_values = {name: [] for name in CATEGORY_ORDER}
    group_values = {name: [] for name in CONTENT_GROUPS}
    cat_weights = {name: 0.0 for name in CATEGORY_ORDER}
    group_weights = {name: 0.0 for name in CONTENT_GROUPS}
    pooled_total = 0.0
    n_pairs = 0
    for instance in corpus:
        for system_id in instance.system_ids:
            groups = alignment_groups(instance, system_id, metric_kind,
                                      direction)
            total = sum(a.weight for _, _, a in groups)
            if total == 0:
                continue
            n_pairs += 1
            pooled_total += total
            for name in CATEGORY_ORDER:
                w = sum(filter_alignment(a, CATEGORIES[name], ref, cand).weight
                        for ref, cand, a in groups)
                cat_values[name].append(w / total)
                cat_weights[name] += w
            for name in CONTENT_GROUPS:
                w = 0.0
                for ref, cand, a in groups:
                    union = _group_edge_keys(a, name, ref, cand)
                    w += sum(we for i, j, we in a.edges if (i, j) in union)
                group_values[name].append(w / total)
                group_weights[name] += w
    if n_pairs == 0:
        raise AnalysisError("no candidate summary has a non-empty alignment")
    if pooled:
        cats = {name: cat_weights[name] / pooled_total
                for name in CATEGORY_ORDER}
        groups_out = {name: group_weights[name] / pooled_total
                      for name in CONTENT_GROUPS}
    else:
        cats = {name: sum(v) / len(v) for name, v in cat_values.items()}
        groups_out = {name: sum(v) / len(v)
                      for name, v in group_values.items()}
    return cats, groups_out, n_pairs


def instance_category_score(instance, system_id, category, metric_kind,
                            direction="recall"):
    """Category P/R for one candidate, honoring the multi-reference rules.

    ROUGE micro-averages: summed filtered weight over summed reference slot
    counts (recall) and over |refs| * candidate slots (precision).
    BERTScore evaluates the F1-chosen reference, using the recall alignment
    for recall and the precision alignment for precision.
    """
    candidate = instance.candidates[system_id]
    if metric_kind == "rouge1":
        w_c = 0.0
        denom_r = 0
        for ref, cand, a in alignment_groups(instance, system_id, "rouge1"):
            w_c += filter_alignment(a, category, ref, cand).weight
            denom_r += _slot_count(select(category, ref))
        denom_s = len(instance.references) * _slot_count(
            select(category, candidate))
        return CategoryScore(
            precision=w_c / denom_s if denom_s else None,
            recall=w_c / denom_r if denom_r else None,
        )
    _, chosen = bertscore_score(instance.references, candidate)
    ref = instance.references[chosen]
    sim = bert_similarity(ref, candidate)
    recall_part = category_pr(bertscore_alignment(sim, "recall"),
                              category, ref, candidate)
    precision_part = category_pr(bertscore_alignment(sim, "precision"),
                                 category, ref, candidate)
    return CategoryScore(precision=precision_part.precision,
                         recall=recall_part.recall)


def _overall_f1(instance, system_id, metric_kind):
    candidate = instance.candidates[system_id]
    if metric_kind == "rouge1":
        return rouge1_score(instance.references, candidate).f1
    score, _ = bertscore_score(instance.references, candidate)
    return score.f1


def system_comparison(corpus, systems, metric_kind):
    """Per-category mean F1 for two systems, with absolute and relative
    deltas.

    Returns rows (name, f1_a, f1_b, delta, relative_delta); any of the
    numeric fields may be None when undefined (no instance defines the
    category F1 for a system, or the baseline F1 is 0 for the relative
    delta).
    """
    sys_a, sys_b = systems
    shared = [inst for inst in corpus
              if sys_a in inst.candidates and sys_b in inst.candidates]
    if not shared:
        raise AnalysisError(
            f"no instance contains both {sys_a!r} and {sys_b!r}")

    def mean_f1(system_id, name):
        values = []
        for instance in shared:
            if name == "OVERALL":
                values.append(_overall_f1(instance, system_id, metric_kind))
            else:
                score = instance_category_score(
                    instance, system_id, CATEGORIES[name], metric_kind)
                if score.f1 is not None:
                    values.append(score.f1)
        return sum(values) / len(values) if values else None

    rows = []
    for name in ("OVERALL",) + CATEGORY_ORDER:
        f1_a = mean_f1(sys_a, name)
        f1_b = mean_f1(sys_b, name)
        if f1_a is None or f1_b is None:
            rows.append((name, f1_a, f1_b, None, None))
            continue
        delta = f1_b - f1_a
        relative = delta / f1_a if f1_a != 0 else None
        rows.append((name, f1_a, f1_b, delta, relative))
    return rows
