"""Corpus data model plus the JSONL and score-CSV readers/writers.

A corpus file holds one instance per line: a set of reference summaries and
one candidate summary per system, all pre-annotated (POS, NER, NP chunks,
dependency arcs, stopword flags, SCU ids, optional embeddings). Loading
validates every invariant and rejects the whole file on the first violation
with a located error message; loaded objects are immutable.
"""

import csv
import json
import math
import pathlib
from dataclasses import dataclass, field

from .errors import CorpusError, ScoreMatrixError

POS_CLASSES = frozenset({"NN", "NNP", "VB", "ADJ", "ADV", "NUM", "OTHER"})
NER_CLASSES = frozenset({"PER", "LOC", "ORG", "NONE"})

_TOKEN_KEYS = frozenset({"text", "pos", "ner", "np_chunk", "dep_label",
                         "dep_head", "stopword", "scus", "embedding"})
_TOKEN_REQUIRED = _TOKEN_KEYS - {"embedding"}


@dataclass(frozen=True)
class AnnotatedToken:
    """One summary token with its linguistic annotation."""

    index: int
    text: str
    pos: str
    ner: str
    np_chunk: int | None
    dep_label: str
    dep_head: int
    stopword: bool
    scus: frozenset[int]
    embedding: tuple[float, ...] | None = None


@dataclass(frozen=True)
class Summary:
    tokens: tuple[AnnotatedToken, ...]

    def __len__(self):
        return len(self.tokens)

    def __iter__(self):
        return iter(self.tokens)

    def __getitem__(self, index):
        return self.tokens[index]


@dataclass(frozen=True)
class Instance:
    instance_id: str
    references: tuple[Summary, ...]
    candidates: dict[str, Summary] = field(hash=False)

    @property
    def system_ids(self):
        return sorted(self.candidates)


@dataclass
class ScoreMatrix:
    """(system_id, instance_id) -> score for one named metric."""

    metric_name: str
    entries: dict[tuple[str, str], float]

    @property
    def systems(self):
        return sorted({s for s, _ in self.entries})

    @property
    def instance_ids(self):
        return sorted({i for _, i in self.entries})

    def missing_pairs(self):
        """Grid cells absent from the matrix (missing cells are allowed)."""
        return sorted((s, i) for s in self.systems for i in self.instance_ids
                      if (s, i) not in self.entries)


def _reject_duplicate_keys(pairs):
    obj = {}
    for key, value in pairs:
        if key in obj:
            raise CorpusError(f"duplicate key {key!r}")
        obj[key] = value
    return obj


def _parse_token(raw, position, where):
    if not isinstance(raw, dict):
        raise CorpusError(f"{where}: token must be an object")
    unknown = set(raw) - _TOKEN_KEYS
    if unknown:
        raise CorpusError(f"{where}: unknown token keys {sorted(unknown)}")
    missing = _TOKEN_REQUIRED - set(raw)
    if missing:
        raise CorpusError(f"{where}: missing token keys {sorted(missing)}")

    text = raw["text"]
    if not isinstance(text, str) or not text:
        raise CorpusError(f"{where}: text must be a non-empty string")
    if raw["pos"] not in POS_CLASSES:
        raise CorpusError(f"{where}: pos {raw['pos']!r} not one of "
                          f"{sorted(POS_CLASSES)}")
    if raw["ner"] not in NER_CLASSES:
        raise CorpusError(f"{where}: ner {raw['ner']!r} not one of "
                          f"{sorted(NER_CLASSES)}")

    np_chunk = raw["np_chunk"]
    if np_chunk is not None:
        if isinstance(np_chunk, bool) or not isinstance(np_chunk, int) or np_chunk < 0:
            raise CorpusError(f"{where}: np_chunk must be null or a "
                              f"non-negative integer")
    dep_label = raw["dep_label"]
    if not isinstance(dep_label, str) or not dep_label:
        raise CorpusError(f"{where}: dep_label must be a non-empty string")
    dep_head = raw["dep_head"]
    if isinstance(dep_head, bool) or not isinstance(dep_head, int):
        raise CorpusError(f"{where}: dep_head must be an integer")
    if not isinstance(raw["stopword"], bool):
        raise CorpusError(f"{where}: stopword must be a boolean")

    scus = raw["scus"]
    if not isinstance(scus, list) or any(
            isinstance(s, bool) or not isinstance(s, int) or s < 0 for s in scus):
        raise CorpusError(f"{where}: scus must be a list of non-negative "
                          f"integers")

    embedding = None
    if "embedding" in raw:
        vec = raw["embedding"]
        if (not isinstance(vec, list) or not vec
                or any(isinstance(v, bool) or not isinstance(v, (int, float))
                       or not math.isfinite(v) for v in vec)):
            raise CorpusError(f"{where}: embedding must be a non-empty list "
                              f"of finite numbers")
        embedding = tuple(float(v) for v in vec)

    return AnnotatedToken(
        index=position, text=text, pos=raw["pos"], ner=raw["ner"],
        np_chunk=np_chunk, dep_label=dep_label, dep_head=dep_head,
        stopword=raw["stopword"], scus=frozenset(scus), embedding=embedding)


def _parse_summary(raw, where):
    if not isinstance(raw, dict) or set(raw) != {"tokens"}:
        raise CorpusError(f"{where}: summary must be an object with a "
                          f"single 'tokens' key")
    if not isinstance(raw["tokens"], list) or not raw["tokens"]:
        raise CorpusError(f"{where}: summary must contain at least one token")

    tokens = tuple(_parse_token(t, k, f"{where}: token {k}")
                   for k, t in enumerate(raw["tokens"]))
    n = len(tokens)
    for tok in tokens:
        where_tok = f"{where}: token {tok.index}"
        if tok.dep_head == tok.index:
            raise CorpusError(f"{where_tok}: dep_head must not point at the "
                              f"token itself")
        if tok.dep_head != -1 and not 0 <= tok.dep_head < n:
            raise CorpusError(f"{where_tok}: dep_head {tok.dep_head} out of "
                              f"range for a {n}-token summary")
        if (tok.dep_label == "root") != (tok.dep_head == -1):
            raise CorpusError(f"{where_tok}: dep_head -1 and dep_label "
                              f"'root' must coincide")
    return Summary(tokens)


def _parse_instance(raw, where):
    if not isinstance(raw, dict):
        raise CorpusError(f"{where}: instance must be an object")
    if set(raw) != {"instance_id", "references", "candidates"}:
        raise CorpusError(f"{where}: instance must have exactly the keys "
                          f"instance_id, references, candidates")
    iid = raw["instance_id"]
    if not isinstance(iid, str) or not iid:
        raise CorpusError(f"{where}: instance_id must be a non-empty string")
    where = f"{where}: instance {iid!r}"

    refs = raw["references"]
    if not isinstance(refs, list) or not refs:
        raise CorpusError(f"{where}: at least one reference is required")
    references = tuple(_parse_summary(r, f"{where}: reference {k}")
                       for k, r in enumerate(refs))

    cands = raw["candidates"]
    if not isinstance(cands, dict):
        raise CorpusError(f"{where}: candidates must be an object")
    candidates = {}
    for sys_id, summ in cands.items():
        if not isinstance(sys_id, str) or not sys_id:
            raise CorpusError(f"{where}: system ids must be non-empty strings")
        candidates[sys_id] = _parse_summary(summ, f"{where}: candidate {sys_id!r}")

    return Instance(instance_id=iid, references=references,
                    candidates=candidates)


def _check_embedding_consistency(instances):
    first_with = None
    first_without = None
    for inst in instances:
        sides = [(f"reference {k}", s) for k, s in enumerate(inst.references)]
        sides += [(f"candidate {s!r}", inst.candidates[s])
                  for s in inst.system_ids]
        for side_name, summary in sides:
            for tok in summary:
                where = (f"instance {inst.instance_id!r}: {side_name}: "
                         f"token {tok.index}")
                if tok.embedding is None:
                    first_without = first_without or where
                else:
                    if first_with and len(tok.embedding) != first_with[1]:
                        raise CorpusError(
                            f"{where}: embedding dimension "
                            f"{len(tok.embedding)} differs from "
                            f"{first_with[1]} at {first_with[0]}")
                    first_with = first_with or (where, len(tok.embedding))
    if first_with and first_without:
        raise CorpusError(f"mixed embeddings: {first_with[0]} has an "
                          f"embedding but {first_without} does not")


def corpus_has_embeddings(instances):
    return any(tok.embedding is not None
               for inst in instances
               for summary in (*inst.references, *inst.candidates.values())
               for tok in summary)


def load_corpus(path):
    """Parse and validate a corpus JSONL file into a list of Instances."""
    path = pathlib.Path(path)
    instances = []
    seen_ids = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            where = f"line {lineno}"
            try:
                raw = json.loads(line, object_pairs_hook=_reject_duplicate_keys)
            except CorpusError as exc:
                raise CorpusError(f"{where}: {exc}") from None
            except json.JSONDecodeError as exc:
                raise CorpusError(f"{where}: invalid JSON: {exc}") from None
            inst = _parse_instance(raw, where)
            if inst.instance_id in seen_ids:
                raise CorpusError(
                    f"{where}: duplicate instance_id {inst.instance_id!r} "
                    f"(first seen on line {seen_ids[inst.instance_id]})")
            seen_ids[inst.instance_id] = lineno
            instances.append(inst)
    _check_embedding_consistency(instances)
    return instances


def _token_payload(tok):
    payload = {
        "text": tok.text,
        "pos": tok.pos,
        "ner": tok.ner,
        "np_chunk": tok.np_chunk,
        "dep_label": tok.dep_label,
        "dep_head": tok.dep_head,
        "stopword": tok.stopword,
        "scus": sorted(tok.scus),
    }
    if tok.embedding is not None:
        payload["embedding"] = list(tok.embedding)
    return payload


def instance_payload(inst):
    return {
        "instance_id": inst.instance_id,
        "references": [{"tokens": [_token_payload(t) for t in r]}
                       for r in inst.references],
        "candidates": {s: {"tokens": [_token_payload(t) for t in summ]}
                       for s, summ in inst.candidates.items()},
    }


def write_corpus(instances, path):
    """Write canonical JSONL: sorted keys, compact separators.

    Canonical files round-trip byte-identically through load_corpus.
    """
    with open(path, "w", encoding="utf-8") as fh:
        for inst in instances:
            fh.write(json.dumps(instance_payload(inst), sort_keys=True,
                                separators=(",", ":")))
            fh.write("\n")


SCORE_CSV_HEADER = ["metric", "system_id", "instance_id", "score"]


def load_score_matrix(path):
    """Parse a score CSV (header metric,system_id,instance_id,score)."""
    path = pathlib.Path(path)
    entries = {}
    metric_name = None
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != SCORE_CSV_HEADER:
            raise ScoreMatrixError(
                f"{path.name}: expected header "
                f"{','.join(SCORE_CSV_HEADER)!r}, got {header!r}")
        for rownum, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != 4:
                raise ScoreMatrixError(f"{path.name}: row {rownum}: expected "
                                       f"4 fields, got {len(row)}")
            metric, system_id, instance_id, score_text = row
            if metric_name is None:
                metric_name = metric
            elif metric != metric_name:
                raise ScoreMatrixError(
                    f"{path.name}: row {rownum}: metric {metric!r} differs "
                    f"from {metric_name!r}; one metric per file")
            try:
                score = float(score_text)
            except ValueError:
                raise ScoreMatrixError(
                    f"{path.name}: row {rownum}: non-numeric score "
                    f"{score_text!r}") from None
            if not math.isfinite(score):
                raise ScoreMatrixError(
                    f"{path.name}: row {rownum}: non-finite score "
                    f"{score_text!r}")
            key = (system_id, instance_id)
            if key in entries:
                raise ScoreMatrixError(
                    f"{path.name}: row {rownum}: duplicate entry for "
                    f"system {system_id!r}, instance {instance_id!r}")
            entries[key] = score
    return ScoreMatrix(metric_name=metric_name or path.stem, entries=entries)


def render_score_csv(matrix):
    """Score CSV text: rows sorted by (system, instance), 6-decimal scores."""
    lines = [",".join(SCORE_CSV_HEADER)]
    for system_id, instance_id in sorted(matrix.entries):
        score = matrix.entries[(system_id, instance_id)]
        lines.append(f"{matrix.metric_name},{system_id},{instance_id},"
                     f"{score:.6f}")
    return "\n".join(lines) + "\n"


def write_score_matrix(matrix, path):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(render_score_csv(matrix))
