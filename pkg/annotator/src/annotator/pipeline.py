"""Raw text -> annotated corpus JSONL.

Raw input is one instance per line:
`{"instance_id": ..., "references": ["text", ...],
  "candidates": {"sys": "text", ...}}`.
SCU spans come from a separate JSONL keyed the same way, each summary
mapped to a list of [char_start, char_end, scu_id] half-open spans; a
token receives an SCU id iff its character span overlaps the SCU span.
"""

import json
from dataclasses import dataclass, field

from . import lexicon, tagging
from .tokenize import sentences, tokenize

TOOL_NAME = "align-eval-annotator"
TOOL_VERSION = "0.1.0"


class RawDataError(Exception):
    pass


@dataclass
class RawInstance:
    instance_id: str
    references: list[str]
    candidates: dict[str, str]
    reference_scus: list[list[tuple[int, int, int]]] = field(
        default_factory=list)
    candidate_scus: dict[str, list[tuple[int, int, int]]] = field(
        default_factory=dict)


def _parse_spans(raw, where):
    spans = []
    for span in raw:
        if (not isinstance(span, list) or len(span) != 3
                or not all(isinstance(v, int) for v in span)):
            raise RawDataError(f"{where}: span must be "
                               f"[char_start, char_end, scu_id]")
        start, end, scu_id = span
        if start < 0 or end <= start:
            raise RawDataError(f"{where}: bad span offsets [{start}, {end})")
        if scu_id < 0:
            raise RawDataError(f"{where}: scu_id must be non-negative")
        spans.append((start, end, scu_id))
    return spans


def load_raw(path):
    instances = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise RawDataError(f"line {lineno}: invalid JSON: {exc}") \
                    from None
            try:
                refs = list(obj["references"])
                cands = dict(obj["candidates"])
                instance = RawInstance(instance_id=obj["instance_id"],
                                       references=refs, candidates=cands)
            except (KeyError, TypeError) as exc:
                raise RawDataError(f"line {lineno}: {exc}") from None
            if not instance.references:
                raise RawDataError(f"line {lineno}: no references")
            if any(not t.strip() for t in refs) or \
                    any(not t.strip() for t in cands.values()):
                raise RawDataError(f"line {lineno}: empty summary text")
            instances.append(instance)
    return instances


def load_scus(path, instances):
    """Attach SCU spans from a sidecar JSONL to already-loaded instances."""
    by_id = {inst.instance_id: inst for inst in instances}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            obj = json.loads(line)
            where = f"scus line {lineno}"
            instance = by_id.get(obj.get("instance_id"))
            if instance is None:
                raise RawDataError(
                    f"{where}: unknown instance_id {obj.get('instance_id')!r}")
            instance.reference_scus = [
                _parse_spans(spans, f"{where}: reference {k}")
                for k, spans in enumerate(obj.get("references", []))]
            instance.candidate_scus = {
                sys_id: _parse_spans(spans, f"{where}: candidate {sys_id!r}")
                for sys_id, spans in obj.get("candidates", {}).items()}


def _token_scus(span, scu_spans):
    return sorted({scu_id for start, end, scu_id in scu_spans
                   if max(span.start, start) < min(span.end, end)})


def annotate_text(text, scu_spans=(), embedder=None):
    """Token dicts (engine schema) for one summary text."""
    for start, end, _ in scu_spans:
        if end > len(text):
            raise RawDataError(
                f"SCU span [{start}, {end}) outside text of length "
                f"{len(text)}")
    stopwords = _STOPWORDS
    spans = tokenize(text)
    if not spans:
        raise RawDataError("summary has no tokens")
    tokens = []
    chunk_base = 0
    offset = 0
    for sentence in sentences(spans):
        tags = tagging.pos_tags(sentence)
        ners = tagging.ner_tags(sentence, tags)
        chunk_ids, chunk_base = tagging.np_chunks(sentence, tags, chunk_base)
        deps = tagging.dependencies(sentence, tags, chunk_ids)
        vectors = (embedder.embed_sentence([s.text for s in sentence])
                   if embedder else [None] * len(sentence))
        for k, span in enumerate(sentence):
            head, label = deps[k]
            token = {
                "text": span.text,
                "pos": tags[k],
                "ner": ners[k],
                "np_chunk": chunk_ids[k],
                "dep_label": label,
                "dep_head": head if head == -1 else head + offset,
                "stopword": span.text.lower() in stopwords,
                "scus": _token_scus(span, scu_spans),
            }
            if vectors[k] is not None:
                token["embedding"] = vectors[k]
            tokens.append(token)
        offset += len(sentence)
    return tokens


def annotate(raw, embedder=None):
    """One raw instance -> engine-schema instance payload."""
    ref_spans = raw.reference_scus or [[] for _ in raw.references]
    if len(ref_spans) != len(raw.references):
        raise RawDataError(
            f"instance {raw.instance_id!r}: {len(ref_spans)} SCU span lists "
            f"for {len(raw.references)} references")
    references = [
        {"tokens": annotate_text(text, spans, embedder)}
        for text, spans in zip(raw.references, ref_spans)]
    candidates = {
        sys_id: {"tokens": annotate_text(
            text, raw.candidate_scus.get(sys_id, ()), embedder)}
        for sys_id, text in raw.candidates.items()}
    return {"instance_id": raw.instance_id,
            "references": references,
            "candidates": candidates}


def write_corpus(payloads, path):
    """Engine-canonical JSONL: sorted keys, compact separators."""
    with open(path, "w", encoding="utf-8") as fh:
        for payload in payloads:
            fh.write(json.dumps(payload, sort_keys=True,
                                separators=(",", ":")))
            fh.write("\n")


def metadata(embedder=None):
    """Tool/version info written to the sidecar `<out>.meta.json`."""
    info = {
        "tool": TOOL_NAME,
        "version": TOOL_VERSION,
        "pos_backend": "rules-v1",
        "ner_backend": "gazetteer-v1",
        "parser_backend": "heuristic-svo-v1",
        "stopword_list_version": lexicon.STOPWORD_LIST_VERSION,
    }
    if embedder is not None:
        info["embedding_backend"] = embedder.name
        if hasattr(embedder, "dim"):
            info["embedding_dim"] = embedder.dim
    return info


_STOPWORDS = lexicon.load_stopwords()
