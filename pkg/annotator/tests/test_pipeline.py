import json
import pathlib

import pytest

from annotator.embed import HashedEmbedder
from annotator.pipeline import (RawDataError, annotate, annotate_text,
                                load_raw, load_scus, metadata, write_corpus)

DATA = pathlib.Path(__file__).parent / "data"


def test_annotate_text_fields_and_stopwords():
    tokens = annotate_text("The police arrested Reese.")
    assert [t["text"] for t in tokens] == ["The", "police", "arrested",
                                           "Reese", "."]
    assert tokens[0]["stopword"] is True
    assert tokens[1]["stopword"] is False
    assert tokens[3]["ner"] == "PER"
    assert all(t["scus"] == [] for t in tokens)
    assert "embedding" not in tokens[0]


def test_scu_flattening_by_character_overlap():
    text = "The police arrested Reese."
    # span covers "police arrested" plus the first letter of "Reese"
    tokens = annotate_text(text, scu_spans=[(4, 21, 7)])
    assert [t["scus"] for t in tokens] == [[], [7], [7], [7], []]


def test_scu_span_must_lie_inside_text():
    with pytest.raises(RawDataError, match="outside text"):
        annotate_text("short.", scu_spans=[(0, 99, 1)])


def test_multi_sentence_offsets_and_roots():
    tokens = annotate_text("The suspect fled quickly. Police caught him.")
    roots = [t for t in tokens if t["dep_label"] == "root"]
    assert len(roots) == 2
    assert all(t["dep_head"] == -1 for t in roots)
    n = len(tokens)
    for k, t in enumerate(tokens):
        if t["dep_head"] != -1:
            assert 0 <= t["dep_head"] < n
            assert t["dep_head"] != k
    # second-sentence heads stay in the second sentence
    second = tokens[5:]
    for t in second:
        assert t["dep_head"] == -1 or t["dep_head"] >= 5


def test_hashed_embeddings_are_contextual_and_deterministic():
    embedder = HashedEmbedder(dim=8)
    first = annotate_text("police arrested police.", embedder=embedder)
    second = annotate_text("police arrested police.", embedder=embedder)
    assert first == second
    assert all(len(t["embedding"]) == 8 for t in first)
    # same word, different neighbors -> different vector
    assert first[0]["embedding"] != first[2]["embedding"]
    # unit up to the 6-decimal rounding applied to stored vectors
    norm = sum(v * v for v in first[0]["embedding"])
    assert norm == pytest.approx(1.0, abs=1e-5)


def test_load_raw_fixture_and_errors(tmp_path):
    instances = load_raw(DATA / "raw_fixture.jsonl")
    assert len(instances) == 10
    assert instances[0].instance_id == "r01"
    assert set(instances[0].candidates) == {"sysA", "sysB"}

    bad = tmp_path / "bad.jsonl"
    bad.write_text('{"instance_id": "x", "references": []}\n')
    with pytest.raises(RawDataError):
        load_raw(bad)

    bad.write_text('{"instance_id": "x", "references": ["ok"], '
                   '"candidates": {"s": "  "}}\n')
    with pytest.raises(RawDataError, match="empty summary"):
        load_raw(bad)


def test_load_scus_attaches_and_validates(tmp_path):
    instances = load_raw(DATA / "raw_fixture.jsonl")
    load_scus(DATA / "scus_fixture.jsonl", instances)
    r01 = instances[0]
    assert r01.reference_scus == [[(4, 25, 1), (29, 34, 2)]]
    assert r01.candidate_scus["sysA"] == [(4, 10, 1), (25, 33, 1),
                                          (15, 20, 3)]

    unknown = tmp_path / "scus.jsonl"
    unknown.write_text('{"instance_id": "nope", "references": [[]]}\n')
    with pytest.raises(RawDataError, match="unknown instance_id"):
        load_scus(unknown, instances)

    negative = tmp_path / "neg.jsonl"
    negative.write_text(
        '{"instance_id": "r01", "references": [[[0, 3, -1]]]}\n')
    with pytest.raises(RawDataError, match="non-negative"):
        load_scus(negative, instances)


def test_without_scu_file_all_sets_are_empty():
    instances = load_raw(DATA / "raw_fixture.jsonl")
    payload = annotate(instances[0])
    for side in payload["references"] + list(payload["candidates"].values()):
        assert all(t["scus"] == [] for t in side["tokens"])


def test_write_corpus_is_canonical(tmp_path):
    instances = load_raw(DATA / "raw_fixture.jsonl")
    payloads = [annotate(raw) for raw in instances[:2]]
    out = tmp_path / "corpus.jsonl"
    write_corpus(payloads, out)
    lines = out.read_text().splitlines()
    assert len(lines) == 2
    for line, payload in zip(lines, payloads):
        assert line == json.dumps(payload, sort_keys=True,
                                  separators=(",", ":"))


def test_metadata_records_backends():
    info = metadata(HashedEmbedder(dim=16))
    assert info["tool"] == "align-eval-annotator"
    assert info["embedding_backend"] == "hashed"
    assert info["embedding_dim"] == 16
    assert info["stopword_list_version"] == "1"
