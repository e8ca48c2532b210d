import json

import pytest

from align_eval.corpus import (load_corpus, load_score_matrix, write_corpus,
                               write_score_matrix, ScoreMatrix)
from align_eval.errors import CorpusError, ScoreMatrixError

from conftest import DATA


def good_token(**overrides):
    token = {"text": "police", "pos": "NN", "ner": "NONE", "np_chunk": None,
             "dep_label": "root", "dep_head": -1, "stopword": False,
             "scus": []}
    token.update(overrides)
    return token


def good_line(instance_id="i1", **overrides):
    line = {
        "instance_id": instance_id,
        "references": [{"tokens": [good_token()]}],
        "candidates": {
            "sysA": {"tokens": [good_token(text="officers")]},
            "sysB": {"tokens": [good_token(text="cops")]},
        },
    }
    line.update(overrides)
    return line


def write_lines(tmp_path, lines, name="corpus.jsonl"):
    path = tmp_path / name
    with open(path, "w", encoding="utf-8") as fh:
        for line in lines:
            fh.write(line if isinstance(line, str) else json.dumps(line))
            fh.write("\n")
    return path


def test_single_line_roundtrip(tmp_path):
    path = write_lines(tmp_path, [good_line()])
    corpus = load_corpus(path)
    assert len(corpus) == 1
    inst = corpus[0]
    assert inst.instance_id == "i1"
    assert len(inst.references) == 1
    assert inst.system_ids == ["sysA", "sysB"]
    assert inst.candidates["sysA"][0].text == "officers"


def test_malformed_json_reports_line_number(tmp_path):
    path = write_lines(tmp_path, [good_line(), "{not json"])
    with pytest.raises(CorpusError, match="line 2"):
        load_corpus(path)


def test_dep_head_out_of_range_names_instance_and_token(tmp_path):
    bad = good_line()
    bad["candidates"]["sysA"]["tokens"] = [
        good_token(), good_token(text="x", dep_label="dep", dep_head=99)]
    path = write_lines(tmp_path, [bad])
    with pytest.raises(CorpusError) as err:
        load_corpus(path)
    message = str(err.value)
    assert "'i1'" in message and "token 1" in message and "99" in message


def test_dep_head_self_loop_rejected(tmp_path):
    bad = good_line()
    bad["references"][0]["tokens"] = [
        good_token(), good_token(text="x", dep_label="dep", dep_head=1)]
    path = write_lines(tmp_path, [bad])
    with pytest.raises(CorpusError, match="itself"):
        load_corpus(path)


@pytest.mark.parametrize("label,head", [("root", 0), ("nsubj", -1)])
def test_root_label_and_head_must_coincide(tmp_path, label, head):
    bad = good_line()
    bad["references"][0]["tokens"] = [
        good_token(), good_token(text="x", dep_label=label, dep_head=head)]
    path = write_lines(tmp_path, [bad])
    with pytest.raises(CorpusError, match="root"):
        load_corpus(path)


def test_mixed_embedding_presence_rejected(tmp_path):
    with_emb = good_line("iA")
    with_emb["references"][0]["tokens"] = [good_token(embedding=[0.1, 0.2])]
    with_emb["candidates"] = {
        "sysA": {"tokens": [good_token(embedding=[0.3, 0.4])]}}
    without = good_line("iB")
    path = write_lines(tmp_path, [with_emb, without])
    with pytest.raises(CorpusError, match="mixed embeddings"):
        load_corpus(path)


def test_embedding_dimension_mismatch_rejected(tmp_path):
    bad = good_line()
    bad["references"][0]["tokens"] = [good_token(embedding=[0.1, 0.2])]
    bad["candidates"] = {
        "sysA": {"tokens": [good_token(embedding=[0.3, 0.4, 0.5])]}}
    path = write_lines(tmp_path, [bad])
    with pytest.raises(CorpusError, match="dimension"):
        load_corpus(path)


def test_duplicate_system_id_rejected(tmp_path):
    summary = json.dumps({"tokens": [good_token()]})
    line = (f'{{"instance_id": "i1", "references": [{summary}], '
            f'"candidates": {{"sysA": {summary}, "sysA": {summary}}}}}')
    path = write_lines(tmp_path, [line])
    with pytest.raises(CorpusError, match="duplicate key 'sysA'"):
        load_corpus(path)


def test_duplicate_instance_id_rejected(tmp_path):
    path = write_lines(tmp_path, [good_line("dup"), good_line("dup")])
    with pytest.raises(CorpusError, match="duplicate instance_id"):
        load_corpus(path)


def test_unknown_and_missing_token_keys_rejected(tmp_path):
    extra = good_line()
    extra["references"][0]["tokens"][0]["lemma"] = "be"
    path = write_lines(tmp_path, [extra])
    with pytest.raises(CorpusError, match="unknown token keys"):
        load_corpus(path)

    missing = good_line()
    del missing["references"][0]["tokens"][0]["pos"]
    path = write_lines(tmp_path, [missing], name="c2.jsonl")
    with pytest.raises(CorpusError, match="missing token keys"):
        load_corpus(path)


@pytest.mark.parametrize("field,value,match", [
    ("pos", "VERB", "pos"),
    ("ner", "GPE", "ner"),
    ("np_chunk", -1, "np_chunk"),
    ("scus", [1, -2], "scus"),
    ("scus", "1,2", "scus"),
    ("stopword", "yes", "stopword"),
    ("text", "", "text"),
    ("embedding", [], "embedding"),
])
def test_field_validation(tmp_path, field, value, match):
    bad = good_line()
    bad["references"][0]["tokens"][0][field] = value
    path = write_lines(tmp_path, [bad])
    with pytest.raises(CorpusError, match=match):
        load_corpus(path)


def test_empty_summary_and_missing_reference_rejected(tmp_path):
    no_tokens = good_line()
    no_tokens["references"] = [{"tokens": []}]
    path = write_lines(tmp_path, [no_tokens])
    with pytest.raises(CorpusError, match="at least one token"):
        load_corpus(path)

    no_refs = good_line()
    no_refs["references"] = []
    path = write_lines(tmp_path, [no_refs], name="c2.jsonl")
    with pytest.raises(CorpusError, match="at least one reference"):
        load_corpus(path)


@pytest.mark.parametrize("fixture", ["scu_scene.jsonl", "category_scene.jsonl",
                                     "tuple_scene.jsonl", "e2e_corpus.jsonl"])
def test_serialization_roundtrip_byte_identical(tmp_path, fixture):
    source = DATA / fixture
    corpus = load_corpus(source)
    out = tmp_path / "rt.jsonl"
    write_corpus(corpus, out)
    assert out.read_bytes() == source.read_bytes()


def test_roundtrip_is_a_fixed_point(tmp_path):
    corpus = load_corpus(DATA / "e2e_corpus.jsonl")
    once = tmp_path / "once.jsonl"
    write_corpus(corpus, once)
    twice = tmp_path / "twice.jsonl"
    write_corpus(load_corpus(once), twice)
    assert once.read_bytes() == twice.read_bytes()


# --- score CSV ---------------------------------------------------------------

def write_csv(tmp_path, rows, header="metric,system_id,instance_id,score"):
    path = tmp_path / "scores.csv"
    path.write_text("\n".join([header] + rows) + "\n", encoding="utf-8")
    return path


def test_score_matrix_roundtrip(tmp_path):
    rows = [f"m,sys{s},d{i},0.{s}{i}" for s in (1, 2, 3) for i in (1, 2)]
    matrix = load_score_matrix(write_csv(tmp_path, rows))
    assert matrix.metric_name == "m"
    assert len(matrix.entries) == 6
    assert matrix.entries[("sys2", "d1")] == 0.21
    assert matrix.missing_pairs() == []

    out = tmp_path / "out.csv"
    write_score_matrix(matrix, out)
    again = load_score_matrix(out)
    assert again.entries == pytest.approx(matrix.entries)


def test_score_matrix_duplicate_row_rejected(tmp_path):
    path = write_csv(tmp_path, ["m,sysA,d0901,0.5", "m,sysA,d0901,0.6"])
    with pytest.raises(ScoreMatrixError, match="duplicate"):
        load_score_matrix(path)


def test_score_matrix_non_numeric_cell_reports_row(tmp_path):
    path = write_csv(tmp_path, ["m,sysA,d1,0.5", "m,sysB,d1,n/a"])
    with pytest.raises(ScoreMatrixError, match="row 3.*n/a"):
        load_score_matrix(path)


def test_score_matrix_header_and_metric_consistency(tmp_path):
    path = write_csv(tmp_path, ["m,sysA,d1,0.5"], header="metric,system,doc,score")
    with pytest.raises(ScoreMatrixError, match="header"):
        load_score_matrix(path)

    path = write_csv(tmp_path, ["m1,sysA,d1,0.5", "m2,sysB,d1,0.6"])
    with pytest.raises(ScoreMatrixError, match="one metric per file"):
        load_score_matrix(path)


def test_score_matrix_records_missing_cells(tmp_path):
    path = write_csv(tmp_path, ["m,sysA,d1,0.5", "m,sysA,d2,0.6",
                                "m,sysB,d1,0.7"])
    matrix = load_score_matrix(path)
    assert matrix.missing_pairs() == [("sysB", "d2")]


def test_score_matrix_rejects_non_finite(tmp_path):
    path = write_csv(tmp_path, ["m,sysA,d1,nan"])
    with pytest.raises(ScoreMatrixError, match="non-finite"):
        load_score_matrix(path)


def test_write_score_matrix_formats_6_decimals(tmp_path):
    matrix = ScoreMatrix("m", {("s", "d"): 1 / 3})
    out = tmp_path / "m.csv"
    write_score_matrix(matrix, out)
    assert out.read_text().splitlines()[1] == "m,s,d,0.333333"
