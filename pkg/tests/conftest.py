import pathlib

import pytest

from align_eval.corpus import AnnotatedToken, Summary

DATA = pathlib.Path(__file__).parent / "data"


def build_summary(specs):
    """Summary from compact token specs.

    Each spec: (text, pos, dep_head, dep_label) plus optional keyword-style
    entries in a trailing dict: ner, chunk, stop, scus, emb.
    """
    tokens = []
    for index, spec in enumerate(specs):
        text, pos, head, label = spec[:4]
        extra = spec[4] if len(spec) > 4 else {}
        tokens.append(AnnotatedToken(
            index=index, text=text, pos=pos,
            ner=extra.get("ner", "NONE"),
            np_chunk=extra.get("chunk"),
            dep_label=label, dep_head=head,
            stopword=extra.get("stop", False),
            scus=frozenset(extra.get("scus", ())),
            embedding=tuple(extra["emb"]) if "emb" in extra else None,
        ))
    return Summary(tuple(tokens))


def words(texts, scus=None, embeddings=None):
    """Flat summary: token 0 is the root, the rest hang off it."""
    specs = []
    for k, text in enumerate(texts):
        extra = {}
        if scus is not None:
            extra["scus"] = scus[k]
        if embeddings is not None:
            extra["emb"] = embeddings[k]
        head, label = (-1, "root") if k == 0 else (0, "dep")
        specs.append((text, "OTHER", head, label, extra))
    return build_summary(specs)


@pytest.fixture(scope="session")
def e2e_corpus():
    from align_eval.corpus import load_corpus
    return load_corpus(DATA / "e2e_corpus.jsonl")


@pytest.fixture(scope="session")
def scu_scene_corpus():
    from align_eval.corpus import load_corpus
    return load_corpus(DATA / "scu_scene.jsonl")


@pytest.fixture(scope="session")
def category_scene_corpus():
    from align_eval.corpus import load_corpus
    return load_corpus(DATA / "category_scene.jsonl")


@pytest.fixture(scope="session")
def tuple_scene_corpus():
    from align_eval.corpus import load_corpus
    return load_corpus(DATA / "tuple_scene.jsonl")
