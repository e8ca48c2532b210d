from annotator.tagging import dependencies, ner_tags, np_chunks, pos_tags
from annotator.tokenize import tokenize


def annotate_sentence(text):
    sentence = tokenize(text)
    tags = pos_tags(sentence)
    ners = ner_tags(sentence, tags)
    chunks, _ = np_chunks(sentence, tags)
    deps = dependencies(sentence, tags, chunks)
    return sentence, tags, ners, chunks, deps


def test_pos_rules():
    _, tags, _, _, _ = annotate_sentence(
        "The police quickly arrested three dangerous suspects in Paris.")
    assert tags == ["OTHER", "NN", "ADV", "VB", "NUM", "ADJ", "NN",
                    "OTHER", "NNP", "OTHER"]


def test_pos_sentence_initial_unknown_capitalized_is_nnp():
    _, tags, _, _, _ = annotate_sentence("Reese ran.")
    assert tags[0] == "NNP"
    # known common word keeps its class sentence-initially
    _, tags, _, _, _ = annotate_sentence("Police ran.")
    assert tags[0] == "NN"


def test_ner_classes():
    _, _, ners, _, _ = annotate_sentence("John Smith visited Paris.")
    assert ners[:2] == ["PER", "PER"]
    assert ners[2] == "NONE"
    assert ners[3] == "LOC"

    _, _, ners, _, _ = annotate_sentence("Acme Corp praised Interpol.")
    assert ners[0] == "ORG" and ners[1] == "ORG"
    assert ners[3] == "ORG"

    # dates are proper nouns but not PER/LOC/ORG
    _, tags, ners, _, _ = annotate_sentence("It happened on Tuesday.")
    assert tags[3] == "NNP"
    assert ners[3] == "NONE"


def test_np_chunks_cover_det_adj_noun_runs():
    sentence = tokenize("The young player scored three goals.")
    tags = pos_tags(sentence)
    chunks, next_id = np_chunks(sentence, tags)
    assert chunks == [0, 0, 0, None, 1, 1, None]
    assert next_id == 2


def test_dependencies_svo():
    _, _, _, _, deps = annotate_sentence("The police arrested Reese.")
    heads = [h for h, _ in deps]
    labels = [lab for _, lab in deps]
    assert labels == ["det", "nsubj", "root", "dobj", "punct"]
    assert heads == [1, 2, -1, 2, 2]


def test_dependencies_prepositional_attachment():
    _, _, _, _, deps = annotate_sentence("Reese ran in Paris.")
    labels = [lab for _, lab in deps]
    assert labels == ["nsubj", "root", "case", "nmod", "punct"]


def test_dependencies_conjoined_verb_sentence():
    _, tags, _, _, deps = annotate_sentence("Reese ran and sprinted.")
    assert tags[1] == tags[3] == "VB"
    assert deps[1] == (-1, "root")
    assert deps[0] == (1, "nsubj")
    assert deps[3] == (1, "conj")


def test_dependencies_verbless_sentence_roots_on_nominal():
    _, _, _, _, deps = annotate_sentence("A severe storm.")
    assert deps[2] == (-1, "root")
    assert all(h != k for k, (h, _) in enumerate(deps))


def test_dependencies_always_valid_tree():
    texts = [
        "Quickly!",
        "The storm.",
        "Reese and Kyle ran to Paris on Tuesday.",
        "Officials said the company lost 12% in March.",
        "And then?",
    ]
    for text in texts:
        sentence, tags, _, chunks, deps = (
            annotate_sentence(text))
        roots = [k for k, (h, lab) in enumerate(deps) if lab == "root"]
        assert len(roots) == 1
        for k, (head, label) in enumerate(deps):
            if label == "root":
                assert head == -1
            else:
                assert 0 <= head < len(sentence)
                assert head != k
