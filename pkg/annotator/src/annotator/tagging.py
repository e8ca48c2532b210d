"""Deterministic rule-based linguistic annotation.

POS tags use the engine's six coarse classes plus OTHER; NER is limited to
PER/LOC/ORG (anything else, dates included, maps to NONE); NP chunks are
determiner + modifier + noun runs; the dependency layer is a heuristic
subject/verb/object attacher that always produces a valid tree per
sentence. No models, no downloads: curated lexicons plus suffix and casing
rules. Swap in a real tagger by replacing these functions; the pipeline
only depends on their signatures.
"""

import re

from . import lexicon

_NUMBER_RE = re.compile(r"^\d+(?:[.,]\d+)*%?$")
_ADJ_SUFFIXES = ("ous", "ful", "ive", "able", "ible", "ish", "less", "ary")
_CLOSED_CLASS = (lexicon.DETERMINERS | lexicon.PREPOSITIONS
                 | lexicon.CONJUNCTIONS | lexicon.PRONOUNS)


def tag_word(text, sentence_initial):
    lower = text.lower()
    if not any(ch.isalnum() for ch in text):
        return "OTHER"
    if _NUMBER_RE.match(text) or lower in lexicon.NUMBER_WORDS:
        return "NUM"
    if lower in _CLOSED_CLASS:
        return "OTHER"
    if lower in lexicon.AUXILIARIES:
        return "VB"
    if lower in lexicon.ADVERBS:
        return "ADV"
    if lower in lexicon.VERBS:
        return "VB"
    if lower in lexicon.ADJECTIVES:
        return "ADJ"
    if lower in lexicon.MONTHS_AND_DAYS:
        return "NNP"
    if lower in lexicon.NOUNS:
        return "NN"
    if text[0].isupper():
        # mid-sentence capitalization is decisive; sentence-initially an
        # unknown capitalized word is still most likely a name
        return "NNP"
    if lower.endswith("ly") and len(lower) > 3:
        return "ADV"
    if (lower.endswith("ed") or lower.endswith("ing")) and len(lower) > 4:
        return "VB"
    if lower.endswith(_ADJ_SUFFIXES):
        return "ADJ"
    return "NN"


def pos_tags(sentence):
    """Coarse tag per token span of one sentence."""
    return [tag_word(span.text, k == 0) for k, span in enumerate(sentence)]


def _entity_class(run_texts):
    lowers = [t.lower() for t in run_texts]
    if any(t in lexicon.ORGANIZATIONS for t in lowers) or \
            lowers[-1] in lexicon.ORG_SUFFIXES:
        return "ORG"
    if any(t in lexicon.PERSON_NAMES for t in lowers):
        return "PER"
    if any(t in lexicon.LOCATIONS for t in lowers):
        return "LOC"
    return "NONE"


def ner_tags(sentence, tags):
    """Entity class per token: NNP runs classified by gazetteer, else NONE."""
    out = ["NONE"] * len(sentence)
    k = 0
    while k < len(sentence):
        if tags[k] != "NNP":
            k += 1
            continue
        end = k
        while end + 1 < len(sentence) and tags[end + 1] == "NNP":
            end += 1
        run = [sentence[i].text for i in range(k, end + 1)]
        label = _entity_class(run)
        for i in range(k, end + 1):
            out[i] = label
        k = end + 1
    return out


_CHUNK_MODIFIERS = {"ADJ", "NUM"}
_CHUNK_NOMINALS = {"NN", "NNP"}


def np_chunks(sentence, tags, first_chunk_id=0):
    """Chunk id per token (None outside chunks), plus the next free id.

    A chunk is an optional determiner, then adjectives/numerals, then at
    least one noun.
    """
    ids = [None] * len(sentence)
    chunk_id = first_chunk_id
    k = 0
    while k < len(sentence):
        start = k
        if sentence[k].text.lower() in lexicon.DETERMINERS:
            k += 1
        while k < len(sentence) and tags[k] in _CHUNK_MODIFIERS:
            k += 1
        nominal_start = k
        while k < len(sentence) and tags[k] in _CHUNK_NOMINALS:
            k += 1
        if k > nominal_start:
            for i in range(start, k):
                ids[i] = chunk_id
            chunk_id += 1
        else:
            k = start + 1
    return ids, chunk_id


def _chunk_groups(chunk_ids):
    groups = {}
    for k, cid in enumerate(chunk_ids):
        if cid is not None:
            groups.setdefault(cid, []).append(k)
    return [sorted(v) for _, v in sorted(groups.items())]


def dependencies(sentence, tags, chunk_ids):
    """(head, label) per token; heads are sentence-local, root head is -1.

    First verb is the root (first nominal, else token 0, when verbless);
    chunk heads become nsubj of the next verb, dobj of the previous verb,
    or nmod when introduced by a preposition; chunk modifiers attach to
    their chunk head; adverbs to the nearest verb.
    """
    n = len(sentence)
    verbs = [k for k in range(n) if tags[k] == "VB"]
    if verbs:
        root = verbs[0]
    else:
        nominals = [k for k in range(n) if tags[k] in _CHUNK_NOMINALS]
        root = nominals[0] if nominals else 0
    heads = [root] * n
    labels = ["dep"] * n
    heads[root], labels[root] = -1, "root"

    for v in verbs[1:]:
        heads[v], labels[v] = root, "conj"

    def prev_verb(k):
        before = [v for v in verbs if v < k]
        return before[-1] if before else None

    def next_verb(k):
        after = [v for v in verbs if v > k]
        return after[0] if after else None

    chunks = _chunk_groups(chunk_ids)
    chunk_heads = set()
    for members in chunks:
        head = max(m for m in members
                   if tags[m] in _CHUNK_NOMINALS)
        chunk_heads.add(head)
        for m in members:
            if m == head:
                continue
            word = sentence[m].text.lower()
            if word in lexicon.DETERMINERS:
                heads[m], labels[m] = head, "det"
            elif tags[m] == "NUM":
                heads[m], labels[m] = head, "nummod"
            elif tags[m] == "ADJ":
                heads[m], labels[m] = head, "amod"
            else:
                heads[m], labels[m] = head, "compound"
        if head == root:
            continue
        first = members[0]
        preceded_by_prep = (first > 0 and
                            sentence[first - 1].text.lower()
                            in lexicon.PREPOSITIONS)
        attach_before = prev_verb(head)
        attach_after = next_verb(head)
        if preceded_by_prep:
            heads[head] = attach_before if attach_before is not None else root
            labels[head] = "nmod"
        elif attach_after is not None:
            heads[head], labels[head] = attach_after, "nsubj"
        elif attach_before is not None:
            heads[head], labels[head] = attach_before, "dobj"
        else:
            heads[head], labels[head] = root, "dep"

    for k in range(n):
        if k == root or tags[k] == "VB" or chunk_ids[k] is not None:
            continue
        word = sentence[k].text.lower()
        if tags[k] == "ADV":
            anchor = prev_verb(k)
            anchor = anchor if anchor is not None else next_verb(k)
            heads[k] = anchor if anchor is not None else root
            labels[k] = "advmod"
        elif word in lexicon.PREPOSITIONS:
            following = next((h for h in sorted(chunk_heads) if h > k), None)
            heads[k] = following if following is not None else root
            labels[k] = "case"
        elif word in lexicon.CONJUNCTIONS:
            anchor = next_verb(k)
            if anchor is None:
                anchor = next((h for h in sorted(chunk_heads) if h > k), None)
            heads[k] = anchor if anchor is not None else root
            labels[k] = "cc"
        elif tags[k] == "OTHER" and not any(c.isalnum() for c in sentence[k].text):
            heads[k], labels[k] = root, "punct"
        elif tags[k] == "NUM":
            before = prev_verb(k)
            if k > 0 and sentence[k - 1].text.lower() in lexicon.PREPOSITIONS:
                heads[k] = before if before is not None else root
                labels[k] = "nmod"
            else:
                heads[k], labels[k] = root, "dep"
        # anything else keeps the (root, "dep") default

    return list(zip(heads, labels))
