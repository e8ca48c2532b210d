"""Per-token embedding backends.

The default "hashed" backend is offline and deterministic: a word vector
derived from a sha256 digest, mixed with its neighbors so that the same
word in different contexts gets (slightly) different vectors. The
"transformers" backend produces real contextual vectors (final hidden
layer, sub-token vectors mean-pooled per word) from a *local* model
directory; it needs torch + transformers installed and never downloads.
"""

import hashlib
import math


class AnnotationBackendError(Exception):
    pass


def _hash_floats(key, dim):
    out = []
    block = 0
    while len(out) < dim:
        digest = hashlib.sha256(f"{key}#{block}".encode("utf-8")).digest()
        out.extend(int.from_bytes(digest[i:i + 4], "big") / 2 ** 32
                   for i in range(0, 32, 4))
        block += 1
    return out[:dim]


def _unit(vec):
    norm = math.sqrt(sum(v * v for v in vec))
    return [v / norm for v in vec]


class HashedEmbedder:
    """sha256 word vectors with +-1-neighbor context mixing."""

    name = "hashed"

    def __init__(self, dim=32, context_weight=0.25):
        if dim < 1:
            raise ValueError("dim must be positive")
        self.dim = dim
        self.context_weight = context_weight

    def _word_vec(self, word):
        return [2 * v - 1 for v in _hash_floats(word.lower(), self.dim)]

    def embed_sentence(self, words):
        bases = [self._word_vec(w) for w in words]
        out = []
        for k, base in enumerate(bases):
            mixed = list(base)
            for neighbor in (k - 1, k + 1):
                if 0 <= neighbor < len(bases):
                    for d in range(self.dim):
                        mixed[d] += self.context_weight * bases[neighbor][d]
            out.append([round(v, 6) for v in _unit(mixed)])
        return out


class TransformersEmbedder:
    """Final-layer contextual vectors from a local HF-format model."""

    name = "transformers"

    def __init__(self, model_path):
        try:
            import torch  # noqa: F401
            from transformers import AutoModel, AutoTokenizer
        except ImportError as exc:
            raise AnnotationBackendError(
                f"transformers backend unavailable: {exc}") from exc
        try:
            self.tokenizer = AutoTokenizer.from_pretrained(
                model_path, local_files_only=True)
            self.model = AutoModel.from_pretrained(
                model_path, local_files_only=True)
        except Exception as exc:
            raise AnnotationBackendError(
                f"cannot load model from {model_path}: {exc}") from exc
        self.model.eval()

    def embed_sentence(self, words):
        import torch

        encoded = self.tokenizer(words, is_split_into_words=True,
                                 return_tensors="pt", truncation=True)
        with torch.no_grad():
            hidden = self.model(**encoded).last_hidden_state[0]
        word_ids = encoded.word_ids(0)
        pools = [[] for _ in words]
        for position, word_id in enumerate(word_ids):
            if word_id is not None:
                pools[word_id].append(hidden[position])
        out = []
        for k, vectors in enumerate(pools):
            if not vectors:
                raise AnnotationBackendError(
                    f"tokenizer dropped word {k} ({words[k]!r})")
            pooled = torch.stack(vectors).mean(dim=0)
            out.append([round(float(v), 6) for v in pooled])
        return out


def make_embedder(backend, dim, model_path=None):
    if backend == "hashed":
        return HashedEmbedder(dim=dim)
    if backend == "transformers":
        if not model_path:
            raise AnnotationBackendError(
                "the transformers backend needs --model with a local "
                "model directory")
        return TransformersEmbedder(model_path)
    raise AnnotationBackendError(f"unknown embedding backend {backend!r}")
