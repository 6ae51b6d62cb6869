"""Deterministic whitespace tokenization and integer vocabularies.

All models share one tokenizer so that lexical cues (negation words,
generic nouns) survive preprocessing intact.
"""

from __future__ import annotations

import hashlib
import string
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import TYPE_CHECKING, Iterable, Sequence

if TYPE_CHECKING:
    from .data import Dataset

PAD_ID = 0
UNK_ID = 1
PAD_TOKEN = "<pad>"
UNK_TOKEN = "<unk>"
NUM_SPECIALS = 2


def tokenize(text: str) -> list[str]:
    """Lowercase, split on whitespace, strip ASCII edge punctuation, drop empties."""
    tokens = []
    for raw in text.lower().split():
        tok = raw.strip(string.punctuation)
        if tok:
            tokens.append(tok)
    return tokens


@dataclass(frozen=True)
class Vocabulary:
    """Immutable token <-> id mapping with PAD=0 and UNK=1 reserved."""

    token_to_id: dict[str, int]
    id_to_token: tuple[str, ...]
    min_count: int = 1

    def __len__(self) -> int:
        return len(self.id_to_token)

    def encode(self, tokens: Iterable[str]) -> list[int]:
        """Map tokens to ids; out-of-vocabulary tokens become UNK."""
        return [self.token_to_id.get(tok, UNK_ID) for tok in tokens]

    def decode(self, ids: Iterable[int]) -> list[str]:
        return [self.id_to_token[i] for i in ids]


def build_vocab(dataset: "Dataset", min_count: int = 1) -> Vocabulary:
    """Build a vocabulary from the premises and hypotheses of a dataset.

    Tokens with corpus frequency >= min_count are kept, ordered by
    descending frequency with lexicographic tie-breaking, so the id
    assignment is a pure function of the corpus.
    """
    if min_count < 1:
        raise ValueError(f"min_count must be >= 1, got {min_count}")
    if len(dataset.examples) == 0:
        raise ValueError("cannot build a vocabulary from an empty dataset")
    counts: Counter[str] = Counter()
    for ex in dataset.examples:
        counts.update(tokenize(ex.premise))
        counts.update(tokenize(ex.hypothesis))
    kept = sorted(
        (tok for tok, n in counts.items() if n >= min_count),
        key=lambda tok: (-counts[tok], tok),
    )
    id_to_token = (PAD_TOKEN, UNK_TOKEN) + tuple(kept)
    token_to_id = {tok: i + NUM_SPECIALS for i, tok in enumerate(kept)}
    return Vocabulary(token_to_id=token_to_id, id_to_token=id_to_token, min_count=min_count)


def serialize_vocab(vocab: Vocabulary) -> str:
    """One token per line; line number (0-based) = id - 2."""
    return "".join(tok + "\n" for tok in vocab.id_to_token[NUM_SPECIALS:])


def save_vocab(vocab: Vocabulary, path: str | Path) -> None:
    Path(path).write_text(serialize_vocab(vocab), encoding="utf-8")


def load_vocab(path: str | Path, min_count: int = 1) -> Vocabulary:
    text = Path(path).read_text(encoding="utf-8")
    kept = tuple(line for line in text.splitlines())
    id_to_token = (PAD_TOKEN, UNK_TOKEN) + kept
    token_to_id = {tok: i + NUM_SPECIALS for i, tok in enumerate(kept)}
    return Vocabulary(token_to_id=token_to_id, id_to_token=id_to_token, min_count=min_count)


def vocab_sha256(vocab: Vocabulary) -> str:
    return hashlib.sha256(serialize_vocab(vocab).encode("utf-8")).hexdigest()


def encode_texts(texts: Sequence[str], vocab: Vocabulary) -> list[list[int]]:
    return [vocab.encode(tokenize(t)) for t in texts]
