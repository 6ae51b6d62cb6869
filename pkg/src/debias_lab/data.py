"""Corpus ingestion (SNLI-style JSONL) and synthetic artifact-injected corpora.

The synthetic generator produces premise/hypothesis pairs whose label is
determined by the rewrite applied to the premise (paraphrase, antonym or
negation, unrelated detail).  A tunable fraction of contradiction and
neutral hypotheses additionally carry lexical cue words, which gives a
hypothesis-only classifier something to exploit.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Iterator, Mapping, Sequence

import numpy as np

from .text import tokenize

logger = logging.getLogger(__name__)

ENTAILMENT = 0
CONTRADICTION = 1
NEUTRAL = 2
LABEL_NAMES = ("entailment", "contradiction", "neutral")
LABEL_TO_ID = {name: i for i, name in enumerate(LABEL_NAMES)}

SPLITS = ("train", "validation", "test")

NEGATION_CUES = ("not", "nobody", "no", "never")
GENERIC_CUES = ("person", "something", "outside")
CUE_WORDS = NEGATION_CUES + GENERIC_CUES

# Label-independent rate at which cue-bearing sentence forms occur naturally
# (negated-antonym entailments, negated unrelated details).  Keeps cue
# occurrence independent of the label when artifact_strength is 0 and makes
# the cue an imperfect predictor otherwise.
NATURAL_CUE_RATE = 0.08


@dataclass(frozen=True)
class Example:
    """One premise/hypothesis pair with a gold label in {0, 1, 2}."""

    id: str
    premise: str
    hypothesis: str
    label: int

    def __post_init__(self) -> None:
        if self.label not in (ENTAILMENT, CONTRADICTION, NEUTRAL):
            raise ValueError(f"label must be 0, 1 or 2, got {self.label!r}")


@dataclass(frozen=True)
class Dataset:
    """Immutable ordered collection of examples for one split."""

    split: str
    examples: tuple[Example, ...]
    provenance: str = "synthetic"

    def __post_init__(self) -> None:
        if self.split not in SPLITS:
            raise ValueError(f"split must be one of {SPLITS}, got {self.split!r}")
        ids = [ex.id for ex in self.examples]
        if len(set(ids)) != len(ids):
            raise ValueError(f"duplicate example ids in {self.split} dataset")

    def __len__(self) -> int:
        return len(self.examples)

    def __iter__(self) -> Iterator[Example]:
        return iter(self.examples)


def load_snli_jsonl(path: str | Path, split: str) -> Dataset:
    """Load a JSONL corpus with `sentence1`/`sentence2`/`gold_label` fields.

    Records whose gold label is "-" (no annotator consensus) are skipped;
    the skip count is logged.  Any other unknown label is an error.
    """
    if split not in SPLITS:
        raise ValueError(f"split must be one of {SPLITS}, got {split!r}")
    path = Path(path)
    examples: list[Example] = []
    skipped = 0
    with path.open(encoding="utf-8") as fh:
        lineno = 0
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                raise ValueError(f"{path}: line {lineno}: empty line")
            try:
                record = json.loads(line)
            except json.JSONDecodeError as err:
                raise ValueError(f"{path}: line {lineno}: malformed JSON ({err.msg})") from err
            try:
                premise = record["sentence1"]
                hypothesis = record["sentence2"]
                gold = record["gold_label"]
            except KeyError as err:
                raise ValueError(f"{path}: line {lineno}: missing field {err.args[0]!r}") from err
            if gold == "-":
                skipped += 1
                continue
            if gold not in LABEL_TO_ID:
                raise ValueError(f"{path}: line {lineno}: unknown gold_label {gold!r}")
            if split == "train" and (not tokenize(premise) or not tokenize(hypothesis)):
                raise ValueError(f"{path}: line {lineno}: empty sentence after tokenization")
            examples.append(
                Example(
                    id=f"{split}-{lineno}",
                    premise=premise,
                    hypothesis=hypothesis,
                    label=LABEL_TO_ID[gold],
                )
            )
    if lineno == 0:
        raise ValueError(f"{path}: file is empty")
    logger.info("loaded %d examples from %s (%d skipped as no-consensus)", len(examples), path, skipped)
    return Dataset(split=split, examples=tuple(examples), provenance="snli-jsonl")


def save_jsonl(dataset: Dataset, path: str | Path) -> None:
    """Write a dataset in the same JSONL schema the loader reads."""
    path = Path(path)
    with path.open("w", encoding="utf-8") as fh:
        for ex in dataset.examples:
            fh.write(
                json.dumps(
                    {
                        "sentence1": ex.premise,
                        "sentence2": ex.hypothesis,
                        "gold_label": LABEL_NAMES[ex.label],
                    }
                )
                + "\n"
            )


# --------------------------------------------------------------------------
# Synthetic corpus generation
# --------------------------------------------------------------------------

def default_themes() -> dict[str, tuple]:
    """Default lexicon pools for the template generator.

    Verbs are (progressive, antonym-progressive) pairs so contradiction
    rewrites are a single slot swap.  None of the pool words overlap the
    cue lexicons, so cues enter sentences only through the labeled paths.
    """
    subjects = (
        "man", "woman", "boy", "girl", "dog", "cat", "doctor", "nurse",
        "teacher", "student", "chef", "waiter", "farmer", "painter",
        "singer", "dancer", "runner", "swimmer", "soldier", "pilot",
        "driver", "clown", "baker", "butcher", "lawyer", "judge",
        "plumber", "carpenter", "gardener", "fisherman", "hiker",
        "climber", "cyclist", "skier", "surfer", "golfer", "boxer",
        "wrestler", "actor", "magician", "violinist", "drummer",
        "guitarist", "poet", "writer", "scientist", "engineer",
        "astronaut", "detective", "barista",
    )
    verbs = (
        ("carrying", "dropping"), ("opening", "closing"),
        ("lifting", "lowering"), ("entering", "leaving"),
        ("pushing", "pulling"), ("buying", "selling"),
        ("building", "demolishing"), ("loading", "unloading"),
        ("tying", "untying"), ("locking", "unlocking"),
        ("filling", "emptying"), ("assembling", "dismantling"),
        ("attaching", "detaching"), ("wrapping", "unwrapping"),
        ("folding", "unfolding"), ("packing", "unpacking"),
        ("plugging", "unplugging"), ("mounting", "dismounting"),
        ("boarding", "exiting"), ("accepting", "rejecting"),
        ("gathering", "scattering"), ("hiding", "revealing"),
        ("tightening", "loosening"), ("sharpening", "dulling"),
        ("cleaning", "dirtying"), ("repairing", "breaking"),
    )
    objects = (
        "box", "ball", "book", "chair", "table", "door", "window",
        "bottle", "cup", "plate", "bag", "basket", "ladder", "rope",
        "wheel", "drum", "guitar", "violin", "hammer", "nail", "shovel",
        "bucket", "lamp", "candle", "mirror", "clock", "radio", "camera",
        "kite", "umbrella", "wagon", "sled", "canoe", "tent", "fence",
        "gate", "crate", "barrel", "jar", "vase", "rug", "blanket",
        "pillow", "helmet", "jacket", "boot", "glove", "scarf", "banner",
        "flag",
    )
    adjectives = (
        "tall", "short", "young", "old", "happy", "tired", "busy",
        "quiet", "tiny", "large", "heavy", "bright", "red", "blue",
        "green", "yellow",
    )
    places = (
        "park", "kitchen", "garden", "garage", "street", "market",
        "beach", "forest", "station", "library", "yard", "field",
    )
    return {
        "subjects": subjects,
        "verbs": verbs,
        "objects": objects,
        "adjectives": adjectives,
        "places": places,
    }


@dataclass(frozen=True)
class SynthConfig:
    """Configuration of the synthetic corpus generator."""

    n_train: int = 10000
    n_val: int = 2000
    n_test: int = 2000
    artifact_strength: float = 0.7
    vocab_themes: Mapping[str, tuple] = field(default_factory=default_themes)
    seed: int = 0

    def __post_init__(self) -> None:
        for name in ("n_train", "n_val", "n_test"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be > 0")
        if not 0.0 <= self.artifact_strength <= 1.0:
            raise ValueError(f"artifact_strength must be in [0, 1], got {self.artifact_strength}")
        for name in ("subjects", "verbs", "objects", "adjectives", "places"):
            pool = self.vocab_themes.get(name)
            if not pool:
                raise ValueError(f"empty lexicon pool: {name}")

    def to_json_dict(self) -> dict:
        return {
            "n_train": self.n_train,
            "n_val": self.n_val,
            "n_test": self.n_test,
            "artifact_strength": self.artifact_strength,
            "vocab_themes": {k: [list(v) if isinstance(v, tuple) else v for v in pool]
                             for k, pool in self.vocab_themes.items()},
            "seed": self.seed,
        }

    @staticmethod
    def from_json_dict(d: Mapping) -> "SynthConfig":
        themes = {
            k: tuple(tuple(v) if isinstance(v, list) else v for v in pool)
            for k, pool in d["vocab_themes"].items()
        }
        return SynthConfig(
            n_train=d["n_train"],
            n_val=d["n_val"],
            n_test=d["n_test"],
            artifact_strength=d["artifact_strength"],
            vocab_themes=themes,
            seed=d["seed"],
        )


def _other_index(rng: np.random.Generator, size: int, avoid: int) -> int:
    i = int(rng.integers(size - 1))
    return i + 1 if i >= avoid else i


def _make_example(rng: np.random.Generator, split: str, idx: int, cfg: SynthConfig) -> Example:
    themes = cfg.vocab_themes
    subjects = themes["subjects"]
    verbs = themes["verbs"]
    objects = themes["objects"]
    adjectives = themes["adjectives"]
    places = themes["places"]

    label = idx % 3
    subj = subjects[int(rng.integers(len(subjects)))]
    verb_i = int(rng.integers(len(verbs)))
    verb, antonym = verbs[verb_i]
    obj_i = int(rng.integers(len(objects)))
    obj = objects[obj_i]
    adj = adjectives[int(rng.integers(len(adjectives)))] if rng.random() < 0.5 else None
    place = places[int(rng.integers(len(places)))] if rng.random() < 0.4 else None

    subj_np = f"{adj} {subj}" if adj else subj
    premise = f"the {subj_np} is {verb} the {obj}"
    if place:
        premise += f" in the {place}"

    # Draw both coins up front so each example consumes a fixed number of draws.
    artifact = rng.random() < cfg.artifact_strength
    natural = rng.random() < NATURAL_CUE_RATE
    style = rng.random()

    if label == ENTAILMENT:
        if natural:
            hypothesis = f"the {subj} is not {antonym} the {obj}"
        elif style < 0.25:
            hypothesis = f"someone is {verb} the {obj}"
        else:
            hypothesis = f"the {subj} is {verb} the {obj}"
    elif label == CONTRADICTION:
        if artifact or natural:
            cue = NEGATION_CUES[int(rng.integers(len(NEGATION_CUES)))]
            if cue == "not":
                hypothesis = f"the {subj} is not {verb} the {obj}"
            elif cue == "nobody":
                hypothesis = f"nobody is {verb} the {obj}"
            elif cue == "no":
                hypothesis = f"no {subj} is {verb} the {obj}"
            else:
                hypothesis = f"the {subj} is never {verb} the {obj}"
        else:
            hypothesis = f"the {subj} is {antonym} the {obj}"
    else:  # NEUTRAL: an unrelated action, optionally with a generic cue.
        verb2 = verbs[_other_index(rng, len(verbs), verb_i)][0]
        obj2 = objects[_other_index(rng, len(objects), obj_i)]
        if artifact:
            cue = GENERIC_CUES[int(rng.integers(len(GENERIC_CUES)))]
            if cue == "person":
                hypothesis = f"a person is {verb2} the {obj2}"
            elif cue == "something":
                hypothesis = f"the {subj} is {verb2} something"
            else:
                hypothesis = f"the {subj} is {verb2} the {obj2} outside"
        elif natural:
            hypothesis = f"the {subj} is not {verb2} the {obj2}"
        else:
            hypothesis = f"the {subj} is {verb2} the {obj2}"

    return Example(id=f"{split}-{idx + 1}", premise=premise, hypothesis=hypothesis, label=label)


def generate_synthetic(cfg: SynthConfig) -> tuple[Dataset, Dataset, Dataset]:
    """Generate (train, validation, test) datasets, fully determined by the seed.

    Labels cycle entailment, contradiction, neutral, so class balance is
    exact up to one example per split.  With probability artifact_strength
    a contradiction hypothesis carries a negation cue and a neutral
    hypothesis a generic cue.
    """
    rng = np.random.default_rng(cfg.seed)
    datasets = []
    for split, count in (("train", cfg.n_train), ("validation", cfg.n_val), ("test", cfg.n_test)):
        examples = tuple(_make_example(rng, split, i, cfg) for i in range(count))
        datasets.append(Dataset(split=split, examples=examples, provenance="synthetic"))
    return datasets[0], datasets[1], datasets[2]


# --------------------------------------------------------------------------
# Summaries
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class DatasetStats:
    size: int
    label_counts: tuple[int, int, int]
    mean_premise_tokens: float
    mean_hypothesis_tokens: float
    negation_cue_rate: tuple[float, float, float]
    generic_cue_rate: tuple[float, float, float]


def dataset_stats(dataset: Dataset) -> DatasetStats:
    """Per-label counts, mean token lengths, and cue-word rates per label."""
    counts = [0, 0, 0]
    neg_hits = [0, 0, 0]
    gen_hits = [0, 0, 0]
    premise_tokens = 0
    hyp_tokens = 0
    neg_set = set(NEGATION_CUES)
    gen_set = set(GENERIC_CUES)
    for ex in dataset.examples:
        counts[ex.label] += 1
        premise_tokens += len(tokenize(ex.premise))
        hyp = set(tokenize(ex.hypothesis))
        hyp_tokens += len(tokenize(ex.hypothesis))
        if hyp & neg_set:
            neg_hits[ex.label] += 1
        if hyp & gen_set:
            gen_hits[ex.label] += 1
    n = len(dataset.examples)
    rate = lambda hits, total: hits / total if total else 0.0
    return DatasetStats(
        size=n,
        label_counts=tuple(counts),
        mean_premise_tokens=premise_tokens / n if n else 0.0,
        mean_hypothesis_tokens=hyp_tokens / n if n else 0.0,
        negation_cue_rate=tuple(rate(neg_hits[i], counts[i]) for i in range(3)),
        generic_cue_rate=tuple(rate(gen_hits[i], counts[i]) for i in range(3)),
    )
