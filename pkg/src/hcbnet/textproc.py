"""Tokenization, stop-word removal and vocabulary construction.

Descriptions and story sentences share one tokenizer and one vocabulary.
Stop words are only ever stripped from descriptions; story text keeps them.
"""

import json
import re
from collections import Counter
from importlib import resources

PAD, UNK, SOS, EOS = 0, 1, 2, 3
SPECIAL_TOKENS = ["<pad>", "<unk>", "<sos>", "<eos>"]

# Bracketed anonymization markers like "[male]" stay whole; words may carry
# internal apostrophes ("don't"); clitics ("'s") are one token; any other
# non-space symbol becomes a standalone token.
_TOKEN_RE = re.compile(r"\[[^\]\s]+\]|\w+(?:'\w+)*|'\w+|[^\w\s]")


def tokenize(text):
    """Lowercase `text` and split it into word / punctuation tokens."""
    return _TOKEN_RE.findall(text.lower())


def remove_stop_words(tokens, stoplist):
    """Order-preserving removal of tokens found in `stoplist`."""
    return [t for t in tokens if t not in stoplist]


def correct_misspellings(tokens, table=None):
    """Apply an optional token substitution table; no-op without one."""
    if not table:
        return list(tokens)
    return [table.get(t, t) for t in tokens]


def load_stop_words(path=None):
    """Read a stop-word list (one token per line); defaults to the built-in one."""
    if path is None:
        text = resources.files("hcbnet").joinpath("data/stopwords.txt").read_text("utf-8")
    else:
        with open(path, encoding="utf-8") as f:
            text = f.read()
    return {line.strip() for line in text.splitlines() if line.strip()}


class Vocabulary:
    """Token <-> id mapping with PAD/UNK/SOS/EOS at ids 0-3.

    Non-special tokens are ordered by descending corpus frequency, ties
    broken lexicographically, so construction is deterministic.
    """

    def __init__(self, tokens, min_count):
        if list(tokens[:4]) != SPECIAL_TOKENS:
            raise ValueError("vocabulary must start with %s" % SPECIAL_TOKENS)
        self.id_to_token = list(tokens)
        self.token_to_id = {t: i for i, t in enumerate(self.id_to_token)}
        if len(self.token_to_id) != len(self.id_to_token):
            raise ValueError("duplicate tokens in vocabulary")
        self.min_count = min_count

    def __len__(self):
        return len(self.id_to_token)

    def __contains__(self, token):
        return token in self.token_to_id

    def encode(self, tokens, add_boundaries=False):
        """Map tokens to ids, sending out-of-vocabulary tokens to UNK."""
        ids = [self.token_to_id.get(t, UNK) for t in tokens]
        if add_boundaries:
            ids = [SOS] + ids + [EOS]
        return ids

    def decode(self, ids, strip_boundaries=True):
        """Map ids back to tokens; PAD/SOS/EOS are dropped unless asked for."""
        toks = [self.id_to_token[i] for i in ids]
        if strip_boundaries:
            drop = {SPECIAL_TOKENS[PAD], SPECIAL_TOKENS[SOS], SPECIAL_TOKENS[EOS]}
            toks = [t for t in toks if t not in drop]
        return toks

    def save(self, path, manifest=None):
        payload = {"min_count": self.min_count, "tokens": self.id_to_token}
        if manifest is not None:
            payload["manifest"] = manifest
        with open(path, "w", encoding="utf-8") as f:
            json.dump(payload, f, ensure_ascii=False, sort_keys=True, separators=(",", ":"))

    @classmethod
    def load(cls, path):
        with open(path, encoding="utf-8") as f:
            payload = json.load(f)
        return cls(payload["tokens"], payload["min_count"])


def build_vocabulary(story_corpus, min_count):
    """Build a Vocabulary from tokenized story text.

    Keeps exactly the tokens occurring at least `min_count` times, after the
    four special symbols. An empty corpus yields a specials-only vocabulary.
    """
    if min_count < 1:
        raise ValueError("min_count must be >= 1")
    counts = Counter()
    for tokens in story_corpus:
        counts.update(tokens)
    kept = [
        t for t, c in counts.items()
        if c >= min_count and t not in SPECIAL_TOKENS
    ]
    kept.sort(key=lambda t: (-counts[t], t))
    return Vocabulary(SPECIAL_TOKENS + kept, min_count)
