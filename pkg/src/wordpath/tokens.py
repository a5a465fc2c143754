"""Text tokenization into normalized word streams.

A word is a maximal run of Unicode letters, digits, and hyphens, lowercased,
with leading/trailing hyphens stripped.  Everything else (including full
stops, apostrophes, and underscores) separates words and is discarded.  No
lemmatization or sentence handling.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from ._rng import SplitMix64

# Maximal runs of word characters or hyphens; \w minus underscore is the
# Unicode letter/digit class, underscores are split off afterwards.
_RUN_RE = re.compile(r"[\w\-]+")


@dataclass
class TokenStream:
    """Ordered token sequence with a first-appearance vocabulary.

    ``vocab`` maps each distinct token to a dense id assigned in order of
    first occurrence, so id ``0`` is the first word of the text.
    """

    tokens: list[str]
    vocab: dict[str, int] = field(init=False, repr=False)

    def __post_init__(self):
        vocab: dict[str, int] = {}
        for tok in self.tokens:
            if tok not in vocab:
                vocab[tok] = len(vocab)
        self.vocab = vocab

    def __len__(self) -> int:
        return len(self.tokens)

    @property
    def n_tokens(self) -> int:
        """Text length in words (tau)."""
        return len(self.tokens)

    @property
    def n_distinct(self) -> int:
        """Vocabulary size (number of distinct words)."""
        return len(self.vocab)

    def token_ids(self) -> list[int]:
        """Tokens as dense vocabulary ids, in text order."""
        vocab = self.vocab
        return [vocab[t] for t in self.tokens]


def tokenize(raw_text: str) -> TokenStream:
    """Split raw text into a normalized TokenStream.

    Empty input yields an empty stream.  Tokens that are empty after hyphen
    stripping (e.g. a bare ``-``) are dropped.
    """
    tokens: list[str] = []
    for run in _RUN_RE.findall(raw_text.lower()):
        for part in run.split("_"):
            word = part.strip("-")
            if word:
                tokens.append(word)
    return TokenStream(tokens)


def tokenize_file(path, max_tokens: int | None = None) -> TokenStream:
    """Tokenize a UTF-8 text file, optionally truncated to an opening piece."""
    with open(path, encoding="utf-8") as fh:
        ts = tokenize(fh.read())
    if max_tokens is not None and max_tokens < len(ts):
        return TokenStream(ts.tokens[:max_tokens])
    return ts


def shuffle_stream(ts: TokenStream, seed: int) -> TokenStream:
    """Uniformly random permutation of the stream (surrogate text).

    Word frequencies, vocabulary set, and length are preserved exactly;
    vocabulary ids are reassigned by first appearance in the new order.
    Deterministic for a given seed.
    """
    if not ts.tokens:
        raise ValueError("cannot shuffle an empty stream")
    shuffled = list(ts.tokens)
    SplitMix64(seed).shuffle(shuffled)
    return TokenStream(shuffled)


def split_pieces(ts: TokenStream, pieces: int) -> list[TokenStream]:
    """Split into contiguous near-equal pieces (lengths differ by at most 1).

    The first ``tau mod pieces`` pieces get the extra token.  Each piece is a
    standalone stream with its own first-appearance vocabulary.
    """
    tau = len(ts.tokens)
    if pieces < 1:
        raise ValueError("pieces must be >= 1")
    if pieces > tau:
        raise ValueError(f"cannot split {tau} tokens into {pieces} pieces")
    base, extra = divmod(tau, pieces)
    out = []
    start = 0
    for i in range(pieces):
        size = base + (1 if i < extra else 0)
        out.append(TokenStream(ts.tokens[start : start + size]))
        start += size
    return out


def write_tokens(ts: TokenStream, path) -> None:
    """One token per line."""
    with open(path, "w", encoding="utf-8") as fh:
        for tok in ts.tokens:
            fh.write(tok + "\n")


def write_vocab(vocab: dict[str, int], path) -> None:
    """Vocabulary as TSV rows of ``id<TAB>token``, ordered by id."""
    with open(path, "w", encoding="utf-8") as fh:
        for tok, idx in sorted(vocab.items(), key=lambda kv: kv[1]):
            fh.write(f"{idx}\t{tok}\n")
