import collections

import pytest

from wordpath import TokenStream, shuffle_stream, split_pieces, tokenize
from wordpath.tokens import tokenize_file


def test_basic_lowercase_and_vocab():
    ts = tokenize("The cat. The cat")
    assert ts.tokens == ["the", "cat", "the", "cat"]
    assert ts.n_distinct == 2
    assert ts.n_tokens == 4
    assert ts.vocab == {"the": 0, "cat": 1}


def test_inner_hyphen_kept_case_folded():
    ts = tokenize("well-known, WELL-KNOWN!")
    assert ts.tokens == ["well-known", "well-known"]
    assert ts.n_distinct == 1


def test_apostrophe_splits_and_outer_hyphens_stripped():
    ts = tokenize("don't -stop-")
    assert ts.tokens == ["don", "t", "stop"]


def test_punctuation_and_digits():
    ts = tokenize('He said: "42 items... maybe 42!"')
    assert ts.tokens == ["he", "said", "42", "items", "maybe", "42"]


def test_underscore_is_separator():
    assert tokenize("foo_bar").tokens == ["foo", "bar"]


def test_unicode_words():
    ts = tokenize("Über die Brücke; СЛОВО слово; niño")
    assert ts.tokens == ["über", "die", "brücke", "слово", "слово", "niño"]
    assert ts.n_distinct == 5


def test_bare_hyphens_dropped():
    assert tokenize("a - -- b ---").tokens == ["a", "b"]


def test_empty_input():
    ts = tokenize("")
    assert ts.tokens == [] and ts.n_distinct == 0


def test_idempotence_roundtrip():
    ts = tokenize("One fish, two fish; red-fish 9 blue_fish!")
    again = tokenize(" ".join(ts.tokens))
    assert again.tokens == ts.tokens


def test_first_appearance_ids():
    ts = tokenize("b a b c a")
    assert ts.vocab == {"b": 0, "a": 1, "c": 2}
    assert ts.token_ids() == [0, 1, 0, 2, 1]


def test_shuffle_preserves_frequencies_exactly():
    ts = tokenize("a b a c a b d e a b " * 17)
    shuffled = shuffle_stream(ts, seed=5)
    assert collections.Counter(shuffled.tokens) == collections.Counter(ts.tokens)
    assert shuffled.n_tokens == ts.n_tokens
    assert shuffled.n_distinct == ts.n_distinct
    assert set(shuffled.vocab) == set(ts.vocab)


def test_shuffle_deterministic_and_seed_sensitive():
    ts = tokenize(" ".join(f"w{i}" for i in range(100)))
    a = shuffle_stream(ts, seed=1)
    b = shuffle_stream(ts, seed=1)
    c = shuffle_stream(ts, seed=2)
    assert a.tokens == b.tokens
    assert a.tokens != c.tokens


def test_shuffle_single_token_identity():
    ts = TokenStream(["only"])
    assert shuffle_stream(ts, seed=9).tokens == ["only"]


def test_shuffle_empty_rejected():
    with pytest.raises(ValueError):
        shuffle_stream(TokenStream([]), seed=0)


def test_split_even():
    ts = TokenStream([f"t{i}" for i in range(10)])
    parts = split_pieces(ts, 2)
    assert [len(p) for p in parts] == [5, 5]
    assert parts[0].tokens + parts[1].tokens == ts.tokens


def test_split_remainder_front_loaded():
    ts = TokenStream([f"t{i}" for i in range(7)])
    assert [len(p) for p in split_pieces(ts, 3)] == [3, 2, 2]


def test_split_identity():
    ts = TokenStream(["x", "y", "z"])
    (only,) = split_pieces(ts, 1)
    assert only.tokens == ts.tokens


def test_split_pieces_own_vocab():
    ts = TokenStream(["a", "b", "a", "b"])
    left, right = split_pieces(ts, 2)
    assert left.vocab == {"a": 0, "b": 1}
    assert right.vocab == {"a": 0, "b": 1}


def test_split_too_many_pieces():
    with pytest.raises(ValueError):
        split_pieces(TokenStream(["a", "b"]), 3)


def test_tokenize_file_with_limit(tmp_path):
    path = tmp_path / "text.txt"
    path.write_text("alpha beta gamma delta", encoding="utf-8")
    assert tokenize_file(path).tokens == ["alpha", "beta", "gamma", "delta"]
    assert tokenize_file(path, max_tokens=2).tokens == ["alpha", "beta"]
