"""Lexical and phonetic word expansion.

Two signals: the longest contiguous substring shared with the seed
(one shared CJK character is already a strong link), and shared
phonetic syllables (homophony).  Both operate on Unicode scalar
values, never bytes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import OutOfLexiconError
from .lexicon import PhoneticLexicon


@dataclass(frozen=True)
class LexicalMatch:
    word: str
    shared: str
    shared_len: int


def longest_common_substring(a: str, b: str) -> tuple[str, int]:
    """A longest contiguous common substring of ``a`` and ``b``.

    Among equal-length candidates the one starting earliest in ``a``
    (then in ``b``) wins, which keeps results deterministic.  Classic
    O(len(a)*len(b)) dynamic programming over common-suffix lengths.
    """
    if not a or not b:
        return "", 0
    la, lb = len(a), len(b)
    prev = [0] * (lb + 1)
    best_len = 0
    best_end = 0  # end index in a, exclusive
    for i in range(1, la + 1):
        cur = [0] * (lb + 1)
        ca = a[i - 1]
        for j in range(1, lb + 1):
            if ca == b[j - 1]:
                length = prev[j - 1] + 1
                cur[j] = length
                # strict > keeps the earliest ending, hence earliest start
                if length > best_len:
                    best_len = length
                    best_end = i
        prev = cur
    return a[best_end - best_len : best_end], best_len


def lexical_candidates(
    vocab: Iterable[str], seed: str, min_shared: int = 1, k: int = 7
) -> list[LexicalMatch]:
    """Vocabulary words sharing a substring of >= min_shared characters with seed.

    Sorted by shared length descending, then code-point order.  The seed
    itself is never returned.
    """
    matches: list[LexicalMatch] = []
    for word in vocab:
        if word == seed:
            continue
        shared, length = longest_common_substring(seed, word)
        if length >= min_shared:
            matches.append(LexicalMatch(word, shared, length))
    matches.sort(key=lambda m: (-m.shared_len, m.word))
    return matches[:k]


def homophone_candidates(
    lexicon: PhoneticLexicon, seed: str, tone_sensitive: bool = False, k: int = 7
) -> list[tuple[str, str]]:
    """Lexicon words sharing at least one syllable with the seed.

    Returns (word, shared syllable) pairs sorted by the number of shared
    syllables descending, then code-point order.  The reported syllable
    is the first shared one in the seed's own syllable order.
    """
    if seed not in lexicon:
        raise OutOfLexiconError(seed)
    seed_sylls = lexicon.syllables(seed)
    seed_keys = lexicon.syllable_keys(seed, tone_sensitive)

    counts: dict[str, int] = {}
    for syll in seed_sylls:
        for word in lexicon.words_with_syllable(syll, tone_sensitive):
            if word == seed:
                continue
            if word not in counts:
                counts[word] = len(seed_keys & lexicon.syllable_keys(word, tone_sensitive))

    def first_shared(word: str) -> str:
        word_keys = lexicon.syllable_keys(word, tone_sensitive)
        for syll in seed_sylls:
            if syll.key(tone_sensitive) in word_keys:
                return syll.formatted(tone_sensitive)
        raise AssertionError("indexed word shares no syllable")  # pragma: no cover

    ordered = sorted(counts, key=lambda w: (-counts[w], w))
    return [(w, first_shared(w)) for w in ordered[:k]]


def shares_any_syllable(
    lexicon: PhoneticLexicon, a: str, b: str, tone_sensitive: bool = False
) -> bool:
    """True when the two words share a syllable; words without entries share none."""
    if a not in lexicon or b not in lexicon:
        return False
    return bool(lexicon.syllable_keys(a, tone_sensitive) & lexicon.syllable_keys(b, tone_sensitive))
