"""Side lexicons: phonetic syllables, part-of-speech tags, topical domains.

All three are TSV files.  Tone handling is a query-time mode: matching on
the syllable base alone (tone-insensitive, the default, as puns usually
are) or on base plus tone digit.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path

from .errors import FormatError

logger = logging.getLogger(__name__)

# Returned for words absent from a tag file; never a valid tag.
UNTAGGED = "untagged"


@dataclass(frozen=True)
class Syllable:
    base: str
    tone: int  # 0 = untoned

    def formatted(self, tone_sensitive: bool) -> str:
        if tone_sensitive and self.tone:
            return f"{self.base}{self.tone}"
        return self.base

    def key(self, tone_sensitive: bool) -> "str | tuple[str, int]":
        return (self.base, self.tone) if tone_sensitive else self.base


def parse_syllable(token: str) -> Syllable:
    """'shu4' -> Syllable('shu', 4); a missing trailing digit means tone 0."""
    if token and token[-1].isdigit():
        base, tone = token[:-1], int(token[-1])
    else:
        base, tone = token, 0
    if not base:
        raise ValueError(f"syllable {token!r} has an empty base")
    if tone > 5:
        raise ValueError(f"syllable {token!r} has tone outside 0-5")
    return Syllable(base, tone)


class PhoneticLexicon:
    """word -> syllables, plus reverse indexes for homophone lookup."""

    def __init__(self, entries: dict[str, list[Syllable]]):
        for word, sylls in entries.items():
            if not sylls:
                raise ValueError(f"word {word!r} has no syllables")
        self.entries = dict(entries)
        self._by_base: dict[str, list[str]] = {}
        self._by_syllable: dict[tuple[str, int], list[str]] = {}
        for word, sylls in self.entries.items():
            for key in {s.base for s in sylls}:
                self._by_base.setdefault(key, []).append(word)
            for full in {(s.base, s.tone) for s in sylls}:
                self._by_syllable.setdefault(full, []).append(word)

    def __contains__(self, word: str) -> bool:
        return word in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def syllables(self, word: str) -> list[Syllable]:
        return self.entries.get(word, [])

    def syllable_keys(self, word: str, tone_sensitive: bool) -> set:
        return {s.key(tone_sensitive) for s in self.entries.get(word, [])}

    def words_with_syllable(self, syllable: Syllable, tone_sensitive: bool) -> list[str]:
        if tone_sensitive:
            return list(self._by_syllable.get((syllable.base, syllable.tone), []))
        return list(self._by_base.get(syllable.base, []))


def load_phonetic_lexicon(path: str | Path) -> PhoneticLexicon:
    """Load ``word<TAB>syll1 syll2 ...`` lines.

    Duplicate words follow the last-wins rule with a warning, matching
    the tag lexicons.
    """
    entries: dict[str, list[Syllable]] = {}
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        if not line.strip():
            continue
        if "\t" not in line:
            raise FormatError("expected 'word<TAB>syllables'", line_number=lineno)
        word, _, rest = line.partition("\t")
        tokens = rest.split()
        if not word or not tokens:
            raise FormatError("empty word or syllable list", line_number=lineno)
        try:
            sylls = [parse_syllable(t) for t in tokens]
        except ValueError as exc:
            raise FormatError(str(exc), line_number=lineno) from None
        if word in entries:
            logger.warning("duplicate phonetic entry for %r: last line wins", word)
        entries[word] = sylls
    return PhoneticLexicon(entries)


class TagLexicon:
    """Part-of-speech and topical-domain tags; unknown words are UNTAGGED."""

    def __init__(self, pos: dict[str, str], domain: dict[str, str]):
        self._pos = dict(pos)
        self._domain = dict(domain)

    def pos_of(self, word: str) -> str:
        return self._pos.get(word, UNTAGGED)

    def domain_of(self, word: str) -> str:
        return self._domain.get(word, UNTAGGED)

    def has_pos(self, word: str) -> bool:
        return word in self._pos

    def has_domain(self, word: str) -> bool:
        return word in self._domain


def _load_tag_file(path: str | Path, kind: str) -> dict[str, str]:
    tags: dict[str, str] = {}
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        if not line.strip():
            continue
        if "\t" not in line:
            raise FormatError(f"expected 'word<TAB>{kind}'", line_number=lineno)
        word, _, tag = line.partition("\t")
        tag = tag.strip()
        if not word or not tag:
            raise FormatError(f"empty word or {kind} tag", line_number=lineno)
        if word in tags and tags[word] != tag:
            logger.warning(
                "conflicting %s tags for %r (%s vs %s): last line wins",
                kind, word, tags[word], tag,
            )
        tags[word] = tag
    return tags


def load_tag_lexicon(pos_path: str | Path, domain_path: str | Path) -> TagLexicon:
    """Load POS and domain tag files; a word may appear in one, both, or neither."""
    return TagLexicon(
        pos=_load_tag_file(pos_path, "pos"),
        domain=_load_tag_file(domain_path, "domain"),
    )
