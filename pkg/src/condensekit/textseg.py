"""Sentence segmentation, word tokenization, syllable estimation, token statistics.

Everything downstream (overlap scores, coverage histograms, IDF, readability)
consumes text through these functions, so they are deliberately rule-based and
deterministic: no models, no third-party tokenizers, just two editable word
lists (abbreviations and familiar words) shipped as package assets.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Iterable, Sequence

__all__ = [
    "SentenceSpan",
    "TokenStats",
    "split_sentences",
    "tokenize_words",
    "count_syllables",
    "compute_token_stats",
    "load_word_list",
    "default_abbreviations",
    "default_familiar_words",
]

_TERMINALS = ".!?"
# closing quotes/brackets that may trail a terminal and still belong to the sentence
_CLOSERS = "\"')]”’»"
# opening quotes/brackets that may precede the capital starting the next sentence
_OPENERS = "\"'([“‘«"

# maximal runs of letters/digits, apostrophes kept word-internally ("don't")
_TOKEN_RE = re.compile(r"[^\W_]+(?:'[^\W_]+)*", re.UNICODE)

_WORD_BEFORE_DOT_RE = re.compile(r"[A-Za-z][A-Za-z.]*$")


@dataclass(frozen=True)
class SentenceSpan:
    """One sentence: ordinal index plus character offsets into the source text."""

    index: int
    start_char: int
    end_char: int  # exclusive
    text: str


@dataclass(frozen=True)
class TokenStats:
    sentence_count: int
    word_count: int
    syllable_count: int
    monosyllable_count: int
    polysyllable_count: int  # words with >= 3 syllables
    complex_word_count: int  # polysyllabic minus proper nouns and suffix inflations
    difficult_word_count: int  # words absent from the familiar list
    character_count: int  # characters inside word tokens


def load_word_list(path) -> frozenset[str]:
    """Read a one-word-per-line UTF-8 list; blank lines and # comments ignored."""
    words = set()
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            word = line.strip().lower()
            if word and not word.startswith("#"):
                words.add(word)
    return frozenset(words)


@lru_cache(maxsize=1)
def default_abbreviations() -> frozenset[str]:
    return _load_asset("abbreviations.txt")


@lru_cache(maxsize=1)
def default_familiar_words() -> frozenset[str]:
    return _load_asset("familiar_words.txt")


def _load_asset(name: str) -> frozenset[str]:
    data = resources.files("condensekit.assets").joinpath(name).read_text("utf-8")
    return frozenset(
        w.strip().lower() for w in data.splitlines() if w.strip() and not w.startswith("#")
    )


def split_sentences(text: str, abbreviations: Iterable[str] | None = None) -> list[SentenceSpan]:
    """Split text into sentence spans.

    A boundary is a run of ``. ! ?`` (plus any trailing closing quotes) followed
    by whitespace and a capital letter. Periods after known abbreviations or a
    single initial do not split, and a period between two digits never does.
    Spans are ordered, non-overlapping, and jointly cover every non-whitespace
    character.
    """
    if not text or text.isspace():
        return []
    if abbreviations is None:
        abbrev = default_abbreviations()
    else:
        abbrev = frozenset(a.lower().rstrip(".") for a in abbreviations)

    n = len(text)
    cuts: list[int] = []
    i = 0
    while i < n:
        if text[i] not in _TERMINALS:
            i += 1
            continue
        run_start = i
        run_end = i
        while run_end + 1 < n and text[run_end + 1] in _TERMINALS:
            run_end += 1
        cut = run_end + 1
        while cut < n and text[cut] in _CLOSERS:
            cut += 1
        if _is_boundary(text, run_start, run_end, cut, abbrev):
            cuts.append(cut)
        i = run_end + 1

    spans: list[SentenceSpan] = []
    starts = [0] + cuts
    ends = cuts + [n]
    for seg_start, seg_end in zip(starts, ends):
        chunk = text[seg_start:seg_end]
        stripped = chunk.strip()
        if not stripped:
            continue
        lead = len(chunk) - len(chunk.lstrip())
        start = seg_start + lead
        end = start + len(stripped)
        spans.append(SentenceSpan(len(spans), start, end, stripped))
    return spans


def _is_boundary(text: str, run_start: int, run_end: int, cut: int, abbrev: frozenset[str]) -> bool:
    n = len(text)
    if cut >= n or not text[cut].isspace():
        return False
    # digit.digit never splits (already implied by the whitespace test, kept explicit)
    if (
        text[run_start] == "."
        and run_start > 0
        and text[run_start - 1].isdigit()
        and run_start + 1 < n
        and text[run_start + 1].isdigit()
    ):
        return False
    m = cut
    while m < n and text[m].isspace():
        m += 1
    while m < n and text[m] in _OPENERS:
        m += 1
    if m >= n or not text[m].isupper():
        return False
    if text[run_start] == "." and run_start == run_end:
        match = _WORD_BEFORE_DOT_RE.search(text, 0, run_start)
        if match:
            word = match.group().strip(".").lower()
            if word in abbrev:
                return False
            if len(word) == 1 and match.group()[-1].isupper():
                # single initial such as "J. Smith"
                return False
    return True


def tokenize_words(text: str, lowercase: bool = True) -> list[str]:
    """Tokenize into maximal runs of letters/digits with word-internal apostrophes.

    Hyphenated compounds split at the hyphen; edge apostrophes are trimmed.
    Tokens come back lowercased unless ``lowercase=False`` (surface forms are
    needed for proper-noun detection).
    """
    if not text:
        return []
    normalized = text.replace("’", "'")
    tokens = _TOKEN_RE.findall(normalized)
    if lowercase:
        return [t.lower() for t in tokens]
    return tokens


_VOWELS = frozenset("aeiouy")
# consonants that fuse a following "i + vowel" pair into one syllable
# (-tion, -sion, -cious, -gion, -xion patterns)
_FUSED_ONSET = frozenset("tscgx")


def count_syllables(word: str) -> int:
    """Estimate syllables with a vowel-group heuristic; always >= 1.

    Maximal runs of a/e/i/o/u/y count one syllable each, with two refinements:
    an "i" followed by another vowel starts a new group unless the letter
    before the "i" is one of t/s/c/g/x (keeps -tion/-cious fused while
    splitting hiatus pairs such as curi-osity), and a trailing silent "e" is
    subtracted unless the word ends in consonant + "le".
    """
    letters = [c for c in word.lower() if c.isalpha()]
    if not letters:
        return 1
    groups = 0
    prev_vowel = False
    for idx, ch in enumerate(letters):
        is_vowel = ch in _VOWELS
        if is_vowel:
            if not prev_vowel:
                groups += 1
            elif letters[idx - 1] == "i" and ch != "i":
                before_i = letters[idx - 2] if idx >= 2 else ""
                if before_i not in _FUSED_ONSET:
                    groups += 1
        prev_vowel = is_vowel
    if (
        len(letters) >= 2
        and letters[-1] == "e"
        and letters[-2] not in _VOWELS
        and not (len(letters) >= 3 and letters[-2] == "l" and letters[-3] not in _VOWELS)
    ):
        groups -= 1
    return max(groups, 1)


_INFLECTION_SUFFIXES = ("ing", "es", "ed")


def _is_complex_word(surface: str, syllables: int, sentence_initial: bool) -> bool:
    """Gunning-style complex word: polysyllabic, not a proper noun, not an inflation."""
    if syllables < 3:
        return False
    if surface[0].isupper() and not sentence_initial:
        return False
    lowered = surface.lower()
    for suffix in _INFLECTION_SUFFIXES:
        if lowered.endswith(suffix) and len(lowered) > len(suffix):
            if count_syllables(lowered[: -len(suffix)]) <= 2:
                return False
            break
    return True


def compute_token_stats(
    text: str,
    familiar_words: Iterable[str] | None = None,
    abbreviations: Iterable[str] | None = None,
) -> TokenStats:
    """Aggregate the counts every readability formula needs.

    ``familiar_words`` may be empty or None, in which case every word counts
    as difficult. Results are consistent with split_sentences / tokenize_words
    / count_syllables applied to the same text.
    """
    familiar = frozenset(w.lower() for w in familiar_words) if familiar_words else frozenset()
    spans = split_sentences(text, abbreviations)

    words = 0
    syllables = 0
    mono = 0
    poly = 0
    complex_words = 0
    difficult = 0
    chars = 0
    for span in spans:
        for pos, surface in enumerate(tokenize_words(span.text, lowercase=False)):
            s = count_syllables(surface)
            words += 1
            syllables += s
            chars += len(surface)
            if s == 1:
                mono += 1
            if s >= 3:
                poly += 1
            if _is_complex_word(surface, s, sentence_initial=(pos == 0)):
                complex_words += 1
            if surface.lower() not in familiar:
                difficult += 1
    return TokenStats(
        sentence_count=len(spans),
        word_count=words,
        syllable_count=syllables,
        monosyllable_count=mono,
        polysyllable_count=poly,
        complex_word_count=complex_words,
        difficult_word_count=difficult,
        character_count=chars,
    )
