"""Coverage of a condensation over the four word-balanced segments of its document.

Each condensation sentence is matched to the document sentence it overlaps
most (ROUGE-1 F1 by default, earliest sentence on ties); the matched
sentence's quartile gives a 4-bin histogram whose normalized entropy and
max share feed the corpus-level skew statistic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .rouge import OverlapScore, score_variant
from .textseg import tokenize_words

__all__ = [
    "QuartileAssignment",
    "QuartileDistribution",
    "EMPTY_DISTRIBUTION",
    "quartile_bounds",
    "sentence_quartiles",
    "assign_quartiles",
    "quartile_histogram",
    "histogram_from_counts",
    "skew_at",
]

_LN4 = math.log(4.0)


@dataclass(frozen=True)
class QuartileAssignment:
    cond_sentence_index: int
    matched_doc_sentence_index: int
    quartile: int  # 1..4
    match_score: OverlapScore


@dataclass(frozen=True)
class QuartileDistribution:
    probs: tuple[float, float, float, float]
    entropy_norm: float
    max_share: float
    empty: bool = False  # condensation had no sentences; excluded from aggregates


EMPTY_DISTRIBUTION = QuartileDistribution((0.0, 0.0, 0.0, 0.0), 0.0, 0.0, empty=True)


def quartile_bounds(doc) -> list[tuple[int, int]]:
    """Four contiguous word-index ranges with counts as equal as possible;
    the remainder goes to the earliest segments. Accepts a Document or str."""
    text = getattr(doc, "text", doc)
    total = len(tokenize_words(text))
    if total < 1:
        raise ValueError("cannot divide a document with no words into quartiles")
    return _bounds_for_word_count(total)


def _bounds_for_word_count(total: int) -> list[tuple[int, int]]:
    base, remainder = divmod(total, 4)
    bounds = []
    start = 0
    for q in range(4):
        size = base + (1 if q < remainder else 0)
        bounds.append((start, start + size))
        start += size
    return bounds


def sentence_quartiles(doc_sentence_tokens: Sequence[Sequence[str]]) -> list[int]:
    """Quartile (1..4) per document sentence, assigned by the segment holding
    the sentence's word-midpoint."""
    total = sum(len(toks) for toks in doc_sentence_tokens)
    if total < 1:
        raise ValueError("document sentences contain no words")
    bounds = _bounds_for_word_count(total)
    quartiles = []
    position = 0
    for toks in doc_sentence_tokens:
        if toks:
            mid = position + (len(toks) - 1) / 2.0
        else:
            mid = min(position, total - 1)  # wordless sentence: use its start
        for q, (lo, hi) in enumerate(bounds, 1):
            if lo <= mid < hi or (q == 4 and mid >= hi):
                quartiles.append(q)
                break
        position += len(toks)
    return quartiles


def assign_quartiles(
    doc_sentences: Sequence[str], cond_sentences: Sequence[str], variant: str = "r1"
) -> list[QuartileAssignment]:
    """Match every condensation sentence to its best document sentence
    (ties broken by the earliest document sentence)."""
    if not doc_sentences or not cond_sentences:
        raise ValueError("assign_quartiles needs non-empty document and condensation sentences")
    doc_tokens = [tokenize_words(s) for s in doc_sentences]
    quartiles = sentence_quartiles(doc_tokens)
    assignments = []
    for ci, sentence in enumerate(cond_sentences):
        cond_tokens = tokenize_words(sentence)
        best_index = 0
        best: OverlapScore | None = None
        for di, d_tokens in enumerate(doc_tokens):
            candidate = score_variant(cond_tokens, d_tokens, variant)
            if best is None or candidate.f1 > best.f1:
                best_index, best = di, candidate
        assignments.append(QuartileAssignment(ci, best_index, quartiles[best_index], best))
    return assignments


def quartile_histogram(assignments: Sequence[QuartileAssignment]) -> QuartileDistribution:
    if not assignments:
        raise ValueError("quartile_histogram needs at least one assignment")
    counts = [0, 0, 0, 0]
    for a in assignments:
        counts[a.quartile - 1] += 1
    return histogram_from_counts(counts)


def histogram_from_counts(counts: Sequence[int]) -> QuartileDistribution:
    """Histogram, normalized entropy (-sum p ln p / ln 4, with 0 ln 0 = 0) and
    max share from raw 4-bin counts."""
    if len(counts) != 4 or min(counts) < 0:
        raise ValueError("expected four non-negative quartile counts")
    total = sum(counts)
    if total == 0:
        raise ValueError("all quartile counts are zero")
    probs = tuple(c / total for c in counts)
    entropy = -sum(p * math.log(p) for p in probs if p > 0.0) / _LN4
    return QuartileDistribution(probs, entropy, max(probs))


def skew_at(dists: Sequence[QuartileDistribution], k: float = 0.5) -> float:
    """Fraction of (non-empty) distributions whose max share is at least k."""
    if not 0 < k <= 1:
        raise ValueError(f"k must lie in (0, 1], got {k}")
    live = [d for d in dists if not d.empty]
    if not live:
        raise ValueError("skew_at needs at least one non-empty distribution")
    return sum(1 for d in live if d.max_share >= k) / len(live)
