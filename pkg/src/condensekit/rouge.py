"""ROUGE-style overlap scores between token sequences.

ROUGE-N uses clipped (multiset) n-gram counting; ROUGE-L uses the longest
common subsequence. Both are exact and symmetric up to swapping the roles of
precision and recall. Inputs are token lists, typically produced by
``textseg.tokenize_words`` (lowercased, punctuation-free); stemming and
stopword removal are off by default but available through RougeConfig because
published ROUGE tools disagree on them.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

__all__ = [
    "OverlapScore",
    "RougeConfig",
    "rouge_n",
    "rouge_l",
    "score_variant",
    "prepare_tokens",
    "ngram_counts",
    "rouge_n_from_counts",
    "VARIANTS",
]

VARIANTS = ("r1", "r2", "rl")


@dataclass(frozen=True)
class OverlapScore:
    precision: float
    recall: float
    f1: float


_ZERO = OverlapScore(0.0, 0.0, 0.0)


def _score(precision: float, recall: float) -> OverlapScore:
    if precision + recall == 0:
        return OverlapScore(precision, recall, 0.0)
    return OverlapScore(precision, recall, 2 * precision * recall / (precision + recall))


def ngram_counts(tokens: Sequence[str], n: int) -> tuple[Counter, int]:
    """Multiset of n-grams and the total n-gram count for one sequence."""
    total = len(tokens) - n + 1
    if total <= 0:
        return Counter(), 0
    if n == 1:
        return Counter(tokens), total
    grams = Counter(tuple(tokens[i : i + n]) for i in range(total))
    return grams, total


def rouge_n_from_counts(
    cand_counts: Counter, cand_total: int, ref_counts: Counter, ref_total: int
) -> OverlapScore:
    """Score from precomputed n-gram multisets (fast path for pairwise matrices)."""
    if cand_total == 0 or ref_total == 0:
        return _ZERO
    if len(cand_counts) > len(ref_counts):
        small, large = ref_counts, cand_counts
    else:
        small, large = cand_counts, ref_counts
    matches = 0
    for gram, count in small.items():
        other = large.get(gram)
        if other:
            matches += count if count < other else other
    return _score(matches / cand_total, matches / ref_total)


def rouge_n(candidate: Sequence[str], reference: Sequence[str], n: int = 1) -> OverlapScore:
    """Clipped n-gram overlap. Empty n-gram sets on either side give all zeros."""
    if n < 1:
        raise ValueError(f"n-gram order must be >= 1, got {n}")
    cand_counts, cand_total = ngram_counts(candidate, n)
    ref_counts, ref_total = ngram_counts(reference, n)
    return rouge_n_from_counts(cand_counts, cand_total, ref_counts, ref_total)


def lcs_length(a: Sequence[str], b: Sequence[str]) -> int:
    """Longest common subsequence length, O(len(a)*len(b)) time, O(min) space."""
    if not a or not b:
        return 0
    if len(b) < len(a):
        a, b = b, a
    prev = [0] * (len(a) + 1)
    for tok_b in b:
        cur = [0]
        append = cur.append
        for i, tok_a in enumerate(a, 1):
            if tok_a == tok_b:
                append(prev[i - 1] + 1)
            else:
                left = cur[-1]
                up = prev[i]
                append(left if left >= up else up)
        prev = cur
    return prev[-1]


def rouge_l(candidate: Sequence[str], reference: Sequence[str]) -> OverlapScore:
    """LCS-based overlap: precision = LCS/|candidate|, recall = LCS/|reference|."""
    if not candidate or not reference:
        return _ZERO
    lcs = lcs_length(candidate, reference)
    return _score(lcs / len(candidate), lcs / len(reference))


def score_variant(candidate: Sequence[str], reference: Sequence[str], variant: str) -> OverlapScore:
    if variant == "r1":
        return rouge_n(candidate, reference, 1)
    if variant == "r2":
        return rouge_n(candidate, reference, 2)
    if variant == "rl":
        return rouge_l(candidate, reference)
    raise ValueError(f"unknown variant {variant!r}, expected one of {VARIANTS}")


@dataclass(frozen=True)
class RougeConfig:
    """Token preprocessing toggles; defaults match the package-wide convention
    (lowercase, punctuation-stripped, stopwords retained, no stemming)."""

    stemming: bool = False
    drop_stopwords: bool = False


_STOPWORDS = frozenset(
    "a an the and or but if then than so nor of to in on at by for with from as "
    "is are was were be been being it its this that these those he she they we "
    "you i his her their our your my me him them us not no do does did have has "
    "had will would can could shall should may might".split()
)


def _light_stem(token: str) -> str:
    # approximate suffix stripping, intentionally far lighter than Porter
    if token.endswith("'s"):
        token = token[:-2]
    if len(token) > 5 and token.endswith("ing"):
        return token[:-3]
    if len(token) > 4 and token.endswith(("ed", "es")):
        return token[:-2]
    if len(token) > 3 and token.endswith("s") and not token.endswith("ss"):
        return token[:-1]
    return token


def prepare_tokens(tokens: Sequence[str], cfg: RougeConfig) -> list[str]:
    out = list(tokens)
    if cfg.drop_stopwords:
        out = [t for t in out if t not in _STOPWORDS]
    if cfg.stemming:
        out = [_light_stem(t) for t in out]
    return out
