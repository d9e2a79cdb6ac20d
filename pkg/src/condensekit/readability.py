"""Six classical readability formulas computed from TokenStats.

Constants come from the classical sources (Flesch reading ease and grade
level, Gunning fog, Dale-Chall, SMOG, FORCAST). Values approximate published
tools because syllables are heuristic; relative comparisons between two texts
scored the same way are the intended use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .textseg import TokenStats

__all__ = ["ReadabilityScores", "compute_readability"]


@dataclass(frozen=True)
class ReadabilityScores:
    fk_grade: float  # Flesch-Kincaid grade level (lower = easier)
    fre: float  # Flesch reading ease (higher = easier; may leave [0, 100])
    fog: float  # Gunning fog index (lower = easier)
    dale_chall: float  # Dale-Chall score (lower = easier)
    smog: float  # SMOG grade (lower = easier)
    forcast: float  # FORCAST grade (higher = easier, unlike the others)


def compute_readability(stats: TokenStats, sample_words: int = 150) -> ReadabilityScores:
    """All six scores from one set of counts.

    FORCAST is defined on the monosyllable count of a fixed word sample
    (150 by default); here that count is estimated from the text's
    monosyllable rate, which is exact for texts of exactly ``sample_words``
    words and scales proportionally otherwise.
    """
    if stats.sentence_count < 1 or stats.word_count < 1:
        raise ValueError("readability needs at least one sentence and one word")
    if sample_words < 1:
        raise ValueError("sample_words must be >= 1")

    w = stats.word_count
    s = stats.sentence_count
    y = stats.syllable_count
    wl = w / s  # words per sentence
    sl = y / w  # syllables per word

    fk_grade = 0.39 * wl + 11.8 * sl - 15.59
    fre = 206.835 - 1.015 * wl - 84.6 * sl
    fog = 0.4 * (wl + 100.0 * stats.complex_word_count / w)

    difficult_share = stats.difficult_word_count / w
    dale_chall = 0.1579 * (100.0 * difficult_share) + 0.0496 * wl
    if difficult_share > 0.05:
        dale_chall += 3.6365

    smog = 1.0430 * math.sqrt(stats.polysyllable_count * 30.0 / s) + 3.1291

    mono_in_sample = stats.monosyllable_count * (sample_words / w)
    forcast = 20.0 - mono_in_sample / 10.0

    return ReadabilityScores(fk_grade, fre, fog, dale_chall, smog, forcast)
