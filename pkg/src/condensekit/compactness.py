"""Corpus IDF table and average-IDF compactness of a condensation.

IDF uses the natural log, idf = ln(N / df); tokens never seen in any document
get the ln(N / 0.5) cap. Document frequencies count documents containing a
token at least once, tokenized with the package-wide rules. The table is
built from documents only, never from condensations, and is immutable once
built (safe to share across threads).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Mapping

from .corpus import Condensation, Document
from .errors import InputError
from .textseg import tokenize_words

__all__ = ["IdfTable", "build_idf", "avg_idf", "save_idf", "load_idf"]


@dataclass(frozen=True)
class IdfTable:
    doc_count: int
    df: Mapping[str, int]

    def __post_init__(self):
        if self.doc_count < 1:
            raise ValueError("IDF table needs at least one document")
        object.__setattr__(self, "df", MappingProxyType(dict(self.df)))

    def idf(self, token: str) -> float:
        count = self.df.get(token, 0)
        if count == 0:
            return math.log(self.doc_count / 0.5)
        return math.log(self.doc_count / count)


def build_idf(documents: Iterable[Document]) -> IdfTable:
    df: dict[str, int] = {}
    n = 0
    for doc in documents:
        n += 1
        for token in set(tokenize_words(doc.text)):
            df[token] = df.get(token, 0) + 1
    if n == 0:
        raise InputError("cannot build an IDF table from an empty corpus")
    return IdfTable(doc_count=n, df=df)


def avg_idf(cond: Condensation | str, table: IdfTable) -> float:
    """Arithmetic mean IDF over all token occurrences (duplicates count each time)."""
    text = getattr(cond, "text", cond)
    tokens = tokenize_words(text)
    if not tokens:
        raise ValueError("cannot average IDF over a condensation with no tokens")
    return sum(table.idf(t) for t in tokens) / len(tokens)


def save_idf(table: IdfTable, path) -> None:
    """Two-column text file (token<TAB>df) under a header carrying N."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"doc_count\t{table.doc_count}\n")
        for token in sorted(table.df):
            fh.write(f"{token}\t{table.df[token]}\n")


def load_idf(path) -> IdfTable:
    try:
        fh = open(path, encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read IDF table {path}: {exc}") from exc
    with fh:
        header = fh.readline().rstrip("\n").split("\t")
        if len(header) != 2 or header[0] != "doc_count":
            raise InputError(f"{path}: malformed IDF header")
        try:
            doc_count = int(header[1])
        except ValueError as exc:
            raise InputError(f"{path}: bad doc_count {header[1]!r}") from exc
        df = {}
        for lineno, line in enumerate(fh, 2):
            if not line.strip():
                continue
            parts = line.rstrip("\n").split("\t")
            if len(parts) != 2:
                raise InputError(f"{path}:{lineno}: expected token<TAB>df")
            try:
                df[parts[0]] = int(parts[1])
            except ValueError as exc:
                raise InputError(f"{path}:{lineno}: bad df {parts[1]!r}") from exc
    return IdfTable(doc_count=doc_count, df=df)
