"""Corpus data model, line-delimited ingestion, filtering, preference pairs.

Record files are UTF-8 JSON lines, one record per line, with fields
``id`` / ``document`` / ``title`` / ``spotlight`` / ``summary`` /
``domain_tag`` (title, summary and domain_tag optional). Blank lines are
ignored. All types are immutable after construction; every operation here is
pure and returns new collections, so metric passes can run concurrently over
shared records.
"""

from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

from .errors import InputError
from .textseg import split_sentences, tokenize_words

__all__ = [
    "Kind",
    "Document",
    "Condensation",
    "CorpusRecord",
    "FilterConfig",
    "FilterReport",
    "PreferencePair",
    "PromptTemplate",
    "LoadedCorpus",
    "load_corpus",
    "save_records",
    "filter_records",
    "write_filter_report",
    "build_preference_dataset",
    "split_two_stage",
    "DEFAULT_PROMPT",
]


class Kind(str, Enum):
    SPOTLIGHT = "spotlight"
    SUMMARY = "summary"


@dataclass(frozen=True)
class Document:
    id: str
    text: str
    title: str | None = None
    domain_tag: str | None = None

    def __post_init__(self):
        if not self.id:
            raise ValueError("document id must be non-empty")
        if not self.text or not self.text.strip():
            raise ValueError(f"document {self.id!r}: text empty after whitespace trim")


@dataclass(frozen=True)
class Condensation:
    kind: Kind
    text: str

    def __post_init__(self):
        if not self.text or not self.text.strip():
            raise ValueError("condensation text must be non-empty")


@dataclass(frozen=True)
class CorpusRecord:
    document: Document
    spotlight: Condensation
    summary: Condensation | None = None

    def __post_init__(self):
        if self.spotlight.kind is not Kind.SPOTLIGHT:
            raise ValueError("spotlight slot must hold a spotlight condensation")
        if self.summary is not None and self.summary.kind is not Kind.SUMMARY:
            raise ValueError("summary slot must hold a summary condensation")


class LoadedCorpus(list):
    """A list of CorpusRecord that also remembers what was skipped in lenient mode."""

    def __init__(self, records: Iterable[CorpusRecord] = ()):
        super().__init__(records)
        self.skipped: int = 0
        self.skipped_lines: list[tuple[int, str]] = []


def _parse_record(obj, lineno: int) -> CorpusRecord:
    if not isinstance(obj, dict):
        raise InputError(f"line {lineno}: record is not an object")

    def text_field(name, required):
        value = obj.get(name)
        if value is None:
            if required:
                raise InputError(f"line {lineno}: missing field {name!r}")
            return None
        if not isinstance(value, str) or not value.strip():
            raise InputError(f"line {lineno}: field {name!r} must be a non-empty string")
        return value

    rec_id = text_field("id", required=True)
    doc_text = text_field("document", required=True)
    spot_text = text_field("spotlight", required=True)
    summ_text = text_field("summary", required=False)
    title = obj.get("title")
    domain_tag = obj.get("domain_tag")
    if title is not None and not isinstance(title, str):
        raise InputError(f"line {lineno}: field 'title' must be a string")
    if domain_tag is not None and not isinstance(domain_tag, str):
        raise InputError(f"line {lineno}: field 'domain_tag' must be a string")

    return CorpusRecord(
        document=Document(id=rec_id, text=doc_text, title=title, domain_tag=domain_tag),
        spotlight=Condensation(Kind.SPOTLIGHT, spot_text),
        summary=Condensation(Kind.SUMMARY, summ_text) if summ_text is not None else None,
    )


def load_corpus(path, strict: bool = True) -> LoadedCorpus:
    """Load a line-delimited record file in file order.

    Strict mode raises InputError naming the offending line; lenient mode
    skips malformed lines (and duplicate ids) and counts them on the returned
    corpus (``.skipped`` / ``.skipped_lines``).
    """
    corpus = LoadedCorpus()
    seen_ids: set[str] = set()
    try:
        fh = open(path, encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read corpus file {path}: {exc}") from exc
    with fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                try:
                    obj = json.loads(line)
                except json.JSONDecodeError as exc:
                    raise InputError(f"line {lineno}: invalid JSON ({exc.msg})") from exc
                record = _parse_record(obj, lineno)
                if record.document.id in seen_ids:
                    raise InputError(f"line {lineno}: duplicate id {record.document.id!r}")
            except InputError as exc:
                if strict:
                    raise
                corpus.skipped += 1
                corpus.skipped_lines.append((lineno, str(exc)))
                continue
            except ValueError as exc:
                if strict:
                    raise InputError(f"line {lineno}: {exc}") from exc
                corpus.skipped += 1
                corpus.skipped_lines.append((lineno, str(exc)))
                continue
            seen_ids.add(record.document.id)
            corpus.append(record)
    return corpus


def record_to_json(record: CorpusRecord) -> str:
    obj = {"id": record.document.id, "document": record.document.text}
    if record.document.title is not None:
        obj["title"] = record.document.title
    obj["spotlight"] = record.spotlight.text
    if record.summary is not None:
        obj["summary"] = record.summary.text
    if record.document.domain_tag is not None:
        obj["domain_tag"] = record.document.domain_tag
    return json.dumps(obj, ensure_ascii=False, sort_keys=True)


def save_records(records: Sequence[CorpusRecord], path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for record in records:
            fh.write(record_to_json(record) + "\n")


# ---------------------------------------------------------------------------
# Filtering
# ---------------------------------------------------------------------------

# characters that never count toward the special-character ratio
_ALLOWED_PUNCT = frozenset(".,;:'\"?!-()")
_MARKUP_RE = re.compile(r"</?[A-Za-z][^<>]*>")  # angle-bracket tag pattern
_HASH_RUN_RE = re.compile(r"#{2,}")
_NUMBER_RE = re.compile(r"\d+(?:\.\d+)?")
_TRAILING_QUOTES = "\"'”’»)"
_TERMINAL_PUNCT = frozenset(".!?")


@dataclass(frozen=True)
class FilterConfig:
    """Knobs for the three-step filter; 0.05 is the default special-char ratio cap."""

    special_char_threshold: float = 0.05

    def __post_init__(self):
        if not 0 <= self.special_char_threshold <= 1:
            raise ValueError("special_char_threshold must lie in [0, 1]")


@dataclass(frozen=True)
class FilterReport:
    total: int
    dropped_special_chars: int
    dropped_incomplete: int
    dropped_unfaithful_terms: int
    kept: int

    def __post_init__(self):
        dropped = self.dropped_special_chars + self.dropped_incomplete + self.dropped_unfaithful_terms
        if self.kept + dropped != self.total or min(
            self.total,
            self.kept,
            self.dropped_special_chars,
            self.dropped_incomplete,
            self.dropped_unfaithful_terms,
        ) < 0:
            raise ValueError("filter report counts are inconsistent")


def special_char_ratio(text: str) -> float:
    if not text:
        return 0.0
    special = sum(
        1 for c in text if not (c.isalpha() or c.isdigit() or c.isspace() or c in _ALLOWED_PUNCT)
    )
    return special / len(text)


def has_markup_noise(text: str) -> bool:
    return bool(_MARKUP_RE.search(text) or _HASH_RUN_RE.search(text))


def is_incomplete(text: str) -> bool:
    """True when the text does not end in terminal punctuation (a closing
    quote directly after . ! ? still counts as terminated)."""
    stripped = text.rstrip()
    stripped = stripped.rstrip(_TRAILING_QUOTES)
    return not stripped or stripped[-1] not in _TERMINAL_PUNCT


def _summary_terms(text: str) -> set[str]:
    """Terms whose absence from the document marks a summary unfaithful:
    numeric tokens plus capitalized multi-letter tokens not at sentence start."""
    terms = set(_NUMBER_RE.findall(text))
    for span in split_sentences(text):
        tokens = tokenize_words(span.text, lowercase=False)
        for tok in tokens[1:]:
            if len(tok) >= 2 and tok[0].isupper() and tok.isalpha():
                terms.add(tok.lower())
    return terms


def _document_presence(doc_text: str) -> set[str]:
    present = set(tokenize_words(doc_text))
    present.update(_NUMBER_RE.findall(doc_text))
    return present


def unfaithful_terms(summary_text: str, doc_text: str) -> list[str]:
    present = _document_presence(doc_text)
    return sorted(t for t in _summary_terms(summary_text) if t not in present)


def filter_records(
    records: Sequence[CorpusRecord], cfg: FilterConfig | None = None
) -> tuple[list[CorpusRecord], FilterReport]:
    """Apply the three filter rules in order; a record dropped by rule k is not
    tested by rule k+1. Records without summaries pass through untouched."""
    cfg = cfg or FilterConfig()
    kept: list[CorpusRecord] = []
    d_special = d_incomplete = d_unfaithful = 0
    for record in records:
        if record.summary is None:
            kept.append(record)
            continue
        summary = record.summary.text
        if special_char_ratio(summary) > cfg.special_char_threshold or has_markup_noise(summary):
            d_special += 1
        elif is_incomplete(summary):
            d_incomplete += 1
        elif unfaithful_terms(summary, record.document.text):
            d_unfaithful += 1
        else:
            kept.append(record)
    report = FilterReport(
        total=len(records),
        dropped_special_chars=d_special,
        dropped_incomplete=d_incomplete,
        dropped_unfaithful_terms=d_unfaithful,
        kept=len(kept),
    )
    return kept, report


def write_filter_report(report: FilterReport, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"total={report.total}\n")
        fh.write(f"dropped_special_chars={report.dropped_special_chars}\n")
        fh.write(f"dropped_incomplete={report.dropped_incomplete}\n")
        fh.write(f"dropped_unfaithful_terms={report.dropped_unfaithful_terms}\n")
        fh.write(f"kept={report.kept}\n")


# ---------------------------------------------------------------------------
# Preference dataset
# ---------------------------------------------------------------------------

DEFAULT_PROMPT = (
    "Write a spotlight for the document below. A spotlight is a short, engaging\n"
    "overview meant to spark the reader's curiosity about the full text rather\n"
    "than cover everything in it.\n"
    "\n"
    "### Document: {document}\n"
    "\n"
    "### Response:"
)


@dataclass(frozen=True)
class PromptTemplate:
    """Prompt text with a mandatory ``{document}`` placeholder and an optional
    ``{title}`` placeholder."""

    text: str = DEFAULT_PROMPT

    def __post_init__(self):
        if "{document}" not in self.text:
            raise ValueError("prompt template must contain a {document} placeholder")

    @classmethod
    def from_file(cls, path) -> "PromptTemplate":
        try:
            with open(path, encoding="utf-8") as fh:
                return cls(fh.read())
        except OSError as exc:
            raise InputError(f"cannot read template file {path}: {exc}") from exc

    def render(self, document: Document) -> str:
        return self.text.format(document=document.text, title=document.title or "")


@dataclass(frozen=True)
class PreferencePair:
    prompt: str
    chosen: str  # spotlight text
    rejected: str  # summary text of the same record
    record_id: str


def build_preference_dataset(
    records: Sequence[CorpusRecord], template: PromptTemplate | None = None
) -> list[PreferencePair]:
    """One pair per record: spotlight chosen, summary rejected, prompt rendered
    from the template plus the document text."""
    template = template or PromptTemplate()
    pairs = []
    for record in records:
        if record.summary is None:
            raise InputError(
                f"record {record.document.id!r} has no summary; cannot form a preference pair"
            )
        pairs.append(
            PreferencePair(
                prompt=template.render(record.document),
                chosen=record.spotlight.text,
                rejected=record.summary.text,
                record_id=record.document.id,
            )
        )
    return pairs


def save_preference_pairs(pairs: Sequence[PreferencePair], path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for pair in pairs:
            fh.write(
                json.dumps(
                    {
                        "pair_id": pair.record_id,
                        "prompt": pair.prompt,
                        "chosen": pair.chosen,
                        "rejected": pair.rejected,
                    },
                    ensure_ascii=False,
                    sort_keys=True,
                )
                + "\n"
            )


def split_two_stage(
    records: Sequence[CorpusRecord], seed: int
) -> tuple[list[CorpusRecord], list[CorpusRecord]]:
    """Deterministic random split into two halves (first half takes the extra
    record on odd sizes). Within each half records keep their input order."""
    if len(records) < 2:
        raise InputError(f"need at least 2 records to split, got {len(records)}")
    indices = list(range(len(records)))
    random.Random(seed).shuffle(indices)
    first_size = (len(records) + 1) // 2
    first = sorted(indices[:first_size])
    second = sorted(indices[first_size:])
    return [records[i] for i in first], [records[i] for i in second]
