"""Labeled multilingual text corpora: loading, normalization, splitting.

The on-disk format is RFC-4180 CSV with a header row containing a text
column and a language column (matched case-insensitively).  Language codes
are opaque strings; class indices are assigned by ascending lexicographic
code order so they never depend on row order.
"""

from __future__ import annotations

import csv
import re
import unicodedata
from dataclasses import dataclass, field

import numpy as np

from .errors import ValidationError

_WS_RE = re.compile(r"\s+")


@dataclass(frozen=True)
class LanguageId:
    code: str
    index: int


@dataclass(frozen=True)
class Document:
    text: str
    label: LanguageId


@dataclass
class LoadReport:
    rows_read: int = 0
    rows_kept: int = 0
    rows_skipped: int = 0
    languages: int = 0
    language_codes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "rows_read": self.rows_read,
            "rows_kept": self.rows_kept,
            "rows_skipped": self.rows_skipped,
            "languages": self.languages,
            "language_codes": list(self.language_codes),
        }


@dataclass
class Corpus:
    documents: list[Document]
    label_map: dict[str, LanguageId]

    def __len__(self) -> int:
        return len(self.documents)

    @property
    def n_languages(self) -> int:
        return len(self.label_map)

    @property
    def codes(self) -> list[str]:
        """Language codes in index order (ascending lexicographic)."""
        return sorted(self.label_map, key=lambda c: self.label_map[c].index)

    def texts(self) -> list[str]:
        return [d.text for d in self.documents]

    def label_indices(self) -> np.ndarray:
        return np.array([d.label.index for d in self.documents], dtype=np.int64)


@dataclass(frozen=True)
class SplitSpec:
    train_fraction: float = 0.8
    seed: int = 42
    stratified: bool = True


def normalize_text(raw: str) -> str:
    """Canonical-compose, lowercase, drop non-whitespace control characters,
    collapse whitespace runs to single spaces, and trim.

    Total function: any string in, a (possibly empty) normalized string out.
    """
    s = unicodedata.normalize("NFC", raw)
    s = s.lower()
    s = "".join(
        c for c in s
        if not (unicodedata.category(c) in ("Cc", "Cf") and not c.isspace())
    )
    return _WS_RE.sub(" ", s).strip()


def build_label_map(codes) -> dict[str, LanguageId]:
    distinct = sorted(set(codes))
    if len(distinct) < 2:
        raise ValidationError(
            f"need at least 2 distinct languages, found {len(distinct)}"
        )
    return {c: LanguageId(code=c, index=i) for i, c in enumerate(distinct)}


def corpus_from_rows(rows: list[tuple[str, str]]) -> tuple[Corpus, LoadReport]:
    """Build a normalized corpus from raw (text, language) pairs.

    Rows whose text normalizes to empty are skipped and counted.
    """
    report = LoadReport()
    kept: list[tuple[str, str]] = []
    for raw_text, raw_lang in rows:
        report.rows_read += 1
        text = normalize_text(raw_text)
        if not text:
            report.rows_skipped += 1
            continue
        kept.append((text, raw_lang.strip()))
        report.rows_kept += 1
    if not kept:
        raise ValidationError("empty corpus: no rows with non-empty text")
    label_map = build_label_map(lang for _, lang in kept)
    docs = [Document(text=t, label=label_map[lang]) for t, lang in kept]
    report.languages = len(label_map)
    report.language_codes = sorted(label_map)
    return Corpus(documents=docs, label_map=label_map), report


def _find_column(header: list[str], name: str) -> int:
    for i, cell in enumerate(header):
        if cell.strip().lower() == name:
            return i
    raise ValidationError(f'missing required column "{name}" in CSV header')


def load_csv(path) -> tuple[Corpus, LoadReport]:
    """Load a labeled corpus from CSV with Text/Language columns."""
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ValidationError(f"empty corpus: {path} has no header row") from None
        text_col = _find_column(header, "text")
        lang_col = _find_column(header, "language")
        rows = []
        for row in reader:
            if not row:
                continue
            if len(row) <= max(text_col, lang_col):
                raise ValidationError(
                    f"row {len(rows) + 2} of {path} has {len(row)} fields, "
                    f"expected at least {max(text_col, lang_col) + 1}"
                )
            rows.append((row[text_col], row[lang_col]))
    return corpus_from_rows(rows)


def write_csv(corpus: Corpus, path) -> None:
    """Write a corpus back to CSV; load_csv(write_csv(c)) == c."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["Text", "Language"])
        for doc in corpus.documents:
            writer.writerow([doc.text, doc.label.code])


def split_indices(
    labels: np.ndarray, train_fraction: float, seed: int, stratified: bool = True
) -> tuple[np.ndarray, np.ndarray]:
    """Deterministic train/test index partition.

    Stratified: per class, floor(train_fraction * n_class) indices go to
    train (at least 1 when the class has >= 2 members); the rest to test.
    """
    if not 0.0 < train_fraction < 1.0:
        raise ValidationError(
            f"train_fraction must be in (0, 1), got {train_fraction}"
        )
    labels = np.asarray(labels, dtype=np.int64)
    rng = np.random.default_rng(seed)
    train: list[np.ndarray] = []
    test: list[np.ndarray] = []
    if stratified:
        for cls in np.unique(labels):
            idx = np.flatnonzero(labels == cls)
            n = len(idx)
            k = int(np.floor(train_fraction * n))
            if n >= 2:
                k = max(1, k)
            perm = rng.permutation(n)
            train.append(idx[perm[:k]])
            test.append(idx[perm[k:]])
    else:
        n = len(labels)
        k = int(np.floor(train_fraction * n))
        perm = rng.permutation(n)
        train.append(perm[:k])
        test.append(perm[k:])
    train_idx = np.sort(np.concatenate(train)) if train else np.array([], dtype=np.int64)
    test_idx = np.sort(np.concatenate(test)) if test else np.array([], dtype=np.int64)
    return train_idx, test_idx


def subset(corpus: Corpus, indices: np.ndarray) -> Corpus:
    """Corpus restricted to the given document indices (label map shared)."""
    docs = [corpus.documents[i] for i in indices]
    return Corpus(documents=docs, label_map=corpus.label_map)


def stratified_split(corpus: Corpus, spec: SplitSpec) -> tuple[Corpus, Corpus]:
    if not corpus.documents:
        raise ValidationError("cannot split an empty corpus")
    train_idx, test_idx = split_indices(
        corpus.label_indices(), spec.train_fraction, spec.seed, spec.stratified
    )
    return subset(corpus, train_idx), subset(corpus, test_idx)
