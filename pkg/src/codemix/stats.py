"""Corpus-level aggregation: per-language distributions, index summaries,
corpus means (CMI-all / CMI-mixed), scatter data and corpus comparison.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from statistics import fmean

from .metrics import (
    DEFAULT_CONFIG,
    MetricConfig,
    SentenceCounts,
    SentenceMetrics,
    count_sentence,
    metrics_from_counts,
)
from .model import Corpus

INDEPENDENT_LABEL = "Language Independent"

# Indices that exist per sentence and can be plotted or compared.
INDEX_NAMES = ("cmi", "cf1", "cf2", "cf3")
WORDS_PER_SENTENCE = "words_per_sentence"
SUMMARY_INDICES = INDEX_NAMES + (WORDS_PER_SENTENCE,)


@dataclass(frozen=True)
class LanguageDistributionRow:
    """One language's share of a corpus (or the language-independent share)."""

    language: str
    sentence_count: int
    word_count: int
    percentage: float


@dataclass(frozen=True)
class IndexSummaryRow:
    index_name: str
    min: float
    max: float
    mean: float


@dataclass(frozen=True)
class SentenceRecord:
    index: int
    counts: SentenceCounts
    metrics: SentenceMetrics


@dataclass(frozen=True)
class CorpusReport:
    corpus_name: str
    sentence_count: int
    token_count: int
    distribution: tuple[LanguageDistributionRow, ...]
    summary: tuple[IndexSummaryRow, ...]
    cmi_all: float
    cmi_mixed: float
    per_sentence: tuple[SentenceRecord, ...]

    def summary_row(self, index_name: str) -> IndexSummaryRow:
        for row in self.summary:
            if row.index_name == index_name:
                return row
        raise ValueError(f"unknown index {index_name!r}; expected one of {', '.join(SUMMARY_INDICES)}")


@dataclass(frozen=True)
class IndexComparison:
    index_name: str
    mean_a: float
    mean_b: float
    delta: float  # mean_a - mean_b
    verdict: str  # "A", "B" or "TIE"


@dataclass(frozen=True)
class CorpusComparison:
    corpus_a: str
    corpus_b: str
    rows: tuple[IndexComparison, ...]


def _registry_sort_key(code: str) -> tuple[str, int]:
    # Trailing digits sort numerically so the synthetic family reads L1, L2, .. L10.
    match = re.fullmatch(r"(.*?)(\d+)", code)
    if match:
        return match.group(1), int(match.group(2))
    return code, -1


def language_distribution(corpus: Corpus) -> tuple[LanguageDistributionRow, ...]:
    """Per-language sentence/word counts and percentages, plus one
    language-independent row (always present, possibly zero)."""
    if not corpus.sentences:
        raise ValueError("empty corpus")
    word_counts: dict[str, int] = {}
    sentence_counts: dict[str, int] = {}
    independent_words = 0
    independent_sentences = 0
    total_tokens = 0
    for sentence in corpus.sentences:
        present: set[str] = set()
        has_independent = False
        for token in sentence.tokens:
            total_tokens += 1
            if token.tag.is_language:
                word_counts[token.tag.code] = word_counts.get(token.tag.code, 0) + 1
                present.add(token.tag.code)
            else:
                independent_words += 1
                has_independent = True
        for code in present:
            sentence_counts[code] = sentence_counts.get(code, 0) + 1
        if has_independent:
            independent_sentences += 1
    rows = [
        LanguageDistributionRow(
            language=code,
            sentence_count=sentence_counts[code],
            word_count=word_counts[code],
            percentage=100.0 * word_counts[code] / total_tokens,
        )
        for code in sorted(word_counts, key=_registry_sort_key)
    ]
    rows.append(
        LanguageDistributionRow(
            language=INDEPENDENT_LABEL,
            sentence_count=independent_sentences,
            word_count=independent_words,
            percentage=100.0 * independent_words / total_tokens,
        )
    )
    return tuple(rows)


def _index_value(record: SentenceRecord, index_name: str) -> float:
    if index_name == WORDS_PER_SENTENCE:
        return float(record.counts.total_tokens)
    if index_name in INDEX_NAMES:
        return getattr(record.metrics, index_name)
    raise ValueError(f"unknown index {index_name!r}; expected one of {', '.join(SUMMARY_INDICES)}")


def aggregate(corpus: Corpus, config: MetricConfig = DEFAULT_CONFIG) -> CorpusReport:
    """Compute per-sentence metrics and fold them into a corpus report.

    The result is independent of evaluation order; only the per_sentence
    listing reflects the corpus ordering.
    """
    if not corpus.sentences:
        raise ValueError("empty corpus")
    records = []
    for sentence in corpus.sentences:
        counts = count_sentence(sentence)
        records.append(SentenceRecord(index=sentence.index, counts=counts, metrics=metrics_from_counts(counts, config)))
    records = tuple(records)
    summary = []
    for name in SUMMARY_INDICES:
        values = [_index_value(r, name) for r in records]
        summary.append(IndexSummaryRow(index_name=name, min=min(values), max=max(values), mean=fmean(values)))
    cmi_values = [r.metrics.cmi for r in records]
    mixed = [v for v in cmi_values if v > 0]
    return CorpusReport(
        corpus_name=corpus.name,
        sentence_count=len(records),
        token_count=sum(r.counts.total_tokens for r in records),
        distribution=language_distribution(corpus),
        summary=tuple(summary),
        cmi_all=fmean(cmi_values),
        cmi_mixed=fmean(mixed) if mixed else 0.0,
        per_sentence=records,
    )


def scatter_data(report: CorpusReport, index_name: str) -> list[tuple[int, float]]:
    """(words, index value) pairs, one per sentence in corpus order."""
    if index_name not in INDEX_NAMES:
        raise ValueError(f"unknown index {index_name!r}; expected one of {', '.join(INDEX_NAMES)}")
    return [(r.counts.total_tokens, getattr(r.metrics, index_name)) for r in report.per_sentence]


def compare(report_a: CorpusReport, report_b: CorpusReport) -> CorpusComparison:
    """Mean delta per index (A - B) with a per-index verdict of which corpus
    is more complex; higher mean means more complex."""
    rows = []
    for name in INDEX_NAMES:
        mean_a = report_a.summary_row(name).mean
        mean_b = report_b.summary_row(name).mean
        delta = mean_a - mean_b
        verdict = "TIE" if delta == 0 else ("A" if delta > 0 else "B")
        rows.append(IndexComparison(index_name=name, mean_a=mean_a, mean_b=mean_b, delta=delta, verdict=verdict))
    return CorpusComparison(corpus_a=report_a.corpus_name, corpus_b=report_b.corpus_name, rows=tuple(rows))
