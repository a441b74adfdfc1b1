"""Code-mixing complexity metrics for language-tagged multilingual text.

Quantifies how mixed a sentence or corpus is via the Code Mixing Index (CMI)
and the Complexity Factor family (CF1/CF2/CF3), which additionally account
for switch points and the number of languages involved.
"""

from .corpus_io import (
    DEFAULT_POLICY,
    DEFAULT_LANGUAGES,
    CorpusFormat,
    ParseError,
    TagPolicy,
    UnknownTagAction,
    UnknownTagError,
    normalize_tag,
    parse_column_format,
    parse_inline_format,
    write_corpus,
)
from .metrics import (
    DEFAULT_CONFIG,
    Dampening,
    MetricConfig,
    SentenceCounts,
    SentenceMetrics,
    analyze_sentence,
    cmi,
    complexity_factor,
    count_sentence,
    dampening_divisor,
    language_factor,
    metrics_from_counts,
    mix_factor,
    switching_factor,
)
from .model import Corpus, LanguageTag, Sentence, Token, UndefinedReason
from .stats import (
    INDEX_NAMES,
    CorpusComparison,
    CorpusReport,
    IndexComparison,
    IndexSummaryRow,
    LanguageDistributionRow,
    SentenceRecord,
    aggregate,
    compare,
    language_distribution,
    scatter_data,
)
from .synth import Arrangement, GenSpec, Xoshiro256StarStar, enumerate_small, generate

__version__ = "0.1.0"

__all__ = [
    "Arrangement",
    "Corpus",
    "CorpusComparison",
    "CorpusFormat",
    "CorpusReport",
    "Dampening",
    "DEFAULT_CONFIG",
    "DEFAULT_POLICY",
    "DEFAULT_LANGUAGES",
    "GenSpec",
    "INDEX_NAMES",
    "IndexComparison",
    "IndexSummaryRow",
    "LanguageDistributionRow",
    "LanguageTag",
    "MetricConfig",
    "ParseError",
    "Sentence",
    "SentenceCounts",
    "SentenceMetrics",
    "SentenceRecord",
    "TagPolicy",
    "Token",
    "UndefinedReason",
    "UnknownTagAction",
    "UnknownTagError",
    "Xoshiro256StarStar",
    "aggregate",
    "analyze_sentence",
    "cmi",
    "compare",
    "complexity_factor",
    "count_sentence",
    "dampening_divisor",
    "enumerate_small",
    "generate",
    "language_distribution",
    "language_factor",
    "metrics_from_counts",
    "mix_factor",
    "normalize_tag",
    "parse_column_format",
    "parse_inline_format",
    "scatter_data",
    "switching_factor",
    "write_corpus",
]
