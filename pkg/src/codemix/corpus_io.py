"""Reading and writing language-tagged corpora.

Two plain-text carriers are supported:

COLUMN -- one token per line as "surface<TAB>tag"; a blank line ends a
  sentence; trailing blank lines are ignored.  CRLF input is accepted.

INLINE -- one sentence per line; tokens separated by single spaces; each
  token is "surface/TAG" where the LAST slash is the separator, so surfaces
  may themselves contain slashes.

Both formats are UTF-8 and carry no metadata beyond the tokens, so writing
then parsing reproduces an equal corpus (name and registry excluded).
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass

from .model import Corpus, LanguageTag, Sentence, Token, UndefinedReason

logger = logging.getLogger(__name__)

# The nine languages of the multilingual reference corpus this tool was
# built around; the default registry.
DEFAULT_LANGUAGES = frozenset({"BN", "EN", "GU", "HI", "KA", "ML", "MR", "TA", "TE"})

DEFAULT_UNDEFINED_ALIASES = frozenset({"UN", "UNIV", "NE", "X", "MIX", "OTHER"})

_ALIAS_REASONS = {
    "UN": UndefinedReason.UNIVERSAL,
    "UNIV": UndefinedReason.UNIVERSAL,
    "NE": UndefinedReason.NAMED_ENTITY,
    "X": UndefinedReason.SYMBOL,
    "MIX": UndefinedReason.INTRA_WORD_MIX,
}


class UnknownTagError(ValueError):
    """Raised by normalize_tag when a tag is neither a registered language nor an alias."""


class ParseError(ValueError):
    """Malformed corpus text; carries a 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class UnknownTagAction(enum.Enum):
    ERROR = "error"
    TREAT_UNDEFINED = "undefined"


class CorpusFormat(enum.Enum):
    COLUMN = "column"
    INLINE = "inline"


@dataclass(frozen=True)
class TagPolicy:
    """How raw tag strings map onto language/undefined assignments.

    Codes of the form L<number> (the synthetic family used by the corpus
    generator and by abstract test patterns) are accepted as languages
    regardless of the registry while accept_synthetic is set.
    """

    language_codes: frozenset[str] = DEFAULT_LANGUAGES
    undefined_aliases: frozenset[str] = DEFAULT_UNDEFINED_ALIASES
    unknown_tag_action: UnknownTagAction = UnknownTagAction.ERROR
    accept_synthetic: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "language_codes", frozenset(c.upper() for c in self.language_codes))
        object.__setattr__(self, "undefined_aliases", frozenset(a.upper() for a in self.undefined_aliases))
        overlap = self.language_codes & self.undefined_aliases
        if overlap:
            raise ValueError(f"language codes and undefined aliases overlap: {sorted(overlap)}")


DEFAULT_POLICY = TagPolicy()


def _is_synthetic_code(code: str) -> bool:
    return len(code) > 1 and code[0] == "L" and code[1:].isdigit()


def normalize_tag(raw: str, policy: TagPolicy = DEFAULT_POLICY) -> LanguageTag:
    """Map a raw tag string (case-insensitive) onto a LanguageTag per policy."""
    if not raw:
        raise UnknownTagError("empty tag")
    upper = raw.upper()
    if upper in policy.language_codes:
        return LanguageTag.language(upper)
    if policy.accept_synthetic and _is_synthetic_code(upper):
        return LanguageTag.language(upper)
    if upper in policy.undefined_aliases:
        return LanguageTag.undefined(_ALIAS_REASONS.get(upper, UndefinedReason.OTHER))
    if policy.unknown_tag_action is UnknownTagAction.TREAT_UNDEFINED:
        return LanguageTag.undefined(UndefinedReason.OTHER)
    raise UnknownTagError(f"unknown tag {raw!r}")


def _build_corpus(name: str, sentences: list[Sentence], policy: TagPolicy) -> Corpus:
    seen = {t.tag.code for s in sentences for t in s.tokens if t.tag.is_language}
    return Corpus(name=name, sentences=tuple(sentences), tag_registry=policy.language_codes | seen)


def _strip_trailing_blanks(lines: list[str]) -> list[str]:
    end = len(lines)
    while end > 0 and not lines[end - 1]:
        end -= 1
    return lines[:end]


def parse_column_format(text: str, policy: TagPolicy = DEFAULT_POLICY, name: str = "") -> Corpus:
    """Parse COLUMN text into a corpus.

    Empty sentences (consecutive blank lines) are skipped with a logged
    warning; every other irregularity is a ParseError.
    """
    lines = _strip_trailing_blanks([line.rstrip("\r") for line in text.split("\n")])
    sentences: list[Sentence] = []
    pending: list[Token] = []
    skipped = 0
    for lineno, line in enumerate(lines, start=1):
        if not line:
            if pending:
                sentences.append(Sentence(index=len(sentences), tokens=tuple(pending)))
                pending = []
            else:
                skipped += 1
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise ParseError(lineno, f"expected SURFACE<TAB>TAG, got {len(fields)} field(s)")
        surface, raw_tag = fields
        if not surface:
            raise ParseError(lineno, "empty surface")
        if not raw_tag:
            raise ParseError(lineno, "missing tag field")
        try:
            tag = normalize_tag(raw_tag, policy)
        except UnknownTagError as exc:
            raise ParseError(lineno, str(exc)) from exc
        pending.append(Token(surface=surface, tag=tag))
    if pending:
        sentences.append(Sentence(index=len(sentences), tokens=tuple(pending)))
    if skipped:
        logger.warning("%s: skipped %d empty sentence(s)", name or "<column stream>", skipped)
    return _build_corpus(name, sentences, policy)


def parse_inline_format(text: str, policy: TagPolicy = DEFAULT_POLICY, name: str = "") -> Corpus:
    """Parse INLINE text (one "surface/TAG ..." sentence per line) into a corpus."""
    lines = _strip_trailing_blanks([line.rstrip("\r") for line in text.split("\n")])
    sentences: list[Sentence] = []
    skipped = 0
    for lineno, line in enumerate(lines, start=1):
        if not line:
            skipped += 1
            continue
        tokens: list[Token] = []
        for position, chunk in enumerate(line.split(" "), start=1):
            cut = chunk.rfind("/")
            if cut < 0:
                raise ParseError(lineno, f"token {position}: missing '/' separator in {chunk!r}")
            surface, raw_tag = chunk[:cut], chunk[cut + 1 :]
            if not surface:
                raise ParseError(lineno, f"token {position}: empty surface")
            if not raw_tag:
                raise ParseError(lineno, f"token {position}: empty tag")
            try:
                tag = normalize_tag(raw_tag, policy)
            except UnknownTagError as exc:
                raise ParseError(lineno, f"token {position}: {exc}") from exc
            tokens.append(Token(surface=surface, tag=tag))
        sentences.append(Sentence(index=len(sentences), tokens=tuple(tokens)))
    if skipped:
        logger.warning("%s: skipped %d empty sentence(s)", name or "<inline stream>", skipped)
    return _build_corpus(name, sentences, policy)


def _tag_text(tag: LanguageTag) -> str:
    return tag.code if tag.is_language else tag.reason.value


def write_corpus(corpus: Corpus, fmt: CorpusFormat = CorpusFormat.COLUMN) -> str:
    """Serialize a corpus; parse(write(c)) == c for both formats."""
    if fmt is CorpusFormat.COLUMN:
        parts = []
        for sentence in corpus.sentences:
            for token in sentence.tokens:
                parts.append(f"{token.surface}\t{_tag_text(token.tag)}\n")
            parts.append("\n")
        return "".join(parts)
    if fmt is CorpusFormat.INLINE:
        lines = []
        for sentence in corpus.sentences:
            for token in sentence.tokens:
                if " " in token.surface:
                    raise ValueError(f"surface {token.surface!r} not representable in INLINE format")
            lines.append(" ".join(f"{t.surface}/{_tag_text(t.tag)}" for t in sentence.tokens) + "\n")
        return "".join(lines)
    raise ValueError(f"unknown corpus format: {fmt!r}")
