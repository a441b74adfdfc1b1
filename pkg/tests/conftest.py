from __future__ import annotations

import sys
from pathlib import Path

import pytest

from codemix import Corpus, LanguageTag, Sentence, Token, UndefinedReason

sys.path.insert(0, str(Path(__file__).parent))  # makes naive_oracle importable

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def make_sentence(codes: list[str | None], index: int = 0) -> Sentence:
    """Sentence from a plain tag list; None means an undefined (UN) token."""
    tokens = []
    for i, code in enumerate(codes):
        tag = LanguageTag.undefined(UndefinedReason.UNIVERSAL) if code is None else LanguageTag.language(code)
        tokens.append(Token(surface=f"w{i}", tag=tag))
    return Sentence(index=index, tokens=tuple(tokens))


def sentence_codes(sentence: Sentence) -> list[str | None]:
    return [t.tag.code for t in sentence.tokens]


def make_corpus(tag_lists: list[list[str | None]], name: str = "test") -> Corpus:
    sentences = tuple(make_sentence(codes, index=i) for i, codes in enumerate(tag_lists))
    registry = {c for codes in tag_lists for c in codes if c is not None}
    return Corpus(name=name, sentences=sentences, tag_registry=frozenset(registry))


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES
