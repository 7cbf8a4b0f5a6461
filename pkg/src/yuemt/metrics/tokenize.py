"""Deterministic tokenization schemes for metric computation.

The scheme id travels with every segment and ends up in score reports, so
two scores are only comparable when their schemes match.

Schemes:
  whitespace  split on runs of whitespace (toy language, pre-tokenized text)
  latin       words vs punctuation: runs of word characters form one token,
              every other non-space character is its own token
  cjk-char    each CJK ideograph is one token; non-CJK stretches fall back
              to the latin rules
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from yuemt.corpus.cleaning import _CJK_RANGES
from yuemt.errors import ContractError

_LATIN_TOKEN_RE = re.compile(r"\w+|[^\w\s]", re.UNICODE)

SCHEMES = ("whitespace", "latin", "cjk-char")


@dataclass(frozen=True)
class TokenizedSegment:
    tokens: tuple[str, ...]
    lang: str
    scheme: str

    def __len__(self) -> int:
        return len(self.tokens)


def _is_cjk(ch: str) -> bool:
    return any(lo <= ord(ch) <= hi for lo, hi in _CJK_RANGES)


def _tokenize_latin(text: str) -> list[str]:
    return _LATIN_TOKEN_RE.findall(text)


def _tokenize_cjk(text: str) -> list[str]:
    tokens: list[str] = []
    buffer: list[str] = []
    for ch in text:
        if _is_cjk(ch):
            if buffer:
                tokens.extend(_tokenize_latin("".join(buffer)))
                buffer = []
            tokens.append(ch)
        else:
            buffer.append(ch)
    if buffer:
        tokens.extend(_tokenize_latin("".join(buffer)))
    return tokens


def tokenize(text: str, lang: str = "en", scheme: str | None = None) -> TokenizedSegment:
    """Tokenize text under the named scheme (default: per-language choice)."""
    if scheme is None:
        scheme = "cjk-char" if lang == "yue" else "latin"
    if scheme == "whitespace":
        tokens = text.split()
    elif scheme == "latin":
        tokens = _tokenize_latin(text)
    elif scheme == "cjk-char":
        tokens = _tokenize_cjk(text)
    else:
        raise ContractError(f"unknown tokenization scheme {scheme!r}; expected one of {SCHEMES}")
    return TokenizedSegment(tokens=tuple(tokens), lang=lang, scheme=scheme)


def check_same_scheme(hyps: list[TokenizedSegment], refs: list[TokenizedSegment]) -> str:
    schemes = {s.scheme for s in hyps} | {s.scheme for s in refs}
    if len(schemes) > 1:
        raise ContractError(f"mixed tokenization schemes {sorted(schemes)}")
    return next(iter(schemes)) if schemes else "whitespace"
