"""Cleaning and anonymization for noisy monolingual dumps.

The rule model is deliberately small: an ordered list of *strip* rules
(matching substrings are removed), an ordered list of *drop* rules (a match
discards the whole sentence), and an ordered list of anonymize rules (strip
rules whose firing is counted separately). Forum scrapes are full of user-id
prefixes, @-handles, quote headers, markup, and stub lines; the shipped
defaults target exactly those.

Stripping runs to a global fixpoint over all strip + anonymize rules, which
makes clean() idempotent by construction: the output of a clean pass can
never match any strip pattern again.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass, field

from yuemt.corpus.types import MonoCorpus, Sentence
from yuemt.errors import ConfigError

ACTION_STRIP = "strip"
ACTION_DROP = "drop"

# CJK Unified Ideographs: basic block + Extension A.
_CJK_RANGES = ((0x4E00, 0x9FFF), (0x3400, 0x4DBF))

_WHITESPACE_RE = re.compile(r"\s+")


def cjk_char_count(text: str) -> int:
    """Number of CJK Unified Ideographs (basic block + Extension A) in text."""
    return sum(1 for ch in text if any(lo <= ord(ch) <= hi for lo, hi in _CJK_RANGES))


@dataclass(frozen=True)
class PatternRule:
    """Named regex rule. Action is 'strip' (remove matches) or 'drop' (discard sentence)."""

    name: str
    pattern: str
    action: str = ACTION_STRIP

    def compile(self) -> re.Pattern:
        if self.action not in (ACTION_STRIP, ACTION_DROP):
            raise ConfigError(f"rule {self.name!r}: unknown action {self.action!r}")
        try:
            return re.compile(self.pattern, re.MULTILINE)
        except re.error as exc:
            raise ConfigError(f"rule {self.name!r}: invalid pattern {self.pattern!r}: {exc}") from exc


# Modeled after the noise seen in raw Hong Kong forum scrapes.
DEFAULT_ANONYMIZE_RULES = (
    PatternRule("user-id", r"\b(?:ID|UID)\s*\d{3,}\b[:：]?"),
    PatternRule("member-id", r"(?:會員|用戶)\s*\d{3,}[:：]?"),
    PatternRule("at-handle", r"@[0-9A-Za-z_]{2,}"),
    PatternRule("quote-header", r"^[^\n]{0,24}(?:發表於|引用自|回覆)[^\n]{0,40}[:：]"),
)

DEFAULT_NOISE_RULES = (
    PatternRule("html-tag", r"<[^<>]{1,80}>"),
    PatternRule("url", r"https?://\S+"),
    PatternRule("bracket-code", r"\[[0-9A-Za-z_#]{1,16}\]"),
    PatternRule("reply-marker", r"^(?:RE|Re|re)[:：]\s*"),
)


@dataclass(frozen=True)
class CleaningConfig:
    min_cjk_chars: int = 10
    anonymize_rules: tuple[PatternRule, ...] = DEFAULT_ANONYMIZE_RULES
    noise_rules: tuple[PatternRule, ...] = DEFAULT_NOISE_RULES
    dedupe: bool = False

    def __post_init__(self):
        if self.min_cjk_chars < 0:
            raise ConfigError(f"min_cjk_chars must be >= 0, got {self.min_cjk_chars}")
        object.__setattr__(self, "anonymize_rules", tuple(self.anonymize_rules))
        object.__setattr__(self, "noise_rules", tuple(self.noise_rules))
        for rule in self.anonymize_rules:
            if rule.action != ACTION_STRIP:
                raise ConfigError(f"anonymize rule {rule.name!r} must have action 'strip'")

    def describe(self) -> str:
        noise = ",".join(r.name for r in self.noise_rules)
        anon = ",".join(r.name for r in self.anonymize_rules)
        return (
            f"clean(min_cjk_chars={self.min_cjk_chars}, noise=[{noise}], "
            f"anonymize=[{anon}], dedupe={self.dedupe})"
        )


@dataclass
class CleaningReport:
    """Bookkeeping for one clean() pass.

    Invariant: input_count == kept_count + dropped_short + dropped_noise.
    anonymized_count tallies kept sentences that an anonymize rule modified.
    """

    input_count: int = 0
    kept_count: int = 0
    dropped_short: int = 0
    dropped_noise: int = 0
    anonymized_count: int = 0

    def as_dict(self) -> dict:
        return {
            "input_count": self.input_count,
            "kept_count": self.kept_count,
            "dropped_short": self.dropped_short,
            "dropped_noise": self.dropped_noise,
            "anonymized_count": self.anonymized_count,
        }


def _strip_to_fixpoint(text: str, strip_rules, anonymize_rules) -> tuple[str, bool]:
    """Apply all strip rules in order, repeatedly, until the text stops changing.

    Returns (text, anonymized) where anonymized is True if any anonymize rule
    ever removed something. Termination: every effective pass strictly
    shortens the text.
    """
    anonymized = False
    while True:
        before = text
        for _, compiled in strip_rules:
            text = compiled.sub("", text)
        for _, compiled in anonymize_rules:
            stripped = compiled.sub("", text)
            if stripped != text:
                anonymized = True
                text = stripped
        text = _WHITESPACE_RE.sub(" ", text).strip()
        if text == before:
            return text, anonymized


def clean(raw: MonoCorpus, cfg: CleaningConfig) -> tuple[MonoCorpus, CleaningReport]:
    """Normalize, de-noise, anonymize, and length-filter a monolingual corpus.

    Sentences are NFC-normalized, then strip/anonymize rules run to a global
    fixpoint, then drop rules and the CJK length filter apply. Sentences that
    end up empty (or duplicated, when dedupe is on) count as dropped_noise;
    sentences with fewer than min_cjk_chars CJK characters count as
    dropped_short.
    """
    strip_rules = [(r, r.compile()) for r in cfg.noise_rules if r.action == ACTION_STRIP]
    drop_rules = [(r, r.compile()) for r in cfg.noise_rules if r.action == ACTION_DROP]
    anonymize_rules = [(r, r.compile()) for r in cfg.anonymize_rules]

    report = CleaningReport(input_count=len(raw))
    kept: list[Sentence] = []
    seen_texts: set[str] = set()

    for sentence in raw:
        text = unicodedata.normalize("NFC", sentence.text)
        text, anonymized = _strip_to_fixpoint(text, strip_rules, anonymize_rules)
        # Drop rules are checked on the final stripped text, so kept output
        # can never match one on a second pass (idempotence).
        if not text or any(compiled.search(text) for _, compiled in drop_rules):
            report.dropped_noise += 1
            continue
        if cfg.dedupe and text in seen_texts:
            report.dropped_noise += 1
            continue
        if cjk_char_count(text) < cfg.min_cjk_chars:
            report.dropped_short += 1
            continue
        seen_texts.add(text)
        kept.append(Sentence(id=sentence.id, text=text, lang=sentence.lang))
        report.kept_count += 1
        if anonymized:
            report.anonymized_count += 1

    out = MonoCorpus(
        items=tuple(kept),
        name=raw.name,
        seed=raw.seed,
        log=raw.log + (cfg.describe(),),
    )
    return out, report
