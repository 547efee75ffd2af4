"""Domain types of the two-layer lexical database.

The supra-lingual *concept layer* holds concepts and typed relations
between them (the ``is-a`` subset forms a DAG). The *lexicon layer* holds,
per language, senses (lexicalisations of concepts), lexical gaps (explicit
evidence that a language has no word for a concept), intra-lingual sense
relations, and cross-lingual cognate links between senses of different
languages.

All types are frozen dataclasses: immutable value objects, safe to share
between threads and processes without coordination. Invariants that a
single record can enforce on its own are checked at construction time;
cross-record invariants (uniqueness, mutual exclusion of sense and gap,
acyclicity, referential integrity) are the store's job.
"""

from __future__ import annotations

import enum
import re
import unicodedata
from dataclasses import dataclass, field

LANGUAGE_CODE_RE = re.compile(r"^[a-z]{3}$")

POS_VALUES = ("noun", "verb", "adjective", "adverb", "other")

CONCEPT_RELATION_KINDS = ("is-a", "part-of", "related", "metonymy-related")

#: Well-known intra-lingual relation kinds. The inventory is open: unknown
#: labels are preserved as-is instead of being rejected.
INTRA_RELATION_KINDS = ("antonym", "derivation", "metonym-of", "homograph-of")

COGNATE = "cognate"


class LexicalizationStatus(enum.Enum):
    """Three-state status of a (language, concept) pair.

    LEXICALISED: at least one sense exists.
    GAP: a gap record asserts the language has no word for the concept.
    UNKNOWN: neither; the database simply has no information.
    """

    LEXICALISED = "lexicalised"
    GAP = "gap"
    UNKNOWN = "unknown"


def normalize_lemma(raw: str) -> str:
    """Unicode NFC plus surrounding-whitespace trim; case is preserved
    (many scripts have no case, lowercasing would be lossy)."""
    return unicodedata.normalize("NFC", raw).strip()


def make_sense_id(language: str, lemma: str, concept: str) -> str:
    """Deterministic sense identifier. (language, lemma, concept) is unique
    per store, so the triple itself is a stable key. Treated as opaque
    everywhere else."""
    return f"{language}:{lemma}:{concept}"


@dataclass(frozen=True, slots=True)
class LanguageDescriptor:
    code: str
    name: str
    phylum: str | None = None
    latitude: float | None = None
    longitude: float | None = None

    def __post_init__(self):
        if not LANGUAGE_CODE_RE.match(self.code):
            raise ValueError(f"language code must be 3 lowercase letters: {self.code!r}")
        if (self.latitude is None) != (self.longitude is None):
            raise ValueError(f"{self.code}: latitude/longitude must both be present or both absent")
        if self.latitude is not None and not -90.0 <= self.latitude <= 90.0:
            raise ValueError(f"{self.code}: latitude out of range: {self.latitude}")
        if self.longitude is not None and not -180.0 <= self.longitude <= 180.0:
            raise ValueError(f"{self.code}: longitude out of range: {self.longitude}")


@dataclass(frozen=True, slots=True)
class Concept:
    """A supra-lingual meaning node.

    ``interlingual=False`` marks a language-specific word meaning that has
    not (yet) been integrated into the shared layer; such concepts are
    ordinary nodes in every other respect. ``pwn30_id`` is an optional
    external annotation for interoperability, never a primary key.
    """

    id: str
    gloss: str
    pos: str
    pwn30_id: str | None = None
    interlingual: bool = True

    def __post_init__(self):
        if not self.id:
            raise ValueError("concept id must be non-empty")
        if self.pos not in POS_VALUES:
            raise ValueError(f"unknown part of speech: {self.pos!r}")


@dataclass(frozen=True, slots=True)
class ConceptRelation:
    source: str
    target: str
    kind: str

    def __post_init__(self):
        if self.kind not in CONCEPT_RELATION_KINDS:
            raise ValueError(f"unknown concept relation kind: {self.kind!r}")
        if self.source == self.target:
            raise ValueError(f"self-loop on concept {self.source!r}")

    @property
    def key(self) -> tuple[str, str, str]:
        return (self.source, self.target, self.kind)


@dataclass(frozen=True, slots=True)
class Sense:
    """A lexicalisation: one word of one language for one concept."""

    id: str
    language: str
    lemma: str
    concept: str
    source_id: str

    def __post_init__(self):
        if normalize_lemma(self.lemma) != self.lemma or not self.lemma:
            raise ValueError(f"lemma must be NFC-normalized, trimmed and non-empty: {self.lemma!r}")
        if "\t" in self.lemma or "\n" in self.lemma:
            raise ValueError(f"lemma may not contain tabs or newlines: {self.lemma!r}")

    @property
    def key(self) -> tuple[str, str, str]:
        return (self.language, self.lemma, self.concept)


def make_sense(language: str, lemma: str, concept: str, source_id: str) -> Sense:
    """Build a sense from a raw lemma, normalizing it first."""
    lemma = normalize_lemma(lemma)
    return Sense(make_sense_id(language, lemma, concept), language, lemma, concept, source_id)


@dataclass(frozen=True, slots=True)
class LexicalGap:
    """Positive evidence of untranslatability: the language is known to have
    no single word for the concept. Mutually exclusive with any sense for
    the same (language, concept)."""

    language: str
    concept: str
    source_id: str

    @property
    def key(self) -> tuple[str, str]:
        return (self.language, self.concept)


@dataclass(frozen=True, slots=True)
class IntraLingualRelation:
    """Typed link between two senses of the same language."""

    kind: str
    source: str
    target: str
    source_id: str

    def __post_init__(self):
        if self.source == self.target:
            raise ValueError(f"self-loop on sense {self.source!r}")

    @property
    def is_standard_kind(self) -> bool:
        return self.kind in INTRA_RELATION_KINDS


@dataclass(frozen=True, slots=True)
class CrossLingualRelation:
    """Symmetric sense-to-sense link across lexicons (currently: cognates).

    Stored canonically with source < target by sense id so that each
    unordered pair has exactly one representation; all queries treat the
    relation as symmetric.
    """

    source: str
    target: str
    source_id: str
    kind: str = COGNATE

    def __post_init__(self):
        if self.kind != COGNATE:
            raise ValueError(f"unknown cross-lingual relation kind: {self.kind!r}")
        if self.source == self.target:
            raise ValueError(f"self-pair on sense {self.source!r}")
        if self.source > self.target:
            # canonical (min, max) ordering
            a, b = self.target, self.source
            object.__setattr__(self, "source", a)
            object.__setattr__(self, "target", b)

    @property
    def key(self) -> tuple[str, str]:
        return (self.source, self.target)


@dataclass(frozen=True, slots=True)
class Provenance:
    source_id: str
    license: str
    redistributable: bool

    def __post_init__(self):
        if not self.source_id:
            raise ValueError("source_id must be non-empty")


@dataclass(frozen=True, slots=True)
class Violation:
    """One broken store invariant: which invariant, the offending records
    (compact descriptions), and the provenance involved when known."""

    invariant: str
    message: str
    records: tuple[str, ...] = ()
    source_id: str | None = None
