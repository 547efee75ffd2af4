"""Exception hierarchy shared by all modules.

Each error carries a stable machine-readable ``code`` that the HTTP layer
maps into its error envelope; the message is for humans.
"""

from __future__ import annotations


class LexDivError(Exception):
    """Base class for domain errors."""

    code = "error"

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class UnknownLanguageError(LexDivError):
    code = "unknown-language"

    def __init__(self, code_: str):
        super().__init__(f"unknown language: {code_!r}")
        self.language = code_


class UnknownConceptError(LexDivError):
    code = "unknown-concept"

    def __init__(self, concept: str):
        super().__init__(f"unknown concept: {concept!r}")
        self.concept = concept


class UnknownRootError(LexDivError):
    code = "unknown-root"

    def __init__(self, concept: str):
        super().__init__(f"unknown domain root: {concept!r}")
        self.concept = concept


class SameLanguageError(LexDivError):
    code = "same-language"

    def __init__(self, code_: str):
        super().__init__(f"language pair must be distinct, got {code_!r} twice")
        self.language = code_


class NoLexicalisationError(LexDivError):
    code = "no-lexicalisation"

    def __init__(self, concept: str):
        super().__init__(f"concept {concept!r} is not lexicalised by any language")
        self.concept = concept


class LayoutError(LexDivError):
    """Non-finite coordinates or forces; the layout run is aborted."""

    code = "layout-aborted"


class SnapshotFormatError(LexDivError):
    """Snapshot cache file is unreadable or from another format version."""

    code = "snapshot-format"
