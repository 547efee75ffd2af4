"""lexdiv: a diversity-aware multilingual lexical database engine.

Stores a supra-lingual concept layer plus per-language lexicons with
lexicalisations, lexical gaps and cognate links; computes diversity
analytics (cognate clusters, diversity indices, lexicon similarity); lays
out similarity graphs with a force-directed model; exports catalogue
datasets (TSV and an LMF-subset XML); and serves everything over a JSON
HTTP API.
"""

from .model import (
    Concept,
    ConceptRelation,
    CrossLingualRelation,
    IntraLingualRelation,
    LanguageDescriptor,
    LexicalGap,
    LexicalizationStatus,
    Provenance,
    Sense,
    Violation,
    make_sense,
    normalize_lemma,
)
from .store import Database

__version__ = "0.1.0"

__all__ = [
    "Concept",
    "ConceptRelation",
    "CrossLingualRelation",
    "Database",
    "IntraLingualRelation",
    "LanguageDescriptor",
    "LexicalGap",
    "LexicalizationStatus",
    "Provenance",
    "Sense",
    "Violation",
    "make_sense",
    "normalize_lemma",
    "__version__",
]
