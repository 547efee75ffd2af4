"""Diversity analytics over a read-only store snapshot.

Cognate clusters: the senses of one concept, partitioned into connected
components of the cognate graph restricted to that concept. Few clusters
mean a near-universal concept, many mean a diverse one.

Diversity index: the cluster count over the lexicalising languages,
normalized to [0, 1] as (k - 1) / (n - 1); 0 when every language sits in
one cluster, 1 when every language is its own cluster, 0 for n = 1.

Lexicon similarity: for two languages, the fraction of their shared
lexicalised concepts that carry at least one cognate link between the two
lexicons (cognate_overlap / overlap). Symmetric, bounded, monotone in
cognate evidence, and undefined (rather than zero) below a configurable
overlap floor so that thin data does not masquerade as dissimilarity.

All functions are pure with respect to the store; they can be parallelized
across concepts and language pairs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NoLexicalisationError, SameLanguageError
from .model import Sense
from .store import Database

#: Minimum number of concepts two languages must share before a similarity
#: score is considered meaningful.
DEFAULT_MIN_OVERLAP = 20


@dataclass(frozen=True, slots=True)
class CognateClustering:
    """Partition of one concept's senses under cognate connectivity.

    ``clusters`` are sorted by their smallest (language, lemma) member and
    each cluster's senses are sorted the same way, so indices are stable.
    ``language_cluster`` maps each lexicalising language to the cluster of
    its lexicographically first lemma; languages whose senses span several
    clusters are additionally listed in ``ambiguous``.
    """

    concept: str
    clusters: tuple[tuple[Sense, ...], ...]
    language_cluster: dict[str, int]
    ambiguous: frozenset[str]


@dataclass(frozen=True, slots=True)
class DiversityIndex:
    concept: str
    index: float
    lexicalising_languages: int
    clusters: int


@dataclass(frozen=True, slots=True)
class SimilarityRecord:
    lang_a: str
    lang_b: str
    score: float
    overlap: int
    cognate_overlap: int

    def __post_init__(self):
        if self.lang_a >= self.lang_b:
            raise ValueError("similarity records are stored with lang_a < lang_b")


class _UnionFind:
    """Plain union-find with path compression; enough for desk-scale
    clustering, and kept deliberately simple so the DFS oracle in the test
    suite is a genuinely independent check."""

    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, i: int) -> int:
        root = i
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[i] != root:
            self.parent[i], i = root, self.parent[i]
        return root

    def union(self, a: int, b: int):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def cognate_clusters(db: Database, concept: str) -> CognateClustering:
    """Connected components of the graph whose nodes are the concept's
    senses and whose edges are the cognate relations between them."""
    db._require_concept(concept)
    senses = sorted(db.senses_of_concept(concept), key=lambda s: (s.language, s.lemma))
    index = {sense.id: i for i, sense in enumerate(senses)}
    uf = _UnionFind(len(senses))
    for i, sense in enumerate(senses):
        for rel in db.cognates_of(sense.id):
            other = rel.target if rel.source == sense.id else rel.source
            j = index.get(other)
            if j is not None:
                uf.union(i, j)

    groups: dict[int, list[Sense]] = {}
    for i, sense in enumerate(senses):
        groups.setdefault(uf.find(i), []).append(sense)
    clusters = tuple(sorted(
        (tuple(members) for members in groups.values()),
        key=lambda members: (members[0].language, members[0].lemma)))

    cluster_of_sense = {
        sense.id: ci for ci, members in enumerate(clusters) for sense in members}
    language_cluster: dict[str, int] = {}
    spans: dict[str, set[int]] = {}
    for sense in senses:
        spans.setdefault(sense.language, set()).add(cluster_of_sense[sense.id])
        if sense.language not in language_cluster:
            # senses are sorted, so the first hit per language carries its
            # lexicographically (code point) first lemma
            language_cluster[sense.language] = cluster_of_sense[sense.id]
    ambiguous = frozenset(lang for lang, cset in spans.items() if len(cset) > 1)
    return CognateClustering(
        concept=concept,
        clusters=clusters,
        language_cluster=language_cluster,
        ambiguous=ambiguous,
    )


def diversity_index(db: Database, concept: str) -> DiversityIndex:
    """(k - 1) / (n - 1) over n lexicalising languages and k language-level
    clusters; 0 for a single language. Requires at least one
    lexicalisation."""
    clustering = cognate_clusters(db, concept)
    n = len(clustering.language_cluster)
    if n == 0:
        raise NoLexicalisationError(concept)
    k = len(set(clustering.language_cluster.values()))
    value = 0.0 if n == 1 else (k - 1) / (n - 1)
    return DiversityIndex(concept=concept, index=value,
                          lexicalising_languages=n, clusters=k)


def lexicon_similarity(db: Database, lang_a: str, lang_b: str,
                       min_overlap: int = DEFAULT_MIN_OVERLAP) -> SimilarityRecord | None:
    """Similarity of two lexicons, or None when they share fewer than
    ``min_overlap`` lexicalised concepts (undefined, distinct from 0)."""
    db._require_language(lang_a)
    db._require_language(lang_b)
    if lang_a == lang_b:
        raise SameLanguageError(lang_a)
    if lang_a > lang_b:
        lang_a, lang_b = lang_b, lang_a
    shared = db.lexicalised_concepts(lang_a) & db.lexicalised_concepts(lang_b)
    overlap = len(shared)
    if overlap < min_overlap:
        return None
    cognate_overlap = sum(1 for concept in shared if _pair_has_cognate(db, concept, lang_a, lang_b))
    return SimilarityRecord(
        lang_a=lang_a, lang_b=lang_b,
        score=cognate_overlap / overlap,
        overlap=overlap, cognate_overlap=cognate_overlap)


def _pair_has_cognate(db: Database, concept: str, lang_a: str, lang_b: str) -> bool:
    b_ids = {sense.id for sense in db.senses_of(lang_b, concept)}
    for sense in db.senses_of(lang_a, concept):
        for rel in db.cognates_of(sense.id):
            other = rel.target if rel.source == sense.id else rel.source
            if other in b_ids:
                return True
    return False


def similarity_matrix(db: Database,
                      min_overlap: int = DEFAULT_MIN_OVERLAP) -> list[SimilarityRecord]:
    """One record per unordered language pair meeting the overlap floor,
    ordered by (lang_a, lang_b)."""
    codes = sorted(db.languages)
    records = []
    for i, lang_a in enumerate(codes):
        for lang_b in codes[i + 1:]:
            record = lexicon_similarity(db, lang_a, lang_b, min_overlap)
            if record is not None:
                records.append(record)
    return records
