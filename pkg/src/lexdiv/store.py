"""In-memory, read-optimized store over the domain records.

The store is rebuilt from TSV sources at startup (they remain the ground
truth) and can optionally be snapshotted to a single versioned binary cache
file. Writes happen through :mod:`lexdiv.ingest`; the low-level ``add_*``
methods here do not enforce cross-record invariants, which lets
:meth:`Database.validate` be exercised on deliberately broken stores.

Concurrency: single writer, many readers. All query methods are safe to
run concurrently against a quiescent store; merges must not run while
readers are active.
"""

from __future__ import annotations

import pickle
import struct
from collections import defaultdict
from dataclasses import dataclass
from pathlib import Path

from .errors import (
    SnapshotFormatError,
    UnknownConceptError,
    UnknownLanguageError,
    UnknownRootError,
)
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
    normalize_lemma,
)

_SNAPSHOT_MAGIC = b"LEXDIVDB"
_SNAPSHOT_VERSION = 1


@dataclass(frozen=True, slots=True)
class WordEntry:
    """One meaning of a looked-up word with everything attached to it."""

    sense: Sense
    concept: Concept
    intra_relations: tuple[IntraLingualRelation, ...]
    cognates: tuple[tuple[CrossLingualRelation, Sense], ...]


@dataclass(frozen=True, slots=True)
class NeighborhoodNode:
    concept: str
    status: LexicalizationStatus
    lemmas: tuple[str, ...]


@dataclass(frozen=True, slots=True)
class ConceptNeighborhood:
    """BFS ball around a focus concept, annotated for one language."""

    focus: str
    language: str
    nodes: tuple[NeighborhoodNode, ...]
    edges: tuple[ConceptRelation, ...]


@dataclass(frozen=True, slots=True)
class DomainNode:
    concept: str
    status: LexicalizationStatus
    lemmas: tuple[str, ...]
    children: tuple[str, ...]


@dataclass(frozen=True, slots=True)
class DomainTree:
    """All is-a descendants of a root, annotated for one language.

    ``nodes`` is in preorder with children sorted by concept id; in a DAG a
    concept appears once, under the first parent that reaches it."""

    root: str
    language: str
    nodes: tuple[DomainNode, ...]


@dataclass(frozen=True, slots=True)
class LanguageProfile:
    language: LanguageDescriptor
    senses: int
    distinct_lemmas: int
    gaps: int
    relations: int


class Database:
    def __init__(self):
        self.languages: dict[str, LanguageDescriptor] = {}
        self.concepts: dict[str, Concept] = {}
        self.concept_relations: list[ConceptRelation] = []
        self.senses: dict[str, Sense] = {}
        self.gaps: dict[tuple[str, str], LexicalGap] = {}
        self.intra_relations: list[IntraLingualRelation] = []
        self.cross_relations: list[CrossLingualRelation] = []
        self.sources: dict[str, Provenance] = {}
        # secondary indexes
        self._relation_keys: set[tuple[str, str, str]] = set()
        self._out_relations: dict[str, list[ConceptRelation]] = defaultdict(list)
        self._in_relations: dict[str, list[ConceptRelation]] = defaultdict(list)
        self._sense_keys: dict[tuple[str, str, str], str] = {}
        self._senses_by_lang_lemma: dict[tuple[str, str], list[str]] = defaultdict(list)
        self._senses_by_lang_concept: dict[tuple[str, str], list[str]] = defaultdict(list)
        self._senses_by_concept: dict[str, list[str]] = defaultdict(list)
        self._senses_by_lang: dict[str, list[str]] = defaultdict(list)
        self._concepts_by_lang: dict[str, set[str]] = defaultdict(set)
        self._intra_by_sense: dict[str, list[IntraLingualRelation]] = defaultdict(list)
        self._cross_by_sense: dict[str, list[CrossLingualRelation]] = defaultdict(list)
        self._cross_keys: set[tuple[str, str]] = set()

    # ------------------------------------------------------------------
    # low-level mutation (no cross-record validation; see module docstring)

    def add_language(self, lang: LanguageDescriptor):
        self.languages[lang.code] = lang

    def add_concept(self, concept: Concept):
        self.concepts[concept.id] = concept

    def add_concept_relation(self, rel: ConceptRelation):
        self.concept_relations.append(rel)
        self._relation_keys.add(rel.key)
        self._out_relations[rel.source].append(rel)
        self._in_relations[rel.target].append(rel)

    def add_sense(self, sense: Sense):
        self.senses[sense.id] = sense
        self._sense_keys[sense.key] = sense.id
        self._senses_by_lang_lemma[(sense.language, sense.lemma)].append(sense.id)
        self._senses_by_lang_concept[(sense.language, sense.concept)].append(sense.id)
        self._senses_by_concept[sense.concept].append(sense.id)
        self._senses_by_lang[sense.language].append(sense.id)
        self._concepts_by_lang[sense.language].add(sense.concept)

    def add_gap(self, gap: LexicalGap):
        self.gaps[gap.key] = gap

    def remove_gap(self, key: tuple[str, str]):
        self.gaps.pop(key, None)

    def add_intra_relation(self, rel: IntraLingualRelation):
        self.intra_relations.append(rel)
        self._intra_by_sense[rel.source].append(rel)
        self._intra_by_sense[rel.target].append(rel)

    def add_cross_relation(self, rel: CrossLingualRelation):
        self.cross_relations.append(rel)
        self._cross_keys.add(rel.key)
        self._cross_by_sense[rel.source].append(rel)
        self._cross_by_sense[rel.target].append(rel)

    def add_source(self, prov: Provenance):
        self.sources[prov.source_id] = prov

    # ------------------------------------------------------------------
    # membership helpers used by ingest and the queries

    def has_language(self, code: str) -> bool:
        return code in self.languages

    def has_concept(self, concept_id: str) -> bool:
        return concept_id in self.concepts

    def has_concept_relation(self, key: tuple[str, str, str]) -> bool:
        return key in self._relation_keys

    def has_sense_key(self, key: tuple[str, str, str]) -> bool:
        return key in self._sense_keys

    def has_sense_id(self, sense_id: str) -> bool:
        return sense_id in self.senses

    def has_gap(self, key: tuple[str, str]) -> bool:
        return key in self.gaps

    def has_cross_relation(self, key: tuple[str, str]) -> bool:
        return key in self._cross_keys

    def has_source(self, source_id: str) -> bool:
        return source_id in self.sources

    def senses_of_concept(self, concept_id: str) -> list[Sense]:
        return [self.senses[sid] for sid in sorted(self._senses_by_concept.get(concept_id, ()))]

    def senses_of(self, language: str, concept_id: str) -> list[Sense]:
        ids = self._senses_by_lang_concept.get((language, concept_id), ())
        return [self.senses[sid] for sid in sorted(ids)]

    def lexicalised_concepts(self, language: str) -> set[str]:
        return self._concepts_by_lang.get(language, set())

    def cognates_of(self, sense_id: str) -> list[CrossLingualRelation]:
        return list(self._cross_by_sense.get(sense_id, ()))

    def _require_language(self, code: str):
        if code not in self.languages:
            raise UnknownLanguageError(code)

    def _require_concept(self, concept_id: str):
        if concept_id not in self.concepts:
            raise UnknownConceptError(concept_id)

    # ------------------------------------------------------------------
    # three-state status

    def status(self, language: str, concept: str) -> LexicalizationStatus:
        """Lexicalised iff the language has a sense for the concept, Gap iff
        a gap record exists, Unknown otherwise. Total and deterministic for
        every valid pair."""
        self._require_language(language)
        self._require_concept(concept)
        if self._senses_by_lang_concept.get((language, concept)):
            return LexicalizationStatus.LEXICALISED
        if (language, concept) in self.gaps:
            return LexicalizationStatus.GAP
        return LexicalizationStatus.UNKNOWN

    # ------------------------------------------------------------------
    # validation

    def validate(self) -> list[Violation]:
        """Check every cross-record invariant; violations are data, not
        exceptions. An empty list means the store is consistent."""
        violations: list[Violation] = []

        seen_rel: set[tuple[str, str, str]] = set()
        for rel in self.concept_relations:
            desc = f"{rel.source} -{rel.kind}-> {rel.target}"
            for endpoint in (rel.source, rel.target):
                if endpoint not in self.concepts:
                    violations.append(Violation(
                        "relation-endpoints-resolve",
                        f"concept relation references unknown concept {endpoint!r}",
                        (desc,)))
            if rel.key in seen_rel:
                violations.append(Violation(
                    "relation-unique", f"duplicate concept relation {desc}", (desc,)))
            seen_rel.add(rel.key)

        cycle_nodes = self._isa_cycle_nodes()
        if cycle_nodes:
            violations.append(Violation(
                "is-a-acyclic",
                "is-a subgraph contains a cycle",
                tuple(sorted(cycle_nodes))))

        for sense in self.senses.values():
            violations.extend(self._check_reference(
                "sense", f"sense {sense.id}", sense.language, sense.concept, sense.source_id))

        for gap in self.gaps.values():
            desc = f"gap {gap.language}/{gap.concept}"
            violations.extend(self._check_reference(
                "gap", desc, gap.language, gap.concept, gap.source_id))
            if self._senses_by_lang_concept.get((gap.language, gap.concept)):
                sense_ids = self._senses_by_lang_concept[(gap.language, gap.concept)]
                violations.append(Violation(
                    "sense-gap-mutual-exclusion",
                    f"{gap.language} both lexicalises {gap.concept} and records it as a gap",
                    (desc, *sorted(sense_ids)),
                    gap.source_id))

        # a concept layer node must be attested somewhere: at least one
        # sense, or at least one gap record (gap-only domains are legal)
        attested = set(self._senses_by_concept)
        attested.update(concept for (_lang, concept) in self.gaps)
        for concept_id in self.concepts:
            if concept_id not in attested:
                violations.append(Violation(
                    "concept-attested",
                    f"concept {concept_id!r} has no sense and no gap record in any lexicon",
                    (concept_id,)))

        for rel in self.intra_relations:
            desc = f"intra {rel.source} -{rel.kind}-> {rel.target}"
            src = self.senses.get(rel.source)
            tgt = self.senses.get(rel.target)
            for sense_id, sense in ((rel.source, src), (rel.target, tgt)):
                if sense is None:
                    violations.append(Violation(
                        "relation-endpoints-resolve",
                        f"intra-lingual relation references unknown sense {sense_id!r}",
                        (desc,), rel.source_id))
            if src is not None and tgt is not None and src.language != tgt.language:
                violations.append(Violation(
                    "intra-same-language",
                    f"intra-lingual relation spans {src.language} and {tgt.language}",
                    (desc,), rel.source_id))
            if rel.source_id not in self.sources:
                violations.append(self._dangling_source(desc, rel.source_id))

        seen_cross: set[tuple[str, str]] = set()
        for rel in self.cross_relations:
            desc = f"cognate {rel.source} ~ {rel.target}"
            src = self.senses.get(rel.source)
            tgt = self.senses.get(rel.target)
            for sense_id, sense in ((rel.source, src), (rel.target, tgt)):
                if sense is None:
                    violations.append(Violation(
                        "relation-endpoints-resolve",
                        f"cross-lingual relation references unknown sense {sense_id!r}",
                        (desc,), rel.source_id))
            if src is not None and tgt is not None and src.language == tgt.language:
                violations.append(Violation(
                    "cross-different-languages",
                    f"cognate links two {src.language} senses",
                    (desc,), rel.source_id))
            if rel.key in seen_cross:
                violations.append(Violation(
                    "cross-unique", f"duplicate cognate {desc}", (desc,), rel.source_id))
            seen_cross.add(rel.key)
            if rel.source_id not in self.sources:
                violations.append(self._dangling_source(desc, rel.source_id))

        return violations

    def _check_reference(self, what: str, desc: str, language: str,
                         concept: str, source_id: str) -> list[Violation]:
        out = []
        if language not in self.languages:
            out.append(Violation(
                f"{what}-language-resolves",
                f"{desc} references unknown language {language!r}", (desc,), source_id))
        if concept not in self.concepts:
            out.append(Violation(
                f"{what}-concept-resolves",
                f"{desc} references unknown concept {concept!r}", (desc,), source_id))
        if source_id not in self.sources:
            out.append(self._dangling_source(desc, source_id))
        return out

    @staticmethod
    def _dangling_source(desc: str, source_id: str) -> Violation:
        return Violation(
            "provenance-resolves",
            f"{desc} references unknown source {source_id!r}", (desc,), source_id)

    def _isa_cycle_nodes(self) -> set[str]:
        """Kahn's algorithm on the is-a subgraph; whatever cannot be
        topologically ordered lies on or downstream of a cycle."""
        out_deg: dict[str, int] = defaultdict(int)
        preds: dict[str, list[str]] = defaultdict(list)
        nodes: set[str] = set()
        for rel in self.concept_relations:
            if rel.kind != "is-a":
                continue
            nodes.add(rel.source)
            nodes.add(rel.target)
            out_deg[rel.source] += 1
            preds[rel.target].append(rel.source)
        queue = [n for n in nodes if out_deg[n] == 0]
        done = 0
        while queue:
            node = queue.pop()
            done += 1
            for pred in preds.get(node, ()):
                out_deg[pred] -= 1
                if out_deg[pred] == 0:
                    queue.append(pred)
        if done == len(nodes):
            return set()
        return {n for n in nodes if out_deg[n] > 0}

    # ------------------------------------------------------------------
    # exploration queries

    def lookup_word(self, language: str, lemma: str) -> list[WordEntry]:
        """All meanings of a word in a language, each with its concept and
        attached intra-lingual relations and cognates. The lemma is
        normalized exactly as at ingest, so user input round-trips."""
        self._require_language(language)
        lemma = normalize_lemma(lemma)
        entries = []
        for sense_id in sorted(self._senses_by_lang_lemma.get((language, lemma), ())):
            sense = self.senses[sense_id]
            cognates = []
            for rel in self._cross_by_sense.get(sense_id, ()):
                other_id = rel.target if rel.source == sense_id else rel.source
                other = self.senses.get(other_id)
                if other is not None:
                    cognates.append((rel, other))
            cognates.sort(key=lambda pair: pair[1].id)
            entries.append(WordEntry(
                sense=sense,
                concept=self.concepts[sense.concept],
                intra_relations=tuple(self._intra_by_sense.get(sense_id, ())),
                cognates=tuple(cognates),
            ))
        return entries

    def concept_lexicalisations(
        self, concept: str,
    ) -> dict[str, tuple[LexicalizationStatus, tuple[str, ...]]]:
        """Status of one concept across every known language. Languages with
        status Unknown are included (flagged by the status itself); UIs may
        omit them from the world map."""
        self._require_concept(concept)
        out: dict[str, tuple[LexicalizationStatus, tuple[str, ...]]] = {}
        for code in sorted(self.languages):
            status = self.status(code, concept)
            lemmas: tuple[str, ...] = ()
            if status is LexicalizationStatus.LEXICALISED:
                lemmas = tuple(sorted(s.lemma for s in self.senses_of(code, concept)))
            out[code] = (status, lemmas)
        return out

    def neighborhood(self, concept: str, language: str, depth: int,
                     kinds: tuple[str, ...] | None = None) -> ConceptNeighborhood:
        """BFS ball of the concept graph around ``concept`` up to ``depth``
        hops, over all relation kinds by default (``kinds`` filters).
        Relations are traversed in both directions: broader and narrower
        concepts are both neighbors."""
        self._require_concept(concept)
        self._require_language(language)
        if depth < 1:
            raise ValueError(f"depth must be >= 1, got {depth}")
        kind_set = set(kinds) if kinds is not None else None

        def included(rel: ConceptRelation) -> bool:
            return kind_set is None or rel.kind in kind_set

        visited = {concept}
        order = [concept]
        frontier = [concept]
        for _hop in range(depth):
            ring: set[str] = set()
            for node in frontier:
                for rel in self._out_relations.get(node, ()):
                    if included(rel) and rel.target in self.concepts:
                        ring.add(rel.target)
                for rel in self._in_relations.get(node, ()):
                    if included(rel) and rel.source in self.concepts:
                        ring.add(rel.source)
            frontier = sorted(ring - visited)
            visited.update(frontier)
            order.extend(frontier)
            if not frontier:
                break

        nodes = tuple(self._annotate(c, language) for c in order)
        edges = tuple(
            rel for rel in self.concept_relations
            if included(rel) and rel.source in visited and rel.target in visited
        )
        return ConceptNeighborhood(focus=concept, language=language, nodes=nodes, edges=edges)

    def _annotate(self, concept: str, language: str) -> NeighborhoodNode:
        status = self.status(language, concept)
        lemmas: tuple[str, ...] = ()
        if status is LexicalizationStatus.LEXICALISED:
            lemmas = tuple(sorted(s.lemma for s in self.senses_of(language, concept)))
        return NeighborhoodNode(concept=concept, status=status, lemmas=lemmas)

    def children_of(self, concept: str) -> list[str]:
        """Direct is-a children (narrower concepts), sorted by id."""
        return sorted({rel.source for rel in self._in_relations.get(concept, ())
                       if rel.kind == "is-a"})

    def domain_tree(self, root: str, language: str) -> DomainTree:
        """Every concept reachable from ``root`` via is-a in the child
        direction, annotated with the three-state status for ``language``.
        Preorder traversal with children sorted by concept id; the visited
        set makes DAG sharing (and even a broken cyclic store) terminate."""
        if root not in self.concepts:
            raise UnknownRootError(root)
        self._require_language(language)
        nodes: list[DomainNode] = []
        visited: set[str] = set()
        stack = [root]
        while stack:
            concept = stack.pop()
            if concept in visited:
                continue
            visited.add(concept)
            children = self.children_of(concept)
            annotated = self._annotate(concept, language)
            nodes.append(DomainNode(
                concept=concept, status=annotated.status,
                lemmas=annotated.lemmas, children=tuple(children)))
            stack.extend(reversed(children))
        return DomainTree(root=root, language=language, nodes=tuple(nodes))

    def language_profile(self, language: str) -> LanguageProfile:
        self._require_language(language)
        sense_ids = self._senses_by_lang.get(language, [])
        lemmas = {self.senses[sid].lemma for sid in sense_ids}
        gaps = sum(1 for (lang, _c) in self.gaps if lang == language)
        intra = sum(1 for rel in self.intra_relations
                    if self._relation_language(rel.source) == language)
        cross = sum(
            1 for rel in self.cross_relations
            if language in (self._relation_language(rel.source),
                            self._relation_language(rel.target)))
        return LanguageProfile(
            language=self.languages[language],
            senses=len(sense_ids),
            distinct_lemmas=len(lemmas),
            gaps=gaps,
            relations=intra + cross,
        )

    def _relation_language(self, sense_id: str) -> str | None:
        sense = self.senses.get(sense_id)
        return sense.language if sense is not None else None

    # ------------------------------------------------------------------
    # snapshot cache

    def contents(self) -> dict:
        """Canonical, order-insensitive view of the stored records; two
        stores with equal contents() are interchangeable."""
        return {
            "languages": sorted(self.languages.values(), key=lambda r: r.code),
            "concepts": sorted(self.concepts.values(), key=lambda r: r.id),
            "concept_relations": sorted(self.concept_relations, key=lambda r: r.key),
            "senses": sorted(self.senses.values(), key=lambda r: r.id),
            "gaps": sorted(self.gaps.values(), key=lambda r: r.key),
            "intra_relations": sorted(self.intra_relations,
                                      key=lambda r: (r.source, r.kind, r.target)),
            "cross_relations": sorted(self.cross_relations, key=lambda r: r.key),
            "sources": sorted(self.sources.values(), key=lambda r: r.source_id),
        }

    def save_snapshot(self, path: str | Path):
        payload = pickle.dumps(self.contents(), protocol=pickle.HIGHEST_PROTOCOL)
        with open(path, "wb") as fh:
            fh.write(_SNAPSHOT_MAGIC)
            fh.write(struct.pack(">I", _SNAPSHOT_VERSION))
            fh.write(payload)

    @classmethod
    def load_snapshot(cls, path: str | Path) -> "Database":
        """Rebuild a store from a snapshot file. Raises SnapshotFormatError
        for anything but the current format version: stale caches are
        invalidated, the TSV sources stay authoritative."""
        with open(path, "rb") as fh:
            magic = fh.read(len(_SNAPSHOT_MAGIC))
            if magic != _SNAPSHOT_MAGIC:
                raise SnapshotFormatError(f"{path}: not a lexdiv snapshot")
            (version,) = struct.unpack(">I", fh.read(4))
            if version != _SNAPSHOT_VERSION:
                raise SnapshotFormatError(
                    f"{path}: snapshot version {version} != {_SNAPSHOT_VERSION}, rebuild from TSV")
            contents = pickle.load(fh)
        db = cls()
        for lang in contents["languages"]:
            db.add_language(lang)
        for concept in contents["concepts"]:
            db.add_concept(concept)
        for rel in contents["concept_relations"]:
            db.add_concept_relation(rel)
        for sense in contents["senses"]:
            db.add_sense(sense)
        for gap in contents["gaps"]:
            db.add_gap(gap)
        for rel in contents["intra_relations"]:
            db.add_intra_relation(rel)
        for rel in contents["cross_relations"]:
            db.add_cross_relation(rel)
        for prov in contents["sources"]:
            db.add_source(prov)
        return db
