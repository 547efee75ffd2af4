"""TSV parsing and batch merging.

Interchange format: UTF-8, one record per line, single-tab separator, no
quoting or escaping (lemmas may not contain tabs or newlines), lines
starting with ``#`` are comments. One file per record type:

    languages.tsv          code  name  phylum  lat  lon     (lat/lon may be empty)
    concepts.tsv           id  pos  gloss  [pwn30_id]  [parent]
    concept_relations.tsv  source  kind  target
    senses.tsv             language  lemma  concept  source_id
    gaps.tsv               language  concept  source_id
    cognates.tsv           lang1  lemma1  concept1  lang2  lemma2  concept2  source_id
    intra_relations.tsv    language  lemma1  concept1  kind  lemma2  concept2  source_id
    sources.tsv            source_id  license  redistributable(0|1)

The optional ``parent`` column of concepts.tsv emits an is-a relation from
the concept to its parent, so a small hierarchy fits in one file;
concept_relations.tsv is the general mechanism for every relation kind.

Parsing is total: no input line can abort ingestion. Every non-blank,
non-comment line ends up accepted, rejected (with the violated rule), or
conflict-noted, and the merge step enforces referential integrity plus the
sense-wins-over-gap policy: a lexicalisation is positive evidence, a gap
claim contradicted by an attested word is discarded whichever arrives
first.

Parsers are pure stream transducers; ``merge`` requires exclusive write
access to the store.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

from .model import (
    CONCEPT_RELATION_KINDS,
    POS_VALUES,
    Concept,
    ConceptRelation,
    CrossLingualRelation,
    IntraLingualRelation,
    LanguageDescriptor,
    LexicalGap,
    Provenance,
    Sense,
    make_sense,
    make_sense_id,
    normalize_lemma,
)
from .store import Database

DATA_FILES = {
    "languages": "languages.tsv",
    "concepts": "concepts.tsv",
    "concept_relations": "concept_relations.tsv",
    "senses": "senses.tsv",
    "gaps": "gaps.tsv",
    "cognates": "cognates.tsv",
    "intra_relations": "intra_relations.tsv",
    "sources": "sources.tsv",
}

RECORD_TYPES = tuple(DATA_FILES)


@dataclass(frozen=True, slots=True)
class RejectedLine:
    line: int | None
    rule: str
    raw: str


@dataclass(frozen=True, slots=True)
class ConflictNote:
    record: str
    resolution: str


@dataclass(slots=True)
class ParseResult:
    records: list = field(default_factory=list)
    rejected: list[RejectedLine] = field(default_factory=list)
    conflicts: list[ConflictNote] = field(default_factory=list)


@dataclass(slots=True)
class RecordBatch:
    """Parsed records of every type, ready to merge. Built either by the
    parsers or directly in code (fixtures, tests)."""

    languages: list[LanguageDescriptor] = field(default_factory=list)
    concepts: list[Concept] = field(default_factory=list)
    concept_relations: list[ConceptRelation] = field(default_factory=list)
    senses: list[Sense] = field(default_factory=list)
    gaps: list[LexicalGap] = field(default_factory=list)
    cognates: list[CrossLingualRelation] = field(default_factory=list)
    intra_relations: list[IntraLingualRelation] = field(default_factory=list)
    sources: list[Provenance] = field(default_factory=list)


@dataclass(slots=True)
class IngestReport:
    """Outcome of parse + merge. Every non-blank, non-comment input line is
    accounted for in exactly one of the three buckets."""

    accepted: dict[str, int] = field(default_factory=dict)
    rejected: list[RejectedLine] = field(default_factory=list)
    conflicts: list[ConflictNote] = field(default_factory=list)

    def count(self, record_type: str) -> int:
        return self.accepted.get(record_type, 0)

    def total_accepted(self) -> int:
        return sum(self.accepted.values())

    def summary(self) -> str:
        parts = [f"{k}={v}" for k, v in sorted(self.accepted.items()) if v]
        return (f"accepted {sum(self.accepted.values())} ({', '.join(parts) or 'nothing'}), "
                f"rejected {len(self.rejected)}, conflicts {len(self.conflicts)}")


def _lines(stream: Iterable[str] | str) -> Iterator[tuple[int, str]]:
    """Yield (1-based line number, line) for data lines, skipping blanks and
    ``#`` comments. Accepts an open text file, any iterable of lines, or a
    whole document as a single string."""
    if isinstance(stream, str):
        stream = stream.splitlines()
    for number, raw in enumerate(stream, start=1):
        line = raw.rstrip("\n").rstrip("\r")
        if not line.strip() or line.startswith("#"):
            continue
        yield number, line


# ----------------------------------------------------------------------
# per-format parsers


def parse_languages(stream) -> ParseResult:
    result = ParseResult()
    for number, line in _lines(stream):
        cols = line.split("\t")
        if len(cols) != 5:
            result.rejected.append(RejectedLine(number, "columns", line))
            continue
        code, name, phylum, lat_s, lon_s = (c.strip() for c in cols)
        if (lat_s == "") != (lon_s == ""):
            result.rejected.append(RejectedLine(number, "latlon", line))
            continue
        try:
            lat = float(lat_s) if lat_s else None
            lon = float(lon_s) if lon_s else None
        except ValueError:
            result.rejected.append(RejectedLine(number, "latlon", line))
            continue
        try:
            result.records.append(LanguageDescriptor(
                code=code, name=name, phylum=phylum or None, latitude=lat, longitude=lon))
        except ValueError:
            result.rejected.append(RejectedLine(number, "code", line))
    return result


def parse_concepts(stream) -> ParseResult:
    """CONCEPTS format. Records come out in input order; a line with the
    optional fifth column additionally emits child is-a parent."""
    result = ParseResult()
    for number, line in _lines(stream):
        cols = [c.strip() for c in line.split("\t")]
        if not 3 <= len(cols) <= 5:
            result.rejected.append(RejectedLine(number, "columns", line))
            continue
        concept_id, pos, gloss = cols[0], cols[1], cols[2]
        pwn30 = cols[3] if len(cols) > 3 and cols[3] else None
        parent = cols[4] if len(cols) > 4 and cols[4] else None
        if pos not in POS_VALUES:
            result.rejected.append(RejectedLine(number, "pos", line))
            continue
        if not concept_id:
            result.rejected.append(RejectedLine(number, "id", line))
            continue
        result.records.append(Concept(id=concept_id, gloss=gloss, pos=pos, pwn30_id=pwn30))
        if parent is not None:
            try:
                result.records.append(ConceptRelation(source=concept_id, target=parent, kind="is-a"))
            except ValueError:
                result.rejected.append(RejectedLine(number, "self-loop", line))
    return result


def parse_concept_relations(stream) -> ParseResult:
    result = ParseResult()
    for number, line in _lines(stream):
        cols = [c.strip() for c in line.split("\t")]
        if len(cols) != 3:
            result.rejected.append(RejectedLine(number, "columns", line))
            continue
        source, kind, target = cols
        if kind not in CONCEPT_RELATION_KINDS:
            result.rejected.append(RejectedLine(number, "kind", line))
            continue
        try:
            result.records.append(ConceptRelation(source=source, target=target, kind=kind))
        except ValueError:
            result.rejected.append(RejectedLine(number, "self-loop", line))
    return result


def parse_senses(stream) -> ParseResult:
    """SENSES format. Lemmas are NFC-normalized and trimmed; duplicate
    (language, lemma, concept) lines collapse to one sense plus a conflict
    note (first occurrence wins)."""
    result = ParseResult()
    seen: dict[tuple[str, str, str], int] = {}
    for number, line in _lines(stream):
        cols = line.split("\t")
        if len(cols) != 4:
            result.rejected.append(RejectedLine(number, "columns", line))
            continue
        language, lemma_raw, concept, source_id = (c.strip() for c in cols)
        lemma = normalize_lemma(lemma_raw)
        if not lemma:
            result.rejected.append(RejectedLine(number, "empty-lemma", line))
            continue
        key = (language, lemma, concept)
        if key in seen:
            result.conflicts.append(ConflictNote(
                record=f"sense {make_sense_id(*key)} (line {number})",
                resolution=f"duplicate of line {seen[key]} collapsed"))
            continue
        seen[key] = number
        result.records.append(make_sense(language, lemma, concept, source_id))
    return result


def parse_gaps(stream) -> ParseResult:
    result = ParseResult()
    for number, line in _lines(stream):
        cols = line.split("\t")
        if len(cols) != 3:
            result.rejected.append(RejectedLine(number, "columns", line))
            continue
        language, concept, source_id = (c.strip() for c in cols)
        result.records.append(LexicalGap(language=language, concept=concept, source_id=source_id))
    return result


def parse_cognates(stream) -> ParseResult:
    """COGNATES format: both endpoints given as (language, lemma, concept)
    triples. Pairs are canonicalized to (min, max) sense-id order; a pair
    listed in both orders collapses with a conflict note; same-language
    pairs are rejected."""
    result = ParseResult()
    seen: dict[tuple[str, str], int] = {}
    for number, line in _lines(stream):
        cols = line.split("\t")
        if len(cols) != 7:
            result.rejected.append(RejectedLine(number, "columns", line))
            continue
        l1, lemma1, c1, l2, lemma2, c2, source_id = (c.strip() for c in cols)
        if l1 == l2:
            result.rejected.append(RejectedLine(number, "same-language", line))
            continue
        id1 = make_sense_id(l1, normalize_lemma(lemma1), c1)
        id2 = make_sense_id(l2, normalize_lemma(lemma2), c2)
        rel = CrossLingualRelation(source=id1, target=id2, source_id=source_id)
        if rel.key in seen:
            result.conflicts.append(ConflictNote(
                record=f"cognate {rel.source} ~ {rel.target} (line {number})",
                resolution=f"duplicate of line {seen[rel.key]} collapsed"))
            continue
        seen[rel.key] = number
        result.records.append(rel)
    return result


def parse_intra_relations(stream) -> ParseResult:
    """INTRA_RELATIONS format. Unknown kind labels are preserved verbatim
    (open relation inventory) rather than rejected."""
    result = ParseResult()
    for number, line in _lines(stream):
        cols = line.split("\t")
        if len(cols) != 7:
            result.rejected.append(RejectedLine(number, "columns", line))
            continue
        language, lemma1, c1, kind, lemma2, c2, source_id = (c.strip() for c in cols)
        id1 = make_sense_id(language, normalize_lemma(lemma1), c1)
        id2 = make_sense_id(language, normalize_lemma(lemma2), c2)
        try:
            result.records.append(IntraLingualRelation(
                kind=kind, source=id1, target=id2, source_id=source_id))
        except ValueError:
            result.rejected.append(RejectedLine(number, "self-loop", line))
    return result


def parse_sources(stream) -> ParseResult:
    result = ParseResult()
    for number, line in _lines(stream):
        cols = line.split("\t")
        if len(cols) != 3:
            result.rejected.append(RejectedLine(number, "columns", line))
            continue
        source_id, license_, redis = (c.strip() for c in cols)
        if redis not in ("0", "1"):
            result.rejected.append(RejectedLine(number, "redistributable", line))
            continue
        try:
            result.records.append(Provenance(
                source_id=source_id, license=license_, redistributable=redis == "1"))
        except ValueError:
            result.rejected.append(RejectedLine(number, "id", line))
    return result


_PARSERS = {
    "languages": parse_languages,
    "concepts": parse_concepts,
    "concept_relations": parse_concept_relations,
    "senses": parse_senses,
    "gaps": parse_gaps,
    "cognates": parse_cognates,
    "intra_relations": parse_intra_relations,
    "sources": parse_sources,
}


# ----------------------------------------------------------------------
# merge


def merge(batch: RecordBatch, db: Database) -> IngestReport:
    """Merge a parsed batch into the store.

    Enforces referential integrity (records naming unknown languages,
    concepts, senses or sources are rejected, never added) and resolves
    sense-vs-gap conflicts with the sense-wins policy, in either arrival
    order: an incoming gap contradicted by a stored sense is rejected, an
    incoming sense evicts a stored gap. Identical re-submissions are
    ignored with a conflict note, which makes merge idempotent. All
    problems land in the report; nothing raises.
    """
    report = IngestReport(accepted={t: 0 for t in RECORD_TYPES})

    for prov in batch.sources:
        if db.has_source(prov.source_id):
            _note_duplicate(report, db.sources[prov.source_id] == prov,
                            f"source {prov.source_id}")
            continue
        db.add_source(prov)
        report.accepted["sources"] += 1

    for lang in batch.languages:
        if db.has_language(lang.code):
            _note_duplicate(report, db.languages[lang.code] == lang, f"language {lang.code}")
            continue
        db.add_language(lang)
        report.accepted["languages"] += 1

    for concept in batch.concepts:
        if db.has_concept(concept.id):
            _note_duplicate(report, db.concepts[concept.id] == concept, f"concept {concept.id}")
            continue
        db.add_concept(concept)
        report.accepted["concepts"] += 1

    for rel in batch.concept_relations:
        desc = f"concept relation {rel.source} -{rel.kind}-> {rel.target}"
        if not db.has_concept(rel.source) or not db.has_concept(rel.target):
            report.rejected.append(RejectedLine(None, "dangling-concept", desc))
            continue
        if db.has_concept_relation(rel.key):
            report.conflicts.append(ConflictNote(desc, "duplicate ignored"))
            continue
        if rel.kind == "is-a" and _would_cycle(db, rel):
            report.rejected.append(RejectedLine(None, "is-a-cycle", desc))
            continue
        db.add_concept_relation(rel)
        report.accepted["concept_relations"] += 1

    for sense in batch.senses:
        desc = f"sense {sense.id}"
        if not _endpoints_ok(db, report, desc, sense.language, sense.concept, sense.source_id):
            continue
        if db.has_sense_key(sense.key):
            _note_duplicate(report, db.senses[db._sense_keys[sense.key]] == sense, desc)
            continue
        if db.has_gap((sense.language, sense.concept)):
            # sense wins: the attested word falsifies the gap claim
            db.remove_gap((sense.language, sense.concept))
            report.conflicts.append(ConflictNote(
                f"gap {sense.language}/{sense.concept}",
                f"evicted by incoming {desc} (sense wins)"))
        db.add_sense(sense)
        report.accepted["senses"] += 1

    for gap in batch.gaps:
        desc = f"gap {gap.language}/{gap.concept}"
        if not _endpoints_ok(db, report, desc, gap.language, gap.concept, gap.source_id):
            continue
        if db.senses_of(gap.language, gap.concept):
            report.conflicts.append(ConflictNote(
                desc, "rejected: language lexicalises the concept (sense wins)"))
            continue
        if db.has_gap(gap.key):
            _note_duplicate(report, db.gaps[gap.key] == gap, desc)
            continue
        db.add_gap(gap)
        report.accepted["gaps"] += 1

    for rel in batch.cognates:
        desc = f"cognate {rel.source} ~ {rel.target}"
        if not db.has_source(rel.source_id):
            report.rejected.append(RejectedLine(None, "dangling-source", desc))
            continue
        src = db.senses.get(rel.source)
        tgt = db.senses.get(rel.target)
        if src is None or tgt is None:
            report.rejected.append(RejectedLine(None, "dangling-sense", desc))
            continue
        if src.language == tgt.language:
            report.rejected.append(RejectedLine(None, "same-language", desc))
            continue
        if db.has_cross_relation(rel.key):
            report.conflicts.append(ConflictNote(desc, "duplicate ignored"))
            continue
        db.add_cross_relation(rel)
        report.accepted["cognates"] += 1

    for rel in batch.intra_relations:
        desc = f"intra {rel.source} -{rel.kind}-> {rel.target}"
        if not db.has_source(rel.source_id):
            report.rejected.append(RejectedLine(None, "dangling-source", desc))
            continue
        src = db.senses.get(rel.source)
        tgt = db.senses.get(rel.target)
        if src is None or tgt is None:
            report.rejected.append(RejectedLine(None, "dangling-sense", desc))
            continue
        if src.language != tgt.language:
            report.rejected.append(RejectedLine(None, "cross-language", desc))
            continue
        if any(r.kind == rel.kind and {r.source, r.target} == {rel.source, rel.target}
               for r in db._intra_by_sense.get(rel.source, ())):
            report.conflicts.append(ConflictNote(desc, "duplicate ignored"))
            continue
        db.add_intra_relation(rel)
        report.accepted["intra_relations"] += 1

    return report


def _note_duplicate(report: IngestReport, identical: bool, desc: str):
    if identical:
        report.conflicts.append(ConflictNote(desc, "duplicate ignored"))
    else:
        report.conflicts.append(ConflictNote(desc, "conflicting redefinition ignored (first wins)"))


def _endpoints_ok(db: Database, report: IngestReport, desc: str,
                  language: str, concept: str, source_id: str) -> bool:
    if not db.has_language(language):
        report.rejected.append(RejectedLine(None, "dangling-language", desc))
        return False
    if not db.has_concept(concept):
        report.rejected.append(RejectedLine(None, "dangling-concept", desc))
        return False
    if not db.has_source(source_id):
        report.rejected.append(RejectedLine(None, "dangling-source", desc))
        return False
    return True


def _would_cycle(db: Database, rel: ConceptRelation) -> bool:
    """True if adding this is-a edge closes a cycle: the parent already
    reaches the child via is-a."""
    stack = [rel.target]
    visited = set()
    while stack:
        node = stack.pop()
        if node == rel.source:
            return True
        if node in visited:
            continue
        visited.add(node)
        stack.extend(r.target for r in db._out_relations.get(node, ()) if r.kind == "is-a")
    return False


# ----------------------------------------------------------------------
# whole-directory ingestion


def parse_data_dir(path: str | Path) -> tuple[RecordBatch, ParseResult]:
    """Parse every recognized TSV file under ``path``. Missing files are
    simply absent record types. The returned ParseResult carries the
    parse-stage rejections and conflicts (records land in the batch)."""
    path = Path(path)
    batch = RecordBatch()
    stage = ParseResult()
    for record_type, filename in DATA_FILES.items():
        file_path = path / filename
        if not file_path.exists():
            continue
        with open(file_path, encoding="utf-8") as fh:
            result = _PARSERS[record_type](fh)
        for record in result.records:
            if isinstance(record, ConceptRelation):
                batch.concept_relations.append(record)
            else:
                getattr(batch, record_type).append(record)
        stage.rejected.extend(
            RejectedLine(r.line, r.rule, f"{filename}:{r.line}: {r.raw}") for r in result.rejected)
        stage.conflicts.extend(result.conflicts)
    return batch, stage


def ingest_data_dir(path: str | Path, db: Database) -> IngestReport:
    """Parse a data directory and merge it into the store, returning the
    combined report: every non-blank, non-comment line of every file is
    accepted, rejected, or conflict-noted exactly once."""
    batch, stage = parse_data_dir(path)
    report = merge(batch, db)
    report.rejected = stage.rejected + report.rejected
    report.conflicts = stage.conflicts + report.conflicts
    return report
