"""Canonical demo corpora used across tests, demos and docs.

F1 "rice/fish": six languages over four concepts, exercising every record
type: lexicalisations, two lexical gaps (English for raw rice, Swahili for
rice in general), and three cognate pairs (rice/riso, fish/pesce,
hal/kala). Lemmas not dictated by the scenario are synthetic placeholders.

F2 "cousins": a kinship subdomain of 67 concepts where English lexicalises
only the root and records all 66 descendants as gaps, while the synthetic
Dravidian-style language ``dra`` has 16 distinct words and no information
about the rest.
"""

from __future__ import annotations

from pathlib import Path

from .ingest import DATA_FILES, RecordBatch, merge
from .model import (
    Concept,
    ConceptRelation,
    CrossLingualRelation,
    LanguageDescriptor,
    LexicalGap,
    Provenance,
    make_sense,
    make_sense_id,
)
from .store import Database

F1_SOURCE = "src1"
F2_SOURCE = "src2"

COUSIN_ROOT = "cousin"
COUSIN_CHILDREN = tuple(f"cousin-{i:03d}" for i in range(1, 67))
DRA_LEXICALISED = COUSIN_CHILDREN[:16]

_ENG = LanguageDescriptor("eng", "English", "Indo-European", 52.0, -1.0)


def fixture_f1() -> RecordBatch:
    batch = RecordBatch()
    batch.sources.append(Provenance(F1_SOURCE, "CC-BY-4.0", True))
    batch.languages.extend([
        _ENG,
        LanguageDescriptor("ita", "Italian", "Indo-European", 42.8, 12.8),
        LanguageDescriptor("swa", "Swahili", "Niger-Congo", -6.0, 35.0),
        LanguageDescriptor("hun", "Hungarian", "Uralic", 47.0, 19.5),
        LanguageDescriptor("fin", "Finnish", "Uralic", 62.0, 26.0),
        LanguageDescriptor("kan", "Kannada", "Dravidian", 13.6, 76.7),
    ])
    batch.concepts.extend([
        Concept("rice-general", "cereal grain used as food", "noun", pwn30_id="pwn30-rice"),
        Concept("raw-rice", "rice in its raw, uncooked state", "noun"),
        Concept("cooked-rice", "rice prepared by cooking", "noun"),
        Concept("fish", "aquatic vertebrate animal", "noun", pwn30_id="pwn30-fish"),
    ])
    batch.concept_relations.extend([
        ConceptRelation("raw-rice", "rice-general", "is-a"),
        ConceptRelation("cooked-rice", "rice-general", "is-a"),
    ])
    for language, lemma, concept in [
        ("eng", "rice", "rice-general"),
        ("ita", "riso", "rice-general"),
        ("swa", "s-raw", "raw-rice"),
        ("kan", "s-cooked", "cooked-rice"),
        ("eng", "fish", "fish"),
        ("ita", "pesce", "fish"),
        ("hun", "hal", "fish"),
        ("fin", "kala", "fish"),
    ]:
        batch.senses.append(make_sense(language, lemma, concept, F1_SOURCE))
    batch.gaps.extend([
        LexicalGap("eng", "raw-rice", F1_SOURCE),
        LexicalGap("swa", "rice-general", F1_SOURCE),
    ])
    for (l1, w1, c1), (l2, w2, c2) in [
        (("eng", "rice", "rice-general"), ("ita", "riso", "rice-general")),
        (("eng", "fish", "fish"), ("ita", "pesce", "fish")),
        (("hun", "hal", "fish"), ("fin", "kala", "fish")),
    ]:
        batch.cognates.append(CrossLingualRelation(
            make_sense_id(l1, w1, c1), make_sense_id(l2, w2, c2), F1_SOURCE))
    return batch


def fixture_f2(include_eng: bool = True) -> RecordBatch:
    """The cousins domain. ``include_eng=False`` when merging on top of a
    store that already declares English (e.g. after F1)."""
    batch = RecordBatch()
    batch.sources.append(Provenance(F2_SOURCE, "CC-BY-4.0", True))
    if include_eng:
        batch.languages.append(_ENG)
    batch.languages.append(LanguageDescriptor("dra", "Dravidic Demo", "Dravidian", 12.0, 78.0))
    batch.concepts.append(Concept(COUSIN_ROOT, "child of an aunt or uncle", "noun"))
    for i, child in enumerate(COUSIN_CHILDREN, start=1):
        batch.concepts.append(Concept(
            child, f"cousin distinguished by age, sex and lineage (variant {i:02d})", "noun"))
        batch.concept_relations.append(ConceptRelation(child, COUSIN_ROOT, "is-a"))
        batch.gaps.append(LexicalGap("eng", child, F2_SOURCE))
    batch.senses.append(make_sense("eng", "cousin", COUSIN_ROOT, F2_SOURCE))
    for i, child in enumerate(DRA_LEXICALISED, start=1):
        batch.senses.append(make_sense("dra", f"dw{i:02d}", child, F2_SOURCE))
    return batch


def fixture_f1_f2() -> RecordBatch:
    """F1 and F2 as one batch with the shared English descriptor deduped."""
    f1 = fixture_f1()
    f2 = fixture_f2(include_eng=False)
    combined = RecordBatch()
    for name in ("languages", "concepts", "concept_relations", "senses",
                 "gaps", "cognates", "intra_relations", "sources"):
        getattr(combined, name).extend(getattr(f1, name))
        getattr(combined, name).extend(getattr(f2, name))
    return combined


def build_store(*batches: RecordBatch) -> Database:
    """Merge batches into a fresh store, asserting nothing was dropped
    (fixtures are constructed valid)."""
    db = Database()
    for batch in batches:
        report = merge(batch, db)
        if report.rejected:
            raise AssertionError(f"fixture batch rejected records: {report.rejected}")
    return db


def f1_store() -> Database:
    return build_store(fixture_f1())


def f1_f2_store() -> Database:
    return build_store(fixture_f1_f2())


# ----------------------------------------------------------------------
# TSV materialization (for the CLI, the HTTP service, and the demos)


def _fmt_coord(value: float | None) -> str:
    return "" if value is None else repr(value)


def write_data_dir(batch: RecordBatch, path: str | Path):
    """Write a batch as a data directory in the interchange TSV formats."""
    path = Path(path)
    path.mkdir(parents=True, exist_ok=True)
    rows: dict[str, list[str]] = {name: [] for name in DATA_FILES}
    for lang in batch.languages:
        rows["languages"].append("\t".join([
            lang.code, lang.name, lang.phylum or "",
            _fmt_coord(lang.latitude), _fmt_coord(lang.longitude)]))
    for concept in batch.concepts:
        rows["concepts"].append("\t".join([
            concept.id, concept.pos, concept.gloss, concept.pwn30_id or ""]))
    for rel in batch.concept_relations:
        rows["concept_relations"].append(f"{rel.source}\t{rel.kind}\t{rel.target}")
    for sense in batch.senses:
        rows["senses"].append(f"{sense.language}\t{sense.lemma}\t{sense.concept}\t{sense.source_id}")
    for gap in batch.gaps:
        rows["gaps"].append(f"{gap.language}\t{gap.concept}\t{gap.source_id}")
    by_id = {sense.id: sense for sense in batch.senses}

    def triple(sense_id: str) -> tuple[str, str, str]:
        sense = by_id[sense_id]
        return sense.language, sense.lemma, sense.concept

    for rel in batch.cognates:
        a, b = triple(rel.source), triple(rel.target)
        rows["cognates"].append("\t".join([*a, *b, rel.source_id]))
    for rel in batch.intra_relations:
        a, b = triple(rel.source), triple(rel.target)
        rows["intra_relations"].append("\t".join([a[0], a[1], a[2], rel.kind, b[1], b[2], rel.source_id]))
    for prov in batch.sources:
        rows["sources"].append(
            f"{prov.source_id}\t{prov.license}\t{1 if prov.redistributable else 0}")
    for record_type, filename in DATA_FILES.items():
        if not rows[record_type]:
            continue
        with open(path / filename, "w", encoding="utf-8") as fh:
            fh.write(f"# {record_type}\n")
            for row in rows[record_type]:
                fh.write(row + "\n")
