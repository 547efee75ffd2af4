"""Catalogue exports: raw datasets, single-lexicon documents, lexicon sets.

Licensing is enforced at the record level: senses, gaps and relations
whose provenance is marked non-redistributable never reach any sink.
Derived tables (similarity, clusters) are computed over the redistributable
records only, so they cannot leak excluded data either.

Raw gap and cognate exports reuse the ingest TSV formats and round-trip.
Single-lexicon documents are self-contained: besides the language's
senses, gaps and intra-lingual relations they embed the language
descriptor, the referenced concepts and the referenced sources, so
ingesting an exported document into an empty store reproduces the lexicon
exactly. Two document formats exist, a sectioned TSV and an LMF-subset
XML:

    <LexicalResource>
      <Lexicon code=... name=... [phylum= latitude= longitude=]>
        <LexicalEntry id=...>               one per lemma, ordered by id
          <Lemma writtenForm=.../>
          <Sense id=... conceptRef=... sourceId=...>
            <SenseRelation relType=... target=... sourceId=.../>
          </Sense>
        </LexicalEntry>
        <GapList>                           extension: LMF has no gap notion
          <Gap concept=... sourceId=.../>
        </GapList>
        <ConceptInventory>                  extension: makes the document
          <ConceptDef id=... pos=... .../>  self-contained
        </ConceptInventory>
        <SourceInventory>
          <SourceDef id=... license=... redistributable=.../>
        </SourceInventory>
      </Lexicon>
    </LexicalResource>

XML is UTF-8 with double-quoted attributes and id-ordered elements, so
re-exports diff byte-stably.
"""

from __future__ import annotations

import io
import xml.etree.ElementTree as ET
from typing import TextIO

from . import analytics
from .errors import UnknownLanguageError
from .ingest import RecordBatch
from .model import (
    Concept,
    IntraLingualRelation,
    LanguageDescriptor,
    LexicalGap,
    LexicalizationStatus,
    Provenance,
    Sense,
    make_sense,
)
from .store import Database

RAW_KINDS = ("gaps", "cognates", "similarity", "clusters")

GAP_SENTINEL = "GAP"
LEMMA_JOINER = "|"

_TSV_SECTION_PREFIX = "#@ "


def _redistributable(db: Database, source_id: str) -> bool:
    prov = db.sources.get(source_id)
    return prov is not None and prov.redistributable


def _clean_view(db: Database) -> Database:
    """The store restricted to redistributable records. Cheap at desk
    scale and keeps every derived export license-sound by construction."""
    view = Database()
    for lang in db.languages.values():
        view.add_language(lang)
    for concept in db.concepts.values():
        view.add_concept(concept)
    for rel in db.concept_relations:
        view.add_concept_relation(rel)
    for prov in db.sources.values():
        view.add_source(prov)
    for sense in db.senses.values():
        if _redistributable(db, sense.source_id):
            view.add_sense(sense)
    for gap in db.gaps.values():
        if _redistributable(db, gap.source_id):
            view.add_gap(gap)
    for rel in db.intra_relations:
        if (_redistributable(db, rel.source_id)
                and rel.source in view.senses and rel.target in view.senses):
            view.add_intra_relation(rel)
    for rel in db.cross_relations:
        if (_redistributable(db, rel.source_id)
                and rel.source in view.senses and rel.target in view.senses):
            view.add_cross_relation(rel)
    return view


# ----------------------------------------------------------------------
# raw datasets


def export_raw(db: Database, kind: str, sink: TextIO,
               min_overlap: int = analytics.DEFAULT_MIN_OVERLAP) -> int:
    """Write one raw dataset; returns the number of data rows.

    gaps / cognates use the ingest TSV formats (round-trippable);
    similarity rows are `lang_a lang_b score overlap cognate_overlap`;
    cluster rows are `concept cluster_index language lemma`.
    """
    if kind not in RAW_KINDS:
        raise ValueError(f"unknown raw export kind: {kind!r}")
    view = _clean_view(db)
    rows: list[str] = []
    if kind == "gaps":
        for gap in sorted(view.gaps.values(), key=lambda g: g.key):
            rows.append(f"{gap.language}\t{gap.concept}\t{gap.source_id}")
    elif kind == "cognates":
        for rel in sorted(view.cross_relations, key=lambda r: r.key):
            a, b = view.senses[rel.source], view.senses[rel.target]
            rows.append("\t".join([a.language, a.lemma, a.concept,
                                   b.language, b.lemma, b.concept, rel.source_id]))
    elif kind == "similarity":
        sink.write("# lang_a\tlang_b\tscore\toverlap\tcognate_overlap\n")
        for record in analytics.similarity_matrix(view, min_overlap):
            rows.append("\t".join([record.lang_a, record.lang_b, repr(record.score),
                                   str(record.overlap), str(record.cognate_overlap)]))
    else:
        sink.write("# concept\tcluster\tlanguage\tlemma\n")
        for concept_id in sorted(view.concepts):
            clustering = analytics.cognate_clusters(view, concept_id)
            for index, members in enumerate(clustering.clusters):
                for sense in members:
                    rows.append(f"{concept_id}\t{index}\t{sense.language}\t{sense.lemma}")
    for row in rows:
        sink.write(row + "\n")
    return len(rows)


# ----------------------------------------------------------------------
# single-lexicon documents


def _lexicon_records(db: Database, language: str) -> tuple[
        list[Sense], list[LexicalGap], list[IntraLingualRelation], list[Concept], list[Provenance]]:
    view = _clean_view(db)
    senses = sorted((s for s in view.senses.values() if s.language == language),
                    key=lambda s: s.id)
    gaps = sorted((g for g in view.gaps.values() if g.language == language),
                  key=lambda g: g.key)
    intra = sorted((r for r in view.intra_relations
                    if view.senses[r.source].language == language),
                   key=lambda r: (r.source, r.kind, r.target))
    concept_ids = sorted({s.concept for s in senses} | {g.concept for g in gaps})
    concepts = [view.concepts[cid] for cid in concept_ids]
    source_ids = sorted({s.source_id for s in senses} | {g.source_id for g in gaps}
                        | {r.source_id for r in intra})
    sources = [view.sources[sid] for sid in source_ids]
    return senses, gaps, intra, concepts, sources


def export_lexicon(db: Database, language: str, format: str, sink: TextIO) -> int:
    """Write one language's lexicon as a self-contained document; returns
    the number of senses written. ``format`` is ``lmf-xml`` or ``tsv``."""
    if language not in db.languages:
        raise UnknownLanguageError(language)
    if format == "tsv":
        return _export_lexicon_tsv(db, language, sink)
    if format == "lmf-xml":
        return _export_lexicon_lmf(db, language, sink)
    raise ValueError(f"unknown lexicon format: {format!r}")


def _export_lexicon_tsv(db: Database, language: str, sink: TextIO) -> int:
    senses, gaps, intra, concepts, sources = _lexicon_records(db, language)
    lang = db.languages[language]
    sink.write("# lexdiv lexicon document, sectioned interchange TSV\n")
    sink.write(_TSV_SECTION_PREFIX + "languages\n")
    lat = "" if lang.latitude is None else repr(lang.latitude)
    lon = "" if lang.longitude is None else repr(lang.longitude)
    sink.write(f"{lang.code}\t{lang.name}\t{lang.phylum or ''}\t{lat}\t{lon}\n")
    sink.write(_TSV_SECTION_PREFIX + "concepts\n")
    for concept in concepts:
        sink.write(f"{concept.id}\t{concept.pos}\t{concept.gloss}\t{concept.pwn30_id or ''}\n")
    sink.write(_TSV_SECTION_PREFIX + "senses\n")
    for sense in senses:
        sink.write(f"{sense.language}\t{sense.lemma}\t{sense.concept}\t{sense.source_id}\n")
    sink.write(_TSV_SECTION_PREFIX + "gaps\n")
    for gap in gaps:
        sink.write(f"{gap.language}\t{gap.concept}\t{gap.source_id}\n")
    sink.write(_TSV_SECTION_PREFIX + "intra_relations\n")
    by_id = {s.id: s for s in senses}
    for rel in intra:
        a, b = by_id[rel.source], by_id[rel.target]
        sink.write(f"{a.language}\t{a.lemma}\t{a.concept}\t{rel.kind}\t{b.lemma}\t{b.concept}\t{rel.source_id}\n")
    sink.write(_TSV_SECTION_PREFIX + "sources\n")
    for prov in sources:
        sink.write(f"{prov.source_id}\t{prov.license}\t{1 if prov.redistributable else 0}\n")
    return len(senses)


def parse_lexicon_tsv(stream) -> RecordBatch:
    """Read a sectioned lexicon TSV document back into a batch."""
    from . import ingest

    if isinstance(stream, str):
        lines = stream.splitlines()
    else:
        lines = [line.rstrip("\n") for line in stream]
    sections: dict[str, list[str]] = {}
    current: list[str] | None = None
    for line in lines:
        if line.startswith(_TSV_SECTION_PREFIX):
            current = sections.setdefault(line[len(_TSV_SECTION_PREFIX):].strip(), [])
        elif current is not None:
            current.append(line)
    batch = RecordBatch()
    parsers = {
        "languages": (ingest.parse_languages, batch.languages),
        "concepts": (ingest.parse_concepts, batch.concepts),
        "senses": (ingest.parse_senses, batch.senses),
        "gaps": (ingest.parse_gaps, batch.gaps),
        "intra_relations": (ingest.parse_intra_relations, batch.intra_relations),
        "sources": (ingest.parse_sources, batch.sources),
    }
    for name, (parser, bucket) in parsers.items():
        result = parser(sections.get(name, []))
        if result.rejected:
            raise ValueError(f"malformed lexicon document, section {name}: {result.rejected[0]}")
        bucket.extend(result.records)
    return batch


def _export_lexicon_lmf(db: Database, language: str, sink: TextIO) -> int:
    senses, gaps, intra, concepts, sources = _lexicon_records(db, language)
    lang = db.languages[language]

    root = ET.Element("LexicalResource")
    lexicon = ET.SubElement(root, "Lexicon", code=lang.code, name=lang.name)
    if lang.phylum:
        lexicon.set("phylum", lang.phylum)
    if lang.latitude is not None:
        lexicon.set("latitude", repr(lang.latitude))
        lexicon.set("longitude", repr(lang.longitude))

    intra_by_source: dict[str, list[IntraLingualRelation]] = {}
    for rel in intra:
        intra_by_source.setdefault(rel.source, []).append(rel)

    by_lemma: dict[str, list[Sense]] = {}
    for sense in senses:
        by_lemma.setdefault(sense.lemma, []).append(sense)
    for lemma in sorted(by_lemma, key=lambda w: f"{lang.code}:{w}"):
        entry = ET.SubElement(lexicon, "LexicalEntry", id=f"{lang.code}:{lemma}")
        ET.SubElement(entry, "Lemma", writtenForm=lemma)
        for sense in sorted(by_lemma[lemma], key=lambda s: s.id):
            sense_el = ET.SubElement(entry, "Sense", id=sense.id,
                                     conceptRef=sense.concept, sourceId=sense.source_id)
            for rel in intra_by_source.get(sense.id, ()):
                ET.SubElement(sense_el, "SenseRelation", relType=rel.kind,
                              target=rel.target, sourceId=rel.source_id)

    gap_list = ET.SubElement(lexicon, "GapList")
    for gap in gaps:
        ET.SubElement(gap_list, "Gap", concept=gap.concept, sourceId=gap.source_id)

    inventory = ET.SubElement(lexicon, "ConceptInventory")
    for concept in concepts:
        el = ET.SubElement(inventory, "ConceptDef", id=concept.id,
                           pos=concept.pos, gloss=concept.gloss)
        if concept.pwn30_id:
            el.set("pwn30", concept.pwn30_id)
    source_inventory = ET.SubElement(lexicon, "SourceInventory")
    for prov in sources:
        ET.SubElement(source_inventory, "SourceDef", id=prov.source_id,
                      license=prov.license,
                      redistributable="true" if prov.redistributable else "false")

    ET.indent(root, space="  ")
    sink.write('<?xml version="1.0" encoding="UTF-8"?>\n')
    sink.write(ET.tostring(root, encoding="unicode"))
    sink.write("\n")
    return len(senses)


def parse_lexicon_lmf(document: str) -> RecordBatch:
    """Read an LMF-subset lexicon document back into a batch."""
    root = ET.fromstring(document)
    batch = RecordBatch()
    for lexicon in root.findall("Lexicon"):
        code = lexicon.get("code")
        lat = lexicon.get("latitude")
        lon = lexicon.get("longitude")
        batch.languages.append(LanguageDescriptor(
            code=code, name=lexicon.get("name", code),
            phylum=lexicon.get("phylum"),
            latitude=float(lat) if lat is not None else None,
            longitude=float(lon) if lon is not None else None))
        for concept_el in lexicon.iterfind("ConceptInventory/ConceptDef"):
            batch.concepts.append(Concept(
                id=concept_el.get("id"), gloss=concept_el.get("gloss", ""),
                pos=concept_el.get("pos"), pwn30_id=concept_el.get("pwn30")))
        for source_el in lexicon.iterfind("SourceInventory/SourceDef"):
            batch.sources.append(Provenance(
                source_id=source_el.get("id"), license=source_el.get("license", ""),
                redistributable=source_el.get("redistributable") == "true"))
        for entry in lexicon.iterfind("LexicalEntry"):
            lemma_el = entry.find("Lemma")
            lemma = lemma_el.get("writtenForm") if lemma_el is not None else ""
            for sense_el in entry.iterfind("Sense"):
                batch.senses.append(make_sense(
                    code, lemma, sense_el.get("conceptRef"), sense_el.get("sourceId")))
                for rel_el in sense_el.iterfind("SenseRelation"):
                    batch.intra_relations.append(IntraLingualRelation(
                        kind=rel_el.get("relType"),
                        source=batch.senses[-1].id,
                        target=rel_el.get("target"),
                        source_id=rel_el.get("sourceId")))
        for gap_el in lexicon.iterfind("GapList/Gap"):
            batch.gaps.append(LexicalGap(
                language=code, concept=gap_el.get("concept"),
                source_id=gap_el.get("sourceId")))
    return batch


# ----------------------------------------------------------------------
# concept-aligned lexicon sets


def export_lexicon_set(db: Database, languages: list[str], sink: TextIO) -> int:
    """Concept-aligned multilingual table: one row per concept that has a
    non-Unknown status in at least one requested language, one column per
    language. Cells hold the lemmas joined by ``|``, the literal ``GAP``
    for gaps, or nothing when the status is Unknown. Returns the row
    count."""
    if len(languages) < 2:
        raise ValueError("a lexicon set needs at least 2 languages")
    for code in languages:
        if code not in db.languages:
            raise UnknownLanguageError(code)
    view = _clean_view(db)
    rows = 0
    sink.write("concept_id\t" + "\t".join(languages) + "\n")
    for concept_id in sorted(view.concepts):
        cells = []
        informative = False
        for code in languages:
            status = view.status(code, concept_id)
            if status is LexicalizationStatus.LEXICALISED:
                lemmas = sorted(s.lemma for s in view.senses_of(code, concept_id))
                cells.append(LEMMA_JOINER.join(lemmas))
                informative = True
            elif status is LexicalizationStatus.GAP:
                cells.append(GAP_SENTINEL)
                informative = True
            else:
                cells.append("")
        if informative:
            sink.write(concept_id + "\t" + "\t".join(cells) + "\n")
            rows += 1
    return rows


def export_to_string(func, *args, **kwargs) -> tuple[str, int]:
    """Run any of the exporters into a string buffer."""
    buffer = io.StringIO()
    count = func(*args, sink=buffer, **kwargs)
    return buffer.getvalue(), count
