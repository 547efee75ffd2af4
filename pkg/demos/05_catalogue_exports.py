"""Catalogue exports: raw datasets, LMF lexicon documents, and
concept-aligned lexicon sets, all license-filtered.

The GAP sentinel in the aligned table keeps the three-way distinction of
flat files: a word, explicit evidence of no word, or simply no data.
"""

from pathlib import Path

from lexdiv import export
from lexdiv.ingest import ingest_data_dir, merge
from lexdiv.store import Database

DATA = Path(__file__).resolve().parent.parent / "data" / "f1"

db = Database()
ingest_data_dir(DATA, db)

print("== raw cognate dataset (ingest format, round-trippable) ==")
text, count = export.export_to_string(export.export_raw, db, "cognates")
print(text)

print("== concept-aligned lexicon set for eng, ita, swa ==")
text, count = export.export_to_string(export.export_lexicon_set, db, ["eng", "ita", "swa"])
print(text)

print("== English lexicon as LMF-subset XML ==")
text, count = export.export_to_string(export.export_lexicon, db, "eng", "lmf-xml")
print(text)

print("== round trip: the exported document rebuilds the lexicon ==")
fresh = Database()
report = merge(export.parse_lexicon_lmf(text), fresh)
print("  re-ingest:", report.summary())
print("  senses match:",
      sorted(s.key for s in fresh.senses.values())
      == sorted(s.key for s in db.senses.values() if s.language == "eng"))
