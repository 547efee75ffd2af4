"""Build a database from TSV files and check its invariants.

The demo corpus is the "rice/fish" scenario: English and Italian both have
a word for rice in general, English has none for raw uncooked rice (a
lexical gap), and Swahili has no general rice word at all.
"""

from pathlib import Path

from lexdiv.ingest import ingest_data_dir
from lexdiv.store import Database

DATA = Path(__file__).resolve().parent.parent / "data" / "f1"

db = Database()
report = ingest_data_dir(DATA, db)
print("ingested", DATA)
print(" ", report.summary())

violations = db.validate()
print("validation:", "clean" if not violations else violations)

print("\nthree-state lexicalisation status:")
for language, concept in [("eng", "rice-general"), ("eng", "raw-rice"),
                          ("swa", "rice-general"), ("fin", "raw-rice")]:
    print(f"  {language} / {concept:13s} -> {db.status(language, concept).value}")

# a gap claim contradicted by an attested word is discarded at merge:
from lexdiv.ingest import RecordBatch, merge
from lexdiv.model import LexicalGap

conflicting = RecordBatch(gaps=[LexicalGap("eng", "rice-general", "src1")])
second = merge(conflicting, db)
print("\nmerging a gap for a lexicalised concept:")
for conflict in second.conflicts:
    print("  conflict:", conflict.record, "->", conflict.resolution)
