"""Exploration queries: word lookup, world lexicalisation tables, concept
neighborhoods, domain trees, and language profiles.

Uses the combined corpus with the 67-concept "cousins" kinship domain,
where English lexicalises only the root and a South-Indian-style demo
language distinguishes 16 kinds of cousins.
"""

from pathlib import Path

from lexdiv.ingest import ingest_data_dir
from lexdiv.store import Database

DATA = Path(__file__).resolve().parent.parent / "data" / "f1f2"

db = Database()
ingest_data_dir(DATA, db)

print("== word lookup: all meanings of 'rice' in English ==")
for entry in db.lookup_word("eng", "rice"):
    print(f"  {entry.sense.lemma} -> {entry.concept.id}: {entry.concept.gloss}")
    for _rel, other in entry.cognates:
        print(f"    cognate: {other.language} '{other.lemma}'")

print("\n== who lexicalises rice-general? ==")
for code, (status, lemmas) in db.concept_lexicalisations("rice-general").items():
    print(f"  {code}: {status.value:11s} {' '.join(lemmas)}")

print("\n== neighborhood of rice-general for English (depth 1) ==")
hood = db.neighborhood("rice-general", "eng", depth=1)
for node in hood.nodes:
    print(f"  {node.concept:13s} {node.status.value}")
print("  edges:", [(e.source, e.kind, e.target) for e in hood.edges])

print("\n== the cousins domain, English vs dra ==")
for language in ("eng", "dra"):
    tree = db.domain_tree("cousin", language)
    counts = {"lexicalised": 0, "gap": 0, "unknown": 0}
    for node in tree.nodes:
        counts[node.status.value] += 1
    print(f"  {language}: {len(tree.nodes)} concepts -> {counts}")

print("\n== language profiles ==")
for code in sorted(db.languages):
    profile = db.language_profile(code)
    print(f"  {code}: senses={profile.senses} lemmas={profile.distinct_lemmas} "
          f"gaps={profile.gaps} relations={profile.relations}")
