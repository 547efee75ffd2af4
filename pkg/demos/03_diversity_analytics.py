"""Diversity analytics: cognate clusters, the diversity index, and the
pairwise lexicon-similarity matrix.

fish splits into two cognate clusters (English/Italian vs
Hungarian/Finnish), giving a diversity index of 1/3 over its four
lexicalising languages; English and Italian share cognates on every common
concept, so their lexicon similarity is 1.0.
"""

from pathlib import Path

from lexdiv import analytics
from lexdiv.ingest import ingest_data_dir
from lexdiv.store import Database

DATA = Path(__file__).resolve().parent.parent / "data" / "f1"

db = Database()
ingest_data_dir(DATA, db)

print("== cognate clusters for 'fish' ==")
clustering = analytics.cognate_clusters(db, "fish")
for index, members in enumerate(clustering.clusters):
    words = ", ".join(f"{s.language} '{s.lemma}'" for s in members)
    print(f"  cluster {index}: {words}")
print("  language -> cluster:", clustering.language_cluster)

print("\n== diversity index ==")
for concept in ("fish", "rice-general", "cooked-rice"):
    result = analytics.diversity_index(db, concept)
    print(f"  {concept:13s} index={result.index:.3f} "
          f"(n={result.lexicalising_languages} languages, k={result.clusters} clusters)")

print("\n== lexicon similarity (min_overlap=1; desk-scale corpus) ==")
print("  pair        score  overlap  cognate_overlap")
for record in analytics.similarity_matrix(db, min_overlap=1):
    print(f"  {record.lang_a}-{record.lang_b}    {record.score:5.2f}  "
          f"{record.overlap:7d}  {record.cognate_overlap:15d}")

undefined = analytics.lexicon_similarity(db, "hun", "kan", min_overlap=1)
print("\n  hun-kan:", undefined, "(no shared lexicalised concept: undefined, not 0)")
