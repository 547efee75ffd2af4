"""Force-directed layout of the lexicon-similarity graph.

Similar lexicons attract proportionally to their similarity score while
all languages repel, so related languages end up close together. With a
fixed seed the run is bit-reproducible. If matplotlib is importable the
final layout is also saved as a PNG next to this script.
"""

from pathlib import Path

from lexdiv import analytics, layout
from lexdiv.ingest import ingest_data_dir
from lexdiv.store import Database

DATA = Path(__file__).resolve().parent.parent / "data" / "f1"

db = Database()
ingest_data_dir(DATA, db)

records = analytics.similarity_matrix(db, min_overlap=1)
graph = layout.build_graph(records, threshold=0.5)
print("graph:", len(graph.nodes), "nodes,", len(graph.edges), "edges")
for i, j, weight in graph.edges:
    print(f"  {graph.nodes[i]} -- {graph.nodes[j]}  w={weight:.2f}")

params = layout.LayoutParams(k_r=1.0, k_g=0.05, seed=42)
positions = layout.run(graph, params, max_iters=400, eps=1e-6)
print("\nfinal positions (seed 42):")
for code, (x, y) in sorted(positions.items()):
    print(f"  {code}  ({x:8.3f}, {y:8.3f})")

again = layout.run(graph, params, max_iters=400, eps=1e-6)
print("\nsame seed reproduces bit-identically:", positions == again)

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("matplotlib not available; skipping the PNG")
else:
    fig, ax = plt.subplots(figsize=(5, 5))
    for i, j, weight in graph.edges:
        (x1, y1), (x2, y2) = positions[graph.nodes[i]], positions[graph.nodes[j]]
        ax.plot([x1, x2], [y1, y2], color="steelblue", alpha=weight, zorder=1)
    for code, (x, y) in positions.items():
        ax.scatter([x], [y], s=160, zorder=2)
        ax.annotate(code, (x, y), ha="center", va="center", fontsize=8)
    ax.set_aspect("equal")
    ax.set_title("lexicon similarity layout")
    out = Path(__file__).resolve().parent / "similarity_layout.png"
    fig.savefig(out, dpi=130, bbox_inches="tight")
    print("plot saved to", out)
