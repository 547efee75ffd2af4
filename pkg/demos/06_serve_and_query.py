"""Run the HTTP API against the demo corpus and query it like the explorer
UI does: languages for the world map, a concept's lexicalisation map, the
navigable neighborhood, and server-computed layout positions.
"""

import threading
import time
from pathlib import Path

import httpx
import uvicorn

from lexdiv import layout
from lexdiv.service import ServiceConfig, create_app, load_store

DATA = Path(__file__).resolve().parent.parent / "data" / "f1f2"
PORT = 8731

db = load_store(DATA)
config = ServiceConfig(data_dir=DATA, port=PORT, min_overlap=1,
                       layout_params=layout.LayoutParams(seed=0))
server = uvicorn.Server(uvicorn.Config(
    create_app(db, config), host="127.0.0.1", port=PORT, log_level="error"))
thread = threading.Thread(target=server.run, daemon=True)
thread.start()
while not server.started:
    time.sleep(0.02)

base = f"http://127.0.0.1:{PORT}/v1"
with httpx.Client() as client:
    print("GET /health ->", client.get(base + "/health").json())

    languages = client.get(base + "/languages").json()
    print(f"\n{languages['total']} languages; first:", languages["items"][0])

    lexicalisations = client.get(base + "/concepts/rice-general/lexicalisations").json()
    print("\nrice-general across the world:")
    for code, entry in lexicalisations["languages"].items():
        print(f"  {code}: {entry['status']:11s} {' '.join(entry['lemmas'])}")

    hood = client.get(base + "/concepts/rice-general/neighborhood",
                      params={"lang": "eng", "depth": 1}).json()
    print("\nneighborhood nodes:", [(n["id"], n["status"]) for n in hood["nodes"]])

    positions = client.get(base + "/similarity/layout",
                           params={"threshold": 0.5, "seed": 7,
                                   "iterations": 100, "min_overlap": 1}).json()
    print("\nlayout positions (seed 7):")
    for code, (x, y) in sorted(positions["positions"].items()):
        print(f"  {code}  ({x:8.3f}, {y:8.3f})")

    missing = client.get(base + "/languages/zzz")
    print("\nerror envelope:", missing.status_code, missing.json())

server.should_exit = True
thread.join(timeout=5)
print("\nserver stopped")
