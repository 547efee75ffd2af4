"""JSON-over-HTTP API: thin adapters over the store, analytics, layout and
export operations.

Every endpoint is read-only and deterministic: repeated GETs against the
same store and query return byte-identical bodies (layout requests carry
their seed). Errors use one envelope, ``{"error": {"code", "message"}}``,
with codes mirroring the module error cases. List endpoints paginate with
``offset``/``limit`` (default limit 100).

Endpoints (all under /v1):
    GET /languages                      GET /languages/{code}
    GET /languages/{code}/words/{lemma}
    GET /concepts/{id}                  GET /concepts/{id}/lexicalisations
    GET /concepts/{id}/clusters         GET /concepts/{id}/diversity
    GET /concepts/{id}/neighborhood?lang=&depth=&kinds=
    GET /domains/{rootId}/tree?lang=
    GET /similarity?min_overlap=
    GET /similarity/layout?threshold=&seed=&iterations=
    GET /export/lexicon/{code}?format=lmf|tsv
    GET /export/lexicon-set?langs=a,b,c
    GET /export/raw/{kind}
    GET /health

Requests are served concurrently over an immutable store snapshot; a
reload builds a fresh store and swaps the snapshot reference atomically,
so readers never observe a partial store.
"""

from __future__ import annotations

import sys
import threading
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse, PlainTextResponse

from . import analytics, export, layout
from .errors import LexDivError
from .ingest import ingest_data_dir
from .model import (
    Concept,
    LanguageDescriptor,
    LexicalizationStatus,
    Sense,
)
from .store import ConceptNeighborhood, Database, DomainTree

DEFAULT_LIMIT = 100


@dataclass
class ServiceConfig:
    data_dir: str | Path = "."
    host: str = "127.0.0.1"
    port: int = 8080
    min_overlap: int = analytics.DEFAULT_MIN_OVERLAP
    layout_params: layout.LayoutParams = field(default_factory=layout.LayoutParams)


class StoreHandle:
    """Atomically swappable reference to the current store snapshot."""

    def __init__(self, db: Database):
        self._db = db
        self._lock = threading.Lock()

    @property
    def db(self) -> Database:
        return self._db

    def swap(self, db: Database):
        with self._lock:
            self._db = db


class StartupValidationError(RuntimeError):
    """Raised when the ingested data directory fails validation."""

    def __init__(self, report: str):
        super().__init__("data directory failed validation:\n" + report)
        self.report = report


def load_store(data_dir: str | Path) -> Database:
    """Ingest a data directory and fail fast with a validation report if
    the resulting store breaks any invariant."""
    db = Database()
    ingest_data_dir(data_dir, db)
    violations = db.validate()
    if violations:
        lines = [f"- [{v.invariant}] {v.message}" for v in violations]
        raise StartupValidationError("\n".join(lines))
    return db


# ----------------------------------------------------------------------
# JSON encodings (bijective with the module result types)


def encode_language(lang: LanguageDescriptor, senses: int | None = None) -> dict:
    body = {
        "code": lang.code,
        "name": lang.name,
        "phylum": lang.phylum,
        "latitude": lang.latitude,
        "longitude": lang.longitude,
    }
    if senses is not None:
        body["senses"] = senses
    return body


def encode_concept(concept: Concept) -> dict:
    return {
        "id": concept.id,
        "gloss": concept.gloss,
        "pos": concept.pos,
        "pwn30_id": concept.pwn30_id,
        "interlingual": concept.interlingual,
    }


def encode_sense(sense: Sense) -> dict:
    return {
        "id": sense.id,
        "language": sense.language,
        "lemma": sense.lemma,
        "concept": sense.concept,
        "source_id": sense.source_id,
    }


def encode_status(status: LexicalizationStatus) -> str:
    return status.value


def encode_neighborhood(hood: ConceptNeighborhood) -> dict:
    return {
        "focus": hood.focus,
        "language": hood.language,
        "nodes": [
            {"id": node.concept, "status": encode_status(node.status),
             "lemmas": list(node.lemmas)}
            for node in hood.nodes
        ],
        "edges": [
            {"source": rel.source, "kind": rel.kind, "target": rel.target}
            for rel in hood.edges
        ],
    }


def encode_tree(tree: DomainTree) -> dict:
    return {
        "root": tree.root,
        "language": tree.language,
        "nodes": [
            {"id": node.concept, "status": encode_status(node.status),
             "lemmas": list(node.lemmas), "children": list(node.children)}
            for node in tree.nodes
        ],
    }


def error_body(code: str, message: str) -> dict:
    return {"error": {"code": code, "message": message}}


# ----------------------------------------------------------------------
# application factory


def create_app(db: Database, config: ServiceConfig | None = None) -> FastAPI:
    config = config or ServiceConfig()
    app = FastAPI(title="lexdiv", version="1", docs_url=None, redoc_url=None)
    handle = StoreHandle(db)
    app.state.store = handle
    app.state.config = config
    layout_cache: dict[tuple, dict] = {}

    @app.exception_handler(LexDivError)
    async def _domain_error(request: Request, exc: LexDivError):
        status = 404 if exc.code.startswith("unknown-") else 400
        return JSONResponse(status_code=status, content=error_body(exc.code, exc.message))

    @app.exception_handler(ValueError)
    async def _bad_request(request: Request, exc: ValueError):
        return JSONResponse(status_code=400, content=error_body("bad-request", str(exc)))

    @app.exception_handler(RequestValidationError)
    async def _invalid_params(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content=error_body("bad-request", str(exc.errors())))

    @app.exception_handler(404)
    async def _not_found(request: Request, exc):
        return JSONResponse(status_code=404,
                            content=error_body("not-found", "no such resource"))

    def page(items: list, offset: int, limit: int) -> dict:
        return {
            "items": items[offset:offset + limit],
            "total": len(items),
            "offset": offset,
            "limit": limit,
        }

    @app.get("/v1/health")
    def health():
        store = handle.db
        return {
            "status": "ok",
            "counts": {
                "languages": len(store.languages),
                "concepts": len(store.concepts),
                "senses": len(store.senses),
                "gaps": len(store.gaps),
                "cognates": len(store.cross_relations),
            },
        }

    @app.get("/v1/languages")
    def languages(offset: int = Query(0, ge=0), limit: int = Query(DEFAULT_LIMIT, ge=1)):
        store = handle.db
        items = [
            encode_language(store.languages[code],
                            senses=len(store._senses_by_lang.get(code, ())))
            for code in sorted(store.languages)
        ]
        return page(items, offset, limit)

    @app.get("/v1/languages/{code}")
    def language(code: str):
        profile = handle.db.language_profile(code)
        return {
            "language": encode_language(profile.language),
            "counts": {
                "senses": profile.senses,
                "distinct_lemmas": profile.distinct_lemmas,
                "gaps": profile.gaps,
                "relations": profile.relations,
            },
        }

    @app.get("/v1/languages/{code}/words/{lemma}")
    def word(code: str, lemma: str):
        store = handle.db
        entries = store.lookup_word(code, lemma)
        return {
            "language": code,
            "lemma": lemma,
            "entries": [
                {
                    "sense": encode_sense(entry.sense),
                    "concept": encode_concept(entry.concept),
                    "intra_relations": [
                        {"kind": rel.kind, "source": rel.source, "target": rel.target,
                         "source_id": rel.source_id}
                        for rel in entry.intra_relations
                    ],
                    "cognates": [
                        {"kind": rel.kind, "sense": encode_sense(other),
                         "source_id": rel.source_id}
                        for rel, other in entry.cognates
                    ],
                }
                for entry in entries
            ],
        }

    @app.get("/v1/concepts/{concept_id}")
    def concept(concept_id: str):
        store = handle.db
        store._require_concept(concept_id)
        return encode_concept(store.concepts[concept_id])

    @app.get("/v1/concepts/{concept_id}/lexicalisations")
    def lexicalisations(concept_id: str):
        store = handle.db
        table = store.concept_lexicalisations(concept_id)
        return {
            "concept": concept_id,
            "languages": {
                code: {"status": encode_status(status), "lemmas": list(lemmas)}
                for code, (status, lemmas) in table.items()
            },
        }

    @app.get("/v1/concepts/{concept_id}/clusters")
    def clusters(concept_id: str):
        clustering = analytics.cognate_clusters(handle.db, concept_id)
        return {
            "concept": concept_id,
            "clusters": [
                [encode_sense(sense) for sense in members]
                for members in clustering.clusters
            ],
            "language_cluster": dict(sorted(clustering.language_cluster.items())),
            "ambiguous": sorted(clustering.ambiguous),
        }

    @app.get("/v1/concepts/{concept_id}/diversity")
    def diversity(concept_id: str):
        result = analytics.diversity_index(handle.db, concept_id)
        return {
            "concept": concept_id,
            "index": result.index,
            "n": result.lexicalising_languages,
            "k": result.clusters,
        }

    @app.get("/v1/concepts/{concept_id}/neighborhood")
    def neighborhood(concept_id: str, lang: str, depth: int = Query(1),
                     kinds: str | None = Query(None)):
        kind_tuple = tuple(k for k in kinds.split(",") if k) if kinds else None
        hood = handle.db.neighborhood(concept_id, lang, depth, kind_tuple)
        return encode_neighborhood(hood)

    @app.get("/v1/domains/{root_id}/tree")
    def domain_tree(root_id: str, lang: str):
        return encode_tree(handle.db.domain_tree(root_id, lang))

    @app.get("/v1/similarity")
    def similarity(min_overlap: int | None = Query(None, ge=1),
                   offset: int = Query(0, ge=0), limit: int = Query(DEFAULT_LIMIT, ge=1)):
        floor = min_overlap if min_overlap is not None else config.min_overlap
        records = analytics.similarity_matrix(handle.db, floor)
        items = [
            {"lang_a": r.lang_a, "lang_b": r.lang_b, "score": r.score,
             "overlap": r.overlap, "cognate_overlap": r.cognate_overlap}
            for r in records
        ]
        return page(items, offset, limit)

    @app.get("/v1/similarity/layout")
    def similarity_layout(threshold: float = Query(0.0),
                          seed: int | None = Query(None),
                          iterations: int = Query(100, ge=1),
                          min_overlap: int | None = Query(None, ge=1)):
        base = config.layout_params
        used_seed = seed if seed is not None else base.seed
        floor = min_overlap if min_overlap is not None else config.min_overlap
        key = (threshold, used_seed, iterations, floor, base)
        cached = layout_cache.get(key)
        if cached is not None:
            return cached
        records = analytics.similarity_matrix(handle.db, floor)
        graph = layout.build_graph(records, threshold)
        params = layout.LayoutParams(
            k_r=base.k_r, k_g=base.k_g, delta=base.delta, tau=base.tau,
            max_step=base.max_step, seed=used_seed, speed=base.speed,
            adaptive=base.adaptive)
        positions = layout.run(graph, params, max_iters=iterations, eps=0.0)
        body = {
            "threshold": threshold,
            "seed": used_seed,
            "iterations": iterations,
            "nodes": list(graph.nodes),
            "positions": {code: [x, y] for code, (x, y) in positions.items()},
            "edges": [
                {"a": graph.nodes[i], "b": graph.nodes[j], "weight": w}
                for i, j, w in graph.edges
            ],
        }
        layout_cache[key] = body
        return body

    @app.get("/v1/export/lexicon/{code}")
    def export_lexicon_endpoint(code: str, format: str = Query("tsv")):
        if format not in ("tsv", "lmf", "lmf-xml"):
            raise ValueError(f"format must be tsv or lmf: {format!r}")
        fmt = "lmf-xml" if format in ("lmf", "lmf-xml") else "tsv"
        document, _count = export.export_to_string(
            export.export_lexicon, handle.db, code, fmt)
        media = "application/xml" if fmt == "lmf-xml" else "text/tab-separated-values"
        return PlainTextResponse(document, media_type=f"{media}; charset=utf-8")

    @app.get("/v1/export/lexicon-set")
    def export_set(langs: str):
        codes = [c for c in langs.split(",") if c]
        document, _count = export.export_to_string(
            export.export_lexicon_set, handle.db, codes)
        return PlainTextResponse(document, media_type="text/tab-separated-values; charset=utf-8")

    @app.get("/v1/export/raw/{kind}")
    def export_raw_endpoint(kind: str, min_overlap: int | None = Query(None, ge=1)):
        floor = min_overlap if min_overlap is not None else config.min_overlap
        document, _count = export.export_to_string(
            export.export_raw, handle.db, kind, min_overlap=floor)
        return PlainTextResponse(document, media_type="text/tab-separated-values; charset=utf-8")

    return app


def serve(config: ServiceConfig):
    """Ingest the data directory, validate, and run the HTTP server."""
    import uvicorn

    try:
        db = load_store(config.data_dir)
    except StartupValidationError as exc:
        print(exc, file=sys.stderr)
        raise SystemExit(2)
    app = create_app(db, config)
    uvicorn.run(app, host=config.host, port=config.port, log_level="warning")
