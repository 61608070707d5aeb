"""The fifteen catalog graphs: six realizable ones and nine inadmissible ones."""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .graph import FunctionalGraph, canonical_code, contains_subgraph

CATALOG_FILE = "catalog.json"


class CatalogIntegrityError(RuntimeError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    kind: str                 # "realizable" or "inadmissible"
    graph: FunctionalGraph
    genus: int | None = None
    example: str | None = None

    @property
    def code(self) -> str:
        return canonical_code(self.graph)


def _body_digest(doc) -> str:
    body = {"entries": doc["entries"], "hasse": doc["hasse"]}
    blob = json.dumps(body, sort_keys=True, separators=(",", ":"), ensure_ascii=False).encode()
    return "sha256:" + hashlib.sha256(blob).hexdigest()


def load_catalog_document(text: str | None = None) -> dict:
    if text is None:
        text = resources.files(__package__).joinpath(CATALOG_FILE).read_text(encoding="utf-8")
    doc = json.loads(text)
    digest = _body_digest(doc)
    if digest != doc.get("checksum"):
        raise CatalogIntegrityError(f"catalog checksum mismatch: stored {doc.get('checksum')}, computed {digest}")
    return doc


@lru_cache(maxsize=1)
def catalog() -> dict:
    doc = load_catalog_document()
    out = {}
    for e in doc["entries"]:
        g = FunctionalGraph.from_edges(e["edges"])
        out[e["id"]] = CatalogEntry(e["id"], e["kind"], g, e.get("genus"), e.get("example"))
    return out


@lru_cache(maxsize=1)
def hasse_edges() -> tuple:
    return tuple(tuple(p) for p in load_catalog_document()["hasse"])


def realizable():
    return [e for e in catalog().values() if e.kind == "realizable"]


def inadmissible():
    return [e for e in catalog().values() if e.kind == "inadmissible"]


@dataclass
class Classification:
    status: str               # "exact", "admits" or "unknown"
    exact: str | None = None
    admits: tuple = ()

    def label(self) -> str:
        if self.status == "exact":
            return self.exact
        if self.status == "admits":
            return "admits:" + ",".join(self.admits)
        return "unknown"


def classify(g: FunctionalGraph) -> Classification:
    code = canonical_code(g)
    for e in realizable():
        if len(e.graph) == len(g) and e.code == code:
            return Classification("exact", e.id)
    hits = tuple(e.id for e in inadmissible() if len(e.graph) <= len(g) and contains_subgraph(g, e.graph))
    if hits:
        return Classification("admits", admits=hits)
    return Classification("unknown")
