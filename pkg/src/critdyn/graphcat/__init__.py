from .catalog import CatalogEntry, Classification, catalog, classify, hasse_edges
from .graph import FunctionalGraph, canonical_code, contains_subgraph, find_embedding, is_isomorphic
from .hasse import HasseReport, verify_hasse_closure

__all__ = [
    "CatalogEntry", "Classification", "catalog", "classify", "hasse_edges",
    "FunctionalGraph", "canonical_code", "contains_subgraph", "find_embedding",
    "is_isomorphic", "HasseReport", "verify_hasse_closure",
]
