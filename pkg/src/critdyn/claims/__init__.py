"""The claims manifest and its runner."""
from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from importlib import resources

from ..algebra.mpoly import MPoly
from .checks import CHECKS

MANIFEST_FILE = "claims.json"
SELECTORS = ("all", "dynatomic", "curves", "appendix", "hasse")
ASSUMED = "assumed from paper"


@dataclass
class ClaimResult:
    id: str
    status: str            # "pass", "fail", "error" or ASSUMED
    computed: object
    expected: object
    provenance: str
    seconds: float = 0.0

    def to_json(self):
        return asdict(self)


def load_manifest(text: str | None = None) -> dict:
    if text is None:
        text = resources.files(__package__).joinpath(MANIFEST_FILE).read_text(encoding="utf-8")
    doc = json.loads(text)
    ids = [c["id"] for c in doc["claims"]]
    if len(ids) != len(set(ids)):
        raise ValueError("duplicate claim ids in the manifest")
    for c in doc["claims"]:
        if c.get("check") and c["check"] not in CHECKS:
            raise ValueError(f"claim {c['id']} names unknown check {c['check']!r}")
    return doc


def select(doc: dict, selector: str = "all") -> list:
    if selector not in SELECTORS:
        raise ValueError(f"unknown selector {selector!r}; choose from {', '.join(SELECTORS)}")
    return [c for c in doc["claims"] if selector == "all" or c["selector"] == selector]


def _poly_equal(a, b, vars) -> bool:
    if a is None or b is None:
        return a is b
    return MPoly.parse(a).with_vars(vars) == MPoly.parse(b).with_vars(vars)


def matches(computed, expected, compare: str = "exact", vars=()) -> bool:
    """Equality, except that dict expectations only constrain the keys they name."""
    if isinstance(expected, dict) and isinstance(computed, dict):
        return all(k in computed and matches(computed[k], v, compare, vars) for k, v in expected.items())
    if compare == "poly" and isinstance(expected, str):
        return _poly_equal(computed, expected, tuple(vars))
    return computed == expected


def run_claim(claim: dict) -> ClaimResult:
    prov = claim.get("provenance", "")
    if claim.get("status") == "assumed":
        return ClaimResult(claim["id"], ASSUMED, None, claim.get("expected"), prov)
    t0 = time.perf_counter()
    try:
        computed = CHECKS[claim["check"]](**claim.get("args", {}))
    except Exception as exc:  # a crashing check is a failed claim, not a crashed run
        return ClaimResult(claim["id"], "error", f"{type(exc).__name__}: {exc}", claim.get("expected"),
                           prov, time.perf_counter() - t0)
    ok = matches(computed, claim.get("expected"), claim.get("compare", "exact"), claim.get("vars", ()))
    return ClaimResult(claim["id"], "pass" if ok else "fail", computed, claim.get("expected"), prov,
                       round(time.perf_counter() - t0, 3))


def run_claims(selector: str = "all", jobs: int = 1, doc: dict | None = None) -> list:
    claims = select(doc or load_manifest(), selector)
    if jobs <= 1:
        return [run_claim(c) for c in claims]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(run_claim, claims))


def all_passed(results) -> bool:
    return all(r.status in ("pass", ASSUMED) for r in results)


def report(results, selector: str = "all") -> dict:
    counts = {}
    for r in results:
        counts[r.status] = counts.get(r.status, 0) + 1
    return {
        "manifest_version": load_manifest()["version"],
        "selector": selector,
        "ok": all_passed(results),
        "counts": counts,
        "claims": [r.to_json() for r in results],
    }
