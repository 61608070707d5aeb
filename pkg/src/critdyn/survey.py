"""Parameter survey over phi_a for rational a of bounded height, persisted as JSON lines."""
from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from fractions import Fraction
from math import gcd
from multiprocessing import Pool

from . import __version__
from .dynatomic import FAMILIES, family_specialize
from .mapexpr import classify_phi
from .p1dyn import ProjPoint

VERTEX_ALARM = 11
REALIZABLE = tuple(f"R3P{i}" for i in range(6))
CRITICAL_CYCLE = {str(ProjPoint.of(0)), str(ProjPoint.of(1)), str(ProjPoint.make(1, 0))}


@dataclass
class SurveyRecord:
    a: str
    classification: str
    vertex_count: int
    periodic: dict             # period -> number of rational points of that exact period
    extra_cycles: list         # periodic points outside the critical cycle, as [point, period]
    timestamp: str
    version: str


def height(a: Fraction) -> int:
    return max(abs(a.numerator), a.denominator)


def parameters(h: int):
    """Reduced p/q with max(|p|, q) <= h outside the excluded set, by height then value of p, q."""
    if h < 1:
        raise ValueError("height bound must be >= 1")
    excluded = set(FAMILIES["A"].excluded)
    out = set()
    for q in range(1, h + 1):
        for p in range(-h, h + 1):
            if gcd(p, q) == 1:
                a = Fraction(p, q)
                if a not in excluded:
                    out.add(a)
    return sorted(out, key=lambda a: (height(a), a.numerator, a.denominator))


def survey_one(a: Fraction, max_period: int = 4) -> SurveyRecord:
    rep = classify_phi(family_specialize("A", a), max_period)
    counts = {}
    extra = []
    for pt, n in rep.periodic:
        counts[str(n)] = counts.get(str(n), 0) + 1
        if pt not in CRITICAL_CYCLE:
            extra.append([pt, n])
    return SurveyRecord(str(a), rep.classification, len(rep.vertices), counts, extra,
                        datetime.now(timezone.utc).isoformat(timespec="seconds"), __version__)


def findings(rec: dict) -> list:
    out = []
    if rec["classification"] not in REALIZABLE:
        out.append(f"a = {rec['a']}: classification {rec['classification']}")
    if rec["vertex_count"] > VERTEX_ALARM:
        out.append(f"a = {rec['a']}: {rec['vertex_count']} preperiodic points")
    for pt, n in rec["extra_cycles"]:
        if n > 2:
            out.append(f"a = {rec['a']}: point {pt} of period {n} outside the critical cycle")
    return out


def read_records(path: str) -> dict:
    recs = {}
    if not os.path.exists(path):
        return recs
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError:
                continue      # a torn last line from an interrupted run
            recs[rec["a"]] = rec
    return recs


def _shard_path(path: str, i: int) -> str:
    return f"{path}.shard{i}"


def _work(job):
    path, params, max_period = job
    with open(path, "a", encoding="utf-8") as fh:
        for a in params:
            fh.write(json.dumps(asdict(survey_one(Fraction(a), max_period))) + "\n")
            fh.flush()
    return len(params)


def run_survey(h: int, out: str, max_period: int = 4, jobs: int = 1) -> dict:
    """Compute the missing records, merge all shards into ``out`` in parameter order."""
    params = parameters(h)
    shards = [p for p in (_shard_path(out, i) for i in range(64)) if os.path.exists(p)]
    done = read_records(out)
    for s in shards:
        done.update(read_records(s))
    todo = [str(a) for a in params if str(a) not in done]
    jobs = max(1, jobs)
    work = [(_shard_path(out, i), todo[i::jobs], max_period) for i in range(jobs) if todo[i::jobs]]
    if jobs == 1 or len(work) <= 1:
        for job in work:
            _work(job)
    else:
        with Pool(len(work)) as pool:
            pool.map(_work, work)
    for job in work:
        if job[0] not in shards:
            shards.append(job[0])
    for s in shards:
        done.update(read_records(s))

    order = {str(a): i for i, a in enumerate(params)}
    ranked = sorted(done.values(), key=lambda r: (order.get(r["a"], len(order)), r["a"]))
    tmp = out + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        for r in ranked:
            fh.write(json.dumps(r) + "\n")
    os.replace(tmp, out)
    for s in shards:
        os.remove(s)
    return summarize([r for r in ranked if r["a"] in order], computed=len(todo))


def summarize(records, computed: int = 0) -> dict:
    hist = {}
    found = []
    for r in records:
        hist[r["classification"]] = hist.get(r["classification"], 0) + 1
        found.extend(findings(r))
    return {
        "parameters": len(records),
        "computed": computed,
        "histogram": dict(sorted(hist.items())),
        "max_vertex_count": max((r["vertex_count"] for r in records), default=0),
        "findings": found,
    }
