"""Mechanical check that the recursion steps never leave the Hasse diagram.

From each realizable non-PCF graph two kinds of growth are tried:

* adding a periodic cycle of length 1 or 2, each of whose vertices receives
  one new non-periodic preimage;
* giving a non-periodic vertex with k < 2 preimages 2 - k new preimages.

Each result must be isomorphic to a diagram graph or contain an inadmissible
graph.  A quadratic map has 3 fixed points and 2 points of exact period 2
over an algebraic closure (with multiplicity), so a step that would exceed
one 2-cycle or three fixed points is reported as infeasible.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .catalog import catalog, classify, hasse_edges
from .graph import FunctionalGraph

CYCLE_LENGTHS = (1, 2)
PERIODIC_BUDGET = {1: 3, 2: 1}     # max cycles of each length (3 fixed points, one 2-cycle)


@dataclass
class StepResult:
    source: str
    step: str
    outcome: str              # "isomorphic", "contains", "infeasible" or "uncovered"
    detail: str = ""


@dataclass
class HasseReport:
    rows: list = field(default_factory=list)
    assumptions: list = field(default_factory=list)

    @property
    def uncovered(self):
        return [r for r in self.rows if r.outcome == "uncovered"]

    @property
    def ok(self) -> bool:
        return not self.uncovered

    def as_table(self) -> str:
        lines = [f"{'graph':6} {'step':34} {'outcome':11} detail"]
        for r in self.rows:
            lines.append(f"{r.source:6} {r.step:34} {r.outcome:11} {r.detail}")
        return "\n".join(lines)


def add_cycle(g: FunctionalGraph, length: int) -> FunctionalGraph:
    n = g.n
    cyc = list(range(n, n + length))
    succ = [cyc[(i + 1) % length] for i in range(length)]
    succ += cyc                       # one tail vertex per cycle vertex
    labels = [f"c{i}" for i in range(length)] + [f"q{i}" for i in range(length)]
    return g.extend(succ, labels)


def add_preimages(g: FunctionalGraph, v: int):
    k = len(g.preds()[v])
    return g.extend([v] * (2 - k), [f"p{i}" for i in range(2 - k)])


def _cycle_counts(g: FunctionalGraph) -> dict:
    out = {}
    for c in g.cycles():
        out[len(c)] = out.get(len(c), 0) + 1
    return out


def _judge(source: str, step: str, h: FunctionalGraph, diagram_ids) -> StepResult:
    cl = classify(h)
    if cl.status == "exact" and cl.exact in diagram_ids:
        return StepResult(source, step, "isomorphic", cl.exact)
    if cl.status == "admits":
        return StepResult(source, step, "contains", ",".join(cl.admits))
    return StepResult(source, step, "uncovered", cl.label())


def verify_hasse_closure() -> HasseReport:
    cat = catalog()
    nodes = {x for e in hasse_edges() for x in e}
    diagram_ids = sorted(i for i in nodes if cat[i].kind == "realizable")
    report = HasseReport(assumptions=[
        "new cycles have length 1 or 2 (no rational periods > 2 outside the critical cycle)",
        "each vertex has at most two preimages; a vertex with k preimages gains 2 - k",
        "at most three fixed points and one 2-cycle over Q",
    ])
    for gid in diagram_ids:
        g = cat[gid].graph
        counts = _cycle_counts(g)
        for length in CYCLE_LENGTHS:
            step = f"add {length}-cycle"
            if counts.get(length, 0) + 1 > PERIODIC_BUDGET[length]:
                report.rows.append(StepResult(gid, step, "infeasible",
                                              f"would exceed {PERIODIC_BUDGET[length]} cycle(s) of length {length}"))
                continue
            report.rows.append(_judge(gid, step, add_cycle(g, length), diagram_ids))
        on_cycle = g.cycle_vertices()
        preds = g.preds()
        for v in range(g.n):
            if v in on_cycle or len(preds[v]) >= 2:
                continue
            step = f"add {2 - len(preds[v])} preimage(s) to {g.label(v)}"
            report.rows.append(_judge(gid, step, add_preimages(g, v), diagram_ids))
    return report
