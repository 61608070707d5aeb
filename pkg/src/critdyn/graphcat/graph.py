"""Finite functional graphs: every vertex has exactly one successor."""
from __future__ import annotations

import json
from dataclasses import dataclass, field

CONTAINMENT_SIZE_CAP = 32


@dataclass(frozen=True, init=False)
class FunctionalGraph:
    succ: tuple
    labels: tuple | None = field(default=None, compare=False)

    def __init__(self, succ, labels=None):
        succ = tuple(int(s) for s in succ)
        n = len(succ)
        if any(not 0 <= s < n for s in succ):
            raise ValueError("successor out of range")
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise ValueError("one label per vertex is required")
        object.__setattr__(self, "succ", succ)
        object.__setattr__(self, "labels", labels)

    def __len__(self):
        return len(self.succ)

    @property
    def n(self) -> int:
        return len(self.succ)

    def preds(self):
        out = [[] for _ in self.succ]
        for v, s in enumerate(self.succ):
            out[s].append(v)
        return out

    def cycles(self):
        """Cycles as vertex lists in successor order, each starting at its smallest vertex."""
        color = [0] * self.n
        result = []
        for start in range(self.n):
            path = []
            v = start
            while color[v] == 0:
                color[v] = 1
                path.append(v)
                v = self.succ[v]
            if color[v] == 1:
                cyc = path[path.index(v):]
                k = cyc.index(min(cyc))
                result.append(cyc[k:] + cyc[:k])
            for u in path:
                color[u] = 2
        return sorted(result)

    def cycle_vertices(self) -> set:
        return {v for c in self.cycles() for v in c}

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)

    def vertex_of(self, label: str) -> int:
        return self.labels.index(label)

    # exchange formats -----------------------------------------------------
    def to_json(self) -> dict:
        d = {"vertices": self.n, "successor": list(self.succ)}
        if self.labels:
            d["labels"] = list(self.labels)
        return d

    @staticmethod
    def from_json(d) -> "FunctionalGraph":
        if isinstance(d, str):
            d = json.loads(d)
        succ = d["successor"]
        if d.get("vertices", len(succ)) != len(succ):
            raise ValueError("vertex count disagrees with the successor list")
        if not succ:
            raise ValueError("empty graph")
        return FunctionalGraph(succ, d.get("labels"))

    @staticmethod
    def from_edges(edges) -> "FunctionalGraph":
        """Build from (label, successor label) pairs; vertices keep first-seen order."""
        names = []
        for a, b in edges:
            for x in (a, b):
                if x not in names:
                    names.append(x)
        succ = [None] * len(names)
        for a, b in edges:
            i = names.index(a)
            if succ[i] is not None and succ[i] != names.index(b):
                raise ValueError(f"vertex {a} has two successors")
            succ[i] = names.index(b)
        missing = [names[i] for i, s in enumerate(succ) if s is None]
        if missing:
            raise ValueError(f"vertices without successor: {missing}")
        return FunctionalGraph(succ, names)

    def to_dot(self, name: str = "G") -> str:
        lines = [f"digraph {name} {{"]
        for v in range(self.n):
            lines.append(f'  v{v} [label="{self.label(v)}"];')
        for v, s in enumerate(self.succ):
            lines.append(f"  v{v} -> v{s};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def extend(self, new_succ, new_labels=None) -> "FunctionalGraph":
        """Append vertices whose successors are given (may refer to new vertices)."""
        labels = None
        if self.labels is not None or new_labels is not None:
            old = list(self.labels or [str(v) for v in range(self.n)])
            extra = list(new_labels or [str(self.n + i) for i in range(len(new_succ))])
            labels = old + extra
        return FunctionalGraph(list(self.succ) + list(new_succ), labels)


def _tree_code(g: FunctionalGraph, preds, v: int, on_cycle: set) -> str:
    kids = sorted(_tree_code(g, preds, u, on_cycle) for u in preds[v] if u not in on_cycle)
    return "(" + "".join(kids) + ")"


def canonical_code(g: FunctionalGraph) -> str:
    """Canonical string: sorted components, each the least rotation of its cycle's tree codes."""
    preds = g.preds()
    on_cycle = g.cycle_vertices()
    comps = []
    for cyc in g.cycles():
        codes = [_tree_code(g, preds, v, on_cycle) for v in cyc]
        best = min(codes[i:] + codes[:i] for i in range(len(codes)))
        comps.append("<" + "".join(best) + ">")
    return "".join(sorted(comps))


def is_isomorphic(g: FunctionalGraph, h: FunctionalGraph) -> bool:
    return len(g) == len(h) and canonical_code(g) == canonical_code(h)


def find_embedding(g: FunctionalGraph, h: FunctionalGraph):
    """An injective successor-preserving map V(h) -> V(g), or None."""
    if len(g) > CONTAINMENT_SIZE_CAP or len(h) > CONTAINMENT_SIZE_CAP:
        raise ValueError(f"containment search is capped at {CONTAINMENT_SIZE_CAP} vertices")
    if len(h) > len(g):
        return None
    hcycles = h.cycles()
    gcycles = g.cycles()
    h_on = {v for c in hcycles for v in c}
    hpreds = h.preds()
    gpreds = g.preds()
    # tree vertices of h in BFS order away from the cycles
    order = []
    frontier = [v for c in hcycles for v in c]
    while frontier:
        nxt = []
        for v in frontier:
            for u in hpreds[v]:
                if u not in h_on:
                    order.append(u)
                    nxt.append(u)
        frontier = nxt
    phi = {}
    used = set()

    def place_trees(k):
        if k == len(order):
            return True
        u = order[k]
        target = phi[h.succ[u]]
        for w in gpreds[target]:
            if w not in used:
                phi[u] = w
                used.add(w)
                if place_trees(k + 1):
                    return True
                used.discard(w)
                del phi[u]
        return False

    def place_cycles(k):
        if k == len(hcycles):
            return place_trees(0)
        hc = hcycles[k]
        for gc in gcycles:
            if len(gc) != len(hc) or gc[0] in used:
                continue
            for r in range(len(gc)):
                for i, v in enumerate(hc):
                    phi[v] = gc[(r + i) % len(gc)]
                used.update(gc)
                if place_cycles(k + 1):
                    return True
                used.difference_update(gc)
                for v in hc:
                    del phi[v]
        return False

    return dict(phi) if place_cycles(0) else None


def contains_subgraph(g: FunctionalGraph, h: FunctionalGraph) -> bool:
    return find_embedding(g, h) is not None
