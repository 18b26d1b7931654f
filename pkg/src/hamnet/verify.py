"""Compare every constructor with the brute-force oracle on small graphs."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable

from .graph_core import Cycle, Graph, Path
from .hamiltonian import (
    in_obstruction_E,
    in_obstruction_L_literal,
    s_trace_via_edge,
    st_trace_cut1,
    st_trace_via_edge,
    trace,
    trace_via_edge_2conn,
    track,
    track_via_edge,
)
from .oracle import bf_ham_cycle, bf_ham_path, enumerate_classes, enumerate_labeled_graphs, random_cn_free
from .structure import decompose, inner_end_vertices, is_biconnected


@dataclass
class Report:
    checks: Counter = field(default_factory=Counter)
    mismatches: list[dict] = field(default_factory=list)
    literal_L: list[dict] = field(default_factory=list)
    literal_E: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "checks": dict(sorted(self.checks.items())),
            "mismatches": self.mismatches,
            "literal_L_discrepancies": len(self.literal_L),
            "literal_E_discrepancies": len(self.literal_E),
            "literal_L_examples": self.literal_L[:20],
            "literal_E_examples": self.literal_E[:20],
        }


def _edges1(G: Graph) -> list[list[int]]:
    return [[a + 1, b + 1] for a, b in G.edges()]


def _miss(rep: Report, what: str, G: Graph, **query):
    rep.mismatches.append({"check": what, "n": G.n, "edges": _edges1(G),
                           **{k: (v + 1 if isinstance(v, int) else v) for k, v in query.items()}})


def check_graph(G: Graph, rep: Report) -> None:
    """Run all applicable comparisons on one connected {claw, net}-free graph."""
    n = G.n
    trace(G)
    rep.checks["trace"] += 1
    if n < 3:
        return
    if is_biconnected(G.adj):
        track(G)
        rep.checks["track"] += 1
        for e in G.edges():
            got = isinstance(track_via_edge(G, e), Cycle)
            want = bf_ham_cycle(G, e) is not None
            rep.checks["track_via_edge"] += 1
            if got != want:
                _miss(rep, "track_via_edge", G, edge=[e[0] + 1, e[1] + 1])
            if in_obstruction_E(G, e)[0] == want:
                rep.literal_E.append({"edges": _edges1(G), "edge": [e[0] + 1, e[1] + 1],
                                      "cycle_exists": want})
            trace_via_edge_2conn(G, e)
            rep.checks["trace_via_edge_2conn"] += 1
        return
    ends = inner_end_vertices(decompose(G.adj))
    for s, t in permutations(range(n), 2):
        got = isinstance(st_trace_cut1(G, s, t), Path)
        want = bf_ham_path(G, s, t) is not None
        crit = s in ends and t in ends and ends[s] != ends[t]
        rep.checks["st_trace_cut1"] += 1
        if not got == want == crit:
            _miss(rep, "st_trace_cut1", G, s=s, t=t)
        for e in G.edges():
            got = isinstance(st_trace_via_edge(G, s, t, e), Path)
            want = bf_ham_path(G, s, t, [e]) is not None
            rep.checks["st_trace_via_edge"] += 1
            if got != want:
                _miss(rep, "st_trace_via_edge", G, s=s, t=t, edge=[e[0] + 1, e[1] + 1])
            literal = crit and not in_obstruction_L_literal(G, s, t, e)[0]
            if literal != want:
                rep.literal_L.append({"edges": _edges1(G), "s": s + 1, "t": t + 1,
                                      "edge": [e[0] + 1, e[1] + 1], "trace_exists": want})
    for s in range(n):
        for e in G.edges():
            got = isinstance(s_trace_via_edge(G, s, e), Path)
            want = bf_ham_path(G, s, None, [e]) is not None
            rep.checks["s_trace_via_edge"] += 1
            if got != want:
                _miss(rep, "s_trace_via_edge", G, s=s, edge=[e[0] + 1, e[1] + 1])


def exhaustive(max_n: int, labeled: bool = False, report: Report | None = None) -> Report:
    rep = report or Report()
    for n in range(1, max_n + 1):
        if labeled:
            graphs: Iterable[Graph] = enumerate_labeled_graphs(n, connected=True, claw_net_free=True)
        else:
            graphs = enumerate_classes(n, connected=True, claw_net_free=True)
        for G in graphs:
            check_graph(G, rep)
    return rep


def randomized(count: int, size: int, seed: int, p: float = 0.3,
               report: Report | None = None) -> Report:
    """Random class members; oracle comparisons only when the graph is small enough."""
    rep = report or Report()
    for i in range(count):
        G = random_cn_free(size, p, seed + i)
        if G.n <= 9:
            check_graph(G, rep)
        else:
            trace(G)
            rep.checks["trace"] += 1
            if G.n >= 3 and is_biconnected(G.adj):
                track(G)
                rep.checks["track"] += 1
    return rep

