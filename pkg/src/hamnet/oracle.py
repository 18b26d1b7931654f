"""Ground truth for tests: exhaustive Hamiltonian search and small-graph enumeration.

Nothing here knows about claws or nets beyond filtering; the search is plain
backtracking so it can be trusted independently of the constructors.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterable, Iterator

from .graph_core import Adj, Cycle, Edge, Graph, Path, as_adj, connected
from .structure import forbidden_certificates, is_biconnected, is_claw_net_free

__all__ = [
    "OracleQuery",
    "bf_ham_path",
    "bf_ham_cycle",
    "naive_ham_path",
    "naive_ham_cycle",
    "enumerate_labeled_graphs",
    "enumerate_classes",
    "random_cn_free",
    "graph_from_mask",
]


@dataclass(frozen=True)
class OracleQuery:
    G: Graph
    s: int | None = None
    t: int | None = None
    required_edges: frozenset[Edge] = field(default_factory=frozenset)
    target: str = "path"


def _prep(adj: Adj, required, limit: int):
    n = len(adj)
    if n > limit:
        raise ValueError(f"{n} vertices exceeds the oracle limit {limit}")
    verts = sorted(adj)
    idx = {v: i for i, v in enumerate(verts)}
    nb = [0] * n
    for v in verts:
        for w in adj[v]:
            nb[idx[v]] |= 1 << idx[w]
    req = [0] * n
    for a, b in required:
        if a not in adj or b not in adj[a]:
            return None
        req[idx[a]] |= 1 << idx[b]
        req[idx[b]] |= 1 << idx[a]
    if any(bin(r).count("1") > 2 for r in req):
        return None
    return verts, idx, nb, req


def _search(n, nb, req, start, end, close):
    """DFS over bitmasks; returns the vertex index order or None."""
    full = (1 << n) - 1
    path = [start]

    def ok_arrival(v, came, seen):
        # a required partner already on the path must be the vertex we came from
        bad = req[v] & seen & ~(1 << came)
        if close:
            bad &= ~(1 << start)
        return not bad

    def dfs(v, seen):
        if seen == full:
            if end is not None and v != end:
                return False
            if close:
                return bool(nb[v] >> start & 1) and _closing_ok(v)
            return True
        forced = req[v] & ~seen
        if close:
            forced &= ~(1 << start)
        if bin(forced).count("1") > 1:
            return False
        cand = forced if forced else nb[v] & ~seen
        if end is not None and seen | (1 << end) != full:
            cand &= ~(1 << end)
        while cand:
            low = cand & -cand
            w = low.bit_length() - 1
            cand ^= low
            if not ok_arrival(w, v, seen):
                continue
            path.append(w)
            if dfs(w, seen | low):
                return True
            path.pop()
        return False

    def _closing_ok(v):
        need = req[start]
        used = 1 << path[1] if len(path) > 1 else 0
        return not (need & ~used & ~(1 << v))

    return path if dfs(start, 1 << start) else None


def bf_ham_path(G: Graph | Adj, s: int | None = None, t: int | None = None,
                required: Iterable[tuple[int, int]] = (), limit: int = 12) -> Path | None:
    """First Hamiltonian path (by start vertex, then neighbour order) meeting the constraints."""
    adj = as_adj(G)
    if not adj:
        return None
    prep = _prep(adj, list(required), limit)
    if prep is None:
        return None
    verts, idx, nb, req = prep
    n = len(verts)
    if n == 1:
        ok = (s is None or s == verts[0]) and (t is None or t == verts[0])
        return Path((verts[0],)) if ok and not any(req) else None
    if s is not None and s == t:
        return None
    end = idx[t] if t is not None else None
    if s is not None:
        starts = [idx[s]]
    elif t is not None:
        # search from t and reverse, so the end constraint becomes a start constraint
        found = _search(n, nb, req, idx[t], None, False)
        return Path(tuple(verts[i] for i in reversed(found))) if found else None
    else:
        starts = range(n)
    for st in starts:
        found = _search(n, nb, req, st, end, False)
        if found:
            return Path(tuple(verts[i] for i in found))
    return None


def bf_ham_cycle(G: Graph | Adj, required: tuple[int, int] | None = None,
                 limit: int = 12) -> Cycle | None:
    adj = as_adj(G)
    if len(adj) < 3:
        return None
    reqs = [required] if required is not None else []
    prep = _prep(adj, reqs, limit)
    if prep is None:
        return None
    verts, idx, nb, req = prep
    start = idx[required[0]] if required is not None else 0
    found = _search(len(verts), nb, req, start, None, True)
    return Cycle(tuple(verts[i] for i in found)) if found else None


def naive_ham_path(G: Graph | Adj, s=None, t=None, required=()) -> Path | None:
    """Permutation scan; test-only cross-check of :func:`bf_ham_path`."""
    adj = as_adj(G)
    req = {Edge.of(a, b) for a, b in required}
    for perm in permutations(sorted(adj)):
        if (s is not None and perm[0] != s) or (t is not None and perm[-1] != t):
            continue
        if all(b in adj[a] for a, b in zip(perm, perm[1:])):
            if req <= {Edge.of(a, b) for a, b in zip(perm, perm[1:])}:
                return Path(perm)
    return None


def naive_ham_cycle(G: Graph | Adj, required=None) -> Cycle | None:
    adj = as_adj(G)
    if len(adj) < 3:
        return None
    for perm in permutations(sorted(adj)):
        cyc = perm + perm[:1]
        if all(b in adj[a] for a, b in zip(cyc, cyc[1:])):
            if required is None or Edge.of(*required) in Cycle(perm).edges():
                return Cycle(perm)
    return None


# -- enumeration -----------------------------------------------------------

def _pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def graph_from_mask(n: int, mask: int) -> Graph:
    """Graph whose edge bit ``i`` refers to the i-th pair in (0,1), (0,2), ... order."""
    return Graph(n, [e for i, e in enumerate(_pairs(n)) if mask >> i & 1])


def _passes(G: Graph, want_connected, claw_net_free, two_connected) -> bool:
    if want_connected and not connected(G.adj):
        return False
    if two_connected and not (G.n >= 3 and is_biconnected(G.adj)):
        return False
    if claw_net_free and not is_claw_net_free(G.adj)[0]:
        return False
    return True


def enumerate_classes(n: int, *, connected: bool = False, claw_net_free: bool = False,
                      two_connected: bool = False) -> list[Graph]:
    """One representative per isomorphism class (graph atlas order) passing the filters."""
    from networkx.generators.atlas import graph_atlas_g

    if not 1 <= n <= 7:
        raise ValueError("n must be between 1 and 7")
    out = []
    for g in graph_atlas_g():
        if g.number_of_nodes() != n:
            continue
        G = Graph(n, g.edges())
        if _passes(G, connected, claw_net_free, two_connected):
            out.append(G)
    return out


def enumerate_labeled_graphs(n: int, *, connected: bool = False, claw_net_free: bool = False,
                             two_connected: bool = False) -> Iterator[Graph]:
    """Every labelled graph on ``0..n-1`` passing the filters, by increasing edge mask.

    With the class filter on, labelled graphs are produced as the
    permutation orbits of the isomorphism-class representatives, which is
    far cheaper than scanning all ``2^(n(n-1)/2)`` masks at n = 7.
    """
    if not 1 <= n <= 7:
        raise ValueError("n must be between 1 and 7")
    pairs = _pairs(n)
    if not claw_net_free:
        for mask in range(1 << len(pairs)):
            G = graph_from_mask(n, mask)
            if _passes(G, connected, False, two_connected):
                yield G
        return
    bit = {}
    for i, (a, b) in enumerate(pairs):
        bit[a, b] = bit[b, a] = 1 << i
    masks: set[int] = set()
    perms = list(permutations(range(n)))
    for G in enumerate_classes(n, connected=connected, claw_net_free=True,
                               two_connected=two_connected):
        es = G.edges()
        for pi in perms:
            masks.add(sum(bit[pi[a], pi[b]] for a, b in es))
    for mask in sorted(masks):
        yield graph_from_mask(n, mask)


# -- random class members --------------------------------------------------

def random_cn_free(n: int, p: float, seed: int, max_rounds: int | None = None) -> Graph:
    """Random connected {claw, net}-free graph.

    Samples G(n, p), keeps the largest component (relabelled in vertex
    order) and then, while a claw or net is present, adds a random missing
    edge among the certificate's vertices.  The result can have fewer than
    ``n`` vertices.
    """
    if n < 1 or not 0 < p < 1:
        raise ValueError("need n >= 1 and 0 < p < 1")
    rng = random.Random(seed)
    edges = [e for e in combinations(range(n), 2) if rng.random() < p]
    adj: dict[int, set[int]] = {v: set() for v in range(n)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    from .graph_core import components

    big = max(components(adj), key=lambda c: (len(c), -min(c)))
    order = sorted(big)
    ren = {v: i for i, v in enumerate(order)}
    cur = {ren[v]: {ren[w] for w in adj[v]} for v in order}
    cap = max_rounds if max_rounds is not None else len(cur) ** 2 + 10
    for _ in range(cap):
        certs = list(forbidden_certificates(cur, limit=len(cur)))
        if not certs:
            return Graph(len(cur), [(a, b) for a in cur for b in cur[a] if a < b])
        for cert in certs:
            if not cert.verify(cur):
                continue
            missing = [(a, b) for a, b in combinations(sorted(cert.vertices), 2)
                       if b not in cur[a]]
            a, b = rng.choice(missing)
            cur[a].add(b)
            cur[b].add(a)
    raise RuntimeError(f"repair did not finish within {cap} rounds")
