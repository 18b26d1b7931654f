"""Traces (Hamiltonian paths) and tracks (Hamiltonian cycles) of {claw, net}-free graphs.

Every constructor is an induction on the number of vertices: peel a vertex,
solve the smaller instance, and put the vertex back with the key lemma
(:func:`hamnet.key_lemma.extend_trace`) or by splicing per-block pieces
along the block chain.  Constructors return a :class:`Path` or
:class:`Cycle` on success and a :class:`Diagnosis` when the requested object
does not exist.  Broken preconditions raise.

Public entry points check class membership once.  The underscore helpers
skip it, since every graph they see is an induced subgraph of a checked one.
"""
from __future__ import annotations

import contextvars
from contextlib import contextmanager
from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable, Iterable, Union

from .errors import Disconnected, InternalError, NotAChain, NotClawNetFree, PreconditionViolation
from .graph_core import (
    Adj,
    Cycle,
    Edge,
    Graph,
    Path,
    as_adj,
    components,
    connected,
    restrict,
    validate_path,
    without,
)
from .key_lemma import extend_trace
from .structure import (
    BlockDecomposition,
    chain_of,
    cut_vertices,
    decompose,
    inner_end_vertices,
    is_biconnected,
    is_claw_net_free,
    kappa_at_least,
)

__all__ = [
    "Diagnosis",
    "LWitness",
    "EWitness",
    "TraceQuery",
    "explain",
    "trace",
    "trace_via_edge",
    "st_trace_cut1",
    "chain_trace_via_edges",
    "in_obstruction_L_literal",
    "st_trace_via_edge",
    "s_trace_via_edge",
    "in_obstruction_E",
    "track",
    "track_via_edge",
    "split_trace_for_E",
    "trace_via_edge_2conn",
    "result_to_json",
    "find_trace",
]

REASONS = (
    "NotClawNetFree",
    "Disconnected",
    "EndBlockCriterionFailed",
    "LMember",
    "EMember",
    "InnerEdgeCriterionFailed",
    "SeparatingPair",
)


def _shift(obj, k: int):
    """Shift vertex ids inside nested containers by ``k``."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return obj + k
    if isinstance(obj, (set, frozenset)):
        return sorted(_shift(v, k) for v in obj)
    if isinstance(obj, (list, tuple)):
        return [_shift(v, k) for v in obj]
    if isinstance(obj, dict):
        return {key: _shift(v, k) for key, v in obj.items()}
    if hasattr(obj, "to_json"):
        return obj.to_json(one_based=k == 1)
    return obj


@dataclass(frozen=True)
class LWitness:
    """Evidence that a query tuple satisfies one clause of the edge-constrained obstruction.

    ``clause == 1``: ``component`` is a component of ``G - {u, v}`` missing
    both ``s`` and ``t``.  ``clause == 2``: after renaming so that
    ``t' = u'`` (``relabel = (s', t', u', v')``), either ``x is None`` and
    ``component`` is the component of ``G - {s', v'}`` holding ``t'`` (with
    at least two vertices, ``G - {s', v'}`` disconnected), or ``component``
    is a component of ``G - {t', x}`` missing ``s'`` and ``v'``.
    """

    clause: int
    component: frozenset[int]
    relabel: tuple[int, int, int, int] | None = None
    x: int | None = None

    def recheck(self, G: Graph | Adj, s: int, t: int, e: tuple[int, int]) -> bool:
        adj = as_adj(G)
        u, v = e
        if self.clause == 1:
            return (self.component in components(adj, {u, v})
                    and not self.component & {s, t})
        if self.relabel is None:
            return False
        s_, t_, u_, v_ = self.relabel
        if {s_, t_} != {s, t} or {u_, v_} != {u, v} or t_ != u_:
            return False
        if self.x is None:
            comps = components(adj, {s_, v_})
            return (len(comps) > 1 and self.component in comps
                    and t_ in self.component and len(self.component) >= 2)
        if self.x in (u, v) or self.x not in adj:
            return False
        return (self.component in components(adj, {t_, self.x})
                and not self.component & {s_, v_})

    def to_json(self, one_based: bool = True) -> dict:
        k = 1 if one_based else 0
        out = {"clause": self.clause, "component": _shift(self.component, k)}
        if self.relabel is not None:
            out["relabel"] = dict(zip(("s", "t", "u", "v"), _shift(self.relabel, k)))
        if self.x is not None:
            out["x"] = self.x + k
        return out


@dataclass(frozen=True)
class EWitness:
    """A split ``G = x1 G1 x2 G2 x1`` along the edge ``x1x2``.

    ``sides`` hold the non-terminal vertices of ``G1`` and ``G2``;
    ``good`` (0 or 1) names the side that, with ``x1x2``, is 3-connected
    (``kind == "3-connected"``) or a triangle.
    """

    edge: tuple[int, int]
    sides: tuple[frozenset[int], frozenset[int]]
    good: int
    kind: str

    def recheck(self, G: Graph | Adj) -> bool:
        adj = as_adj(G)
        x1, x2 = self.edge
        comps = set(components(adj, {x1, x2}))
        a, b = self.sides
        if not a or not b or a & b or (a | b) != set(adj) - {x1, x2}:
            return False
        if any(not (c <= a or c <= b) for c in comps):
            return False
        return _three_connected_or_triangle(restrict(adj, self.sides[self.good] | {x1, x2})) == self.kind

    def to_json(self, one_based: bool = True) -> dict:
        k = 1 if one_based else 0
        return {"edge": _shift(self.edge, k), "sides": _shift(list(self.sides), k),
                "good_side": self.good, "kind": self.kind}


@dataclass
class Diagnosis:
    """Why a requested trace or track does not exist (or cannot be built)."""

    reason: str
    detail: dict = field(default_factory=dict)
    witness: object = None
    message: str = ""

    def __post_init__(self):
        if self.reason not in REASONS:
            raise ValueError(f"unknown diagnosis reason {self.reason!r}")

    def to_json(self, one_based: bool = True) -> dict:
        k = 1 if one_based else 0
        out = {"reason": self.reason, "detail": _shift(self.detail, k)}
        if self.witness is not None:
            out["witness"] = self.witness.to_json(one_based)
        if self.message:
            out["message"] = self.message
        return out


@dataclass(frozen=True)
class TraceQuery:
    G: Graph
    s: int | None = None
    t: int | None = None
    required_edges: frozenset[Edge] = frozenset()

    def __post_init__(self):
        if self.s is not None and self.s == self.t:
            raise PreconditionViolation("s and t must differ")
        for e in self.required_edges:
            if not self.G.has_edge(*e):
                raise PreconditionViolation(f"required edge {tuple(e)} not in graph")


Result = Union[Path, Diagnosis]


def result_to_json(res: Path | Cycle | Diagnosis, one_based: bool = True) -> dict:
    k = 1 if one_based else 0
    if isinstance(res, Diagnosis):
        return {"status": "not_found", "diagnosis": res.to_json(one_based)}
    key = "cycle" if isinstance(res, Cycle) else "path"
    return {"status": "found", key: [v + k for v in res]}


# -- explain hook ----------------------------------------------------------

_STEP_SINK: contextvars.ContextVar = contextvars.ContextVar("hamnet_step_sink", default=None)


@contextmanager
def explain(sink: Callable[[dict], None]):
    """Route key-lemma step records produced inside the block to ``sink``."""
    token = _STEP_SINK.set(sink)
    try:
        yield
    finally:
        _STEP_SINK.reset(token)


def _extend(adj: Adj, z: int, P, p: int) -> list[int]:
    sink = _STEP_SINK.get()
    if sink is not None:
        sink({"event": "extend", "z": z, "p": p, "n": len(adj)})
    return list(extend_trace(adj, z, P, p, check=False, on_step=sink).Q.vertices)


# -- shared checks ---------------------------------------------------------

def _prepare(G: Graph | Adj) -> dict[int, set[int]]:
    adj = {v: set(nb) for v, nb in as_adj(G).items()}
    if not adj or not connected(adj):
        raise Disconnected("graph must be connected and non-empty")
    ok, cert = is_claw_net_free(adj)
    if not ok:
        raise NotClawNetFree(f"graph contains an induced {cert.kind}", cert)
    return adj


def _need_edge(adj: Adj, e) -> tuple[int, int]:
    u, v = e
    if u not in adj or v not in adj[u]:
        raise PreconditionViolation(f"{u}-{v} is not an edge")
    return u, v


def _need_vertex(adj: Adj, *vs) -> None:
    for v in vs:
        if v not in adj:
            raise PreconditionViolation(f"vertex {v} not in graph")


def _need_cut1(adj: Adj) -> BlockDecomposition:
    if len(adj) < 3:
        raise PreconditionViolation("need at least 3 vertices")
    dec = decompose(adj)
    if len(dec.blocks) < 2:
        raise PreconditionViolation("graph is 2-connected; connectivity must be exactly 1")
    return dec


def _need_2conn(adj: Adj) -> None:
    if len(adj) < 3 or not is_biconnected(adj):
        raise PreconditionViolation("graph must be 2-connected with at least 3 vertices")


def _checked(adj: Adj, vs, *, start=None, end=None, required=(), cycle=False):
    rep = validate_path(adj, vs, start=start, end=end, required_edges=required,
                        hamiltonian=True, cycle=cycle)
    if not rep.ok:
        raise InternalError("constructed object failed validation: " + "; ".join(rep.violations))
    return Cycle(vs) if cycle else Path(vs)


def _small(adj: Adj, s: int | None = None, t: int | None = None, required=()) -> list[int] | None:
    """Exhaustive Hamiltonian path search; only for base cases of a few vertices."""
    vs = sorted(adj)
    req = [Edge.of(*e) for e in required]
    for perm in permutations(vs):
        if s is not None and perm[0] != s or t is not None and perm[-1] != t:
            continue
        if all(b in adj[a] for a, b in zip(perm, perm[1:])):
            es = {Edge.of(a, b) for a, b in zip(perm, perm[1:])}
            if all(e in es for e in req):
                return list(perm)
    return None


# -- plain traces ----------------------------------------------------------

def _trace(adj: Adj) -> list[int]:
    cur = {v: set(nb) for v, nb in adj.items()}
    peeled = []
    while len(cur) > 1:
        cuts = cut_vertices(cur)
        z = min(v for v in cur if v not in cuts)
        peeled.append(z)
        for w in cur.pop(z):
            cur[w].discard(z)
    P = list(cur)
    for z in reversed(peeled):
        nb = {w for w in adj[z] if w in cur}
        cur[z] = nb
        for w in nb:
            cur[w].add(z)
        P = _extend(cur, z, P, min(nb))
    return P


def trace(G: Graph | Adj) -> Path:
    """A trace of a connected {claw, net}-free graph.

    Repeatedly removes the smallest vertex that is not a cut vertex, then
    re-inserts the removed vertices in reverse order, each through the edge
    to its smallest neighbour.
    """
    adj = _prepare(G)
    return _checked(adj, _trace(adj))


def _trace_via_edge(adj: Adj, s: int, z: int) -> list[int]:
    return _extend(adj, z, _trace(without(adj, {z})), s)


def trace_via_edge(G: Graph | Adj, s: int, z: int) -> Path:
    """A trace containing ``sz``; ``G - z`` must be connected."""
    adj = _prepare(G)
    _need_edge(adj, (s, z))
    if len(adj) > 1 and not connected(adj, {z}):
        raise PreconditionViolation(f"G - {z} is disconnected")
    return _checked(adj, _trace_via_edge(adj, s, z), required=[(s, z)])


# -- st-traces in graphs with a cut vertex ---------------------------------

def _endpoint_failure(dec: BlockDecomposition, s: int, t: int) -> Diagnosis | None:
    ends = inner_end_vertices(dec)
    bad = [v for v in (s, t) if v not in ends]
    if bad:
        return Diagnosis("EndBlockCriterionFailed", {"s": s, "t": t, "not_inner_end": bad},
                         message="endpoint is not an inner vertex of an end-block")
    if ends[s] == ends[t]:
        return Diagnosis("EndBlockCriterionFailed",
                         {"s": s, "t": t, "block": dec.blocks[ends[s]]},
                         message="both endpoints lie in the same end-block")
    return None


def _st_cut1(adj: Adj, s: int, t: int) -> list[int]:
    """st-trace when s, t are inner vertices of different end-blocks."""
    cur = {v: set(nb) for v, nb in adj.items()}
    head, tail = [], []
    a, b = s, t
    while len(cur) > 3:
        dec = decompose(cur)
        chain = chain_of(dec, start=a)
        A, B = dec.blocks[chain[0]], dec.blocks[chain[-1]]
        flip = len(A) < 3 and len(B) >= 3
        v, far = (b, a) if flip else (a, b)
        H = without(cur, {v})
        if len(cur[v]) == 1:
            (x,) = cur[v]
        else:
            ends = inner_end_vertices(decompose(H))
            cands = sorted(w for w in cur[v] if w in ends and ends[w] != ends[far])
            if not cands:
                raise InternalError(
                    f"no neighbour of {v} is an inner vertex of a suitable end-block of G - {v}")
            x = cands[0]
        (tail if flip else head).append(v)
        cur = H
        if flip:
            b = x
        else:
            a = x
    core = _small(cur, a, b)
    if core is None:
        raise InternalError(f"no {a}-{b} trace in base case {sorted(cur)}")
    return head + core + tail[::-1]


def st_trace_cut1(G: Graph | Adj, s: int, t: int) -> Path | Diagnosis:
    """st-trace of a graph with a cut vertex, or the reason none exists.

    One exists exactly when s and t are inner vertices of different
    end-blocks.
    """
    adj = _prepare(G)
    _need_vertex(adj, s, t)
    if s == t:
        raise PreconditionViolation("s and t must differ")
    dec = _need_cut1(adj)
    diag = _endpoint_failure(dec, s, t)
    if diag:
        return diag
    return _checked(adj, _st_cut1(adj, s, t), start=s, end=t)


# -- the edge-constrained obstruction --------------------------------------

def in_obstruction_L_literal(G: Graph | Adj, s: int, t: int, e) -> tuple[bool, LWitness | None]:
    """Evaluate the two obstruction clauses exactly as written.

    Clause 2 is tried for every way of naming the shared vertex: whichever
    of ``s``, ``t`` lies on ``e`` plays ``t = u``.
    """
    adj = as_adj(G)
    if s == t:
        raise PreconditionViolation("s and t must differ")
    u, v = _need_edge(adj, e)
    for comp in components(adj, {u, v}):
        if not comp & {s, t}:
            return True, LWitness(1, comp)
    for s_, t_ in ((s, t), (t, s)):
        for u_, v_ in ((u, v), (v, u)):
            if t_ != u_:
                continue
            comps = components(adj, {s_, v_})
            if len(comps) > 1:
                (mine,) = [c for c in comps if t_ in c]
                if len(mine) >= 2:
                    return True, LWitness(2, mine, (s_, t_, u_, v_))
            for x in sorted(set(adj) - {u, v}):
                for comp in components(adj, {t_, x}):
                    if not comp & {s_, v_}:
                        return True, LWitness(2, comp, (s_, t_, u_, v_), x)
    return False, None


def _block_criterion(adj: Adj, dec: BlockDecomposition, chain: list[int],
                     a1: int, a2: int, req: dict[int, tuple[int, int]]) -> Diagnosis | None:
    """Per-block feasibility of an a1-a2 trace through one given edge per block.

    ``req`` maps chain positions to the required edge in that block.
    """
    diag = _endpoint_failure(dec, a1, a2)
    if diag:
        return diag
    last = len(chain) - 1
    for pos, (u, v) in req.items():
        bi = chain[pos]
        B = dec.blocks[bi]
        if len(B) == 2:
            continue
        if pos in (0, last):
            a = a1 if pos == 0 else a2
            (cut,) = dec.boundary[bi]
            hit, wit = in_obstruction_L_literal(restrict(adj, B), a, cut, (u, v))
            if hit:
                return Diagnosis("LMember", {"block": B, "s": a, "t": cut, "edge": (u, v)}, wit,
                                 "the end-block has no trace between its endpoints through the edge")
        elif {u, v} <= dec.boundary[bi]:
            return Diagnosis("InnerEdgeCriterionFailed", {"block": B, "edge": (u, v)},
                             message="required edge joins the two cut vertices of an inner block")
    return None


def _assign_edges(dec: BlockDecomposition, chain: list[int], U) -> dict[int, tuple[int, int]]:
    pos_of = {b: i for i, b in enumerate(chain)}
    req: dict[int, tuple[int, int]] = {}
    for e in U:
        if e is None:
            continue
        u, v = e
        pos = pos_of[dec.block_of_edge(u, v)]
        if pos in req:
            raise PreconditionViolation(
                f"edges {req[pos]} and {(u, v)} lie in the same block; at most one per block")
        req[pos] = (u, v)
    return req


def _cut_between(dec: BlockDecomposition, i: int, j: int) -> int:
    (c,) = dec.blocks[i] & dec.blocks[j]
    return c


def _build_chain(adj: Adj, dec: BlockDecomposition, chain: list[int], a1: int, a2: int,
                 req: dict[int, tuple[int, int]]) -> list[int]:
    """Concatenate per-block pieces into an a1-a2 trace (feasibility already checked)."""
    last = len(chain) - 1
    path: list[int] = []
    for pos, bi in enumerate(chain):
        B = dec.blocks[bi]
        entry = a1 if pos == 0 else _cut_between(dec, chain[pos - 1], bi)
        exit_ = a2 if pos == last else _cut_between(dec, bi, chain[pos + 1])
        e = req.get(pos)
        if len(B) == 2:
            seg = [entry, exit_]
        elif pos == 0:
            q = min(dec.blocks[chain[1]] & adj[exit_])
            bar = restrict(adj, B | {q})
            if e is None:
                seg = _st_cut1(bar, entry, q)[:-1]
            else:
                seg = _xt_path(bar, q, entry, e)[:0:-1]
        elif pos == last:
            q = min(dec.blocks[chain[pos - 1]] & adj[entry])
            bar = restrict(adj, B | {q})
            seg = (_st_cut1(bar, q, exit_) if e is None else _xt_path(bar, q, exit_, e))[1:]
        else:
            q = min(dec.blocks[chain[pos - 1]] & adj[entry])
            q2 = min(dec.blocks[chain[pos + 1]] & adj[exit_])
            bar = restrict(adj, B | {q, q2})
            if e is None:
                T = _trace(bar)
            else:
                z = min(w for w in e if w not in (entry, exit_))
                T = _trace_via_edge(bar, e[0] if e[1] == z else e[1], z)
            if T[0] != q:
                T.reverse()
            seg = T[1:-1]
        if path:
            if path[-1] != seg[0]:
                raise InternalError(f"chain pieces do not meet: {path[-1]} vs {seg[0]}")
            path.extend(seg[1:])
        else:
            path = list(seg)
    return path


def _xt_feasible(adj: Adj, x: int, t: int, e) -> bool:
    """Decide whether an x-t trace through ``e`` (or any, if None) exists; x is a leaf."""
    if t == x or t not in adj:
        return False
    if len(adj) == 2:
        return e is None or set(e) == {x, t}
    if not connected(adj):
        return False
    dec = decompose(adj)
    if len(dec.blocks) < 2:
        return False
    try:
        chain = chain_of(dec, start=x)
        req = _assign_edges(dec, chain, [e])
    except (NotAChain, PreconditionViolation):
        return False
    return _block_criterion(adj, dec, chain, x, t, req) is None


def _xt_path(adj: Adj, x: int, t: int, e) -> list[int]:
    """x-t trace through ``e``, where x is a leaf and the query is feasible."""
    if len(adj) <= 4:
        P = _small(adj, x, t, [e] if e else [])
        if P is None:
            raise InternalError(f"infeasible base case {x}->{t} via {e}")
        return P
    dec = decompose(adj)
    chain = chain_of(dec, start=x)
    req = _assign_edges(dec, chain, [e])
    C = dec.blocks[chain[-1]]
    if e is None or len(chain) > 2 or len(C) < 3 or not set(e) <= C:
        return _build_chain(adj, dec, chain, x, t, req)

    # adj is a 2-connected block C with the leaf x hanging off c
    (c,) = adj[x]
    u, v = e
    if not connected(adj, {u, v}):
        for u_, v_ in ((u, v), (v, u)):
            if v_ in (c, t):
                continue
            Hv = without(adj, {v_})
            if Hv[t] == {u_}:
                # t u_ is a pendant edge of G - v_: finish ... u_ v_ t
                P = _st_cut1(Hv, x, t)
                return P[:-1] + [v_, t]
    Ht = without(adj, {t})
    if t in e:
        cands, e2 = [u if t == v else v], None
    else:
        cands, e2 = sorted(adj[t]), e
    for z in cands:
        if z == x or not connected(Ht):
            continue
        if _xt_feasible(Ht, x, z, e2):
            return _xt_path(Ht, x, z, e2) + [t]
    raise InternalError(f"no admissible predecessor for {t} in {x}->{t} trace via {e}")


def chain_trace_via_edges(G: Graph | Adj, a1: int, a2: int, U: Iterable = ()) -> Path | Diagnosis:
    """a1-a2 trace containing every edge of ``U`` (at most one per block).

    The block tree must be a path with a1 and a2 inner vertices of its two
    end-blocks.  Each block contributes the sub-path between its two
    attachment vertices: end-blocks are solved with one extra pendant
    vertex from the neighbouring block, inner blocks with one on each side.
    """
    adj = _prepare(G)
    _need_vertex(adj, a1, a2)
    U = [_need_edge(adj, e) for e in U]
    dec = _need_cut1(adj)
    chain = chain_of(dec, start=a1)
    req = _assign_edges(dec, chain, U)
    diag = _block_criterion(adj, dec, chain, a1, a2, req)
    if diag:
        return diag
    return _checked(adj, _build_chain(adj, dec, chain, a1, a2, req), start=a1, end=a2, required=U)


def st_trace_via_edge(G: Graph | Adj, s: int, t: int, e) -> Path | Diagnosis:
    """st-trace through ``e`` in a graph with a cut vertex, or a diagnosis.

    Feasibility is decided block by block: s and t must be inner vertices of
    different end-blocks, an edge in an inner block must touch an inner
    vertex, and an edge in an end-block must avoid the obstruction on that
    block (between the query endpoint and the block's cut vertex).
    """
    if s == t:
        raise PreconditionViolation("s and t must differ")
    return chain_trace_via_edges(G, s, t, [e])


def s_trace_via_edge(G: Graph | Adj, s: int, e) -> Path | Diagnosis:
    """Trace with one end at ``s`` through ``e``; tries the possible other ends in order."""
    adj = _prepare(G)
    _need_vertex(adj, s)
    _need_edge(adj, e)
    dec = _need_cut1(adj)
    ends = inner_end_vertices(dec)
    if s not in ends:
        return Diagnosis("EndBlockCriterionFailed", {"s": s, "not_inner_end": [s]},
                         message="s is not an inner vertex of an end-block")
    first = None
    for bi in dec.end_blocks:
        if bi == ends[s]:
            continue
        for t in sorted(dec.inner[bi]):
            res = st_trace_via_edge(adj, s, t, e)
            if isinstance(res, Path):
                return res
            first = first or res
    return first


# -- tracks ----------------------------------------------------------------

def _three_connected_or_triangle(adj: Adj) -> str | None:
    n = len(adj)
    if n == 3 and all(len(nb) == 2 for nb in adj.values()):
        return "triangle"
    if n >= 4 and kappa_at_least(adj, 3):
        return "3-connected"
    return None


def in_obstruction_E(G: Graph | Adj, e) -> tuple[bool, EWitness | None]:
    """Literal split test: some grouping of the components of ``G - {x1, x2}``
    into two sides leaves a side that, with ``x1x2``, is 3-connected or a triangle."""
    adj = as_adj(G)
    x1, x2 = _need_edge(adj, e)
    _need_2conn(adj)
    comps = components(adj, {x1, x2})
    c = len(comps)
    if c > 20:
        raise PreconditionViolation(f"{c} components after removing the edge ends; cap is 20")
    for mask in range(1, 2 ** (c - 1)):
        a = frozenset().union(*(comps[i] for i in range(c) if mask >> i & 1))
        b = frozenset(set(adj) - {x1, x2} - a)
        for good, side in enumerate((a, b)):
            kind = _three_connected_or_triangle(restrict(adj, side | {x1, x2}))
            if kind:
                return True, EWitness((x1, x2), (a, b), good, kind)
    return False, None


def _track(adj: Adj) -> list[int]:
    for z in sorted(adj):
        for p in sorted(adj[z]):
            if connected(adj, {p, z}):
                return _track_edge(adj, p, z)
    raise InternalError("no edge leaves the rest connected")


def _track_edge(adj: Adj, p: int, z: int) -> list[int]:
    """Track through pz, assuming G is 2-connected and G - {p, z} connected."""
    n = len(adj)
    if n == 3:
        (w,) = set(adj) - {p, z}
        return [p, z, w]
    if all(len(nb) == 2 for nb in adj.values()):
        cyc, prev = [p, z], p
        while len(cyc) < n:
            (nxt,) = adj[cyc[-1]] - {prev}
            prev = cyc[-1]
            cyc.append(nxt)
        return cyc
    rest = without(adj, {z})
    if is_biconnected(rest):
        C = _track(rest)
        c = min(w for w in adj[z] if w != p)
        i = C.index(c)
        P = C[i + 1:] + C[:i]
        Q = _extend(without(adj, {c}), z, P, p)
        return [c] + Q
    dec = decompose(rest)
    ends = inner_end_vertices(dec)
    if p not in ends:
        raise InternalError(f"{p} is not an inner vertex of an end-block of G - {z}")
    q = min(w for w in adj[z] if w in ends and ends[w] != ends[p])
    return [z] + _st_cut1(rest, p, q)


def track(G: Graph | Adj) -> Cycle:
    """A track of a 2-connected {claw, net}-free graph."""
    adj = _prepare(G)
    _need_2conn(adj)
    return _checked(adj, _track(adj), cycle=True)


def track_via_edge(G: Graph | Adj, e) -> Cycle | Diagnosis:
    """A track through ``e``, or a diagnosis when ``G - e's ends`` falls apart.

    A track through x1x2 leaves a Hamiltonian path of ``G - {x1, x2}``, so
    that graph must be connected; for this class that is also sufficient.
    """
    adj = _prepare(G)
    x1, x2 = _need_edge(adj, e)
    _need_2conn(adj)
    if not connected(adj, {x1, x2}):
        hit, wit = in_obstruction_E(adj, (x1, x2))
        sides = components(adj, {x1, x2})
        if hit:
            return Diagnosis("EMember", {"edge": (x1, x2), "components": sides}, wit,
                             "the edge splits the graph into two sides")
        return Diagnosis("SeparatingPair", {"edge": (x1, x2), "components": sides},
                         message="removing both ends of the edge disconnects the graph")
    p, z = sorted((x1, x2))
    return _checked(adj, _track_edge(adj, p, z), required=[(x1, x2)], cycle=True)


def _split_sides(adj: Adj, p: int, z: int):
    comps = components(adj, {p, z})
    if len(comps) != 2:
        raise PreconditionViolation(
            f"G - {{{p}, {z}}} has {len(comps)} components; need exactly two")
    return comps


def _split_parts(adj: Adj, p: int, z: int, L: frozenset[int]):
    """The two sides of the split, each with one pendant borrowed from across.

    Left is ``L + p`` plus a neighbour of p on the right; right is ``R + z``
    plus a neighbour of z on the left.  Both are induced subgraphs.
    """
    R = frozenset(adj) - L - {p, z}
    r = min(adj[p] & R)
    l = min(adj[z] & L)
    return restrict(adj, L | {p, r}), r, restrict(adj, R | {z, l}), l


def _split_trace(adj: Adj, p: int, z: int, L: frozenset[int], s: int, t: int) -> list[int]:
    left, r, right, l = _split_parts(adj, p, z, L)
    for H, a, b in ((left, s, r), (right, l, t)):
        diag = _endpoint_failure(decompose(H), a, b)
        if diag:
            raise PreconditionViolation(f"no {a}-{b} trace on one side: {diag.message}")
    return _st_cut1(left, s, r)[:-1] + _st_cut1(right, l, t)[1:]


def _far_inner(H: Adj, leaf: int) -> int:
    inner = inner_end_vertices(decompose(H))
    return min(w for w in inner if inner[w] != inner[leaf])


def split_trace_for_E(G: Graph | Adj, e, s: int, t: int, z: int | None = None) -> Path:
    """st-trace through ``e = pz`` when removing p and z splits the graph.

    The trace runs from s through its side to p, crosses to z and covers
    the other side ending at t.  ``z`` defaults to the larger end of ``e``.
    """
    adj = _prepare(G)
    u, v = _need_edge(adj, e)
    _need_2conn(adj)
    _need_vertex(adj, s, t)
    z = max(u, v) if z is None else z
    if z not in (u, v):
        raise PreconditionViolation(f"{z} is not an end of the edge")
    p = u if z == v else v
    comps = _split_sides(adj, p, z)
    L = next((c for c in comps if s in c), None)
    if L is None or t in L or t in (p, z):
        raise PreconditionViolation("s and t must lie on different sides of the split")
    return _checked(adj, _split_trace(adj, p, z, L, s, t), start=s, end=t, required=[(p, z)])


def trace_via_edge_2conn(G: Graph | Adj, e) -> Path:
    """A trace through any edge of a 2-connected {claw, net}-free graph."""
    adj = _prepare(G)
    x1, x2 = _need_edge(adj, e)
    _need_2conn(adj)
    if connected(adj, {x1, x2}):
        p, z = sorted((x1, x2))
        C = _track_edge(adj, p, z)
        i = C.index(p)
        C = C[i:] + C[:i]
        if C[1] != z:
            C = [C[0]] + C[:0:-1]
        return _checked(adj, C, required=[(x1, x2)])
    p, z = min(x1, x2), max(x1, x2)
    L = _split_sides(adj, p, z)[0]
    left, r, right, l = _split_parts(adj, p, z, L)
    s, t = _far_inner(left, r), _far_inner(right, l)
    return _checked(adj, _split_trace(adj, p, z, L, s, t), required=[(x1, x2)])


# -- dispatch --------------------------------------------------------------

def find_trace(G: Graph | Adj, s: int | None = None, t: int | None = None,
               U: Iterable = ()) -> Path | Diagnosis:
    """Pick the constructor matching the constraints.

    2-connected graphs support at most one required edge and no endpoint
    constraints.  Graphs with a cut vertex support any endpoint constraints
    and at most one required edge per block.  Free endpoints are tried in
    increasing order over the inner vertices of the end-blocks.
    """
    adj = _prepare(G)
    U = [_need_edge(adj, e) for e in U]
    _need_vertex(adj, *(v for v in (s, t) if v is not None))
    if s is not None and s == t:
        raise PreconditionViolation("s and t must differ")
    if len(adj) <= 2:
        P = _small(adj, s, t, U)
        if P is None:
            return Diagnosis("EndBlockCriterionFailed", {"s": s, "t": t},
                             message="no trace with these constraints")
        return Path(P)
    if is_biconnected(adj):
        if s is not None or t is not None or len(U) > 1:
            raise PreconditionViolation(
                "on 2-connected graphs only a single required edge is supported")
        return trace_via_edge_2conn(adj, U[0]) if U else _checked(adj, _trace(adj))
    if s is None and t is not None:
        res = find_trace(adj, t, None, U)
        return Path(res.vertices[::-1]) if isinstance(res, Path) else res
    dec = decompose(adj)
    ends = inner_end_vertices(dec)
    firsts = [s] if s is not None else sorted(ends)
    diag = None
    for a in firsts:
        if a not in ends:
            diag = diag or _endpoint_failure(dec, a, a)
            continue
        seconds = [t] if t is not None else sorted(v for v in ends if ends[v] != ends[a])
        for b in seconds:
            res = chain_trace_via_edges(adj, a, b, U)
            if isinstance(res, Path):
                return res
            diag = diag or res
    return diag
