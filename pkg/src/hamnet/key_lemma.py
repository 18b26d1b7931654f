"""Inserting a vertex into a trace through a prescribed edge.

Given a trace ``P`` (x ... y) of ``G - z`` and an edge ``zp`` with ``p`` on
``P``, :func:`extend_trace` builds a trace ``Q`` of ``G`` that uses ``zp``,
ends in ``{x, y, z}`` and keeps at least one end-edge of ``P``.

The construction grows a *good path* ``M = x_r ... x_1 p y_1 ... y_s`` of
``P`` around ``p``.  Along the walk ``X = p x_1 ... x_k`` (towards ``x``) and
``Y = p y_1 ... y_t`` (towards ``y``) the state keeps explicit witness paths
on the vertex set of ``M``:

``wx1``
    p -> y_s, spanning M, using x_{r-1} x_r.
``wy1``
    p -> x_r, spanning M, using y_{s-1} y_s.
``wx2[v]``
    for v in M - x_r: p -> y_s, spanning M + x_{r+1}, where x_{r+1} sits
    between x_r and v (the x_{r+1} v step may be a non-edge of G).
``wy2[v]``
    mirror image of ``wx2``.
``wz[v]``
    for v in M - p: x_r -> y_s, spanning M + z, with z between p and v.

All witnesses are stored eagerly and rebuilt by splicing at each growth step.
The y-side cases run through :meth:`GoodPathState.mirrored`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator, Mapping, Sequence

from .errors import InternalError, NotClawNetFree, PreconditionViolation
from .graph_core import Adj, Edge, Graph, Path, as_adj, restrict, validate_path
from .structure import find_claw, find_net, is_claw_net_free

__all__ = [
    "LemmaInput",
    "GoodPathState",
    "LemmaOutcome",
    "extend_trace",
    "init_good_path",
    "find_extension_edge",
    "grow_good_path",
    "check_state",
]


@dataclass(frozen=True)
class LemmaInput:
    G: Adj
    z: int
    P: tuple[int, ...]
    p: int

    @property
    def x(self) -> int:
        return self.P[0]

    @property
    def y(self) -> int:
        return self.P[-1]

    @property
    def X(self) -> tuple[int, ...]:
        i = self.P.index(self.p)
        return self.P[i::-1]

    @property
    def Y(self) -> tuple[int, ...]:
        return self.P[self.P.index(self.p):]

    @property
    def end_edges(self) -> tuple[Edge | None, Edge | None]:
        if len(self.P) < 2:
            return None, None
        return Edge.of(self.P[0], self.P[1]), Edge.of(self.P[-2], self.P[-1])


@dataclass
class GoodPathState:
    X: tuple[int, ...]
    Y: tuple[int, ...]
    r: int
    s: int
    wx1: tuple[int, ...]
    wy1: tuple[int, ...]
    wx2: dict[int, tuple[int, ...]]
    wy2: dict[int, tuple[int, ...]]
    wz: dict[int, tuple[int, ...]]

    @property
    def p(self) -> int:
        return self.X[0]

    @property
    def M(self) -> tuple[int, ...]:
        """The good path itself, from x_r to y_s."""
        return self.X[self.r::-1] + self.Y[1:self.s + 1]

    @property
    def x_done(self) -> bool:
        return self.r == len(self.X) - 1

    @property
    def y_done(self) -> bool:
        return self.s == len(self.Y) - 1

    def mirrored(self) -> "GoodPathState":
        return GoodPathState(self.Y, self.X, self.s, self.r, self.wy1, self.wx1,
                             self.wy2, self.wx2,
                             {v: w[::-1] for v, w in self.wz.items()})


@dataclass
class LemmaOutcome:
    Q: Path
    ends: tuple[int, int]
    contains_ex: bool
    contains_ey: bool
    contains_ez: bool
    growth_steps: int = 0
    steps: list[dict] = field(default_factory=list)


class _Aux(Mapping):
    """Induced subgraph on ``core`` plus a few extra edges (possibly to new vertices)."""

    def __init__(self, G: Adj, core: set[int], extra: Sequence[tuple[int, int]]):
        self.G, self.core = G, core
        self.extra: dict[int, set[int]] = {}
        for a, b in extra:
            self.extra.setdefault(a, set()).add(b)
            self.extra.setdefault(b, set()).add(a)

    def __getitem__(self, v):
        own = self.G[v] & self.core if v in self.core else set()
        return own | self.extra.get(v, set())

    def __iter__(self) -> Iterator[int]:
        return iter(self.core | set(self.extra))

    def __len__(self) -> int:
        return len(self.core | set(self.extra))


def check_state(G: Graph | Adj, state: GoodPathState, z: int) -> list[str]:
    """Validate every stored witness against its auxiliary graph; returns problems."""
    adj = as_adj(G)
    X, Y, r, s = state.X, state.Y, state.r, state.s
    p, xr, ys = X[0], X[r], Y[s]
    core = set(state.M)
    problems: list[str] = []

    def check(name, w, extra, start, end, required):
        rep = validate_path(_Aux(adj, core, extra), w, start=start, end=end,
                            required_edges=required, hamiltonian=True)
        problems.extend(f"{name}: {msg}" for msg in rep.violations)

    check("x1", state.wx1, (), p, ys, [(X[r - 1], xr)])
    check("y1", state.wy1, (), p, xr, [(Y[s - 1], ys)])
    for side, w2, A, B, i, end in (("x2", state.wx2, X, Y, r, ys),
                                   ("y2", state.wy2, Y, X, s, xr)):
        if i == len(A) - 1:
            if w2:
                problems.append(f"{side}: witnesses present at the end of P")
            continue
        a, an = A[i], A[i + 1]
        if set(w2) != core - {a}:
            problems.append(f"{side}: keys {sorted(w2)} != {sorted(core - {a})}")
        for v, w in w2.items():
            ex = [(a, an), (an, v)]
            check(f"{side}[{v}]", w, ex, p, end, ex)
    if set(state.wz) != core - {p}:
        problems.append(f"z: keys {sorted(state.wz)} != {sorted(core - {p})}")
    for v, w in state.wz.items():
        ex = [(z, p), (z, v)]
        check(f"z[{v}]", w, ex, xr, ys, ex)
    return problems


def init_good_path(inp: LemmaInput) -> GoodPathState:
    """Good path M_{1,1} on the triangle p x_1 y_1."""
    G, z, X, Y = inp.G, inp.z, inp.X, inp.Y
    if len(X) < 2 or len(Y) < 2:
        raise PreconditionViolation("p must be an interior vertex of P")
    p, x1, y1 = X[0], X[1], Y[1]
    if z in G[x1] or z in G[y1] or y1 not in G[x1]:
        raise PreconditionViolation("need zx_1, zy_1 non-edges and x_1y_1 an edge")
    wx2 = {}
    if len(X) > 2:
        x2 = X[2]
        wx2 = {p: (p, x2, x1, y1), y1: (p, x1, x2, y1)}
    wy2 = {}
    if len(Y) > 2:
        y2 = Y[2]
        wy2 = {p: (p, y2, y1, x1), x1: (p, y1, y2, x1)}
    wz = {x1: (x1, z, p, y1), y1: (x1, p, z, y1)}
    return GoodPathState(X, Y, 1, 1, (p, x1, y1), (p, y1, x1), wx2, wy2, wz)


def find_extension_edge(G: Graph | Adj, state: GoodPathState, z: int) -> tuple[int, int, str]:
    """An edge ab of G outside M-bar with a in {x_{r+1}, y_{s+1}, z}.

    Case priority is p2.1, then p2.2, then p2.3; ties go to the smallest (a, b).
    Raises :class:`NotClawNetFree` if no such edge exists.
    """
    adj = as_adj(G)
    X, Y, r, s = state.X, state.Y, state.r, state.s
    if state.x_done or state.y_done:
        raise PreconditionViolation("good path already reaches an end of P")
    p, xr, ys, xn, yn = X[0], X[r], Y[s], X[r + 1], Y[s + 1]
    core = set(state.M)
    hits = sorted(adj[z] & (core - {p}))
    if hits:
        return z, hits[0], "p2.1"
    hits = sorted(b for b in (xn, yn) if b in adj[z])
    if hits:
        return z, hits[0], "p2.2"
    pairs = [(xn, b) for b in adj[xn] & (core - {xr})]
    pairs += [(yn, b) for b in adj[yn] & (core - {ys})]
    if yn in adj[xn]:
        pairs += [(xn, yn), (yn, xn)]
    if pairs:
        a, b = min(pairs)
        return a, b, "p2.3"
    span = core | {xn, yn, z}
    sub = restrict(adj, span)
    cert = find_claw(sub) or find_net(sub)
    raise NotClawNetFree(
        "subgraph M-bar has three end-blocks and no extension edge", cert)


def _insert_between(w: tuple[int, ...], a: int, b: int, new: int) -> tuple[int, ...]:
    i, j = w.index(a), w.index(b)
    if abs(i - j) != 1:
        raise InternalError(f"{a} and {b} are not consecutive in witness {w}")
    k = max(i, j)
    return w[:k] + (new,) + w[k:]


def _grow_x(st: GoodPathState, b: int, z: int) -> GoodPathState:
    """Case c1 on the x side: x_{r+1} b is an edge with b in M - x_r."""
    X, Y, r, s = st.X, st.Y, st.r, st.s
    xr, xn, xnn = X[r], X[r + 1], X[r + 2]
    core = st.M
    wx1 = st.wx2[b]
    wy1 = st.wy1 + (xn,)
    wx2 = {}
    for v in core:
        if v == xr:
            wx2[v] = _insert_between(wx1, xr, xn, xnn)
        else:
            wx2[v] = _insert_between(st.wx2[v], xn, v, xnn)
    wy2 = {}
    if not st.y_done:
        yn = Y[s + 1]
        for v, w in st.wy2.items():
            wy2[v] = w + (xn,)
        wy2[xn] = st.wx1 + (yn, xn)
    wz = {v: (xn,) + w for v, w in st.wz.items()}
    wz[xn] = (xn, z) + st.wx1
    return GoodPathState(X, Y, r + 1, s, wx1, wy1, wx2, wy2, wz)


def _grow_both(st: GoodPathState, z: int) -> GoodPathState:
    """Case c2: x_{r+1} y_{s+1} is an edge."""
    X, Y, r, s = st.X, st.Y, st.r, st.s
    xr, xn, ys, yn = X[r], X[r + 1], Y[s], Y[s + 1]
    core = st.M
    wx1 = st.wy1 + (xn, yn)
    wy1 = st.wx1 + (yn, xn)
    wx2 = {}
    if r + 1 < len(X) - 1:
        xnn = X[r + 2]
        for v in core:
            if v == xr:
                wx2[v] = st.wy1 + (xnn, xn, yn)
            else:
                wx2[v] = _insert_between(st.wx2[v], xn, v, xnn) + (yn,)
        wx2[yn] = st.wy1 + (xn, xnn, yn)
    wy2 = {}
    if s + 1 < len(Y) - 1:
        ynn = Y[s + 2]
        for v in core:
            if v == ys:
                wy2[v] = st.wx1 + (ynn, yn, xn)
            else:
                wy2[v] = _insert_between(st.wy2[v], yn, v, ynn) + (xn,)
        wy2[xn] = st.wx1 + (yn, ynn, xn)
    wz = {v: (xn,) + w + (yn,) for v, w in st.wz.items()}
    wz[xn] = (xn, z) + st.wx1 + (yn,)
    wz[yn] = (xn,) + st.wy1[::-1] + (z, yn)
    return GoodPathState(X, Y, r + 1, s + 1, wx1, wy1, wx2, wy2, wz)


def grow_good_path(state: GoodPathState, edge: tuple[int, int], case: str, z: int) -> GoodPathState:
    """Extend the good path along an extension edge ``(a, b)``.

    ``case`` is ``"c1"`` (b inside M; grows the side of ``a``) or ``"c2"``
    (``a`` and ``b`` are x_{r+1} and y_{s+1}; grows both sides).
    """
    a, b = edge
    X, Y, r, s = state.X, state.Y, state.r, state.s
    if case == "c2":
        if {a, b} != {X[r + 1], Y[s + 1]}:
            raise PreconditionViolation("c2 needs the edge x_{r+1} y_{s+1}")
        return _grow_both(state, z)
    if case != "c1":
        raise ValueError(f"unknown case {case!r}")
    if not state.x_done and a == X[r + 1]:
        if r + 1 == len(X) - 1:
            raise PreconditionViolation("x_{r+1} is the end of P; nothing to grow into")
        return _grow_x(state, b, z)
    if not state.y_done and a == Y[s + 1]:
        if s + 1 == len(Y) - 1:
            raise PreconditionViolation("y_{s+1} is the end of P; nothing to grow into")
        return _grow_x(state.mirrored(), b, z).mirrored()
    raise PreconditionViolation(f"{a} is neither x_(r+1) nor y_(s+1)")


def _validate_input(adj: Adj, inp: LemmaInput) -> None:
    z, P, p = inp.z, inp.P, inp.p
    if z not in adj:
        raise PreconditionViolation(f"z={z} not in graph")
    if p not in adj[z]:
        raise PreconditionViolation(f"zp = {z}-{p} is not an edge")
    rest = restrict(adj, set(adj) - {z})
    rep = validate_path(rest, P, hamiltonian=True)
    if not rep.ok:
        raise PreconditionViolation("P is not a trace of G - z: " + "; ".join(rep.violations))


def extend_trace(
    G: Graph | Adj,
    z: int,
    P: Sequence[int],
    p: int,
    *,
    check: bool = True,
    debug: bool = False,
    on_step: Callable[[dict], None] | None = None,
) -> LemmaOutcome:
    """Trace of ``G`` through ``zp`` ending in {x, y, z}, from a trace ``P`` of ``G - z``.

    With ``check`` the inputs (including claw/net-freeness) are verified
    first.  With ``debug`` every intermediate good path has all witnesses
    validated; failures raise :class:`InternalError`.  ``on_step`` receives
    one record per loop step (r, s, case, edge, witness status).
    """
    adj = as_adj(G)
    inp = LemmaInput(adj, z, tuple(P), p)
    if check:
        _validate_input(adj, inp)
        ok, cert = is_claw_net_free(adj)
        if not ok:
            raise NotClawNetFree("input graph is not {claw, net}-free", cert)
    steps: list[dict] = []

    def record(rec):
        steps.append(rec)
        if on_step:
            on_step(rec)

    X, Y = inp.X, inp.Y
    growth = 0
    if len(X) == 1 or len(Y) == 1:
        Q = (z,) + inp.P if len(X) == 1 else inp.P + (z,)
        record({"case": "p-end", "r": 0, "s": 0})
    elif z in adj[X[1]]:
        Q = X[:0:-1] + (z,) + Y
        record({"case": "zx1", "r": 0, "s": 0, "edge": [z, X[1]]})
    elif z in adj[Y[1]]:
        Q = X[::-1] + (z,) + Y[1:]
        record({"case": "zy1", "r": 0, "s": 0, "edge": [z, Y[1]]})
    else:
        if Y[1] not in adj[X[1]]:
            from .structure import ForbiddenCertificate
            leaves = tuple(sorted((X[1], Y[1], z)))
            raise NotClawNetFree("x_1 y_1 must be an edge",
                                 ForbiddenCertificate("claw", (p,) + leaves))
        state = init_good_path(inp)
        Q = None
        while Q is None:
            status = None
            if debug:
                problems = check_state(adj, state, z)
                status = not problems
                if problems:
                    raise InternalError("good path witness failure: " + "; ".join(problems))
            rec = {"r": state.r, "s": state.s, "witnesses_ok": status}
            if state.x_done:
                Q = (z,) + state.wx1 + state.Y[state.s + 1:]
                record({**rec, "case": "p1"})
                break
            if state.y_done:
                m = state.mirrored()
                Q = (z,) + m.wx1 + m.Y[m.s + 1:]
                record({**rec, "case": "p1"})
                break
            a, b, tag = find_extension_edge(adj, state, z)
            st = state
            if tag == "p2.1":
                X_, Y_, r, s = st.X, st.Y, st.r, st.s
                Q = X_[:r:-1] + st.wz[b] + Y_[s + 1:]
            elif tag == "p2.2":
                if b == st.Y[st.s + 1]:
                    st = st.mirrored()
                Q = st.X[:st.r:-1] + (z,) + st.wx1 + st.Y[st.s + 1:]
            else:
                if a == st.Y[st.s + 1]:
                    st = st.mirrored()
                xn, yn = st.X[st.r + 1], st.Y[st.s + 1]
                if st.r + 1 == len(st.X) - 1:
                    tag = "p2.3.1"
                    if b != yn:
                        Q = (z,) + st.wx2[b] + st.Y[st.s + 1:]
                    else:
                        Q = (z,) + st.wy1 + (xn,) + st.Y[st.s + 1:]
                else:
                    case = "c2" if b == yn else "c1"
                    tag = f"p2.3.2/{case}"
                    state = grow_good_path(state, (a, b), case, z)
                    growth += 1
            record({**rec, "case": tag, "edge": [a, b]})
    ex, ey = inp.end_edges
    ez = Edge.of(z, p)
    q_edges = {Edge.of(a, b) for a, b in zip(Q, Q[1:])}
    out = LemmaOutcome(Path(Q), (Q[0], Q[-1]), ex in q_edges, ey in q_edges,
                       ez in q_edges, growth, steps)
    problems = validate_path(adj, Q, hamiltonian=True, required_edges=[ez]).violations
    if not {Q[0], Q[-1]} <= {inp.x, inp.y, z}:
        problems.append(f"endpoints {Q[0]}, {Q[-1]} outside {{x, y, z}}")
    if ex is not None and not (out.contains_ex or out.contains_ey):
        problems.append("Q keeps neither end-edge of P")
    if problems:
        raise InternalError("extend_trace produced an invalid trace: " + "; ".join(problems))
    return out
