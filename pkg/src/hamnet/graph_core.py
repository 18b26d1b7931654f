"""Simple undirected graphs, connectivity helpers and path validation.

Vertices are dense integer ids ``0..n-1``.  Graph files use the DIMACS-like
text format (1-based ids)::

    c optional comment
    p <n> <m>
    e <u> <v>
    ...

Most algorithms in the package work on plain adjacency mappings
(``{vertex: set_of_neighbours}``) so that vertex deletion keeps the original
labels.  :func:`as_adj` turns a :class:`Graph` (or an existing mapping) into
one.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import AbstractSet, Iterable, Iterator, Mapping, NamedTuple, Sequence

Adj = Mapping[int, AbstractSet[int]]


class GraphFormatError(ValueError):
    """Malformed graph file; ``line`` is 1-based (0 when not line specific)."""

    def __init__(self, message: str, line: int = 0):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


class Edge(NamedTuple):
    u: int
    v: int

    @classmethod
    def of(cls, a: int, b: int) -> "Edge":
        if a == b:
            raise ValueError(f"self-loop at vertex {a}")
        return cls(a, b) if a < b else cls(b, a)


def edge_set(path: Sequence[int], closed: bool = False) -> set[Edge]:
    es = {Edge.of(a, b) for a, b in zip(path, path[1:])}
    if closed and len(path) > 2:
        es.add(Edge.of(path[-1], path[0]))
    return es


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("_n", "_adj", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for a, b in edges:
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"edge ({a}, {b}) out of range for n={n}")
            if a == b:
                raise ValueError(f"self-loop at vertex {a}")
            if b in nbrs[a]:
                raise ValueError(f"duplicate edge ({a}, {b})")
            nbrs[a].add(b)
            nbrs[b].add(a)
            m += 1
        self._n = n
        self._m = m
        self._adj = MappingProxyType({v: frozenset(s) for v, s in enumerate(nbrs)})

    @classmethod
    def from_adj(cls, adj: Adj) -> tuple["Graph", dict[int, int]]:
        """Relabel an adjacency mapping to a dense graph; returns (graph, old->new)."""
        index = {v: i for i, v in enumerate(sorted(adj))}
        edges = [(index[a], index[b]) for a in adj for b in adj[a] if a < b]
        return cls(len(index), edges), index

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return self._m

    @property
    def adj(self) -> Mapping[int, frozenset[int]]:
        return self._adj

    def __len__(self) -> int:
        return self._n

    def __iter__(self) -> Iterator[int]:
        return iter(range(self._n))

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(self._adj[v]))

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, a: int, b: int) -> bool:
        return 0 <= a < self._n and b in self._adj[a]

    def edges(self) -> list[Edge]:
        return [Edge(a, b) for a in range(self._n) for b in sorted(self._adj[a]) if a < b]

    def audit(self) -> None:
        """Raise AssertionError if the adjacency invariants are broken."""
        total = 0
        for v, nb in self._adj.items():
            assert v not in nb, f"self-loop at {v}"
            for w in nb:
                assert 0 <= w < self._n, f"neighbour {w} of {v} out of range"
                assert v in self._adj[w], f"asymmetric adjacency {v}-{w}"
            total += len(nb)
        assert total == 2 * self._m

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and dict(self._adj) == dict(other._adj)

    def __hash__(self) -> int:
        return hash((self._n, tuple(self.edges())))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={[tuple(e) for e in self.edges()]})"


@dataclass(frozen=True)
class Path:
    vertices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __getitem__(self, i):
        return self.vertices[i]

    @property
    def ends(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    def edges(self) -> set[Edge]:
        return edge_set(self.vertices)


@dataclass(frozen=True)
class Cycle:
    """Cyclic vertex sequence stored linearly; the closing edge is implied."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def edges(self) -> set[Edge]:
        return edge_set(self.vertices, closed=True)


def as_adj(G: Graph | Adj) -> Adj:
    return G.adj if isinstance(G, Graph) else G


def without(adj: Adj, removed: Iterable[int]) -> dict[int, set[int]]:
    gone = set(removed)
    return {v: set(nb) - gone for v, nb in adj.items() if v not in gone}


def restrict(adj: Adj, keep: Iterable[int]) -> dict[int, set[int]]:
    keep = set(keep)
    return {v: set(adj[v]) & keep for v in keep}


def components(adj: Adj, removed: Iterable[int] = ()) -> list[frozenset[int]]:
    """Connected components of ``adj - removed`` sorted by smallest member."""
    gone = set(removed)
    seen: set[int] = set(gone)
    out = []
    for root in sorted(adj):
        if root in seen:
            continue
        seen.add(root)
        comp = [root]
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        out.append(frozenset(comp))
    return out


def connected(adj: Adj, removed: Iterable[int] = ()) -> bool:
    gone = set(removed)
    rest = [v for v in adj if v not in gone]
    if not rest:
        return False
    seen = {rest[0]}
    stack = [rest[0]]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen and w not in gone:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(rest)


def is_connected(G: Graph | Adj) -> bool:
    """True iff the graph has exactly one component (the empty graph is not connected)."""
    return connected(as_adj(G))


def connected_components(G: Graph | Adj) -> list[frozenset[int]]:
    return components(as_adj(G))


def induced(G: Graph, S: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``S`` relabelled densely; returns (graph, old->new)."""
    S = set(S)
    bad = [v for v in S if not 0 <= v < G.n]
    if bad:
        raise ValueError(f"invalid vertex ids {sorted(bad)}")
    return Graph.from_adj(restrict(G.adj, S))


# -- path validation -------------------------------------------------------

@dataclass
class PathReport:
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def validate_path(
    G: Graph | Adj,
    path: Sequence[int] | Path | Cycle,
    *,
    start: int | None = None,
    end: int | None = None,
    required_edges: Iterable[tuple[int, int]] = (),
    hamiltonian: bool = False,
    cycle: bool | None = None,
    extra_edges: Iterable[tuple[int, int]] = (),
) -> PathReport:
    """Check a path (or cycle) against ``G``; violations are returned, not raised.

    ``extra_edges`` are treated as present in addition to the edges of ``G``;
    the key lemma uses this for its auxiliary graphs.  ``start``/``end`` are
    ordered endpoint requirements.
    """
    adj = as_adj(G)
    if cycle is None:
        cycle = isinstance(path, Cycle)
    vs = list(path)
    rep = PathReport()
    extra = {Edge.of(a, b) for a, b in extra_edges}

    def is_edge(a, b):
        return (a in adj and b in adj[a]) or (a != b and Edge.of(a, b) in extra)

    if not vs:
        rep.violations.append("empty path")
        return rep
    for v in vs:
        if v not in adj and not any(v in e for e in extra):
            rep.violations.append(f"vertex {v} not in graph")
    if len(set(vs)) != len(vs):
        seen, dup = set(), set()
        for v in vs:
            (dup if v in seen else seen).add(v)
        rep.violations.append(f"repeated vertices {sorted(dup)}")
    pairs = list(zip(vs, vs[1:]))
    if cycle and len(vs) > 2:
        pairs.append((vs[-1], vs[0]))
    for a, b in pairs:
        if not is_edge(a, b):
            rep.violations.append(f"non-edge step {a}-{b}")
    used = {Edge.of(a, b) for a, b in pairs if a != b}
    for a, b in required_edges:
        if Edge.of(a, b) not in used:
            rep.violations.append(f"missing required edge {a}-{b}")
    if start is not None and vs[0] != start:
        rep.violations.append(f"wrong start {vs[0]} (expected {start})")
    if end is not None and vs[-1] != end:
        rep.violations.append(f"wrong end {vs[-1]} (expected {end})")
    if hamiltonian:
        missing = set(adj) - set(vs)
        if missing:
            rep.violations.append(f"not spanning, missing {sorted(missing)}")
    return rep


# -- file format -----------------------------------------------------------

def parse_graph(text: str) -> Graph:
    header = None
    edges: list[tuple[int, int]] = []
    seen: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if header is not None:
                raise GraphFormatError("second header", lineno)
            if len(parts) != 3:
                raise GraphFormatError("header must be 'p <n> <m>'", lineno)
            try:
                n, m = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError("non-integer header field", lineno) from None
            if n < 1 or m < 0:
                raise GraphFormatError("need n >= 1 and m >= 0", lineno)
            header = (n, m)
        elif parts[0] == "e":
            if header is None:
                raise GraphFormatError("edge before header", lineno)
            if len(parts) != 3:
                raise GraphFormatError("edge line must be 'e <u> <v>'", lineno)
            try:
                a, b = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError("non-integer vertex id", lineno) from None
            n = header[0]
            if not (1 <= a <= n and 1 <= b <= n):
                raise GraphFormatError(f"vertex index out of range 1..{n}", lineno)
            if a == b:
                raise GraphFormatError(f"self-loop at {a}", lineno)
            e = Edge.of(a - 1, b - 1)
            if e in seen:
                raise GraphFormatError(f"duplicate edge {a}-{b}", lineno)
            seen.add(e)
            edges.append(e)
        else:
            raise GraphFormatError(f"unknown line type {parts[0]!r}", lineno)
    if header is None:
        raise GraphFormatError("missing 'p <n> <m>' header")
    if len(edges) != header[1]:
        raise GraphFormatError(f"header declares {header[1]} edges, found {len(edges)}")
    return Graph(header[0], edges)


def format_graph(G: Graph, comment: str | None = None) -> str:
    lines = [f"c {comment}"] if comment else []
    lines.append(f"p {G.n} {G.m}")
    lines += [f"e {u + 1} {v + 1}" for u, v in G.edges()]
    return "\n".join(lines) + "\n"


def read_graph(path: str) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())
