"""Claw/net recognition, block decomposition and the block chain.

Recognition is plain induced-subgraph search over neighbourhoods using integer
bitmasks.  Block decomposition is an iterative Hopcroft-Tarjan pass.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Literal

from .errors import Disconnected, NotAChain, PreconditionViolation
from .graph_core import Adj, Graph, as_adj, connected, restrict

__all__ = [
    "ForbiddenCertificate",
    "BlockDecomposition",
    "find_claw",
    "find_net",
    "is_claw_net_free",
    "blocks",
    "block_chain",
    "has_three_end_block_subgraph",
    "vertex_connectivity_at_least",
]


@dataclass(frozen=True)
class ForbiddenCertificate:
    """An induced claw ``(center, l1, l2, l3)`` or net ``(t1, t2, t3, p1, p2, p3)``.

    For a net, pendant ``p_i`` hangs off triangle vertex ``t_i``.
    """

    kind: Literal["claw", "net"]
    vertices: tuple[int, ...]

    def verify(self, G: Graph | Adj) -> bool:
        adj = as_adj(G)
        vs = self.vertices
        if len(set(vs)) != len(vs) or any(v not in adj for v in vs):
            return False

        def e(a, b):
            return b in adj[a]

        if self.kind == "claw":
            c, *leaves = vs
            return all(e(c, x) for x in leaves) and not any(
                e(a, b) for a, b in combinations(leaves, 2))
        t, p = vs[:3], vs[3:]
        want = {frozenset(pair) for pair in combinations(t, 2)}
        want |= {frozenset((t[i], p[i])) for i in range(3)}
        have = {frozenset((a, b)) for a, b in combinations(vs, 2) if e(a, b)}
        return have == want

    def to_json(self, one_based: bool = True) -> dict:
        k = 1 if one_based else 0
        vs = [v + k for v in self.vertices]
        if self.kind == "claw":
            return {"kind": "claw", "center": vs[0], "leaves": vs[1:]}
        return {"kind": "net", "triangle": vs[:3], "pendants": vs[3:]}


# -- recognition -----------------------------------------------------------

def _bits(adj: Adj):
    order = sorted(adj)
    pos = {v: i for i, v in enumerate(order)}
    nb = [0] * len(order)
    for v in order:
        m = 0
        for w in adj[v]:
            m |= 1 << pos[w]
        nb[pos[v]] = m
    return order, nb


def _iter_bits(m: int):
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def _claw_at(i: int, nb: list[int]):
    N = nb[i]
    for a in _iter_bits(N):
        ca = N & ~nb[a] & ~((2 << a) - 1)
        for b in _iter_bits(ca):
            cb = ca & ~nb[b] & ~((2 << b) - 1)
            if cb:
                return a, b, (cb & -cb).bit_length() - 1
    return None


def find_claw(G: Graph | Adj) -> ForbiddenCertificate | None:
    """Lexicographically first induced claw (by center, then leaves), or None."""
    order, nb = _bits(as_adj(G))
    for i in range(len(order)):
        hit = _claw_at(i, nb)
        if hit:
            return ForbiddenCertificate("claw", (order[i],) + tuple(order[j] for j in hit))
    return None


def _nets(order, nb, first_only=True):
    n = len(order)
    for t1 in range(n):
        for t2 in _iter_bits(nb[t1] & ~((2 << t1) - 1)):
            # pendants of t1 and t2 must already be private with respect to the pair
            A = nb[t1] & ~nb[t2] & ~(1 << t2)
            B = nb[t2] & ~nb[t1] & ~(1 << t1)
            if not (A and B):
                continue
            for t3 in _iter_bits(nb[t1] & nb[t2] & ~((2 << t2) - 1)):
                P1 = A & ~nb[t3]
                if not P1:
                    continue
                P2 = B & ~nb[t3]
                if not P2:
                    continue
                P3 = nb[t3] & ~nb[t1] & ~nb[t2] & ~(1 << t1) & ~(1 << t2)
                if not P3:
                    continue
                for p1 in _iter_bits(P1):
                    for p2 in _iter_bits(P2 & ~nb[p1]):
                        q = P3 & ~nb[p1] & ~nb[p2]
                        if q:
                            yield (t1, t2, t3, p1, p2, (q & -q).bit_length() - 1)
                            if first_only:
                                return
                            break


def find_net(G: Graph | Adj) -> ForbiddenCertificate | None:
    """First induced net (triangle in lexicographic order, then pendants), or None."""
    order, nb = _bits(as_adj(G))
    for hit in _nets(order, nb):
        return ForbiddenCertificate("net", tuple(order[j] for j in hit))
    return None


def forbidden_certificates(G: Graph | Adj, limit: int | None = None):
    """Yield the first claw at every center; if there are none, yield nets.

    Meant for bulk repair, so certificates may overlap.
    """
    order, nb = _bits(as_adj(G))
    found = 0
    for i in range(len(order)):
        hit = _claw_at(i, nb)
        if hit:
            yield ForbiddenCertificate("claw", (order[i],) + tuple(order[j] for j in hit))
            found += 1
            if limit is not None and found >= limit:
                return
    if found:
        return
    for hit in _nets(order, nb, first_only=False):
        yield ForbiddenCertificate("net", tuple(order[j] for j in hit))
        found += 1
        if limit is not None and found >= limit:
            return


def is_claw_net_free(G: Graph | Adj) -> tuple[bool, ForbiddenCertificate | None]:
    cert = find_claw(G) or find_net(G)
    return cert is None, cert


# -- blocks ----------------------------------------------------------------

def biconnected_blocks(adj: Adj) -> tuple[list[frozenset[int]], set[int]]:
    """Blocks (sorted by smallest vertex) and cut vertices of any graph."""
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    found: list[frozenset[int]] = []
    counter = 0
    for root in sorted(adj):
        if root in index:
            continue
        index[root] = low[root] = counter
        counter += 1
        if not adj[root]:
            found.append(frozenset((root,)))
            continue
        estack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(sorted(adj[root])))]
        while stack:
            v, parent, it = stack[-1]
            for w in it:
                if w == parent:
                    continue
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    estack.append((v, w))
                    stack.append((w, v, iter(sorted(adj[w]))))
                    break
                if index[w] < index[v]:
                    low[v] = min(low[v], index[w])
                    estack.append((v, w))
            else:
                stack.pop()
                if not stack:
                    continue
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= index[u]:
                    comp = set()
                    while True:
                        a, b = estack.pop()
                        comp.update((a, b))
                        if a == u and b == v:
                            break
                    found.append(frozenset(comp))
    found.sort(key=min)
    count: dict[int, int] = {}
    for b in found:
        for v in b:
            count[v] = count.get(v, 0) + 1
    cuts = {v for v, c in count.items() if c > 1}
    return found, cuts


def cut_vertices(adj: Adj) -> set[int]:
    return biconnected_blocks(adj)[1]


def is_biconnected(adj: Adj) -> bool:
    """2-connected: at least three vertices, connected, no cut vertex."""
    if len(adj) < 3 or not connected(adj):
        return False
    return not cut_vertices(adj)


def kappa_at_least(adj: Adj, k: int) -> bool:
    if k <= 0:
        return True
    if len(adj) <= k or not connected(adj):
        return False
    if k == 1:
        return True
    if cut_vertices(adj):
        return False
    if k == 2:
        return True
    if k == 3:
        for v in adj:
            sub = {w: adj[w] - {v} for w in adj if w != v}
            if cut_vertices(sub):
                return False
        return True
    raise ValueError("k must be 1, 2 or 3")


def vertex_connectivity_at_least(G: Graph | Adj, k: int) -> bool:
    """True iff v(G) > k and deleting fewer than k vertices never disconnects G."""
    if k not in (1, 2, 3):
        raise ValueError("k must be 1, 2 or 3")
    return kappa_at_least(as_adj(G), k)


@dataclass
class BlockDecomposition:
    blocks: list[frozenset[int]]
    cut_vertices: frozenset[int]
    kinds: list[str]
    boundary: list[frozenset[int]]
    inner: list[frozenset[int]]
    block_tree: dict[int, list[int]] = field(default_factory=dict)

    @property
    def end_blocks(self) -> list[int]:
        return [i for i, k in enumerate(self.kinds) if k == "end"]

    def block_of_edge(self, u: int, v: int) -> int:
        for i, b in enumerate(self.blocks):
            if u in b and v in b:
                return i
        raise KeyError((u, v))

    def to_json(self, one_based: bool = True) -> dict:
        k = 1 if one_based else 0
        return {
            "blocks": [sorted(v + k for v in b) for b in self.blocks],
            "cut_vertices": sorted(v + k for v in self.cut_vertices),
            "kinds": list(self.kinds),
            "boundary": [sorted(v + k for v in b) for b in self.boundary],
            "inner": [sorted(v + k for v in b) for b in self.inner],
            "block_tree": {str(c + k): bs for c, bs in sorted(self.block_tree.items())},
        }


def decompose(adj: Adj) -> BlockDecomposition:
    if not connected(adj):
        raise Disconnected("block decomposition needs a connected graph")
    bl, cuts = biconnected_blocks(adj)
    kinds, bnd, inn = [], [], []
    tree: dict[int, list[int]] = {c: [] for c in sorted(cuts)}
    for i, b in enumerate(bl):
        bd = frozenset(b & cuts)
        for c in bd:
            tree[c].append(i)
        bnd.append(bd)
        inn.append(frozenset(b - cuts))
        if len(b) == 1:
            kinds.append("isolated")
        elif len(bd) <= 1:
            kinds.append("end")
        else:
            kinds.append("inner")
    return BlockDecomposition(bl, frozenset(cuts), kinds, bnd, inn, tree)


def blocks(G: Graph | Adj) -> BlockDecomposition:
    """Block decomposition of a connected graph.

    A 2-connected graph is reported as a single end-block with an empty
    boundary.
    """
    return decompose(as_adj(G))


def chain_of(dec: BlockDecomposition, start: int | None = None) -> list[int]:
    """Block indices ordered along the block tree, which must be a path.

    The chain starts at the end-block containing ``start`` (when given and an
    inner vertex of an end-block), else at the end-block with the smallest
    vertex.
    """
    nb = len(dec.blocks)
    if nb < 2:
        raise PreconditionViolation("graph has a single block")
    ends = dec.end_blocks
    bad = [c for c, bs in dec.block_tree.items() if len(bs) != 2]
    if len(ends) != 2 or bad or any(len(b) > 2 for b in dec.boundary):
        witness = frozenset().union(*dec.blocks)
        raise NotAChain(f"block tree has {len(ends)} end-blocks; not a path",
                        [dec.blocks[i] for i in ends], witness)
    first = ends[0]
    if start is not None:
        for i in ends:
            if start in dec.inner[i]:
                first = i
                break
    order = [first]
    prev_cut = None
    while len(order) < nb:
        cur = order[-1]
        (c,) = [x for x in dec.boundary[cur] if x != prev_cut]
        (nxt,) = [j for j in dec.block_tree[c] if j != cur]
        order.append(nxt)
        prev_cut = c
    return order


def block_chain(G: Graph | Adj) -> list[frozenset[int]]:
    """Blocks ordered A_1, B_1, ..., B_{k-2}, A_2 along a path-shaped block tree.

    Raises :class:`NotAChain` (carrying the end-blocks) when the block tree is
    not a path and :class:`PreconditionViolation` for a single block.
    """
    dec = blocks(G)
    return [dec.blocks[i] for i in chain_of(dec)]


def _end_block_count(adj: Adj) -> int:
    bl, cuts = biconnected_blocks(adj)
    if len(bl) < 2:
        return 0
    return sum(1 for b in bl if len(b & cuts) == 1)


def has_three_end_block_subgraph(G: Graph | Adj, limit: int = 10) -> frozenset[int] | None:
    """Smallest vertex set inducing a connected subgraph with >= 3 end-blocks.

    Exponential; for testing the claw/net characterisation only.
    """
    adj = as_adj(G)
    if len(adj) > limit:
        raise ValueError(f"graph has {len(adj)} vertices, above the limit {limit}")
    vs = sorted(adj)
    for size in range(4, len(vs) + 1):
        for S in combinations(vs, size):
            sub = restrict(adj, S)
            if connected(sub) and _end_block_count(sub) >= 3:
                return frozenset(S)
    return None


def inner_end_vertices(dec: BlockDecomposition) -> dict[int, int]:
    """Map each inner vertex of an end-block to that block's index."""
    out = {}
    for i in dec.end_blocks:
        for v in dec.inner[i]:
            out[v] = i
    return out

