import random
from itertools import combinations

import pytest

from hamnet.graph_core import Graph, connected, validate_path
from hamnet.oracle import (
    bf_ham_cycle,
    bf_ham_path,
    enumerate_classes,
    enumerate_labeled_graphs,
    graph_from_mask,
    naive_ham_cycle,
    naive_ham_path,
    random_cn_free,
)
from hamnet.structure import is_biconnected, is_claw_net_free

from conftest import C4, DIAMOND, K3, P4, P5


def test_path_examples():
    assert bf_ham_path(P4, 0, 3).vertices == (0, 1, 2, 3)
    assert bf_ham_path(P4, 0, 2) is None
    assert bf_ham_path(P5, 0, 4, [(2, 3)]).vertices == (0, 1, 2, 3, 4)
    assert bf_ham_path(K3, 0, 0) is None
    assert bf_ham_path(Graph(1), 0).vertices == (0,)
    assert bf_ham_path(Graph(0)) is None


def test_cycle_examples():
    assert sorted(bf_ham_cycle(C4).vertices) == [0, 1, 2, 3]
    assert bf_ham_cycle(DIAMOND, (1, 2)) is None
    assert bf_ham_cycle(DIAMOND, (0, 1)) is not None
    assert bf_ham_cycle(P4) is None
    assert bf_ham_cycle(Graph(2, [(0, 1)])) is None


def test_size_limit():
    with pytest.raises(ValueError):
        bf_ham_path(Graph(13, [(i, i + 1) for i in range(12)]))
    assert bf_ham_path(Graph(13, [(i, i + 1) for i in range(12)]), limit=13) is not None


def test_required_edge_not_in_graph():
    assert bf_ham_path(P4, required=[(0, 3)]) is None
    assert bf_ham_cycle(C4, (0, 2)) is None


def _random_queries(count, seed):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, 6)
        G = Graph(n, [e for e in combinations(range(n), 2) if rng.random() < 0.5])
        s = rng.choice([None] + list(range(n)))
        t = rng.choice([None] + list(range(n)))
        es = G.edges()
        req = rng.sample(es, min(len(es), rng.randint(0, 2)))
        yield G, s, t, req


def test_path_matches_permutation_scan():
    for G, s, t, req in _random_queries(1500, 7):
        got = bf_ham_path(G, s, t, req)
        want = naive_ham_path(G, s, t, req)
        assert (got is None) == (want is None), (G.edges(), s, t, req)
        if got is not None:
            assert validate_path(G, got, start=s, end=t, required_edges=req, hamiltonian=True).ok


def test_cycle_matches_permutation_scan():
    for G, _, _, req in _random_queries(1500, 11):
        e = req[0] if req else None
        got = bf_ham_cycle(G, e)
        assert (got is None) == (naive_ham_cycle(G, e) is None), (G.edges(), e)
        if got is not None:
            assert validate_path(G, got, required_edges=[e] if e else [], hamiltonian=True).ok


def test_class_counts():
    # connected graphs up to isomorphism: 1, 1, 2, 6, 21, 112, 853
    assert [len(enumerate_classes(n, connected=True)) for n in range(1, 8)] == [1, 1, 2, 6, 21, 112, 853]
    assert len(enumerate_classes(3, connected=True)) == 2
    # on four vertices only the star is excluded
    assert len(enumerate_classes(4, connected=True, claw_net_free=True)) == 5


def test_labeled_counts():
    assert sum(1 for _ in enumerate_labeled_graphs(3, connected=True)) == 4
    assert sum(1 for _ in enumerate_labeled_graphs(2, connected=True)) == 1
    # connected labelled graphs on 4 vertices: 38, of which 4 are stars
    assert sum(1 for _ in enumerate_labeled_graphs(4, connected=True, claw_net_free=True)) == 34
    assert sum(1 for _ in enumerate_labeled_graphs(4)) == 64


@pytest.mark.parametrize("n", [4, 5])
def test_labeled_orbits_match_mask_scan(n):
    m = n * (n - 1) // 2
    want = [mask for mask in range(1 << m)
            if connected(graph_from_mask(n, mask).adj)
            and is_claw_net_free(graph_from_mask(n, mask).adj)[0]]
    got = [G for G in enumerate_labeled_graphs(n, connected=True, claw_net_free=True)]
    assert [G.edges() for G in got] == [graph_from_mask(n, mask).edges() for mask in want]


def test_two_connected_filter():
    for G in enumerate_classes(5, two_connected=True):
        assert is_biconnected(G.adj)
    assert enumerate_classes(2, two_connected=True) == []


def test_enumeration_range():
    with pytest.raises(ValueError):
        enumerate_classes(8)
    with pytest.raises(ValueError):
        list(enumerate_labeled_graphs(0))


def test_random_cn_free():
    for seed in range(30):
        G = random_cn_free(12, 0.25, seed)
        assert connected(G.adj) and is_claw_net_free(G.adj)[0]
        assert set(G) == set(range(G.n))
    assert random_cn_free(15, 0.3, 5).edges() == random_cn_free(15, 0.3, 5).edges()
    assert random_cn_free(1, 0.5, 0).n == 1
    with pytest.raises(ValueError):
        random_cn_free(5, 0.0, 1)
    with pytest.raises(RuntimeError):
        random_cn_free(30, 0.1, 3, max_rounds=0)
