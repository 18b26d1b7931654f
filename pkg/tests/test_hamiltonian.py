from itertools import permutations

import pytest

from hamnet.errors import Disconnected, NotClawNetFree, PreconditionViolation
from hamnet.graph_core import Cycle, Edge, Graph, Path, validate_path
from hamnet.hamiltonian import (
    Diagnosis,
    chain_trace_via_edges,
    explain,
    find_trace,
    in_obstruction_E,
    in_obstruction_L_literal,
    result_to_json,
    s_trace_via_edge,
    split_trace_for_E,
    st_trace_cut1,
    st_trace_via_edge,
    trace,
    trace_via_edge,
    trace_via_edge_2conn,
    track,
    track_via_edge,
)
from hamnet.structure import is_biconnected
from hamnet.oracle import bf_ham_cycle, bf_ham_path, enumerate_classes

from conftest import BOWTIE, C4, DIAMOND, K3, K4, K4_PENDANT, NET, P4, P5, TWO_EDGES

# three triangles in a row; the middle one has cut vertices 2 and 4
TRIPLE = Graph(7, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4), (4, 5), (4, 6), (5, 6)])
# C5 0-1-4-3-2 plus the chord 1-2
SPLIT5 = Graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (1, 4), (3, 4)])
# two diamonds glued on 0 and 3; G - {0, 3} has two components
DOUBLE_DIAMOND = Graph(6, [(0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5)])


def ok(G, res, **kw):
    assert isinstance(res, (Path, Cycle)), res
    rep = validate_path(G, res, hamiltonian=True, **kw)
    assert rep.ok, rep.violations
    return res.vertices


def test_trace_examples():
    assert set(ok(K3, trace(K3))) == {0, 1, 2}
    assert ok(P4, trace(P4)) in ((0, 1, 2, 3), (3, 2, 1, 0))
    ends = set(trace(BOWTIE).ends)
    assert len(ends & {0, 1}) == 1 and len(ends & {3, 4}) == 1
    assert trace(Graph(1)).vertices == (0,)


def test_trace_rejects_bad_input():
    with pytest.raises(NotClawNetFree):
        trace(NET)
    with pytest.raises(Disconnected):
        trace(TWO_EDGES)


def test_trace_via_edge_examples():
    ok(K3, trace_via_edge(K3, 0, 1), required_edges=[(0, 1)])
    assert ok(P4, trace_via_edge(P4, 1, 0)) in ((0, 1, 2, 3), (3, 2, 1, 0))
    ok(K4_PENDANT, trace_via_edge(K4_PENDANT, 0, 4), required_edges=[(0, 4)])
    with pytest.raises(PreconditionViolation):
        trace_via_edge(P4, 2, 1)  # G - 1 is disconnected


def test_st_trace_cut1_examples():
    ok(BOWTIE, st_trace_cut1(BOWTIE, 0, 3), start=0, end=3)
    assert st_trace_cut1(P4, 0, 3).vertices == (0, 1, 2, 3)
    d = st_trace_cut1(P4, 0, 2)
    assert isinstance(d, Diagnosis) and d.reason == "EndBlockCriterionFailed"
    assert bf_ham_path(P4, 0, 2) is None
    d = st_trace_cut1(BOWTIE, 0, 1)
    assert d.reason == "EndBlockCriterionFailed" and "same end-block" in d.message
    with pytest.raises(PreconditionViolation):
        st_trace_cut1(K4, 0, 1)


def test_chain_examples():
    assert chain_trace_via_edges(P4, 0, 3, [(1, 2)]).vertices == (0, 1, 2, 3)
    ok(BOWTIE, chain_trace_via_edges(BOWTIE, 0, 4, [(0, 1), (3, 4)]),
       start=0, end=4, required_edges=[(0, 1), (3, 4)])
    d = chain_trace_via_edges(TRIPLE, 0, 6, [(2, 4)])
    assert d.reason == "InnerEdgeCriterionFailed"
    assert d.detail["block"] == {2, 3, 4}
    assert bf_ham_path(TRIPLE, 0, 6, [(2, 4)]) is None
    with pytest.raises(PreconditionViolation):
        chain_trace_via_edges(BOWTIE, 0, 4, [(0, 1), (1, 2)])


def test_literal_L_examples():
    assert in_obstruction_L_literal(P4, 0, 3, (1, 2)) == (False, None)
    assert in_obstruction_L_literal(P4, 3, 0, (0, 1)) == (False, None)
    # K4 (c=0, u=1) with pendant s=4 at c; G - {0, 1} = {2, 3} + {4}, and
    # {s, t} = {4, 1} misses {2, 3}, so the first clause already holds
    hit, wit = in_obstruction_L_literal(K4_PENDANT, 4, 1, (0, 1))
    assert hit and wit.clause == 1 and wit.component == {2, 3}
    assert wit.recheck(K4_PENDANT, 4, 1, (0, 1))
    assert bf_ham_path(K4_PENDANT, 4, 1, [(0, 1)]) is None


def test_literal_L_second_clause_witnesses_recheck():
    seen = set()
    for G in enumerate_classes(5, connected=True, claw_net_free=True):
        for s, t in permutations(range(5), 2):
            for e in G.edges():
                hit, wit = in_obstruction_L_literal(G, s, t, e)
                if hit:
                    assert wit.recheck(G, s, t, e)
                    seen.add((wit.clause, wit.x is None))
    assert {(1, True), (2, True), (2, False)} <= seen


def test_st_trace_via_edge_examples():
    for e in BOWTIE.edges():
        got = st_trace_via_edge(BOWTIE, 0, 3, e)
        if bf_ham_path(BOWTIE, 0, 3, [e]) is None:
            assert got.reason == "LMember" and got.witness is not None
        else:
            ok(BOWTIE, got, start=0, end=3, required_edges=[e])
    assert st_trace_via_edge(P5, 0, 4, (2, 3)).vertices == (0, 1, 2, 3, 4)
    d = st_trace_via_edge(K4_PENDANT, 4, 1, (0, 1))
    assert d.reason == "LMember"
    assert d.witness.recheck(Graph(4, K4.edges()), 1, 0, (0, 1))


def test_s_trace_via_edge_examples():
    assert s_trace_via_edge(P4, 0, (2, 3)).vertices == (0, 1, 2, 3)
    ok(BOWTIE, s_trace_via_edge(BOWTIE, 0, (3, 4)), start=0, required_edges=[(3, 4)])
    d = s_trace_via_edge(P4, 1, (0, 1))
    assert d.reason == "EndBlockCriterionFailed"
    assert bf_ham_path(P4, 1, None, [(0, 1)]) is None


def test_E_examples():
    hit, wit = in_obstruction_E(DIAMOND, (1, 2))
    assert hit and wit.kind == "triangle" and wit.recheck(DIAMOND)
    assert in_obstruction_E(C4, (0, 1)) == (False, None)
    for e in K4.edges():
        assert in_obstruction_E(K4, e) == (False, None)
    with pytest.raises(PreconditionViolation):
        in_obstruction_E(P4, (1, 2))


def test_track_examples():
    assert set(ok(C4, track(C4))) == {0, 1, 2, 3}
    ok(K4, track(K4))
    cyc = track(DIAMOND)
    assert Edge(1, 2) not in cyc.edges()
    with pytest.raises(PreconditionViolation):
        track(P4)


def test_track_via_edge_examples():
    for e in C4.edges():
        ok(C4, track_via_edge(C4, e), required_edges=[e])
    d = track_via_edge(DIAMOND, (1, 2))
    assert d.reason == "EMember" and d.witness.recheck(DIAMOND)
    assert bf_ham_cycle(DIAMOND, (1, 2)) is None
    for e in [(0, 1), (0, 2), (1, 3), (2, 3)]:
        ok(DIAMOND, track_via_edge(DIAMOND, e), required_edges=[e])


def test_track_via_edge_separating_pair_outside_literal_family():
    e = (0, 3)
    assert in_obstruction_E(DOUBLE_DIAMOND, e) == (False, None)
    assert bf_ham_cycle(DOUBLE_DIAMOND, e) is None
    d = track_via_edge(DOUBLE_DIAMOND, e)
    assert d.reason == "SeparatingPair"
    assert d.detail["components"] == [{1, 2}, {4, 5}]


def test_split_trace_examples():
    assert split_trace_for_E(DIAMOND, (1, 2), 0, 3).vertices == (0, 1, 2, 3)
    assert split_trace_for_E(SPLIT5, (1, 2), 0, 4).vertices == (0, 1, 2, 3, 4)
    with pytest.raises(PreconditionViolation):
        split_trace_for_E(DIAMOND, (1, 2), 1, 3)
    with pytest.raises(PreconditionViolation):
        split_trace_for_E(C4, (0, 1), 2, 3)


def test_trace_via_edge_2conn_examples():
    for e in C4.edges():
        ok(C4, trace_via_edge_2conn(C4, e), required_edges=[e])
    assert trace_via_edge_2conn(DIAMOND, (1, 2)).vertices in ((0, 1, 2, 3), (3, 2, 1, 0))
    for e in K4.edges():
        ok(K4, trace_via_edge_2conn(K4, e), required_edges=[e])
    ok(DOUBLE_DIAMOND, trace_via_edge_2conn(DOUBLE_DIAMOND, (0, 3)), required_edges=[(0, 3)])


def test_find_trace_dispatch():
    assert find_trace(P4, 0, 3, [(1, 2)]).vertices == (0, 1, 2, 3)
    assert find_trace(P4, None, 0).vertices == (3, 2, 1, 0)
    ok(BOWTIE, find_trace(BOWTIE, U=[(2, 3)]), required_edges=[(2, 3)])
    ok(DIAMOND, find_trace(DIAMOND, U=[(1, 2)]), required_edges=[(1, 2)])
    assert find_trace(Graph(2, [(0, 1)]), 1).vertices == (1, 0)
    assert find_trace(P4, 1).reason == "EndBlockCriterionFailed"
    with pytest.raises(PreconditionViolation):
        find_trace(C4, 0, 2)


def test_json_shapes():
    assert result_to_json(trace(P4)) == {"status": "found", "path": [1, 2, 3, 4]}
    assert sorted(result_to_json(track(C4))["cycle"]) == [1, 2, 3, 4]
    js = result_to_json(st_trace_via_edge(K4_PENDANT, 4, 1, (0, 1)))
    assert js["status"] == "not_found"
    assert js["diagnosis"]["reason"] == "LMember"
    assert js["diagnosis"]["detail"]["edge"] == [1, 2]
    assert js["diagnosis"]["witness"]["clause"] == 1
    js = result_to_json(track_via_edge(DIAMOND, (1, 2)))
    assert js["diagnosis"]["witness"]["sides"] == [[1], [4]]


def test_explain_streams_lemma_steps():
    seen = []
    with explain(seen.append):
        trace(K4)
    assert any(r.get("event") == "extend" for r in seen)
    assert any("case" in r for r in seen)
    seen.clear()
    trace(K4)
    assert seen == []


@pytest.mark.parametrize("n", [3, 4, 5])
def test_small_graphs_against_oracle(n):
    for G in enumerate_classes(n, connected=True, claw_net_free=True):
        ok(G, trace(G))
        two = is_biconnected(G.adj)
        if two:
            ok(G, track(G))
            for e in G.edges():
                got = track_via_edge(G, e)
                assert isinstance(got, Cycle) == (bf_ham_cycle(G, e) is not None)
            continue
        for s, t in permutations(range(n), 2):
            got = find_trace(G, s, t)
            assert isinstance(got, Path) == (bf_ham_path(G, s, t) is not None)
            for e in G.edges():
                got = find_trace(G, s, t, [e])
                assert isinstance(got, Path) == (bf_ham_path(G, s, t, [e]) is not None)
