from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from hamnet.graph_core import Cycle, Graph, Path, connected, format_graph, parse_graph, validate_path
from hamnet.hamiltonian import find_trace, trace, track_via_edge
from hamnet.oracle import bf_ham_cycle, bf_ham_path
from hamnet.structure import decompose, is_biconnected, is_claw_net_free

SETTINGS = settings(max_examples=150, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, k in zip(pairs, keep) if k])


@st.composite
def members(draw):
    G = draw(graphs())
    assume(connected(G.adj) and is_claw_net_free(G.adj)[0])
    return G


@SETTINGS
@given(graphs())
def test_format_round_trip(G):
    H = parse_graph(format_graph(G))
    assert (H.n, H.edges()) == (G.n, G.edges())


@SETTINGS
@given(graphs())
def test_certificate_is_induced(G):
    ok, cert = is_claw_net_free(G.adj)
    assert ok == (cert is None)
    if cert is not None:
        assert cert.verify(G.adj)


@SETTINGS
@given(members())
def test_block_tree_is_a_path(G):
    dec = decompose(G.adj)
    for c in dec.cut_vertices:
        assert sum(c in b for b in dec.blocks) == 2


@SETTINGS
@given(members())
def test_trace_always_exists(G):
    rep = validate_path(G, trace(G), hamiltonian=True)
    assert rep.ok, rep.violations


@SETTINGS
@given(members(), st.data())
def test_constrained_trace_agrees_with_oracle(G, data):
    assume(G.n >= 3 and not is_biconnected(G.adj))
    s = data.draw(st.sampled_from(range(G.n)))
    t = data.draw(st.sampled_from([v for v in range(G.n) if v != s]))
    e = data.draw(st.sampled_from(G.edges()))
    got = find_trace(G, s, t, [e])
    want = bf_ham_path(G, s, t, [e])
    assert isinstance(got, Path) == (want is not None)
    if isinstance(got, Path):
        assert validate_path(G, got, start=s, end=t, required_edges=[e], hamiltonian=True).ok


@SETTINGS
@given(members(), st.data())
def test_track_via_edge_agrees_with_oracle(G, data):
    assume(G.n >= 3 and is_biconnected(G.adj))
    e = data.draw(st.sampled_from(G.edges()))
    got = track_via_edge(G, e)
    assert isinstance(got, Cycle) == (bf_ham_cycle(G, e) is not None)
    if isinstance(got, Cycle):
        assert validate_path(G, got, required_edges=[e], hamiltonian=True).ok
