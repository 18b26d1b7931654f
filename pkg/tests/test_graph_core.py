import pytest

from hamnet.graph_core import (
    Cycle,
    Edge,
    Graph,
    GraphFormatError,
    Path,
    connected_components,
    format_graph,
    induced,
    is_connected,
    parse_graph,
    read_graph,
    validate_path,
)

from conftest import C4, K3, K4, P4, TWO_EDGES


def test_parse_triangle():
    G = parse_graph("p 3 3\ne 1 2\ne 2 3\ne 1 3\n")
    assert G == K3
    assert G.m == 3


def test_parse_single_edge_with_comment():
    G = parse_graph("c hello\np 2 1\ne 1 2\n")
    assert G.n == 2 and G.edges() == [Edge(0, 1)]


@pytest.mark.parametrize("text, line, needle", [
    ("p 2 1\ne 1 3\n", 2, "range"),
    ("p 2 1\ne 1 1\n", 2, "loop"),
    ("p 3 2\ne 1 2\ne 2 1\n", 3, "duplicate"),
    ("p x 1\n", 1, ""),
    ("e 1 2\n", 1, ""),
])
def test_parse_errors_carry_line_numbers(text, line, needle):
    with pytest.raises(GraphFormatError) as info:
        parse_graph(text)
    assert info.value.line == line
    assert needle in str(info.value)


def test_parse_rejects_empty_graph_and_bad_counts():
    with pytest.raises(GraphFormatError):
        parse_graph("p 0 0\n")
    with pytest.raises(GraphFormatError):
        parse_graph("p 3 2\ne 1 2\n")
    with pytest.raises(GraphFormatError):
        parse_graph("c only a comment\n")


def test_format_round_trip(tmp_path):
    text = format_graph(K4, comment="k4")
    assert text.splitlines()[1] == "p 4 6"
    f = tmp_path / "g.txt"
    f.write_text(text)
    assert read_graph(str(f)) == K4


def test_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 2)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 1), (1, 0)])


def test_graph_basics():
    assert P4.neighbors(1) == (0, 2)
    assert P4.degree(0) == 1
    assert P4.has_edge(2, 1) and not P4.has_edge(0, 3)
    assert P4.edges() == [(0, 1), (1, 2), (2, 3)]
    P4.audit()
    assert sum(len(P4.adj[v]) for v in P4) == 2 * P4.m


def test_edge_is_canonical():
    assert Edge.of(3, 1) == Edge(1, 3)
    with pytest.raises(ValueError):
        Edge.of(2, 2)


def test_connectivity():
    assert is_connected(K3)
    assert not is_connected(TWO_EDGES)
    assert is_connected(P4)
    assert not is_connected(Graph(0))
    assert connected_components(TWO_EDGES) == [{0, 1}, {2, 3}]
    assert connected_components(K3) == [{0, 1, 2}]


def test_induced():
    H, m = induced(K4, {0, 2, 3})
    assert H == K3 and m == {0: 0, 2: 1, 3: 2}
    H, _ = induced(P4, {0, 3})
    assert H.n == 2 and H.m == 0
    H, m = induced(P4, range(4))
    assert H == P4 and m == {v: v for v in range(4)}
    H, _ = induced(K4, {2, 3})
    assert connected_components(H) == [{0, 1}]
    with pytest.raises(ValueError):
        induced(P4, {7})


def test_validate_path_examples():
    assert validate_path(K3, [0, 1, 2], hamiltonian=True).ok
    rep = validate_path(P4, [0, 1, 3])
    assert not rep.ok and any("1-3" in v for v in rep.violations)
    assert validate_path(P4, [0, 1, 2, 3], required_edges=[(1, 2)]).ok


def test_validate_path_reports_each_violation():
    rep = validate_path(P4, [1, 1, 3], start=0, end=2, required_edges=[(2, 3)], hamiltonian=True)
    text = " | ".join(rep.violations)
    for needle in ("repeated", "non-edge", "missing required", "wrong start", "wrong end", "not spanning"):
        assert needle in text


def test_validate_cycle():
    assert validate_path(C4, Cycle((0, 1, 2, 3)), hamiltonian=True).ok
    assert not validate_path(P4, Cycle((0, 1, 2, 3))).ok


def test_path_value_type():
    p = Path([2, 1, 0])
    assert p.ends == (2, 0)
    assert p.edges() == {Edge(1, 2), Edge(0, 1)}
    assert Cycle([0, 1, 2]).edges() == {Edge(0, 1), Edge(1, 2), Edge(0, 2)}
