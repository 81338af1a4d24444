import itertools

import pytest
from hypothesis import given, strategies as st

from topopar.errors import ParseError, ValidationError
from topopar.graph import (Graph, from_edge_list, from_edges, generate_topology,
                           remove_vertices, to_edge_list)

from conftest import G6_EDGES


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return from_edges(n, chosen)


def test_parse_simple():
    g = from_edge_list("0 1\n1 2")
    assert g.n == 3
    assert g.edges == ((0, 1), (1, 2))


def test_parse_fixture(G6):
    text = "\n".join(f"{u} {v}" for u, v in G6_EDGES)
    g = from_edge_list(text)
    assert g.order == 6 and g.size == 11
    assert g == G6


def test_parse_comments_header_and_duplicates():
    g = from_edge_list("# ring-ish\nn=5\n0 1  # first\n1 0\n\n2 3\n")
    assert g.n == 5
    assert g.edges == ((0, 1), (2, 3))
    assert g.degree(4) == 0


def test_self_loop_rejected():
    with pytest.raises(ValidationError, match="self-loop"):
        from_edge_list("0 0")


@pytest.mark.parametrize("text, line", [
    ("0 1\n1 x", 2),
    ("0 1 2", 1),
    ("0 1\n-1 2", 2),
    ("0 1\n7", 2),
])
def test_malformed_line_reports_line(text, line):
    with pytest.raises(ParseError) as exc:
        from_edge_list(text)
    assert exc.value.line == line


def test_header_too_small():
    with pytest.raises(ValidationError):
        from_edge_list("n=2\n0 5")


@pytest.mark.parametrize("kind, params, n, m, degs", [
    ("hypercube", (3,), 8, 12, {3}),
    ("ring", (6,), 6, 6, {2}),
    ("complete", (4,), 4, 6, {3}),
    ("torus", (3, 4), 12, 24, {4}),
    ("mesh", (3, 4), 12, 17, {2, 3, 4}),
    ("path", (4,), 4, 3, {1, 2}),
    ("star", (5,), 5, 4, {1, 4}),
])
def test_generators(kind, params, n, m, degs):
    g = generate_topology(kind, *params)
    assert (g.order, g.size) == (n, m)
    assert {g.degree(v) for v in g.vertices} == degs
    assert sum(g.degree(v) for v in g.vertices) == 2 * g.size


def test_hypercube_binary_labels():
    g = generate_topology("hypercube", 4)
    for u, v in g.edges:
        x = u ^ v
        assert x & (x - 1) == 0


def test_torus_row_major():
    g = generate_topology("torus", 3, 4)
    # vertex (1, 3) = 7 wraps to (1, 0) = 4 and neighbors (0, 3) = 3, (2, 3) = 11
    assert g.neighbors(7) == (3, 4, 6, 11)


@pytest.mark.parametrize("kind, params", [
    ("ring", (2,)), ("hypercube", (0,)), ("torus", ()), ("complete", (3, 3)),
    ("moebius", (4,)), ("mesh", (0, 3)),
])
def test_generator_validation(kind, params):
    with pytest.raises(ValidationError):
        generate_topology(kind, *params)


def test_remove_vertices(G6, K4):
    k3 = remove_vertices(K4, {3})
    assert k3.vertices == (0, 1, 2)
    assert k3.edges == ((0, 1), (0, 2), (1, 2))
    g = remove_vertices(G6, {4})
    assert g.edges == ((0, 1), (0, 3), (1, 2), (1, 5), (2, 3), (2, 5))
    assert 4 not in g and 5 in g
    assert remove_vertices(G6, set()) == G6
    with pytest.raises(ValidationError):
        remove_vertices(G6, {6})


def test_to_edge_list(K3, G6):
    assert to_edge_list(K3) == "0 1\n0 2\n1 2"
    lines = to_edge_list(G6).split("\n")
    assert lines == [f"{u} {v}" for u, v in sorted(G6_EDGES)]


def test_to_edge_list_isolated_tail():
    g = from_edges(4, [(0, 1)])
    assert to_edge_list(g) == "n=4\n0 1"
    assert from_edge_list(to_edge_list(g)) == g


def test_graph_rejects_asymmetry():
    with pytest.raises(ValidationError):
        Graph(2, (0, 1), ((1,), ()))


@given(graphs())
def test_round_trip(g):
    assert from_edge_list(to_edge_list(g)) == g


@given(graphs(), st.data())
def test_remove_keeps_exactly_outside_edges(g, data):
    faults = data.draw(st.sets(st.sampled_from(g.vertices)))
    h = remove_vertices(g, faults)
    assert set(h.edges) == {e for e in g.edges if not set(e) & faults}
    assert set(h.vertices) == set(g.vertices) - faults


@given(graphs())
def test_handshake_and_invariants(g):
    assert sum(g.degree(v) for v in g.vertices) == 2 * g.size
    for v in g.vertices:
        assert v not in g.neighbors(v)
        assert list(g.neighbors(v)) == sorted(set(g.neighbors(v)))
        for u in g.neighbors(v):
            assert g.has_edge(u, v)
