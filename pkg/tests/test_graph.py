import networkx as nx
import pytest
from hypothesis import given

from cone_spectra.construct import named_bicyclic
from cone_spectra.errors import (
    Disconnected,
    FormatError,
    GraphError,
    InvalidShiftSet,
    IsTree,
    PreconditionViolated,
)
from cone_spectra.graph import (
    LabeledGraph,
    basic_graph,
    bfs_levels,
    complete_graph,
    core_vertices,
    cycle_graph,
    cyclomatic,
    distances,
    from_graph6,
    internal_paths,
    join_cone,
    path_graph,
    root_attachment,
    shift,
    shortest_path,
    star_graph,
    switch,
    to_dot,
    to_graph6,
)

from strategies import connected_graphs


def test_edges_are_canonical_pairs():
    g = LabeledGraph.from_edges(3, [(2, 0), (1, 2)])
    assert g.sorted_edges() == [(0, 2), (1, 2)]
    assert g == LabeledGraph.from_edges(3, [(0, 2), (2, 1)])


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(0, 1), (1, 0)]])
def test_bad_edges_rejected(edges):
    with pytest.raises(GraphError):
        LabeledGraph.from_edges(3, edges)


def test_degrees_and_connectivity():
    g = path_graph(4)
    assert g.degrees == (1, 2, 2, 1)
    assert g.degree_sequence() == (2, 2, 1, 1)
    assert g.is_connected()
    assert not LabeledGraph.from_edges(4, [(0, 1), (2, 3)]).is_connected()
    assert complete_graph(5).m == 10
    assert star_graph(4).max_degree() == 4 and star_graph(4).min_degree() == 1


def test_join_cone_structure():
    cone = join_cone(2, path_graph(3))
    full = cone.full
    assert full.n == 5
    assert full.degrees == (4, 4, 3, 4, 3)
    assert list(cone.h_vertices()) == [2, 3, 4]
    assert join_cone(0, path_graph(3)).full == path_graph(3)


def test_relabel_and_subgraph():
    g = path_graph(4)
    h = g.relabel([3, 2, 1, 0])
    assert h == g
    sub, old = cycle_graph(5).subgraph([0, 1, 2])
    assert old == [0, 1, 2] and sub.sorted_edges() == [(0, 1), (1, 2)]


def test_distances_and_paths():
    g = cycle_graph(6)
    assert bfs_levels(g, 0) == [0, 1, 2, 3, 2, 1]
    assert distances(g, 0, frozenset({1}))[2] == 4
    assert shortest_path(g, 0, 3) == [0, 1, 2, 3]
    with pytest.raises(Disconnected):
        bfs_levels(LabeledGraph.from_edges(3, [(0, 1)]), 0)


def test_cyclomatic_core_attachment():
    # triangle 0-1-2 with a pendant path 2-3-4
    g = LabeledGraph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)])
    assert cyclomatic(g) == 1
    assert core_vertices(g) == {0, 1, 2}
    assert basic_graph(g) == cycle_graph(3)
    assert root_attachment(g) == {0: 0, 1: 1, 2: 2, 3: 2, 4: 2}
    with pytest.raises(IsTree):
        basic_graph(path_graph(4))


def test_internal_paths_of_frames():
    theta = named_bicyclic("theta", 3, 1, 2)
    ks = sorted(p.k for p in internal_paths(theta))
    assert ks == [1, 2, 3]
    c33 = named_bicyclic("C", 3, 3)
    closed = [p for p in internal_paths(c33)]
    assert len(closed) == 2 and all(p.closed and p.k == 3 for p in closed)
    b33 = named_bicyclic("B", 3, 3)
    kinds = sorted((p.closed, p.k) for p in internal_paths(b33))
    assert kinds == [(False, 1), (True, 3), (True, 3)]
    assert internal_paths(cycle_graph(5)) == []


def test_shift_moves_edges():
    g = LabeledGraph.from_edges(5, [(0, 1), (0, 2), (1, 3), (1, 4)])
    g2 = shift(g, 0, 1, [3, 4])
    assert g2 == star_graph(4)
    with pytest.raises(InvalidShiftSet):
        shift(g, 0, 1, [])
    with pytest.raises(InvalidShiftSet):
        shift(g, 0, 1, [2])
    with pytest.raises(InvalidShiftSet):
        shift(g, 0, 1, [0])


def test_switch_preserves_degrees():
    # on the path a-b-c-d the edge cb already exists, so (a,b),(c,d) is not a valid switch
    g = path_graph(4)
    with pytest.raises(PreconditionViolated):
        switch(g, 0, 1, 2, 3)
    two = LabeledGraph.from_edges(4, [(0, 1), (2, 3)])
    assert switch(two, 0, 1, 2, 3).sorted_edges() == [(0, 3), (1, 2)]
    big = LabeledGraph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)])
    out = switch(big, 0, 1, 3, 4)
    assert out.degrees == big.degrees
    with pytest.raises(PreconditionViolated):
        switch(g, 0, 1, 1, 2)
    with pytest.raises(PreconditionViolated):
        switch(g, 0, 1, 2, 2)


def test_graph6_matches_networkx():
    for g in [path_graph(5), cycle_graph(7), complete_graph(6), star_graph(8)]:
        ng = nx.empty_graph(g.n)
        ng.add_edges_from(g.edges)
        ref = nx.to_graph6_bytes(ng, header=False).decode().strip()
        assert to_graph6(g) == ref
    assert from_graph6(">>graph6<<" + to_graph6(cycle_graph(4))) == cycle_graph(4)
    with pytest.raises(FormatError):
        from_graph6("D")


def test_graph6_large_header_round_trip():
    g = path_graph(70)
    s = to_graph6(g)
    assert s[0] == "~"
    assert from_graph6(s) == g
    ref = nx.to_graph6_bytes(nx.path_graph(70), header=False).decode().strip()
    assert s == ref


def test_dot_output():
    dot = to_dot(path_graph(3), "P", layers=[[0], [1], [2]])
    assert dot.startswith("graph P {")
    assert "0 -- 1;" in dot and "rank=same" in dot


@given(connected_graphs(max_n=12))
def test_json_and_graph6_round_trips(g):
    assert LabeledGraph.from_json(g.to_json()) == g
    assert from_graph6(to_graph6(g)) == g


@given(connected_graphs(max_n=10))
def test_core_is_two_core(g):
    ng = nx.empty_graph(g.n)
    ng.add_edges_from(g.edges)
    ref = set(nx.k_core(ng, 2).nodes)
    assert set(core_vertices(g)) == ref
