"""Hypothesis strategies shared by the property tests."""

from hypothesis import strategies as st

from cone_spectra.graph import LabeledGraph


@st.composite
def connected_graphs(draw, min_n=1, max_n=9):
    """A random spanning tree plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    if pairs:
        extra = draw(st.lists(st.sampled_from(pairs), max_size=min(len(pairs), 12), unique=True))
        edges.update(extra)
    perm = draw(st.permutations(range(n)))
    return LabeledGraph(n, frozenset(edges)).relabel(perm)


@st.composite
def graphs_with_perm(draw, max_n=9):
    g = draw(connected_graphs(max_n=max_n))
    return g, draw(st.permutations(range(g.n)))


alphas = st.sampled_from([0.0, 0.25, 0.5, 1.0, 2.0]) | st.floats(0, 3, allow_nan=False)
