import math

import numpy as np
import pytest
from hypothesis import given

from cone_spectra.errors import Disconnected, NoConvergence, NotUnit
from cone_spectra.graph import (
    LabeledGraph,
    complete_graph,
    cycle_graph,
    join_cone,
    path_graph,
    star_graph,
)
from cone_spectra.spectral import (
    Comparison,
    assemble,
    compare_theta,
    eigen_equation_residual,
    largest_eigenvalue,
    rayleigh,
    theta,
)

from strategies import alphas, connected_graphs

GOLDEN = 0.5 * (1 + math.sqrt(5))


def test_assemble_examples():
    k2 = complete_graph(2)
    assert np.array_equal(assemble(k2, 0.5), [[0.5, 1.0], [1.0, 0.5]])
    q = assemble(path_graph(3), 1.0)
    assert np.array_equal(np.diag(q), [1.0, 2.0, 1.0])
    with pytest.raises(ValueError):
        assemble(k2, -1)


@pytest.mark.parametrize("g,alpha,expected", [
    (path_graph(3), 0.0, math.sqrt(2)),
    (star_graph(3), 0.0, math.sqrt(3)),
    (path_graph(4), 0.0, GOLDEN),
    (cycle_graph(5), 1.0, 4.0),
    (complete_graph(4), 0.5, 4.5),
    # signless Laplacian of K_{1,3}: largest eigenvalue n = 4
    (star_graph(3), 1.0, 4.0),
])
def test_closed_forms(g, alpha, expected):
    res = theta(g, alpha)
    assert abs(res.theta - expected) <= 1e-10
    assert res.residual <= 1e-12
    assert np.all(res.f > 0)
    assert abs(np.linalg.norm(res.f) - 1) <= 1e-12


def test_regular_vector_is_uniform():
    res = theta(cycle_graph(7), 0.3)
    assert np.allclose(res.f, 1 / math.sqrt(7), atol=1e-10)


@pytest.mark.parametrize("n", range(2, 13))
def test_path_radius(n):
    assert abs(theta(path_graph(n)).theta - 2 * math.cos(math.pi / (n + 1))) <= 1e-10


def test_errors():
    with pytest.raises(Disconnected):
        theta(LabeledGraph.from_edges(4, [(0, 1), (2, 3)]))
    with pytest.raises(NoConvergence) as info:
        theta(path_graph(30), 0.0, tol=1e-15, max_iter=3)
    assert info.value.best.iterations == 3
    with pytest.raises(ValueError):
        theta(path_graph(3), 0.0, tol=0)
    with pytest.raises(NotUnit):
        rayleigh(path_graph(3), 0.0, [1.0, 1.0, 1.0])


def test_single_vertex():
    assert theta(LabeledGraph(1, frozenset())).theta == 0.0


def test_rayleigh_examples():
    g = join_cone(1, path_graph(4)).full
    e = np.zeros(g.n)
    e[0] = 1.0
    assert rayleigh(g, 0.7, e) == pytest.approx(0.7 * (g.n - 1))
    assert rayleigh(cycle_graph(6), 0.0, np.full(6, 1 / math.sqrt(6))) == pytest.approx(2.0)
    res = theta(g, 0.7)
    assert rayleigh(g, 0.7, res.f) == pytest.approx(res.theta, abs=1e-11)


def test_compare_theta_examples():
    assert compare_theta(path_graph(4), star_graph(3), 0.0, 1e-8) is Comparison.LESS
    assert compare_theta(star_graph(3), path_graph(4), 0.0, 1e-8) is Comparison.GREATER
    assert compare_theta(cycle_graph(5), cycle_graph(5), 0.5) is Comparison.INDISTINGUISHABLE
    assert compare_theta(path_graph(5), cycle_graph(5), 0.2) is Comparison.LESS


def test_largest_eigenvalue_over_components():
    g = LabeledGraph.from_edges(6, [(0, 1), (2, 3), (3, 4), (2, 4)])
    assert largest_eigenvalue(g, 0.0) == pytest.approx(2.0)
    assert largest_eigenvalue(LabeledGraph(3, frozenset())) == 0.0


@given(connected_graphs(min_n=2, max_n=11), alphas)
def test_theta_matches_dense_solver(g, alpha):
    res = theta(g, alpha)
    ref = np.linalg.eigvalsh(assemble(g, alpha))[-1]
    assert abs(res.theta - ref) <= 1e-9 * max(1.0, ref)
    assert eigen_equation_residual(g, alpha, res) <= 1e-10 * max(1.0, res.theta)
    assert np.all(res.f > 0)


@given(connected_graphs(min_n=3, max_n=9), alphas)
def test_dominating_vertex_bound(g, alpha):
    cone = join_cone(1, g).full
    assert theta(cone, alpha).theta >= alpha * (cone.n - 1) - 1e-12
