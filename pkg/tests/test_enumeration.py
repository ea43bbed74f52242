import itertools
import math
from collections import Counter

import networkx as nx
import pytest
from hypothesis import given

from cone_spectra.construct import maximal_cone_graph
from cone_spectra.degseq import classify, cyclic_sequences
from cone_spectra.enumeration import (
    are_isomorphic,
    canonical_graph,
    certificate,
    connected_graphs,
    counterexample_search,
    iter_realizations,
    oracle_maximal,
    realize_all,
)
from cone_spectra.errors import EmptyFamily, TooLarge
from cone_spectra.graph import LabeledGraph, cycle_graph, path_graph
from cone_spectra.report import Verdict

from strategies import graphs_with_perm


def _nx(g):
    ng = nx.empty_graph(g.n)
    ng.add_edges_from(g.edges)
    return ng


# connected graphs up to isomorphism (OEIS A001349)
CONNECTED_COUNTS = [1, 1, 2, 6, 21, 112, 853]


@pytest.mark.parametrize("n", range(1, 8))
def test_connected_graph_counts(n):
    assert len(connected_graphs(n)) == CONNECTED_COUNTS[n - 1]


def test_small_realizations():
    c3 = realize_all((2, 2, 2))
    assert len(c3) == 1 and are_isomorphic(c3.graphs[0], cycle_graph(3))
    p4 = realize_all((2, 2, 1, 1))
    assert len(p4) == 1 and are_isomorphic(p4.graphs[0], path_graph(4))
    two = realize_all((3, 2, 2, 2, 1))
    assert len(two) == 2
    assert all(g.degree_sequence() == (3, 2, 2, 2, 1) and g.is_connected() for g in two)
    assert len(realize_all((1, 1, 1, 1))) == 0
    with pytest.raises(TooLarge):
        realize_all((1,) * 12, limit=9)


def test_regular_counts():
    # cubic graphs on 10 vertices: 19 connected; 4-regular: 59 connected
    cubic = realize_all((3,) * 10, limit=10)
    quartic = realize_all((4,) * 10, limit=10)
    assert (len(cubic), len(quartic)) == (19, 59)
    for family in (cubic, quartic):
        for a, b in itertools.combinations(family, 2):
            assert not nx.is_isomorphic(_nx(a), _nx(b))


def test_tree_counts_match_networkx():
    for n in range(2, 8):
        by_seq = Counter(tuple(sorted((d for _, d in t.degree()), reverse=True))
                         for t in nx.nonisomorphic_trees(n))
        for seq in cyclic_sequences(n, 0):
            assert len(realize_all(seq)) == by_seq[seq]


def test_realizations_match_brute_force():
    for n in range(3, 7):
        seen = {}
        pairs = list(itertools.combinations(range(n), 2))
        for m in range(n - 1, min(len(pairs), n + 2) + 1):
            for edges in itertools.combinations(pairs, m):
                g = nx.Graph(list(edges))
                if g.number_of_nodes() == n and nx.is_connected(g):
                    seq = tuple(sorted((d for _, d in g.degree()), reverse=True))
                    reps = seen.setdefault(seq, [])
                    if not any(nx.is_isomorphic(g, r) for r in reps):
                        reps.append(g)
        for seq, reps in seen.items():
            assert len(realize_all(seq)) == len(reps), seq


def test_iter_realizations_can_skip_connectivity():
    seqs = {g.degree_sequence() for g in iter_realizations((1, 1, 1, 1), connected=False)}
    assert seqs == {(1, 1, 1, 1)}


@given(graphs_with_perm())
def test_canonical_form_invariance(gp):
    g, perm = gp
    h = g.relabel(perm)
    assert certificate(g) == certificate(h)
    cg = canonical_graph(g)
    assert canonical_graph(cg) == cg
    assert are_isomorphic(g, h)


def test_certificates_separate_nonisomorphic():
    graphs = connected_graphs(6)
    assert len({certificate(g) for g in graphs}) == len(graphs)


def test_oracle_tree_matches_construction():
    for alpha in (0.0, 0.5, 1.0):
        for pi_star in cyclic_sequences(7, 0):
            pi = tuple(d + 1 for d in pi_star)
            cds = classify((7,) + pi, 1, 0)
            best = oracle_maximal(cds, alpha)
            assert best.unique and best.gap > 1e-8 or best.members == 1
            assert are_isomorphic(best.graph.full, maximal_cone_graph(cds).full)


def test_oracle_single_member():
    cds = classify((4, 3, 3, 3, 3), 1, 1)
    best = oracle_maximal(cds, 0.5)
    assert best.members == 1 and best.unique and math.isinf(best.gap)
    assert best.runner_up is None
    assert are_isomorphic(best.graph.h, cycle_graph(4))
    # hub/rim quotient [[4a, 4], [1, 2 + 3a]] at a = 1/2
    assert best.perron.theta == pytest.approx((5.5 + math.sqrt(18.25)) / 2, abs=1e-10)


def test_oracle_exceptional_endpoints():
    a = oracle_maximal(classify((4, 3, 2, 2, 2, 1), 0, 2), 1.0)
    b = oracle_maximal(classify((5, 2, 2, 2, 2, 1), 0, 2), 1.0)
    assert a.unique and b.unique
    assert b.perron.theta > a.perron.theta


def test_oracle_empty_family():
    from cone_spectra.degseq import ConeDegreeSequence
    with pytest.raises(EmptyFamily):
        oracle_maximal(ConeDegreeSequence((1, 1, 1, 1), 0, 0, ""), 0.0)


@pytest.mark.parametrize("n,c", [(6, 0), (7, 0), (8, 0), (6, 1), (7, 1), (8, 1)])
def test_search_empty_for_trees_and_unicyclic(n, c):
    assert counterexample_search(n, 0, c, 0.5) == []


def test_search_bicyclic_only_exceptional():
    for n in (6, 7, 8):
        reps = counterexample_search(n, 0, 2, 0.0)
        assert all(r.verdict is Verdict.INCONCLUSIVE for r in reps)


def test_search_three_cyclic_finds_counterexamples():
    reps = counterexample_search(9, 0, 3, 0.0)
    bad = [r for r in reps if r.verdict is Verdict.VIOLATED]
    assert len(bad) == 22
    pairs = {(tuple(r.params["pi"]), tuple(r.params["pi_prime"])) for r in bad}
    assert ((7, 4, 2, 2, 2, 2, 1, 1, 1), (8, 3, 2, 2, 2, 2, 1, 1, 1)) in pairs
    for r in bad:
        ha = LabeledGraph.from_json(r.witnesses["h_pi"])
        hb = LabeledGraph.from_json(r.witnesses["h_pi_prime"])
        assert ha.degree_sequence() == tuple(r.params["pi"])
        assert hb.degree_sequence() == tuple(r.params["pi_prime"])
        assert r.witnesses["theta_pi"] > r.witnesses["theta_pi_prime"]
    assert not [r for r in counterexample_search(9, 0, 3, 1.0) if not r.ok]


@pytest.mark.parametrize("alpha,hits", [(0.0, 3), (0.5, 0), (1.0, 0)])
def test_search_three_cyclic_smallest(alpha, hits):
    reps = counterexample_search(6, 0, 3, alpha)
    assert sum(r.verdict is Verdict.VIOLATED for r in reps) == hits
