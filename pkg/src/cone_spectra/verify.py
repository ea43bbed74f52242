"""Executable checks of the structural and majorization results.

Orderings are lists of H labels (0-based, as in ``ConeGraph.h``).  When
a 1-based position p over the full graph is needed, v_p is ``ordering[p - t - 1]``.

Weight comparisons use ``tol * max(f)`` as the equality threshold: two
weights that close are treated as equal, never as strictly ordered.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .construct import maximal_cone_graph
from .degseq import (
    classify,
    enumerate_sequences,
    is_exceptional_pair,
    is_majorized,
    majorized_pairs,
    star_chain,
    star_pairs,
    star_positions,
)
from .enumeration import DEFAULT_LIMIT, are_isomorphic, oracle_maximal
from .errors import (
    HypothesisNotMet,
    NoValidChain,
    NotMajorized,
    RangeError,
    TooLarge,
    UnsupportedCyclomatic,
)
from .graph import (
    ConeGraph,
    LabeledGraph,
    core_vertices,
    cyclomatic,
    distances,
    internal_paths,
    root_attachment,
    shift,
)
from .report import TheoremReport, Verdict
from .spectral import DEFAULT_MARGIN, Comparison, PerronResult, theta

WEIGHT_TOL = 1e-9
EXCEPTIONAL_ALPHAS = (0.0, 0.25, 0.5, 0.75, 1.0)

# theorem id -> (cyclomatic number, largest admissible t as n - offset)
UNIQUENESS = {"4.2": (0, 2), "4.4": (1, 3), "4.6": (2, 4)}
MAJORIZATION = {"5.5": (0, 3), "5.6": (1, 4), "5.7": (2, 5)}
THEOREMS = tuple(UNIQUENESS) + tuple(MAJORIZATION)


def _sign(x: float, eps: float) -> int:
    return 0 if abs(x) <= eps else (1 if x > 0 else -1)


def _h_weights(g: ConeGraph, alpha: float, perron: PerronResult | None):
    res = perron if perron is not None else theta(g.full, alpha)
    return res, np.asarray(res.f[g.t:], dtype=float)


# --- BFS orderings -----------------------------------------------------------

def _cross_pairs(h: LabeledGraph, level: Sequence[int]):
    """(u, x, v, y) with u, x on one level and v, y private children on the next."""
    by_level: dict[int, list[int]] = {}
    for v in range(h.n):
        by_level.setdefault(level[v], []).append(v)
    for lv, verts in by_level.items():
        for u in verts:
            for x in verts:
                if u == x:
                    continue
                down_u = [v for v in h.adj[u] - h.adj[x] if level[v] == lv + 1]
                down_x = [y for y in h.adj[x] - h.adj[u] if level[y] == lv + 1]
                for v in down_u:
                    for y in down_x:
                        yield u, x, v, y


def is_bfs_ordering(h: LabeledGraph, order: Sequence[int]) -> bool:
    """Check both BFS-ordering conditions for ``order`` (a list of labels)."""
    if sorted(order) != list(range(h.n)):
        return False
    dist = distances(h, order[0])
    if len(dist) != h.n:
        return False
    pos = {v: i for i, v in enumerate(order)}
    for a, b in zip(order, order[1:]):
        if h.degree(a) < h.degree(b) or dist[a] > dist[b]:
            return False
    level = [dist[v] for v in range(h.n)]
    return all(pos[v] < pos[y] for u, x, v, y in _cross_pairs(h, level) if pos[u] < pos[x])


def _twin(h: LabeledGraph, a: int, b: int) -> bool:
    return h.adj[a] - {b} == h.adj[b] - {a}


def _level_orders(h, verts, before, placed=None):
    """Orderings of one level: degree non-increasing, respecting ``before``.

    Twins keep their label order since swapping them is an automorphism.
    """
    placed = [] if placed is None else placed
    if len(placed) == len(verts):
        yield list(placed)
        return
    rest = [v for v in verts if v not in placed]
    top = max(h.degree(v) for v in rest)
    tried = []
    for v in rest:
        if h.degree(v) != top:
            continue
        if any(a in rest and a != v for a in before.get(v, ())):
            continue
        if any(_twin(h, v, w) and w < v for w in rest):
            continue
        if any(_twin(h, v, w) for w in tried):
            continue
        tried.append(v)
        placed.append(v)
        yield from _level_orders(h, verts, before, placed)
        placed.pop()


def _acyclic_extension(h, verts, before):
    """One degree-respecting ordering of ``verts`` honouring ``before``, or None."""
    order, rest = [], list(verts)
    while rest:
        top = max(h.degree(v) for v in rest)
        ready = [v for v in rest if h.degree(v) == top
                 and not any(a in rest and a != v for a in before.get(v, ()))]
        if not ready:
            return None
        order.append(ready[0])
        rest.remove(ready[0])
    return order


def check_bfs_graph(h: LabeledGraph) -> list[int] | None:
    """A BFS-ordering of ``h`` if one exists.

    Degrees and levels fix the order up to ties; the search backtracks
    over within-level tie permutations, one level at a time, since the
    cross-level rule only links consecutive levels.
    """
    if h.n == 1:
        return [0]
    top = h.max_degree()
    roots = [v for v in range(h.n) if h.degree(v) == top]
    for root in roots:
        if any(_twin(h, root, w) and w < root for w in roots):
            continue
        dist = distances(h, root)
        if len(dist) != h.n:
            return None
        level = [dist[v] for v in range(h.n)]
        layers = [[] for _ in range(max(level) + 1)]
        for v in range(h.n):
            layers[level[v]].append(v)
        if any(min(h.degree(v) for v in a) < max(h.degree(v) for v in b)
               for a, b in zip(layers, layers[1:])):
            continue
        found = _search_layers(h, layers, 1, [root], {})
        if found is not None:
            return found
    return None


def _search_layers(h, layers, i, prefix, before):
    if i == len(layers):
        return prefix
    if i == len(layers) - 1:
        last = _acyclic_extension(h, layers[i], before)
        return None if last is None else prefix + last
    for order in _level_orders(h, layers[i], before):
        pos = {v: k for k, v in enumerate(order)}
        nxt: dict[int, set] = {}
        lv = set(layers[i + 1])
        for u in order:
            for x in order:
                if pos[u] < pos[x]:
                    for v in (h.adj[u] - h.adj[x]) & lv:
                        for y in (h.adj[x] - h.adj[u]) & lv:
                            nxt.setdefault(y, set()).add(v)
        found = _search_layers(h, layers, i + 1, prefix + order, nxt)
        if found is not None:
            return found
    return None


def check_good_cone_bfs(g: ConeGraph, alpha: float, tol: float = WEIGHT_TOL,
                        perron: PerronResult | None = None) -> list[int] | None:
    """A good BFS-ordering of V(H) under the Perron weights, or None."""
    h = g.h
    _, f = _h_weights(g, alpha, perron)
    eps = tol * float(np.max(np.abs(f))) if h.n else 0.0
    deg = h.degrees
    for u in range(h.n):
        for v in range(h.n):
            if deg[v] > deg[u] and f[v] - f[u] <= eps:
                return None
    by_weight = sorted(range(h.n), key=lambda v: (-f[v], v))
    wclass = [0] * h.n
    for a, b in zip(by_weight, by_weight[1:]):
        wclass[b] = wclass[a] + (1 if f[a] - f[b] > eps else 0)
    roots = [v for v in range(h.n) if wclass[v] == 0]
    for root in roots:
        dist = distances(h, root)
        level = [dist[v] for v in range(h.n)]
        order = sorted(range(h.n), key=lambda v: (wclass[v], level[v], v))
        if any(level[a] > level[b] for a, b in zip(order, order[1:])):
            continue
        if all(_sign(f[u] - f[x], eps) == _sign(f[v] - f[y], eps)
               for u, x, v, y in _cross_pairs(h, level)):
            return order
    return None


# --- weight laws -------------------------------------------------------------

def check_weight_laws(g: ConeGraph, alpha: float, tol: float = WEIGHT_TOL,
                      perron: PerronResult | None = None) -> TheoremReport:
    """Perron-weight laws that every maximal graph must satisfy."""
    res = perron if perron is not None else theta(g.full, alpha)
    full, h, t = g.full, g.h, g.t
    f = np.asarray(res.f, dtype=float)
    eps = tol * float(np.max(f))
    rep = TheoremReport("weight-laws", {"t": t, "alpha": alpha, "tol": tol})
    deg = full.degrees
    for v in range(full.n):
        for u in range(full.n):
            if deg[v] > deg[u]:
                gap = f[v] - f[u]
                rep.observe(gap)
                if gap <= eps:
                    rep.fail("higher degree without strictly higher weight",
                             u=u, v=v, gap=gap, graph=full, alpha=alpha)
    dominant = [v for v in range(full.n) if deg[v] == full.n - 1]
    if dominant and np.ptp(f[dominant]) > eps:
        rep.fail("dominating vertices carry unequal weights",
                 vertices=dominant, graph=full, alpha=alpha)
    if h.n > 1 and cyclomatic(h) >= 1:
        core = core_vertices(h)
        outside = [w for w in range(h.n) if w not in core]
        for u in core:
            for w in outside:
                gap = f[t + u] - f[t + w]
                rep.observe(gap)
                if gap <= eps:
                    rep.fail("core vertex does not outweigh a tree vertex",
                             u=t + u, w=t + w, gap=gap, graph=full, alpha=alpha)
        core_deg = {u: len(h.adj[u] & core) for u in core}
        for u in core:
            for v in core:
                if core_deg[u] > core_deg[v]:
                    gap = f[t + u] - f[t + v]
                    rep.observe(gap)
                    if gap <= eps:
                        rep.fail("higher core degree without strictly higher weight",
                                 u=t + u, v=t + v, gap=gap, graph=full, alpha=alpha)
    return rep


def check_internal_paths(g: ConeGraph) -> TheoremReport:
    """Length limits on internal paths of H and of its core."""
    h = g.h
    rep = TheoremReport("internal-paths", {"t": g.t})
    if h.n < 3 or cyclomatic(h) < 1 or h.min_degree() != 1:
        rep.inconclusive("needs a cycle in H and a pendant vertex")
        return rep
    for path in internal_paths(h):
        _check_path(rep, h, path, path.vertices, allow_root_tree=False)
    core = sorted(core_vertices(h))
    sub, old = h.subgraph(core)
    owner = root_attachment(h)
    pendants = [v for v in range(h.n) if h.degree(v) == 1]
    for path in internal_paths(sub):
        verts = tuple(old[v] for v in path.vertices)
        ok_tree = (path.k == 2 and not path.closed
                   and all(owner[x] == verts[1] for x in pendants))
        _check_path(rep, h, path, verts, allow_root_tree=ok_tree)
    return rep


def _check_path(rep, h, path, verts, allow_root_tree):
    if path.closed:
        if path.k != 3:
            rep.fail("closed internal path longer than a triangle",
                     path=list(verts), h=h)
        return
    if path.k > 2:
        rep.fail("open internal path of length above 2", path=list(verts), h=h)
    elif path.k == 2 and not h.has_edge(verts[0], verts[2]) and not allow_root_tree:
        rep.fail("length-2 internal path without a chord", path=list(verts), h=h)


# --- majorization ------------------------------------------------------------

def find_surprising_vertex(g: ConeGraph, p: int, q: int,
                           ordering: Sequence[int]) -> int | None:
    """A neighbour w of v_q outside N[v_p] that some shortest v_p-v_q path avoids.

    ``p`` and ``q`` are 1-based positions in the full graph
    (t+1 <= p < q <= n); the returned vertex is an H label.
    """
    t, h = g.t, g.h
    if not t + 1 <= p < q <= g.n:
        raise RangeError(f"need {t + 1} <= p < q <= {g.n} (got p={p}, q={q})")
    vp, vq = ordering[p - t - 1], ordering[q - t - 1]
    base = distances(h, vp).get(vq)
    for w in sorted(h.adj[vq]):
        if w == vp or w in h.adj[vp]:
            continue
        if distances(h, vp, frozenset({w})).get(vq) == base:
            return w
    return None


def _theorem_for(c: int) -> str:
    for key, (cc, _) in MAJORIZATION.items():
        if cc == c:
            return key
    raise UnsupportedCyclomatic(f"no majorization result for c={c}")


def compare_maxima(pi, pi_prime, t: int, c: int, alpha: float,
                   margin: float = DEFAULT_MARGIN) -> tuple[Comparison, float, float]:
    """Compare Theta of the two extremal graphs; symmetric in its arguments."""
    a = theta(maximal_cone_graph(classify(pi, t, c)).full, alpha).theta
    b = theta(maximal_cone_graph(classify(pi_prime, t, c)).full, alpha).theta
    if a + margin < b:
        return Comparison.LESS, a, b
    if b + margin < a:
        return Comparison.GREATER, a, b
    return Comparison.INDISTINGUISHABLE, a, b


def verify_majorization(pi, pi_prime, t: int, c: int, alpha: float,
                        oracle_limit: int | None = None,
                        margin: float = DEFAULT_MARGIN) -> TheoremReport:
    """Check Theta(G_pi) < Theta(G_pi') for pi strictly majorized by pi'."""
    if c >= 3:
        raise UnsupportedCyclomatic(f"no extremal construction for c={c}")
    a, b = classify(pi, t, c), classify(pi_prime, t, c)
    if not is_majorized(a.pi, b.pi):
        raise NotMajorized(f"{a.pi} is not strictly majorized by {b.pi}")
    key = _theorem_for(c)
    if t > a.n - MAJORIZATION[key][1]:
        raise HypothesisNotMet(f"needs t <= n - {MAJORIZATION[key][1]}")
    rep = TheoremReport(key, {"pi": list(a.pi), "pi_prime": list(b.pi),
                              "t": t, "c": c, "alpha": alpha, "margin": margin})
    ga, gb = maximal_cone_graph(a), maximal_cone_graph(b)
    ra, rb = theta(ga.full, alpha), theta(gb.full, alpha)
    gap = rb.theta - ra.theta
    cmp = (Comparison.LESS if gap > margin else
           Comparison.GREATER if gap < -margin else Comparison.INDISTINGUISHABLE)
    rep.witnesses.update({"theta_pi": ra.theta, "theta_pi_prime": rb.theta, "gap": gap,
                          "comparison": cmp})
    star = star_positions(a.pi, b.pi)
    if star is not None:
        order = check_good_cone_bfs(ga, alpha, perron=ra)
        w = None if order is None else find_surprising_vertex(ga, *star, order)
        rep.witnesses["star_positions"] = list(star)
        rep.witnesses["surprising_vertex"] = w

    exceptional = c == 2 and is_exceptional_pair(a.pi, b.pi, t, a.n)
    if exceptional:
        sweep = {}
        for al in EXCEPTIONAL_ALPHAS:
            x = theta(ga.full, al).theta
            y = theta(gb.full, al).theta
            sweep[str(al)] = {"theta_pi": x, "theta_pi_prime": y, "gap": y - x}
        rep.witnesses["alpha_sweep"] = sweep
        rep.observe(gap)
        rep.inconclusive("pair lies in the excluded bicyclic family; gaps recorded only")
        return rep

    if c == 2 and star is None:
        try:
            chain = star_chain(a, b, forbid=lambda x, y: is_exceptional_pair(x, y, t, a.n))
            rep.witnesses["chain"] = chain
        except NoValidChain:
            rep.observe(gap)
            rep.inconclusive("every star chain passes through an excluded pair")
            return rep

    rep.observe(gap)
    if gap <= margin:
        rep.fail("Theta does not strictly increase", graph_pi=ga.full,
                 graph_pi_prime=gb.full, alpha=alpha)

    if oracle_limit is not None and a.n - t <= oracle_limit:
        for cds, g, r, tag in ((a, ga, ra, "pi"), (b, gb, rb, "pi_prime")):
            best = oracle_maximal(cds, alpha, oracle_limit, margin)
            diff = best.perron.theta - r.theta
            rep.witnesses[f"oracle_gap_{tag}"] = diff
            if diff > margin:
                rep.fail(f"construction for {tag} is not maximal",
                         constructed=g.full, better=best.graph.full, alpha=alpha)
    return rep


# --- theorem sweeps ----------------------------------------------------------

@dataclass
class SweepReport:
    theorem: str
    params: dict
    reports: list = field(default_factory=list)

    @property
    def verdict(self) -> Verdict:
        kinds = {r.verdict for r in self.reports}
        if Verdict.VIOLATED in kinds:
            return Verdict.VIOLATED
        if kinds <= {Verdict.HOLDS}:
            return Verdict.HOLDS
        return Verdict.INCONCLUSIVE

    @property
    def min_margin(self) -> float:
        return min((r.min_margin for r in self.reports), default=math.inf)

    def to_json(self) -> dict:
        from .report import _plain
        return _plain({"theorem": self.theorem, "params": self.params,
                       "verdict": self.verdict, "min_margin": self.min_margin,
                       "instances": [r.to_json() for r in self.reports]})


def thread_cap() -> int:
    try:
        return max(1, int(os.environ.get("CONE_SPECTRA_THREADS", "1")))
    except ValueError:
        return 1


def parallel_map(fn, items):
    """``map`` that fans out to processes when CONE_SPECTRA_THREADS > 1; order is kept."""
    items = list(items)
    workers = min(thread_cap(), len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def uniqueness_instance(args) -> TheoremReport:
    """Oracle maximum vs constructed graph for one classified sequence."""
    key, cds, alpha, limit, margin = args
    rep = TheoremReport(key, {"pi": list(cds.pi), "t": cds.t, "c": cds.c,
                              "case": cds.case, "alpha": alpha})
    built = maximal_cone_graph(cds)
    try:
        best = oracle_maximal(cds, alpha, limit, margin)
    except TooLarge:
        rep.witnesses["constructed"] = built.full
        rep.inconclusive(f"n - t exceeds oracle limit {limit}")
        return rep
    rep.witnesses.update({"theta": best.perron.theta, "gap": best.gap,
                          "members": best.members})
    rep.observe(best.gap)
    if not are_isomorphic(best.graph.full, built.full):
        rep.fail("oracle maximum differs from the construction",
                 constructed=built.full, oracle=best.graph.full, alpha=alpha)
    elif not best.unique or best.gap < margin:
        rep.fail("maximum is not unique within margin", gap=best.gap,
                 oracle=best.graph.full, alpha=alpha)
    return rep


def verify_theorem(key: str, n: int, t: int, alpha: float,
                   oracle_limit: int = DEFAULT_LIMIT,
                   margin: float = DEFAULT_MARGIN) -> SweepReport:
    """Run one theorem over every admissible sequence for (n, t)."""
    params = {"n": n, "t": t, "alpha": alpha, "oracle_limit": oracle_limit,
              "margin": margin}
    sweep = SweepReport(key, params)
    if key in UNIQUENESS:
        c, offset = UNIQUENESS[key]
        if not 0 <= t <= n - offset:
            raise HypothesisNotMet(f"theorem {key} needs 0 <= t <= n - {offset}")
        from .degseq import cone_sequences
        family = cone_sequences(n, t, c)
        sweep.reports = parallel_map(
            uniqueness_instance, [(key, cds, alpha, oracle_limit, margin) for cds in family])
        return sweep
    if key in MAJORIZATION:
        c, offset = MAJORIZATION[key]
        if not 0 <= t <= n - offset:
            raise HypothesisNotMet(f"theorem {key} needs 0 <= t <= n - {offset}")
        family = enumerate_sequences(n, t, c)
        pairs = star_pairs(family) if c == 2 else majorized_pairs(family)
        sweep.reports = parallel_map(
            _majorization_instance,
            [(a.pi, b.pi, t, c, alpha, oracle_limit, margin) for a, b in pairs])
        return sweep
    raise RangeError(f"unknown theorem id {key!r}; choose from {', '.join(THEOREMS)}")


def _majorization_instance(args) -> TheoremReport:
    pi, pi_prime, t, c, alpha, limit, margin = args
    return verify_majorization(pi, pi_prime, t, c, alpha, limit, margin)


def structural_reports(g: ConeGraph, alpha: float, tol: float = WEIGHT_TOL,
                       perron: PerronResult | None = None) -> list[TheoremReport]:
    """Good-ordering, weight-law and internal-path checks for one graph."""
    res = perron if perron is not None else theta(g.full, alpha)
    good = TheoremReport("good-ordering", {"t": g.t, "alpha": alpha})
    order = check_good_cone_bfs(g, alpha, tol, res)
    if order is None:
        good.fail("no good BFS-ordering", graph=g.full, alpha=alpha)
    else:
        good.witnesses["ordering"] = order
        if check_bfs_graph(g.h) is None:
            good.fail("H is not a BFS-graph", h=g.h)
    return [good, check_weight_laws(g, alpha, tol, res), check_internal_paths(g)]


def surprising_shift(g: ConeGraph, p: int, q: int, ordering, w: int) -> ConeGraph:
    """Move the edge v_q w to v_p w."""
    vp, vq = ordering[p - g.t - 1], ordering[q - g.t - 1]
    return ConeGraph(g.t, shift(g.h, vp, vq, [w]))
