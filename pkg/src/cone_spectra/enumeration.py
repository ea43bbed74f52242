"""Exhaustive ground truth at small sizes.

Realizations of a degree sequence are generated row by row: when vertex i
picks its later neighbours, unprocessed vertices with the same target
degree and the same processed neighbours are interchangeable, so only
lowest-label choices are tried within each such class.  Survivors are
deduplicated with a canonical form computed by colour refinement plus
individualization, pruning branches on twin vertices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .degseq import (
    ConeDegreeSequence,
    as_sequence,
    cyclic_sequences,
    is_exceptional_pair,
    is_graphical,
    lift,
    star_positions,
)
from .errors import EmptyFamily, TooLarge
from .graph import ConeGraph, LabeledGraph, join_cone
from .report import TheoremReport
from .spectral import DEFAULT_MARGIN, DEFAULT_TOL, PerronResult, theta

DEFAULT_LIMIT = 9


# --- canonical labeling ------------------------------------------------------

def _refine(g: LabeledGraph, colors: tuple[int, ...]) -> tuple[int, ...]:
    adj = g.adj
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(g.n)]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = tuple(rank[s] for s in sigs)
        if len(rank) == len(set(colors)):
            return new
        colors = new


def _rank(keys) -> tuple[int, ...]:
    rank = {k: i for i, k in enumerate(sorted(set(keys)))}
    return tuple(rank[k] for k in keys)


def _twin_representatives(g: LabeledGraph, cell: list[int]) -> list[int]:
    reps = []
    for v in cell:
        if not any(g.adj[v] - {u} == g.adj[u] - {v} for u in reps):
            reps.append(v)
    return reps


def canonical_form(g: LabeledGraph, colors: Sequence[int] | None = None):
    """Return ``(certificate, perm)``; ``g.relabel(perm)`` is canonical.

    Isomorphic graphs (colour-preserving, if ``colors`` is given) have
    equal certificates.
    """
    if g.n == 0:
        return (0, ()), []
    start = _rank([(0 if colors is None else colors[v], g.degree(v)) for v in range(g.n)])
    best = None

    def search(col):
        nonlocal best
        col = _refine(g, col)
        if len(set(col)) == g.n:
            cert = tuple(sorted((min(col[u], col[v]), max(col[u], col[v]))
                                for u, v in g.edges))
            key = (tuple(sorted(start[v] for v in range(g.n))), cert)
            if best is None or key < best[0]:
                best = (key, list(col))
            return
        counts = {}
        for c in col:
            counts[c] = counts.get(c, 0) + 1
        target = min(c for c, k in counts.items() if k > 1)
        cell = [v for v in range(g.n) if col[v] == target]
        for v in _twin_representatives(g, cell):
            search(_rank([(c, 0 if u == v else 1) if c == target else (c, 0)
                          for u, c in enumerate(col)]))

    search(start)
    (labels, cert), perm = best
    return (g.n, labels, cert), perm


def certificate(g: LabeledGraph, colors=None):
    return canonical_form(g, colors)[0]


def canonical_graph(g: LabeledGraph) -> LabeledGraph:
    return g.relabel(canonical_form(g)[1])


def are_isomorphic(g1: LabeledGraph, g2: LabeledGraph) -> bool:
    if g1.n != g2.n or g1.m != g2.m or g1.degree_sequence() != g2.degree_sequence():
        return False
    return certificate(g1) == certificate(g2)


# --- realizations ------------------------------------------------------------

def _choose(classes: list[list[int]], k: int) -> Iterator[list[int]]:
    """Lowest-label picks of ``k`` vertices spread over interchangeable classes."""
    def rec(i, left):
        if i == len(classes):
            if left == 0:
                yield []
            return
        room = sum(len(c) for c in classes[i + 1:])
        for take in range(min(len(classes[i]), left), -1, -1):
            if left - take > room:
                break
            for rest in rec(i + 1, left - take):
                yield classes[i][:take] + rest

    yield from rec(0, k)


def iter_realizations(pi: Sequence[int], connected: bool = True) -> Iterator[LabeledGraph]:
    """Labeled realizations covering every isomorphism class (duplicates possible).

    Vertex v has degree ``pi[v]``.
    """
    d = tuple(int(x) for x in pi)
    n = len(d)
    if not is_graphical(d):
        return
    nbrs = [set() for _ in range(n)]

    def rec(i):
        if i == n:
            g = LabeledGraph(n, frozenset((u, w) for u in range(n) for w in nbrs[u] if u < w))
            if not connected or g.is_connected():
                yield g
            return
        need = d[i] - len(nbrs[i])
        cands = [j for j in range(i + 1, n) if len(nbrs[j]) < d[j]]
        if need > len(cands):
            return
        groups: dict = {}
        for j in cands:
            groups.setdefault((d[j], frozenset(nbrs[j])), []).append(j)
        classes = sorted(groups.values())
        for pick in _choose(classes, need):
            for j in pick:
                nbrs[i].add(j)
                nbrs[j].add(i)
            rest = [d[j] - len(nbrs[j]) for j in range(i + 1, n)]
            if is_graphical(rest):
                if not connected or _may_connect(i, nbrs, d):
                    yield from rec(i + 1)
            for j in pick:
                nbrs[i].discard(j)
                nbrs[j].discard(i)

    yield from rec(0)


def _may_connect(i: int, nbrs, d) -> bool:
    """Cheap necessary condition: a finished component must be everything."""
    n = len(d)
    seen = {0}
    stack = [0]
    open_ = False
    while stack:
        u = stack.pop()
        if u > i and len(nbrs[u]) < d[u]:
            open_ = True
        for w in nbrs[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return open_ or len(seen) == n


@dataclass(frozen=True)
class RealizationSet:
    pi_star: tuple[int, ...]
    graphs: tuple[LabeledGraph, ...]

    def __len__(self):
        return len(self.graphs)

    def __iter__(self):
        return iter(self.graphs)


@lru_cache(maxsize=None)
def _realize(seq: tuple[int, ...]) -> tuple[LabeledGraph, ...]:
    found = {}
    for g in iter_realizations(seq, connected=True):
        cert, perm = canonical_form(g)
        if cert not in found:
            found[cert] = g
    return tuple(found[c] for c in sorted(found))


def realize_all(pi_star: Sequence[int], limit: int = DEFAULT_LIMIT) -> RealizationSet:
    """All connected realizations of ``pi_star`` up to isomorphism."""
    seq = as_sequence(pi_star)
    if len(seq) > limit:
        raise TooLarge(f"{len(seq)} vertices exceeds limit {limit}")
    return RealizationSet(seq, _realize(seq))


def connected_graphs(n: int) -> list[LabeledGraph]:
    """Every connected graph on ``n`` vertices, up to isomorphism."""
    if n == 1:
        return [LabeledGraph(1, frozenset())]
    out = []
    for c in range(0, math.comb(n, 2) - n + 2):
        for seq in cyclic_sequences(n, c):
            out.extend(realize_all(seq, limit=max(n, DEFAULT_LIMIT)))
    return out


# --- oracle ------------------------------------------------------------------

@dataclass(frozen=True)
class OracleResult:
    graph: ConeGraph
    perron: PerronResult
    unique: bool
    gap: float
    members: int
    runner_up: float | None


def family_thetas(pi_star: Sequence[int], t: int, alpha: float,
                  limit: int = DEFAULT_LIMIT, tol: float = DEFAULT_TOL):
    """(Theta of K_t v H, H, Perron result) for every realization H, best first."""
    rows = []
    for h in realize_all(pi_star, limit):
        res = theta(join_cone(t, h).full, alpha, tol)
        rows.append((res.theta, h, res))
    rows.sort(key=lambda row: -row[0])
    return rows


def oracle_maximal(cds: ConeDegreeSequence, alpha: float, limit: int = DEFAULT_LIMIT,
                   margin: float = DEFAULT_MARGIN, tol: float = DEFAULT_TOL) -> OracleResult:
    """Brute-force maximizer of Theta over the family of ``cds``."""
    rows = family_thetas(cds.reduced, cds.t, alpha, limit, tol)
    if not rows:
        raise EmptyFamily(f"no connected realization of {cds.reduced}")
    best_theta, best_h, best_res = rows[0]
    best = join_cone(cds.t, best_h)
    runner_up = None
    for th, h, _ in rows[1:]:
        if best_theta - th <= margin and are_isomorphic(join_cone(cds.t, h).full, best.full):
            continue
        runner_up = th
        break
    gap = math.inf if runner_up is None else best_theta - runner_up
    return OracleResult(best, best_res, gap > margin, gap, len(rows), runner_up)


def max_theta(pi_star: Sequence[int], t: int, alpha: float,
              limit: int = DEFAULT_LIMIT, tol: float = DEFAULT_TOL) -> tuple[float, LabeledGraph]:
    rows = family_thetas(pi_star, t, alpha, limit, tol)
    if not rows:
        raise EmptyFamily(f"no connected realization of {tuple(pi_star)}")
    return rows[0][0], rows[0][1]


def counterexample_search(n: int, t: int, c: int, alpha: float, limit: int = DEFAULT_LIMIT,
                          margin: float = DEFAULT_MARGIN) -> list[TheoremReport]:
    """Star-majorized pairs whose oracle maxima fail the strict increase.

    Works for any c >= 0; sequences are not classified, only required
    to have a connected c-cyclic realization on n - t vertices.
    """
    ell = n - t
    if ell > limit:
        raise TooLarge(f"{ell} vertices exceeds limit {limit}")
    seqs = cyclic_sequences(ell, c)
    best = {}
    for r in seqs:
        best[r] = max_theta(r, t, alpha, limit)
    reports = []
    for a in seqs:
        for b in seqs:
            if star_positions(a, b) is None:
                continue
            ta, ha = best[a]
            tb, hb = best[b]
            if ta + margin < tb:
                continue
            pa, pb = lift(a, t), lift(b, t)
            rep = TheoremReport(
                "majorization-search",
                {"n": n, "t": t, "c": c, "alpha": alpha,
                 "pi": list(pa), "pi_prime": list(pb)})
            rep.observe(tb - ta)
            witness = {"theta_pi": ta, "theta_pi_prime": tb,
                       "h_pi": ha.to_json(), "h_pi_prime": hb.to_json()}
            if c == 2 and is_exceptional_pair(pa, pb, t, n):
                rep.witnesses.update(witness)
                rep.inconclusive("pair belongs to the excluded bicyclic family")
            elif ta > tb + margin:
                rep.fail("maximal Theta decreases along a star majorization", **witness)
            else:
                rep.witnesses.update(witness)
                rep.inconclusive("maxima indistinguishable within margin")
            reports.append(rep)
    return reports
