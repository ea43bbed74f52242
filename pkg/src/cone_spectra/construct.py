"""Extremal graphs built layer by layer from a reduced degree sequence.

Vertex i of every layered construction receives degree ``pi_star[i]``;
vertex 0 is the root and vertices are numbered in breadth-first order, so
the identity ordering is the BFS ordering the construction produces.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .degseq import ConeDegreeSequence, as_sequence, classify
from .errors import (
    ConstructionError,
    NotBicyclicSequence,
    NotTreeSequence,
    NotUnicyclicSequence,
    ParamRange,
    RangeError,
    UnsupportedCyclomatic,
)
from .graph import ConeGraph, LabeledGraph, bfs_levels, cycle_graph, join_cone


@dataclass(frozen=True)
class LayeredConstruction:
    graph: LabeledGraph
    layers: tuple[tuple[int, ...], ...]
    assigned: tuple[int, ...]

    @property
    def layer_sizes(self) -> tuple[int, ...]:
        return tuple(len(layer) for layer in self.layers)

    def to_json(self) -> dict:
        return {"graph": self.graph.to_json(),
                "layers": [list(layer) for layer in self.layers],
                "assigned": list(self.assigned)}


def _layers_of(g: LabeledGraph, root: int = 0) -> tuple[tuple[int, ...], ...]:
    level = bfs_levels(g, root)
    out = [[] for _ in range(max(level) + 1)]
    for v in range(g.n):
        out[level[v]].append(v)
    return tuple(tuple(layer) for layer in out)


def _bfs_connect(seq: tuple[int, ...], core_edges: Sequence[tuple[int, int]],
                 first_free: int) -> LabeledGraph:
    """Attach children in breadth-first order until every degree is met.

    ``core_edges`` is the seed structure on vertices ``0..first_free-1``;
    each processed vertex then takes its missing degree as new children
    drawn from the next unused labels.
    """
    ell = len(seq)
    deg = [0] * ell
    edges = []
    for u, v in core_edges:
        edges.append((u, v))
        deg[u] += 1
        deg[v] += 1
    nxt = first_free
    for v in range(ell):
        if v >= nxt and v != 0:
            raise ConstructionError(f"vertex {v} unreachable while building {seq}")
        need = seq[v] - deg[v]
        if need < 0:
            raise ConstructionError(f"vertex {v} over-full while building {seq}")
        if nxt + need > ell:
            raise ConstructionError(f"ran out of vertices while building {seq}")
        for w in range(nxt, nxt + need):
            edges.append((v, w))
            deg[v] += 1
            deg[w] += 1
        nxt += need
    if nxt != ell:
        raise ConstructionError(f"{ell - nxt} vertices left unattached for {seq}")
    return LabeledGraph.from_edges(ell, edges)


def _wrap(g: LabeledGraph, seq: tuple[int, ...]) -> LayeredConstruction:
    if g.degrees != seq:
        raise ConstructionError(f"realized degrees {g.degrees} differ from {seq}")
    return LayeredConstruction(g, _layers_of(g), seq)


def bfs_tree(pi_star: Sequence[int]) -> LayeredConstruction:
    seq = as_sequence(pi_star)
    ell = len(seq)
    if ell < 2 or seq[-1] < 1 or sum(seq) != 2 * (ell - 1):
        raise NotTreeSequence(f"{seq} is not a tree degree sequence")
    root_children = [(0, w) for w in range(1, seq[0] + 1)]
    return _wrap(_bfs_connect(seq, root_children, seq[0] + 1), seq)


def bfs_unicyclic(pi_star: Sequence[int]) -> LayeredConstruction:
    seq = as_sequence(pi_star)
    ell = len(seq)
    if ell < 3 or seq[-1] < 1 or sum(seq) != 2 * ell:
        raise NotUnicyclicSequence(f"{seq} is not a unicyclic degree sequence")
    if all(d == 2 for d in seq):
        return _wrap(_bfs_relabel(cycle_graph(ell)), seq)
    if seq[0] < 3 or seq[2] < 2:
        raise NotUnicyclicSequence(f"{seq} has no BFS-unicyclic realization")
    core = [(0, w) for w in range(1, seq[0] + 1)] + [(1, 2)]
    return _wrap(_bfs_connect(seq, core, seq[0] + 1), seq)


def _bicyclic_case(seq: tuple[int, ...]) -> str:
    r = seq
    if r[0] == 4 and all(x == 2 for x in r[1:]):
        return "4.2.1"
    if r[0] == r[1] == 3 and all(x == 2 for x in r[2:]):
        return "4.2.2"
    if len(r) >= 6 and r[0] >= 5 and r[1:5] == (2, 2, 2, 2) and r[-1] == 1:
        return "4.2.3"
    if len(r) >= 5 and r[0] >= r[1] >= 3 and r[2] >= r[3] >= 2 and r[-1] == 1:
        return "4.2.4"
    raise NotBicyclicSequence(f"{seq} fits no bicyclic case")


def bfs_bicyclic(pi_star: Sequence[int]) -> LayeredConstruction:
    seq = as_sequence(pi_star)
    ell = len(seq)
    if ell < 4 or seq[-1] < 1 or sum(seq) != 2 * (ell + 1):
        raise NotBicyclicSequence(f"{seq} is not a bicyclic degree sequence")
    case = _bicyclic_case(seq)
    if case == "4.2.1":
        g = named_bicyclic("C", 3, ell - 2)
    elif case == "4.2.2":
        g = named_bicyclic("theta", ell - 2, 1, 2)
    elif case == "4.2.3":
        g = b_star(seq[0] - 4, ell)
    else:
        core = [(0, w) for w in range(1, seq[0] + 1)] + [(1, 2), (1, 3)]
        return _wrap(_bfs_connect(seq, core, seq[0] + 1), seq)
    return _wrap(_bfs_relabel(g), seq)


def _bfs_relabel(g: LabeledGraph) -> LabeledGraph:
    """Relabel so labels follow (level, -degree) from a max-degree root."""
    root = max(range(g.n), key=lambda v: (g.degree(v), -v))
    level = bfs_levels(g, root)
    order = sorted(range(g.n), key=lambda v: (level[v], -g.degree(v), v))
    perm = [0] * g.n
    for new, old in enumerate(order):
        perm[old] = new
    return g.relabel(perm)


def almost_equal_lengths(total: int, parts: int) -> list[int]:
    """Split ``total`` into ``parts`` positive lengths differing by at most one."""
    if parts < 1 or total < parts:
        raise ParamRange(f"cannot split {total} into {parts} positive parts")
    q, r = divmod(total, parts)
    return [q + 1] * r + [q] * (parts - r)


def b_star(paths: int, ell: int) -> LabeledGraph:
    """C(3,3) with ``paths`` pendant paths of almost equal lengths at the centre."""
    g = named_bicyclic("C", 3, 3)
    edges = list(g.edges)
    nxt = 5
    for length in almost_equal_lengths(ell - 5, paths):
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return LabeledGraph.from_edges(ell, edges)


def named_bicyclic(kind: str, *params: int) -> LabeledGraph:
    """B(n1,n2), C(n1,n2) or theta(p,r,q)."""
    kind = kind.lower()
    if kind == "b":
        n1, n2 = params
        if n1 < 3 or n2 < 3:
            raise ParamRange("B(n1, n2) needs n1, n2 >= 3")
        edges = [(i, (i + 1) % n1) for i in range(n1)]
        edges += [(n1 + i, n1 + (i + 1) % n2) for i in range(n2)]
        edges.append((0, n1))
        return LabeledGraph.from_edges(n1 + n2, edges)
    if kind == "c":
        n1, n2 = params
        if n1 < 3 or n2 < 3:
            raise ParamRange("C(n1, n2) needs n1, n2 >= 3")
        first = list(range(n1))
        second = [0] + list(range(n1, n1 + n2 - 1))
        edges = [(first[i], first[(i + 1) % n1]) for i in range(n1)]
        edges += [(second[i], second[(i + 1) % n2]) for i in range(n2)]
        return LabeledGraph.from_edges(n1 + n2 - 1, edges)
    if kind in ("theta", "θ"):
        p, r, q = params
        if not (q >= r >= 1 and p >= q >= 2):
            raise ParamRange("theta(p, r, q) needs q >= r >= 1 and p >= q >= 2")
        edges = []
        nxt = 2
        for length in (p, r, q):
            prev = 0
            for _ in range(length - 1):
                edges.append((prev, nxt))
                prev = nxt
                nxt += 1
            edges.append((prev, 1))
        return LabeledGraph.from_edges(p + q + r - 1, edges)
    raise ParamRange(f"unknown bicyclic frame {kind!r}")


def maximal_construction(cds: ConeDegreeSequence) -> LayeredConstruction:
    """The layered H of the extremal cone graph for ``cds``."""
    if cds.c >= 3:
        raise UnsupportedCyclomatic(f"no extremal construction for c={cds.c}")
    r = cds.reduced
    if cds.c == 0:
        return bfs_tree(r)
    if cds.c == 1:
        if cds.t > cds.n - 3:
            raise RangeError("unicyclic needs t <= n - 3")
        return bfs_unicyclic(r)
    if cds.t > cds.n - 4:
        raise RangeError("bicyclic needs t <= n - 4")
    return bfs_bicyclic(r)


def maximal_cone_graph(cds: ConeDegreeSequence) -> ConeGraph:
    return join_cone(cds.t, maximal_construction(cds).graph)


def maximal_for(pi: Sequence[int], t: int, c: int) -> ConeGraph:
    return maximal_cone_graph(classify(pi, t, c))
