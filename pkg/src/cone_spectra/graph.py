"""Simple labeled graphs on vertices 0..n-1 and the operations used on them.

Graphs are immutable values; every transform returns a new graph.  In a
cone graph ``K_t v H`` the cone occupies vertices 0..t-1 and H vertex i
becomes full-graph vertex t + i.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    Disconnected,
    FormatError,
    GraphError,
    InvalidShiftSet,
    IsTree,
    PreconditionViolated,
)


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class LabeledGraph:
    n: int
    edges: frozenset

    def __post_init__(self):
        canon = set()
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) outside 0..{self.n - 1}")
            canon.add(_edge(u, v))
        object.__setattr__(self, "edges", frozenset(canon))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "LabeledGraph":
        edges = list(edges)
        keys = [_edge(int(u), int(v)) for u, v in edges]
        if len(set(keys)) != len(keys):
            raise GraphError("multi-edge in edge list")
        return cls(n, frozenset(keys))

    @cached_property
    def adj(self) -> tuple[frozenset, ...]:
        nbrs = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adj)

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.degrees, reverse=True))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def min_degree(self) -> int:
        return min(self.degrees) if self.n else 0

    def max_degree(self) -> int:
        return max(self.degrees) if self.n else 0

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return len(distances(self, 0)) == self.n

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1.0
        return a

    def add_edges(self, pairs) -> "LabeledGraph":
        return LabeledGraph(self.n, self.edges | {_edge(u, v) for u, v in pairs})

    def remove_edges(self, pairs) -> "LabeledGraph":
        return LabeledGraph(self.n, self.edges - {_edge(u, v) for u, v in pairs})

    def relabel(self, perm: Sequence[int]) -> "LabeledGraph":
        """Vertex v becomes ``perm[v]``."""
        return LabeledGraph(self.n, frozenset(_edge(perm[u], perm[v]) for u, v in self.edges))

    def subgraph(self, vertices: Iterable[int]) -> tuple["LabeledGraph", list[int]]:
        """Induced subgraph relabeled densely; second item maps new -> old."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = frozenset((index[u], index[v]) for u, v in self.edges
                          if u in index and v in index)
        return LabeledGraph(len(keep), edges), keep

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}

    @classmethod
    def from_json(cls, data) -> "LabeledGraph":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            return cls.from_edges(int(data["n"]), data["edges"])
        except (KeyError, TypeError) as exc:
            raise FormatError(f"graph JSON needs 'n' and 'edges': {exc}") from None


def path_graph(n: int) -> LabeledGraph:
    return LabeledGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> LabeledGraph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return LabeledGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> LabeledGraph:
    return LabeledGraph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> LabeledGraph:
    return LabeledGraph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


@dataclass(frozen=True)
class ConeGraph:
    """``K_t v h``; ``h`` keeps its own 0-based labels."""

    t: int
    h: LabeledGraph

    @property
    def n(self) -> int:
        return self.t + self.h.n

    @cached_property
    def full(self) -> LabeledGraph:
        t = self.t
        edges = {(i, j) for i in range(t) for j in range(i + 1, t)}
        edges |= {(i, t + v) for i in range(t) for v in range(self.h.n)}
        edges |= {(t + u, t + v) for u, v in self.h.edges}
        return LabeledGraph(self.n, frozenset(edges))

    def h_vertices(self) -> range:
        """Full-graph labels of the H vertices."""
        return range(self.t, self.n)

    def to_json(self) -> dict:
        return {"t": self.t, "h": self.h.to_json(), "full": self.full.to_json()}


def join_cone(t: int, h: LabeledGraph) -> ConeGraph:
    if t < 0:
        raise GraphError("t must be non-negative")
    return ConeGraph(t, h)


def distances(g: LabeledGraph, root: int, removed: frozenset = frozenset()) -> dict[int, int]:
    """BFS distances from ``root`` in ``g`` minus the ``removed`` vertices."""
    dist = {root: 0}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w not in dist and w not in removed:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def bfs_levels(h: LabeledGraph, root: int) -> list[int]:
    dist = distances(h, root)
    if len(dist) != h.n:
        raise Disconnected("graph is disconnected")
    return [dist[v] for v in range(h.n)]


def shortest_path(g: LabeledGraph, a: int, b: int) -> list[int]:
    """A shortest a-b path, preferring smaller labels at each step."""
    parent = {a: None}
    queue = deque([a])
    while queue:
        u = queue.popleft()
        if u == b:
            break
        for w in sorted(g.adj[u]):
            if w not in parent:
                parent[w] = u
                queue.append(w)
    if b not in parent:
        raise Disconnected(f"{a} and {b} are in different components")
    path = [b]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return path[::-1]


def cyclomatic(g: LabeledGraph) -> int:
    if not g.is_connected():
        raise Disconnected("cyclomatic number needs a connected graph")
    return g.m - g.n + 1


def core_vertices(h: LabeledGraph) -> frozenset:
    """Vertices surviving repeated deletion of pendant vertices."""
    deg = list(h.degrees)
    alive = set(range(h.n))
    stack = [v for v in alive if deg[v] <= 1]
    while stack:
        v = stack.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for w in h.adj[v]:
            if w in alive:
                deg[w] -= 1
                if deg[w] == 1:
                    stack.append(w)
    return frozenset(alive)


def basic_graph(h: LabeledGraph) -> LabeledGraph:
    """The basic graph (2-core) of a connected graph with a cycle.

    Vertices are relabeled densely in increasing order of their labels in
    ``h``; use :func:`core_vertices` for the original labels.
    """
    if cyclomatic(h) < 1:
        raise IsTree("a tree has no basic graph")
    sub, _ = h.subgraph(core_vertices(h))
    return sub


def root_attachment(h: LabeledGraph) -> dict[int, int]:
    """For each vertex, the core vertex whose pendant tree contains it."""
    core = core_vertices(h)
    owner = {v: v for v in core}
    queue = deque(sorted(core))
    while queue:
        u = queue.popleft()
        for w in h.adj[u]:
            if w not in owner:
                owner[w] = owner[u]
                queue.append(w)
    return owner


@dataclass(frozen=True)
class InternalPath:
    """``vertices`` runs u_1..u_{k+1}; closed paths list u_1 once (k vertices)."""

    vertices: tuple[int, ...]
    closed: bool

    @property
    def k(self) -> int:
        return len(self.vertices) if self.closed else len(self.vertices) - 1

    @property
    def ends(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[0 if self.closed else -1]


def internal_paths(g: LabeledGraph) -> list[InternalPath]:
    """All maximal paths with end degrees >= 3 and interior degrees exactly 2."""
    deg = g.degrees
    seen = set()
    out = []
    for u in range(g.n):
        if deg[u] < 3:
            continue
        for first in sorted(g.adj[u]):
            walk = [u, first]
            prev, cur = u, first
            while deg[cur] == 2:
                nxt = next(w for w in g.adj[cur] if w != prev)
                prev, cur = cur, nxt
                walk.append(cur)
                if cur == u:
                    break
            if deg[cur] < 2:
                continue  # pendant path, not internal
            key = frozenset(_edge(a, b) for a, b in zip(walk, walk[1:]))
            if key in seen:
                continue
            seen.add(key)
            if walk[-1] == walk[0] and len(walk) > 2:
                out.append(InternalPath(tuple(walk[:-1]), True))
            else:
                out.append(InternalPath(tuple(walk), False))
    return out


def shift(g: LabeledGraph, u: int, v: int, W: Iterable[int]) -> LabeledGraph:
    """Move the edges vw (w in W) to uw."""
    W = set(W)
    if not W:
        raise InvalidShiftSet("W must be non-empty")
    if u == v:
        raise InvalidShiftSet("u and v must differ")
    if not W <= g.adj[v]:
        raise InvalidShiftSet(f"{sorted(W - g.adj[v])} not adjacent to v={v}")
    if W & (g.adj[u] | {u}):
        raise InvalidShiftSet(f"{sorted(W & (g.adj[u] | {u}))} already at u={u}")
    return g.remove_edges((v, w) for w in W).add_edges((u, w) for w in W)


def switch(g: LabeledGraph, u: int, v: int, x: int, y: int) -> LabeledGraph:
    """G + uy + xv - uv - xy."""
    if len({u, v, x, y}) != 4:
        raise PreconditionViolated("u, v, x, y must be distinct")
    if not (g.has_edge(u, v) and g.has_edge(x, y)):
        raise PreconditionViolated("uv and xy must be edges")
    if g.has_edge(u, y) or g.has_edge(x, v):
        raise PreconditionViolated("uy and xv must be non-edges")
    return g.remove_edges([(u, v), (x, y)]).add_edges([(u, y), (x, v)])


# --- interchange formats -----------------------------------------------------

def to_dot(g: LabeledGraph, name: str = "G", layers: Sequence[Sequence[int]] | None = None) -> str:
    lines = [f"graph {name} {{"]
    if layers:
        for i, layer in enumerate(layers):
            lines.append("  { rank=same; " + " ".join(str(v) for v in layer) + "; }")
    for v in range(g.n):
        lines.append(f"  {v};")
    for u, v in g.sorted_edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _g6_size(n: int) -> list[int]:
    if n <= 62:
        return [n + 63]
    if n <= 258047:
        return [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    raise FormatError("graph6 supports at most 258047 vertices here")


def to_graph6(g: LabeledGraph) -> str:
    bits = [1 if g.has_edge(i, j) else 0 for j in range(g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    chars = _g6_size(g.n)
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        chars.append(val + 63)
    return "".join(map(chr, chars))


def from_graph6(line: str) -> LabeledGraph:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    data = [ord(ch) - 63 for ch in s]
    if not data or any(not 0 <= d <= 63 for d in data):
        raise FormatError(f"invalid graph6 string {line!r}")
    if data[0] == 63:
        if len(data) < 4:
            raise FormatError("truncated graph6 header")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    need = n * (n - 1) // 2
    if len(body) * 6 < need or len(body) != -(-need // 6):
        raise FormatError(f"graph6 body length wrong for n={n}")
    bits = [(d >> (5 - k)) & 1 for d in body for k in range(6)]
    edges = []
    pos = 0
    for j in range(n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    return LabeledGraph.from_edges(n, edges)
