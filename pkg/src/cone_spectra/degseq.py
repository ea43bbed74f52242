"""Degree sequences of t-cone c-cyclic graphs.

A sequence is a non-increasing tuple of positive integers.  A *cone*
sequence on ``n`` vertices with cone size ``t`` starts with ``t`` copies
of ``n - 1``; stripping those and subtracting ``t`` from the rest gives
the *reduced* sequence, which is the degree sequence of the connected
c-cyclic graph H in ``K_t v H``.

Element indices are 0-based in Python calls (``unit_transform``), while
positions reported to users (``star_positions``, chain steps) are 1-based
to agree with the usual v_1..v_n numbering.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from math import comb
from typing import Iterator, Sequence

from .errors import (
    GapTooSmall,
    LengthMismatch,
    NoCaseMatch,
    NotConeSequence,
    NotGraphical,
    NotMajorized,
    NotNonIncreasing,
    NoValidChain,
    OrderViolation,
    RangeError,
    WrongEdgeCount,
)

CASES = {
    0: ("4.0.1",),
    1: ("4.1.1", "4.1.2"),
    2: ("4.2.1", "4.2.2", "4.2.3", "4.2.4"),
}


def as_sequence(entries: Sequence[int]) -> tuple[int, ...]:
    """Return ``entries`` as a tuple after checking it is non-increasing."""
    seq = tuple(int(d) for d in entries)
    for a, b in zip(seq, seq[1:]):
        if a < b:
            raise NotNonIncreasing(f"{seq} is not non-increasing")
    return seq


def is_graphical(seq: Sequence[int]) -> bool:
    """Erdos-Gallai test."""
    d = sorted((int(x) for x in seq), reverse=True)
    if any(x < 0 for x in d) or sum(d) % 2:
        return False
    n = len(d)
    prefix = 0
    for k in range(1, n + 1):
        prefix += d[k - 1]
        rhs = k * (k - 1) + sum(min(k, x) for x in d[k:])
        if prefix > rhs:
            return False
    return True


def has_connected_realization(seq: Sequence[int]) -> bool:
    """Graphical, no isolated vertex, and enough edges to span."""
    n = len(seq)
    if n == 1:
        return tuple(seq) == (0,)
    return min(seq) >= 1 and sum(seq) >= 2 * (n - 1) and is_graphical(seq)


def _match_case(r: tuple[int, ...], t: int, n: int, c: int) -> str | None:
    if c == 0:
        if t <= n - 2 and r[-1] == 1:
            return "4.0.1"
        return None
    if c == 1:
        if t <= n - 3 and all(x == 2 for x in r):
            return "4.1.1"
        if (t <= n - 4 and r[0] >= 3 and r[1] >= r[2] >= 2
                and r[-1] == 1):
            return "4.1.2"
        return None
    if c == 2:
        if t <= n - 5 and r[0] == 4 and all(x == 2 for x in r[1:]):
            return "4.2.1"
        if (t <= n - 4 and r[0] == r[1] == 3
                and all(x == 2 for x in r[2:])):
            return "4.2.2"
        if (t <= n - 6 and r[0] >= 5 and r[1:5] == (2, 2, 2, 2)
                and r[-1] == 1):
            return "4.2.3"
        if (t <= n - 5 and r[0] >= r[1] >= 3 and r[2] >= r[3] >= 2
                and r[-1] == 1):
            return "4.2.4"
        return None
    raise RangeError(f"no case table for c={c}")


@dataclass(frozen=True)
class ConeDegreeSequence:
    """A classified cone degree sequence.  Build with :func:`classify`."""

    pi: tuple[int, ...]
    t: int
    c: int
    case: str = field(compare=False)

    @property
    def n(self) -> int:
        return len(self.pi)

    @property
    def reduced(self) -> tuple[int, ...]:
        return tuple(d - self.t for d in self.pi[self.t:])

    def to_json(self) -> dict:
        return {"n": self.n, "t": self.t, "c": self.c,
                "pi": list(self.pi), "case": self.case}


def classify(pi: Sequence[int], t: int, c: int) -> ConeDegreeSequence:
    """Validate ``pi`` as a t-cone c-cyclic sequence and tag its case."""
    seq = as_sequence(pi)
    n = len(seq)
    if c not in CASES:
        raise RangeError(f"c must be 0, 1 or 2 (got {c})")
    if not 0 <= t <= n - 2:
        raise RangeError(f"t={t} outside 0..n-2 for n={n}")
    ell = n - t
    if c > comb(ell, 2) - ell + 1:
        raise RangeError(f"c={c} too large for {ell} vertices")
    if any(d != n - 1 for d in seq[:t]):
        raise NotConeSequence(f"first {t} entries of {seq} must equal {n - 1}")
    r = tuple(d - t for d in seq[t:])
    if sum(r) != 2 * (ell + c - 1):
        raise WrongEdgeCount(
            f"reduced sum {sum(r)} != {2 * (ell + c - 1)} for {seq}")
    if r[-1] < 1:
        raise NoCaseMatch(f"reduced sequence {r} has a vertex of degree {r[-1]}")
    case = _match_case(r, t, n, c)
    if case is None:
        raise NoCaseMatch(f"{seq} (t={t}, c={c}) fits no case")
    if not is_graphical(r):
        raise NotGraphical(f"reduced sequence {r} is not graphical")
    return ConeDegreeSequence(seq, t, c, case)


def reduce(cds: ConeDegreeSequence) -> tuple[int, ...]:
    return cds.reduced


def lift(reduced: Sequence[int], t: int) -> tuple[int, ...]:
    """Inverse of :func:`reduce`: prepend the cone and add ``t``."""
    n = len(reduced) + t
    return (n - 1,) * t + tuple(d + t for d in reduced)


class Majorization(enum.Enum):
    EQUAL = "Equal"
    MAJORIZED_BY = "StrictlyMajorizedBy"
    MAJORIZES = "StrictlyMajorizes"
    INCOMPARABLE = "Incomparable"


def compare_majorization(y: Sequence[int], z: Sequence[int]) -> Majorization:
    """Compare ``y`` with ``z`` under prefix-sum domination."""
    if len(y) != len(z):
        raise LengthMismatch(f"lengths {len(y)} and {len(z)} differ")
    y, z = as_sequence(y), as_sequence(z)
    if y == z:
        return Majorization.EQUAL
    if sum(y) != sum(z):
        return Majorization.INCOMPARABLE
    below = above = True
    sy = sz = 0
    for a, b in zip(y, z):
        sy += a
        sz += b
        if sy > sz:
            below = False
        if sy < sz:
            above = False
    if below:
        return Majorization.MAJORIZED_BY
    if above:
        return Majorization.MAJORIZES
    return Majorization.INCOMPARABLE


def is_majorized(y, z) -> bool:
    """True iff ``y`` is strictly majorized by ``z``."""
    return compare_majorization(y, z) is Majorization.MAJORIZED_BY


def unit_transform(z: Sequence[int], i: int, j: int) -> tuple[int, ...]:
    """Move one unit from ``z[i]`` to ``z[j]`` (0-based, ``i < j``)."""
    z = as_sequence(z)
    if not 0 <= i < j < len(z):
        raise OrderViolation(f"need 0 <= i < j < {len(z)}, got i={i}, j={j}")
    if z[i] < z[j] + 2:
        raise GapTooSmall(f"z[{i}]={z[i]} < z[{j}]+2={z[j] + 2}")
    out = list(z)
    out[i] -= 1
    out[j] += 1
    for a, b in zip(out, out[1:]):
        if a < b:
            raise OrderViolation(f"{tuple(out)} is not non-increasing in place")
    return tuple(out)


def star_positions(pi: Sequence[int], pi_prime: Sequence[int]):
    """The 1-based pair ``(p, q)`` with pi'_p = pi_p + 1, pi'_q = pi_q - 1.

    Returns ``None`` unless the two sequences differ in exactly those two
    positions with ``p < q``.
    """
    if len(pi) != len(pi_prime):
        return None
    diff = [k for k, (a, b) in enumerate(zip(pi, pi_prime)) if a != b]
    if len(diff) != 2:
        return None
    p, q = diff
    if pi_prime[p] == pi[p] + 1 and pi_prime[q] == pi[q] - 1:
        return p + 1, q + 1
    return None


def is_exceptional_pair(pi, pi_prime, t: int, n: int) -> bool:
    """Match the bicyclic pair family on which the strict inequality is not claimed.

    pi  = ((n-1)^t, t+k+3, t+3, (t+2)^(n-t-k-2), (t+1)^k)
    pi' = ((n-1)^t, t+k+4,      (t+2)^(n-t-k-1), (t+1)^k),  1 <= k <= n-t-5.
    """
    pi, pi_prime = tuple(pi), tuple(pi_prime)
    if len(pi) != n or len(pi_prime) != n:
        return False
    return any(pi == a and pi_prime == b
               for a, b in exceptional_family(n, t))


def exceptional_family(n: int, t: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    cone = (n - 1,) * t
    pairs = []
    for k in range(1, n - t - 4):
        a = cone + (t + k + 3, t + 3) + (t + 2,) * (n - t - k - 2) + (t + 1,) * k
        b = cone + (t + k + 4,) + (t + 2,) * (n - t - k - 1) + (t + 1,) * k
        pairs.append((a, b))
    return pairs


def _partitions(total: int, parts: int, hi: int, lo: int = 1) -> Iterator[tuple[int, ...]]:
    """Non-increasing tuples of ``parts`` integers in [lo, hi] summing to ``total``,
    in descending lexicographic order."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    top = min(hi, total - lo * (parts - 1))
    bottom = -(-total // parts)
    for first in range(top, max(bottom, lo) - 1, -1):
        for rest in _partitions(total - first, parts - 1, first, lo):
            yield (first,) + rest


def cyclic_sequences(ell: int, c: int) -> list[tuple[int, ...]]:
    """All degree sequences of connected c-cyclic graphs on ``ell`` vertices."""
    if ell == 1:
        return [(0,)] if c == 0 else []
    total = 2 * (ell + c - 1)
    return [s for s in _partitions(total, ell, ell - 1)
            if is_graphical(s)]


def cone_sequences(n: int, t: int, c: int) -> list[ConeDegreeSequence]:
    """Every valid classified sequence for (n, t, c), with no size floor."""
    if c not in CASES or not 0 <= t <= n - 2:
        raise RangeError(f"(n={n}, t={t}, c={c}) out of range")
    out = []
    for r in cyclic_sequences(n - t, c):
        try:
            out.append(classify(lift(r, t), t, c))
        except NoCaseMatch:
            continue
    return out


def enumerate_sequences(n: int, t: int, c: int) -> list[ConeDegreeSequence]:
    """All classified sequences for (n, t, c); requires ``n - t >= c + 3``."""
    if c not in CASES:
        raise RangeError(f"c must be 0, 1 or 2 (got {c})")
    if t < 0 or n - t < c + 3:
        raise RangeError(f"need n - t >= c + 3 (n={n}, t={t}, c={c})")
    return cone_sequences(n, t, c)


@dataclass(frozen=True)
class ChainStep:
    before: tuple[int, ...]
    after: tuple[int, ...]
    p: int  # 1-based position that gains a unit
    q: int  # 1-based position that loses a unit


@dataclass(frozen=True)
class MajorizationChain:
    steps: tuple[ChainStep, ...]

    @property
    def sequences(self) -> list[tuple[int, ...]]:
        return [self.steps[0].before] + [s.after for s in self.steps]

    def __len__(self):
        return len(self.steps)

    def to_json(self) -> dict:
        return {"sequences": [list(s) for s in self.sequences],
                "steps": [{"p": s.p, "q": s.q} for s in self.steps]}


def _up_moves(seq: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], int, int]]:
    """Sequences reachable by one inverse unit transformation (+1 at p, -1 at q)."""
    n = len(seq)
    for p in range(n):
        if p > 0 and seq[p - 1] < seq[p] + 1:
            continue
        for q in range(p + 1, n):
            if q + 1 < n and seq[q + 1] > seq[q] - 1:
                continue
            nxt = list(seq)
            nxt[p] += 1
            nxt[q] -= 1
            yield tuple(nxt), p, q


def star_chain(pi: ConeDegreeSequence, pi_prime: ConeDegreeSequence,
               forbid=None) -> MajorizationChain:
    """Shortest chain of star majorizations from ``pi`` up to ``pi_prime``.

    Breadth-first search over sequences s with pi <= s <= pi' whose every
    member classifies for the same (t, c).  ``forbid(a, b)`` may veto
    individual steps.
    """
    if (pi.n, pi.t, pi.c) != (pi_prime.n, pi_prime.t, pi_prime.c):
        raise NotMajorized("sequences belong to different (n, t, c) families")
    if not is_majorized(pi.pi, pi_prime.pi):
        raise NotMajorized(f"{pi.pi} is not strictly majorized by {pi_prime.pi}")
    t, c = pi.t, pi.c
    start, goal = pi.pi, pi_prime.pi
    parent: dict[tuple[int, ...], tuple[tuple[int, ...], int, int] | None] = {start: None}
    queue = deque([start])
    valid_cache: dict[tuple[int, ...], bool] = {}

    def valid(s):
        if s not in valid_cache:
            try:
                classify(s, t, c)
                valid_cache[s] = compare_majorization(s, goal) in (
                    Majorization.MAJORIZED_BY, Majorization.EQUAL)
            except Exception:
                valid_cache[s] = False
        return valid_cache[s]

    while queue:
        cur = queue.popleft()
        if cur == goal:
            break
        for nxt, p, q in _up_moves(cur):
            if nxt in parent or not valid(nxt):
                continue
            if forbid is not None and forbid(cur, nxt):
                continue
            parent[nxt] = (cur, p, q)
            queue.append(nxt)
    if goal not in parent:
        raise NoValidChain(f"no star chain from {start} to {goal} inside the family")
    steps = []
    node = goal
    while parent[node] is not None:
        prev, p, q = parent[node]
        steps.append(ChainStep(prev, node, p + 1, q + 1))
        node = prev
    return MajorizationChain(tuple(reversed(steps)))


def star_pairs(family: Sequence[ConeDegreeSequence]):
    """All ordered pairs (a, b) of the family with a star-majorized by b."""
    out = []
    for a in family:
        for b in family:
            if star_positions(a.pi, b.pi) is not None:
                out.append((a, b))
    return out


def majorized_pairs(family: Sequence[ConeDegreeSequence]):
    out = []
    for a in family:
        for b in family:
            if is_majorized(a.pi, b.pi):
                out.append((a, b))
    return out
