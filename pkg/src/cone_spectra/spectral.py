"""Largest eigenvalue and Perron vector of M_alpha(G) = A(G) + alpha D(G).

``theta`` runs power iteration on M + sigma I with sigma = alpha*Delta + 1,
which is nonnegative, irreducible and has a positive diagonal, so the
iteration converges to the Perron pair from any positive start.  Once the
residual is small the estimate is polished by Rayleigh-quotient
iteration; a polished vector is accepted only if it is strictly positive,
because the Perron vector is the only positive eigenvector of an
irreducible nonnegative matrix.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import Disconnected, NoConvergence, NotUnit
from .graph import LabeledGraph

DEFAULT_TOL = 1e-12
DEFAULT_MARGIN = 1e-9
MAX_ITER = 10**6


@dataclass(frozen=True)
class PerronResult:
    theta: float
    f: np.ndarray
    residual: float
    iterations: int

    def to_json(self) -> dict:
        return {"theta": float(self.theta), "f": [float(x) for x in self.f],
                "residual": float(self.residual), "iterations": int(self.iterations)}


def check_alpha(alpha) -> float:
    alpha = float(alpha)
    if not alpha >= 0:
        raise ValueError(f"alpha must be non-negative (got {alpha})")
    return alpha


def assemble(g: LabeledGraph, alpha: float) -> np.ndarray:
    alpha = check_alpha(alpha)
    m = g.adjacency_matrix()
    m[np.diag_indices(g.n)] = alpha * np.asarray(g.degrees, dtype=float)
    return m


def _residual(m: np.ndarray, x: np.ndarray) -> tuple[float, float]:
    mx = m @ x
    lam = float(x @ mx)
    return lam, float(np.max(np.abs(mx - lam * x)))


def _polish(m: np.ndarray, x: np.ndarray, lam: float, tol: float, steps: int = 6):
    """Rayleigh-quotient iteration; returns (lam, x, residual, used) or None."""
    n = len(x)
    eye = np.eye(n)
    used = 0
    for _ in range(steps):
        used += 1
        try:
            z = np.linalg.solve(m - lam * eye, x)
        except np.linalg.LinAlgError:
            break  # lam is already an eigenvalue to machine precision
        if not np.all(np.isfinite(z)):
            break
        z /= np.linalg.norm(z)
        if z.sum() < 0:
            z = -z
        x = z
        lam, res = _residual(m, x)
        if res <= tol:
            break
    lam, res = _residual(m, x)
    if res <= tol and np.all(x > 0):
        return lam, x, res, used
    return None


def theta(g: LabeledGraph, alpha: float = 0.0, tol: float = DEFAULT_TOL,
          max_iter: int = MAX_ITER) -> PerronResult:
    """Perron pair of M_alpha(g) with max-norm eigen-residual <= ``tol``."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    if not g.is_connected():
        raise Disconnected("Perron vector is unique only for connected graphs")
    m = assemble(g, alpha)
    n = g.n
    if n == 1:
        return PerronResult(0.0, np.ones(1), 0.0, 0)
    sigma = check_alpha(alpha) * g.max_degree() + 1.0
    shifted = m + sigma * np.eye(n)
    x = np.full(n, 1.0 / np.sqrt(n))
    lam, res = _residual(m, x)
    it = 0
    next_polish = 1e-3
    while res > tol:
        if it >= max_iter:
            best = PerronResult(lam, x, res, it)
            raise NoConvergence(f"residual {res:.3g} after {it} iterations", best)
        y = shifted @ x
        x = y / np.linalg.norm(y)
        it += 1
        lam, res = _residual(m, x)
        if res <= next_polish:
            polished = _polish(m, x, lam, tol)
            if polished is not None:
                lam, x, res, used = polished
                it += used
                break
            next_polish /= 100
    x = x / np.linalg.norm(x)
    return PerronResult(lam, x, res, it)


def spectral_radius(g: LabeledGraph, alpha: float = 0.0, tol: float = DEFAULT_TOL) -> float:
    return theta(g, alpha, tol).theta


def largest_eigenvalue(g: LabeledGraph, alpha: float = 0.0, tol: float = DEFAULT_TOL) -> float:
    """Largest eigenvalue of M_alpha(g), also for disconnected g (max over components)."""
    seen: set[int] = set()
    best = 0.0
    for v in range(g.n):
        if v in seen:
            continue
        comp, stack = {v}, [v]
        while stack:
            for w in g.adj[stack.pop()]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        if len(comp) > 1:
            best = max(best, theta(g.subgraph(sorted(comp))[0], alpha, tol).theta)
    return best


def rayleigh(g: LabeledGraph, alpha: float, phi) -> float:
    """phi^T M_alpha phi via the edge-sum form."""
    phi = np.asarray(phi, dtype=float)
    if abs(np.linalg.norm(phi) - 1.0) > 1e-9:
        raise NotUnit(f"|phi| = {np.linalg.norm(phi)}")
    alpha = check_alpha(alpha)
    edge_part = 2.0 * sum(phi[u] * phi[v] for u, v in g.edges)
    return float(edge_part + alpha * sum(d * phi[v] ** 2 for v, d in enumerate(g.degrees)))


def eigen_equation_residual(g: LabeledGraph, alpha: float, res: PerronResult) -> float:
    """max_v |Theta f(v) - sum_{u~v} f(u) - alpha d(v) f(v)|, computed per vertex."""
    f = res.f
    worst = 0.0
    for v in range(g.n):
        rhs = sum(f[u] for u in g.adj[v]) + alpha * g.degree(v) * f[v]
        worst = max(worst, abs(res.theta * f[v] - rhs))
    return worst


class Comparison(enum.Enum):
    LESS = "Less"
    GREATER = "Greater"
    INDISTINGUISHABLE = "Indistinguishable"


def compare_theta(g1: LabeledGraph, g2: LabeledGraph, alpha: float,
                  margin: float = DEFAULT_MARGIN) -> Comparison:
    tol = min(DEFAULT_TOL, margin / 10)
    a = theta(g1, alpha, tol).theta
    b = theta(g2, alpha, tol).theta
    if a + margin < b:
        return Comparison.LESS
    if b + margin < a:
        return Comparison.GREATER
    return Comparison.INDISTINGUISHABLE
