"""Phase-one simplex for equality-constrained nonnegative feasibility.

Dense tableau with Bland's smallest-index rule. The instances solved here
are tiny (a handful of constraint rows over at most a few hundred
variables), so determinism and guaranteed termination matter more than
speed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import SimplexStalledError
from .linalg import as_matrix


@dataclass(frozen=True, eq=False)
class FeasibilityProblem:
    """Find x >= 0 with ``a_eq @ x == b_eq``."""

    a_eq: np.ndarray
    b_eq: np.ndarray


@dataclass(frozen=True, eq=False)
class FeasibilityResult:
    x: np.ndarray | None
    infeasibility: float
    iterations: int

    @property
    def feasible(self) -> bool:
        return self.x is not None


def phase_one_feasible(
    problem: FeasibilityProblem,
    tol_feas: float = 1e-9,
    max_iterations: int | None = None,
) -> FeasibilityResult:
    """Minimize the total artificial infeasibility of the equality system.

    Feasibility is declared when the optimal phase-one objective is at
    most ``tol_feas * (1 + max|b_eq|)``; otherwise the result carries the
    leftover objective as the infeasibility certificate. Which feasible
    point comes back is whichever basic solution the pivoting lands on.
    """
    a = as_matrix(problem.a_eq, "a_eq")
    b = np.asarray(problem.b_eq, dtype=float).ravel()
    k, q = a.shape
    if b.shape[0] != k:
        raise ValueError(f"b_eq length {b.shape[0]} does not match {k} constraint rows")
    if b.size and not np.isfinite(b).all():
        raise ValueError("b_eq contains NaN or infinite entries")

    # Flip rows with negative right-hand side so the artificial start is feasible.
    sign = np.where(b < 0.0, -1.0, 1.0)
    tableau = np.zeros((k, q + k + 1))
    tableau[:, :q] = a * sign[:, None]
    tableau[:, q : q + k] = np.eye(k)
    tableau[:, -1] = b * sign
    basis = list(range(q, q + k))
    cost = np.zeros(q + k)
    cost[q:] = 1.0

    pivot_tol = 1e-11 * (1.0 + (float(np.abs(a).max()) if a.size else 0.0))
    if max_iterations is None:
        max_iterations = 1000 + 100 * (q + k)

    iterations = 0
    while True:
        y = cost[basis] @ tableau[:, : q + k]
        reduced = cost - y
        entering = -1
        for j in range(q + k):
            if reduced[j] < -pivot_tol:
                entering = j
                break
        if entering < 0:
            break
        column = tableau[:, entering]
        rows = np.flatnonzero(column > pivot_tol)
        if rows.size == 0:
            raise SimplexStalledError("simplex stalled: no admissible pivot row")
        ratios = tableau[rows, -1] / column[rows]
        best = float(ratios.min())
        candidates = rows[ratios <= best + pivot_tol]
        leaving = int(min(candidates, key=lambda i: basis[i]))
        tableau[leaving] /= tableau[leaving, entering]
        for i in range(k):
            if i != leaving and tableau[i, entering] != 0.0:
                tableau[i] -= tableau[i, entering] * tableau[leaving]
        basis[leaving] = entering
        iterations += 1
        if iterations > max_iterations:
            raise SimplexStalledError(f"simplex stalled after {iterations} iterations")

    objective = float(cost[basis] @ tableau[:, -1])
    b_scale = float(np.abs(b).max()) if b.size else 0.0
    if objective > tol_feas * (1.0 + b_scale):
        return FeasibilityResult(None, objective, iterations)
    x = np.zeros(q)
    for i, var in enumerate(basis):
        if var < q:
            x[var] = tableau[i, -1]
    # Post-hoc soundness check, stripped under python -O.
    assert x.min() >= -tol_feas * (1.0 + b_scale)
    assert np.abs(a @ x - b).max() <= max(tol_feas, 1e-7) * (1.0 + b_scale) * (
        1.0 + (float(np.abs(a).max()) if a.size else 0.0)
    )
    return FeasibilityResult(x, objective, iterations)


def is_extreme_point(p, others, tol_feas: float = 1e-9) -> bool:
    """Whether ``p`` is an extreme point of the finite set ``{p} | others``.

    Reduces to phase-one feasibility of writing ``p`` as a convex
    combination of ``others``; infeasible means extreme. ``p`` must not
    itself appear among ``others`` (deduplicate upstream).
    """
    p = np.asarray(p, dtype=float).ravel()
    pts = np.asarray(others, dtype=float)
    if pts.size == 0:
        return True
    pts = np.atleast_2d(pts)
    if pts.shape[1] != p.shape[0]:
        raise ValueError("dimension mismatch between p and others")
    a_eq = np.vstack([pts.T, np.ones((1, pts.shape[0]))])
    b_eq = np.concatenate([p, [1.0]])
    return not phase_one_feasible(FeasibilityProblem(a_eq, b_eq), tol_feas).feasible
