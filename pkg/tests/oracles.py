"""Independent reference implementations the tests check against.

Nothing here shares code with the package: ranks go through exact rational
elimination, hull membership through brute-force convex-combination search,
and factor comparisons through explicit permutation search.
"""

from fractions import Fraction
from itertools import combinations, permutations

import numpy as np


def exact_rank(matrix) -> int:
    """Row-echelon rank over exact rationals.

    Entries are converted through ``Fraction(float)``, which is exact, so
    this is a true oracle for matrices with exactly representable entries
    (integers, dyadic rationals).
    """
    rows = [[Fraction(float(v)) for v in row] for row in np.asarray(matrix).tolist()]
    if not rows:
        return 0
    n_cols = len(rows[0])
    rank = 0
    pivot_row = 0
    for col in range(n_cols):
        if pivot_row == len(rows):
            break
        pivot = next((i for i in range(pivot_row, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[pivot_row], rows[pivot] = rows[pivot], rows[pivot_row]
        base = rows[pivot_row]
        for i in range(pivot_row + 1, len(rows)):
            if rows[i][col]:
                factor = rows[i][col] / base[col]
                rows[i] = [x - factor * y for x, y in zip(rows[i], base)]
        rank += 1
        pivot_row += 1
    return rank


def hull_contains(point, others, tol: float = 1e-9) -> bool:
    """Brute-force convex-combination search over singles, pairs, triples.

    Complete for point sets of affine dimension at most two, e.g. points on
    the probability simplex of R^3 (any contained point has a witness of at
    most three points there).
    """
    p = np.asarray(point, dtype=float)
    pts = np.atleast_2d(np.asarray(others, dtype=float))
    if pts.size == 0:
        return False
    for q in pts:
        if np.abs(q - p).max() <= tol:
            return True
    for i, j in combinations(range(len(pts)), 2):
        q1, q2 = pts[i], pts[j]
        direction = q2 - q1
        denom = float(direction @ direction)
        if denom == 0.0:
            continue
        t = float(np.clip((p - q1) @ direction / denom, 0.0, 1.0))
        if np.abs(q1 + t * direction - p).max() <= tol:
            return True
    target = np.concatenate([p, [1.0]])
    for i, j, k in combinations(range(len(pts)), 3):
        a = np.vstack([np.column_stack([pts[i], pts[j], pts[k]]), np.ones(3)])
        weights, *_ = np.linalg.lstsq(a, target, rcond=None)
        if weights.min() >= -tol and np.abs(a @ weights - target).max() <= tol:
            return True
    return False


def brute_force_vertices(points, tol: float = 1e-9) -> list[int]:
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    return [
        i
        for i in range(len(pts))
        if not hull_contains(pts[i], np.delete(pts, i, axis=0), tol)
    ]


def match_rows_up_to_scale(got, expected, tol: float = 1e-9):
    """Permutation sigma with got[k] == c_k * expected[sigma(k)], c_k > 0.

    Rows are compared after normalizing to unit 1-norm. Returns the
    permutation as a list, or None when no bijective match exists.
    """
    g = np.atleast_2d(np.asarray(got, dtype=float))
    e = np.atleast_2d(np.asarray(expected, dtype=float))
    if g.shape != e.shape:
        return None

    def normalized(rows):
        norms = np.abs(rows).sum(axis=1, keepdims=True)
        if (norms == 0).any():
            raise ValueError("cannot normalize a zero row")
        return rows / norms

    gn, en = normalized(g), normalized(e)
    d = len(gn)
    compatible = [
        [bool(np.abs(gn[i] - en[j]).max() <= tol) for j in range(d)] for i in range(d)
    ]
    for perm in permutations(range(d)):
        if all(compatible[i][perm[i]] for i in range(d)):
            return list(perm)
    return None


def factors_match(f_got, v_got, f_exp, v_exp, tol: float = 1e-9) -> bool:
    """Whether the factor pairs agree up to a simultaneous row permutation
    of V / column permutation of F and positive rescaling."""
    f_got = np.asarray(f_got, dtype=float)
    v_got = np.asarray(v_got, dtype=float)
    f_exp = np.asarray(f_exp, dtype=float)
    v_exp = np.asarray(v_exp, dtype=float)
    perm = match_rows_up_to_scale(v_got, v_exp, tol)
    if perm is None:
        return False
    bound = tol * (1.0 + np.abs(f_exp).max())
    for k, sigma in enumerate(perm):
        scale = np.abs(v_got[k]).sum() / np.abs(v_exp[sigma]).sum()
        if np.abs(f_got[:, k] * scale - f_exp[:, sigma]).max() > bound:
            return False
    return True
