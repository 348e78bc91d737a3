"""Vertices of the polytope spanned by the distinct basic-function values."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .basic import BasicFunctionTable, DistinctRange
from .errors import SpanDeficiencyError
from .linalg import greedy_independent_rows
from .simplex import is_extreme_point


@dataclass(frozen=True, eq=False)
class VertexSet:
    """Ordered polytope vertices with the columns they came from."""

    vertices: np.ndarray  # d x r, one vertex per row
    source_columns: tuple[int, ...]
    r: int

    @property
    def d(self) -> int:
        return self.vertices.shape[0]


def hull_vertices(rng: DistinctRange, tol_feas: float = 1e-9) -> VertexSet:
    """Extreme points of the unique values, kept in discovery order."""
    points = rng.unique_points
    keep = [
        i
        for i in range(points.shape[0])
        if is_extreme_point(points[i], np.delete(points, i, axis=0), tol_feas)
    ]
    return VertexSet(
        vertices=points[keep].copy(),
        source_columns=tuple(rng.representative_column[i] for i in keep),
        r=points.shape[1],
    )


def segment_vertices(table: BasicFunctionTable, tol_dedup: float = 1e-9) -> VertexSet:
    """Two-row fast path: the hull is the segment between the values with
    minimum and maximum first coordinate (minimum first)."""
    if table.r != 2:
        raise ValueError(f"segment fast path needs exactly 2 basic rows, got {table.r}")
    first = table.points[:, 0]
    i_min = int(np.argmin(first))
    i_max = int(np.argmax(first))
    if first[i_max] - first[i_min] <= tol_dedup:
        raise SpanDeficiencyError(
            "all basic-function values coincide; inconsistent with two independent rows"
        )
    return VertexSet(
        vertices=np.vstack([table.points[i_min], table.points[i_max]]),
        source_columns=(i_min, i_max),
        r=2,
    )


def reorder_vertices(vs: VertexSet, tol_rank: float = 1e-9) -> VertexSet:
    """Move span-growing vertices to the front, first wins; the rest keep
    their relative order. Afterwards the first ``r`` vertices are linearly
    independent."""
    prefix = greedy_independent_rows(vs.vertices, tol_rank)
    if len(prefix) != vs.r:
        raise SpanDeficiencyError(
            f"found {len(prefix)} independent vertices, need {vs.r}; check the rank tolerance"
        )
    chosen = set(prefix)
    order = prefix + [i for i in range(vs.d) if i not in chosen]
    return VertexSet(
        vertices=vs.vertices[order].copy(),
        source_columns=tuple(vs.source_columns[i] for i in order),
        r=vs.r,
    )
