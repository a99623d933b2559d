"""Ferrers diagrams of identifying vectors, their dimension bounds and pending dots.

Coordinates: a diagram with rows ``k`` and width ``w`` (the length of its top
row) is stored as a ``k x w`` *fill* matrix.  Row ``i`` holds its dots in the
rightmost ``row_lengths[i]`` columns.  Fill column ``c`` of an identifying
vector's diagram maps to the ``c``-th non-pivot column to the right of the
first pivot.  Dot labels ``f_ij`` (row ``i`` from the top, column ``j`` from
the right, both 1-based) are used only in reports.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import MatrixGF, rref_array
from .skeleton import IdentifyingVector


@dataclass(frozen=True)
class FerrersDiagram:
    row_lengths: tuple[int, ...]
    n: int | None = None
    k: int | None = None

    def __post_init__(self):
        rows = tuple(int(r) for r in self.row_lengths)
        if any(r < 0 for r in rows):
            raise ValueError("negative row length")
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise ValueError(f"row lengths must be non-increasing: {rows}")
        object.__setattr__(self, "row_lengths", rows)

    @property
    def rows(self) -> int:
        return len(self.row_lengths)

    @property
    def width(self) -> int:
        return self.row_lengths[0] if self.row_lengths else 0

    @property
    def total(self) -> int:
        return sum(self.row_lengths)

    @property
    def nonempty_rows(self) -> int:
        return sum(1 for r in self.row_lengths if r)

    def column_count(self, j: int) -> int:
        """Dots in the j-th column from the right (1-based)."""
        return sum(1 for r in self.row_lengths if r >= j)

    def column_counts_from_left(self) -> list[int]:
        w = self.width
        return [self.column_count(w - c) for c in range(w)]

    def is_rectangle(self) -> bool:
        return len({r for r in self.row_lengths if r}) <= 1

    def support(self) -> np.ndarray:
        mask = np.zeros((self.rows, self.width), dtype=bool)
        for i, length in enumerate(self.row_lengths):
            mask[i, self.width - length :] = True
        return mask

    def dots(self) -> list[tuple[int, int]]:
        """Fill coordinates of all dots, row-major, leftmost first."""
        w = self.width
        return [(i, c) for i, length in enumerate(self.row_lengths) for c in range(w - length, w)]

    def conjugate(self) -> FerrersDiagram:
        """Reflection across the anti-diagonal: the rightmost column becomes the top row."""
        return FerrersDiagram(tuple(self.column_count(j) for j in range(1, self.width + 1)))

    def drop_leading(self, t: int) -> FerrersDiagram:
        """Remove the ``t`` leftmost dots of the top row."""
        if t == 0:
            return self
        if not self.row_lengths or t > self.width:
            raise ValueError("cannot drop more dots than the top row holds")
        return FerrersDiagram((self.width - t,) + self.row_lengths[1:], self.n, self.k)

    def render(self, mark: int = 0) -> str:
        """Right-aligned rows of ``*``; the ``mark`` leftmost top-row dots print as ``o``."""
        lines = []
        for i, length in enumerate(self.row_lengths):
            cells = ["."] * (self.width - length) + ["*"] * length
            if i == 0:
                cells[:mark] = ["o"] * mark
            lines.append(" ".join(cells))
        return "\n".join(lines)


@dataclass(frozen=True)
class ZeroProfile:
    """``z0`` zeros before the first 1 and ``z[i-1]`` zeros after the i-th 1."""

    z0: int
    z: tuple[int, ...]


def zero_profile(v: IdentifyingVector) -> ZeroProfile:
    if v.weight == 0:
        raise ValueError("zero-weight identifying vector")
    piv = v.pivots
    ends = piv[1:] + (v.n,)
    return ZeroProfile(piv[0], tuple(b - a - 1 for a, b in zip(piv, ends)))


def diagram_from_vector(v: IdentifyingVector) -> FerrersDiagram:
    z = zero_profile(v).z
    return FerrersDiagram(tuple(sum(z[i:]) for i in range(len(z))), n=v.n, k=v.weight)


def ferrers_bound(f: FerrersDiagram, delta: int) -> int:
    """Exponent of the largest possible Ferrers diagram code with rank distance ``delta``.

    Minimum over ``i`` in ``[0, delta)`` of the dots outside the top ``i``
    rows and the rightmost ``delta - 1 - i`` columns.
    """
    if delta < 1:
        raise ValueError("delta must be >= 1")
    return min(
        sum(max(0, length - (delta - 1 - i)) for length in f.row_lengths[i:])
        for i in range(delta)
    )


def corollary_dimension(f: FerrersDiagram, delta: int) -> int | None:
    """Closed-form code dimension for diagrams with full outer columns or rows.

    ``None`` when neither case applies.  The row case sums the dots strictly
    below the top ``delta - 1`` rows.
    """
    a, b = f.nonempty_rows, f.width
    if a >= b and delta - 1 <= b and all(f.column_count(j) == a for j in range(1, delta)):
        cols = f.column_counts_from_left()
        return sum(cols[: max(0, b - delta + 1)])
    if a <= b and delta - 1 <= a and all(f.row_lengths[i] == b for i in range(delta - 1)):
        return sum(f.row_lengths[delta - 1 :])
    return None


@dataclass(frozen=True)
class PendingReport:
    p_formula: int
    count: int
    dots: tuple[tuple[int, int], ...]
    columns: tuple[int, ...]


def pending_count_oracle(f: FerrersDiagram, delta: int, limit: int | None = None) -> int:
    """Largest ``t`` such that dropping the ``t`` leftmost top-row dots keeps the bound.

    The shortened diagram must stay a valid Ferrers diagram.  ``limit`` caps
    ``t`` (the run of zeros right after the first pivot).
    """
    if not f.row_lengths:
        return 0
    below = f.row_lengths[1] if f.rows > 1 else 0
    cap = f.width - below if limit is None else min(limit, f.width - below)
    target = ferrers_bound(f, delta)
    best = 0
    for t in range(1, cap + 1):
        if ferrers_bound(f.drop_leading(t), delta) == target:
            best = t
    return best


def pending_formula(v: IdentifyingVector) -> tuple[int, int]:
    """(p, pending count) from the closed form valid for ``delta = 2``."""
    z = zero_profile(v).z
    nonzero = [i + 1 for i, zi in enumerate(z) if zi]
    p = sum(z) - max(nonzero) if nonzero else 0
    if all(zi == 0 for zi in z[1:]):
        return p, z[0]
    return p, max(0, min(p, z[0]))


def pending_analysis(v: IdentifyingVector, delta: int) -> PendingReport:
    if v.weight < 1:
        raise ValueError("identifying vector must have weight >= 1")
    f = diagram_from_vector(v)
    z1 = zero_profile(v).z[0]
    p, count = pending_formula(v)
    if delta != 2:
        count = pending_count_oracle(f, delta, limit=z1)
    first = v.first_one
    return PendingReport(
        p_formula=p,
        count=count,
        dots=tuple((1, f.width - c) for c in range(count)),
        columns=tuple(range(first + 1, first + 1 + count)),
    )


# -- embedding into k x n echelon forms -------------------------------------------------------


def fill_columns(v: IdentifyingVector) -> list[int]:
    """Absolute column for each fill column of ``v``'s diagram."""
    pset = set(v.pivots)
    return [c for c in range(v.first_one + 1, v.n) if c not in pset]


def embed_array(v: IdentifyingVector, fills: np.ndarray) -> np.ndarray:
    """Vectorised :func:`embed` on raw fills of shape ``(..., k, width)``."""
    fills = np.asarray(fills, dtype=np.int64)
    k, n = v.weight, v.n
    out = np.zeros(fills.shape[:-2] + (k, n), dtype=np.int64)
    out[..., np.arange(k), list(v.pivots)] = 1
    cols = fill_columns(v)
    if cols:
        out[..., cols] = fills
    return out


def embed(v: IdentifyingVector, fill: MatrixGF) -> MatrixGF:
    """Place diagram entries into the k x n echelon form with pivots at ``v``."""
    f = diagram_from_vector(v)
    if fill.data.shape != (f.rows, f.width):
        raise ValueError(f"fill shape {fill.data.shape} does not match diagram {(f.rows, f.width)}")
    if np.any(fill.data[~f.support()]):
        raise ValueError("fill has nonzero entries outside the diagram")
    return MatrixGF(fill.field, embed_array(v, fill.data))


def identifying_vector(u: MatrixGF) -> IdentifyingVector:
    reduced, pivots = rref_array(u.field, u.data)
    if len(pivots) != u.rows or not np.array_equal(reduced, u.data):
        raise ValueError("matrix is not a full-rank reduced row echelon form")
    return IdentifyingVector.from_pivots(pivots, u.cols)


def extract(u: MatrixGF) -> MatrixGF:
    """Inverse of :func:`embed`: the diagram entries of an RREF matrix."""
    v = identifying_vector(u)
    return MatrixGF(u.field, u.data[:, fill_columns(v)].reshape(u.rows, -1))


def non_pivot_part(u: MatrixGF) -> MatrixGF:
    """``u`` without its pivot columns (a k x (n-k) matrix)."""
    v = identifying_vector(u)
    cols = [c for c in range(u.cols) if not v.bits[c]]
    return MatrixGF(u.field, u.data[:, cols].reshape(u.rows, len(cols)))
