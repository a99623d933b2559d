"""Subspaces of GF(q)^n kept in canonical reduced row echelon form."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .algebra import GF, MatrixGF, rank_of_stack, rref_array

ENUMERATION_GUARD = 10**6


@dataclass(frozen=True)
class Subspace:
    """A k-dimensional subspace of GF(q)^n.

    ``basis`` is always the unique RREF with no zero rows, so equality of
    subspaces is entrywise equality of bases.
    """

    basis: MatrixGF

    @classmethod
    def from_matrix(cls, m: MatrixGF) -> Subspace:
        reduced, pivots = rref_array(m.field, m.data)
        return cls(MatrixGF(m.field, reduced[: len(pivots)].reshape(len(pivots), m.cols)))

    @classmethod
    def from_rows(cls, f: GF, rows, ambient: int | None = None) -> Subspace:
        return cls.from_matrix(MatrixGF.from_rows(f, rows, cols=ambient))

    @property
    def field(self) -> GF:
        return self.basis.field

    @property
    def ambient(self) -> int:
        return self.basis.cols

    @property
    def dim(self) -> int:
        return self.basis.rows

    @property
    def pivots(self) -> list[int]:
        return [int(np.nonzero(row)[0][0]) for row in self.basis.data]

    def __str__(self) -> str:
        return str(self.basis)


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of GF(q)^n, computed exactly."""
    if not (0 <= k <= n) or q < 2:
        raise ValueError(f"invalid parameters n={n}, k={k}, q={q}")
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (k - i) - 1
    return num // den


def _check_pair(u: Subspace, v: Subspace) -> None:
    if u.field is not v.field:
        raise ValueError("subspaces over different fields")
    if u.ambient != v.ambient:
        raise ValueError(f"ambient mismatch: {u.ambient} vs {v.ambient}")


def intersection_dim(u: Subspace, v: Subspace) -> int:
    _check_pair(u, v)
    return u.dim + v.dim - rank_of_stack(u.basis, v.basis)


def subspace_distance(u: Subspace, v: Subspace) -> int:
    """Subspace distance ``dim U + dim V - 2 dim(U ∩ V)``.

    For equal dimensions this is ``2(k - dim(U ∩ V)) = 2 rank[U; V] - 2k``.
    """
    _check_pair(u, v)
    stacked = rank_of_stack(u.basis, v.basis)
    return 2 * stacked - u.dim - v.dim


def orthogonal_complement(u: Subspace) -> Subspace:
    """Null space of ``u.basis`` under the standard bilinear form."""
    f, n = u.field, u.ambient
    pivots = u.pivots
    free = [c for c in range(n) if c not in set(pivots)]
    rows = np.zeros((len(free), n), dtype=np.int64)
    for r, c in enumerate(free):
        rows[r, c] = 1
        for i, p in enumerate(pivots):
            rows[r, p] = f.neg(int(u.basis.data[i, c]))
    return Subspace.from_matrix(MatrixGF(f, rows.reshape(len(free), n)))


def schubert_cell_size(pivots, n: int, q: int) -> int:
    free = sum(sum(1 for c in range(p + 1, n) if c not in pivots) for p in pivots)
    return q**free


def enumerate_grassmannian(n: int, k: int, f: GF) -> list[Subspace]:
    """Every k-dimensional subspace of GF(q)^n, each exactly once.

    Walks the pivot sets in lexicographic order and, within each Schubert
    cell, all fillings of the free positions.
    """
    total = gaussian_binomial(n, k, f.q)
    if total > ENUMERATION_GUARD:
        raise ValueError(f"G({k},{n}) over GF({f.q}) has {total} elements; guard is {ENUMERATION_GUARD}")
    out = []
    for pivots in itertools.combinations(range(n), k):
        pset = set(pivots)
        slots = [(i, c) for i, p in enumerate(pivots) for c in range(p + 1, n) if c not in pset]
        for values in itertools.product(range(f.q), repeat=len(slots)):
            m = np.zeros((k, n), dtype=np.int64)
            for i, p in enumerate(pivots):
                m[i, p] = 1
            for (i, c), val in zip(slots, values):
                m[i, c] = val
            out.append(Subspace(MatrixGF(f, m)))
    return out
