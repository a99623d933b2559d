"""Rank-metric codes: Gabidulin MRD codes and Ferrers diagram codes.

Codes are GF(q)-linear subspaces of diagram-supported matrices, optionally
shifted by a constant offset on pending positions.  Codewords are stored as
raw integer fills (``rows x width`` arrays, see :mod:`subspace_codec.ferrers`).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field as dc_field

import numpy as np

from .algebra import GF, MatrixGF, batched_rank, rank, rref_array
from .ferrers import FerrersDiagram, ferrers_bound

log = logging.getLogger(__name__)

ENUMERATION_GUARD = 10**7


@dataclass(frozen=True, eq=False)
class RankMetricCode:
    """A diagram-supported rank-metric code ``offset + span(basis)``.

    Attributes:
        field: coefficient field GF(q).
        diagram: supporting Ferrers diagram (rectangles included).
        delta: designed minimum rank distance.
        basis: array ``(dim, rows, width)`` of linearly independent fills.
        fixed_pending: fill coordinates of fixed top-row dots mapped to their
            constant values; the offset carries them, the basis avoids them.
        target_dimension: the dimension bound for ``delta`` on the diagram
            with the fixed dots removed.
    """

    field: GF
    diagram: FerrersDiagram
    delta: int
    basis: np.ndarray
    fixed_pending: dict = dc_field(default_factory=dict)
    target_dimension: int = 0

    @property
    def dimension(self) -> int:
        return int(self.basis.shape[0])

    @property
    def size(self) -> int:
        return self.field.q**self.dimension

    @property
    def shortfall(self) -> int:
        return self.target_dimension - self.dimension

    @property
    def shape(self) -> tuple[int, int]:
        return self.diagram.rows, self.diagram.width

    @property
    def offset(self) -> np.ndarray:
        out = np.zeros(self.shape, dtype=np.int64)
        for (i, c), val in self.fixed_pending.items():
            out[i, c] = val
        return out

    def basis_matrices(self) -> list[MatrixGF]:
        return [MatrixGF(self.field, b) for b in self.basis]

    def linear_codewords(self, start: int = 0, stop: int | None = None) -> np.ndarray:
        """Codewords of the linear part, indexed by coefficient vectors in lexicographic order."""
        return _combinations(self.field, self.basis, self.shape, start, stop)

    def codewords(self) -> np.ndarray:
        words = self.linear_codewords()
        if self.fixed_pending:
            words = self.field.add_arr(words, self.offset[None])
        return words


def _combinations(f: GF, basis: np.ndarray, shape, start: int = 0, stop: int | None = None) -> np.ndarray:
    dim = basis.shape[0]
    total = f.q**dim
    stop = total if stop is None else min(stop, total)
    idx = np.arange(start, stop, dtype=np.int64)
    if dim == 0:
        return np.zeros((len(idx),) + tuple(shape), dtype=np.int64)
    weights = f.q ** np.arange(dim - 1, -1, -1, dtype=np.int64)
    coeffs = (idx[:, None] // weights[None, :]) % f.q
    flat = basis.reshape(dim, -1)
    if f.base is None:
        out = (coeffs @ flat) % f.p
    else:
        out = np.zeros((len(idx), flat.shape[1]), dtype=np.int64)
        for l in range(dim):
            out = f.add_arr(out, f.mul_arr(coeffs[:, l : l + 1], flat[l][None, :]))
    return out.reshape((len(idx),) + tuple(shape))


def rank_distance(x: MatrixGF, y: MatrixGF) -> int:
    """``rank(x - y)``."""
    if x.data.shape != y.data.shape:
        raise ValueError(f"shape mismatch {x.data.shape} vs {y.data.shape}")
    return rank(x - y)


def _coords(ext: GF, f: GF, a: int) -> tuple[int, ...]:
    return (a,) if ext is f else ext.digits(a)


def _alpha_power(ext: GF, f: GF, s: int) -> int:
    # element whose coordinate vector is the s-th unit vector
    return 1 if ext is f else f.q**s


def gabidulin_mrd(k_rows: int, m_cols: int, delta: int, f: GF) -> RankMetricCode:
    """Gabidulin code of ``k_rows x m_cols`` matrices with minimum rank distance ``delta``.

    Linearised polynomials of q-degree below ``k_rows - delta + 1`` over
    GF(q^m) are evaluated at ``1, a, ..., a^(k_rows-1)`` (``a`` the polynomial
    basis generator); row ``i`` of a codeword is the coordinate vector of the
    ``i``-th evaluation.
    """
    if not (1 <= k_rows <= m_cols):
        raise ValueError(f"need 1 <= k_rows <= m_cols, got {k_rows}x{m_cols}")
    if not (1 <= delta <= k_rows):
        raise ValueError(f"need 1 <= delta <= k_rows, got delta={delta}")
    ext = f.extension(m_cols)
    K = k_rows - delta + 1
    points = [_alpha_power(ext, f, i) for i in range(k_rows)]
    basis = []
    for j in range(K):
        frob = [ext.pow(g, f.q**j) for g in points]
        for s in range(m_cols):
            beta = _alpha_power(ext, f, s)
            basis.append([_coords(ext, f, ext.mul(beta, g)) for g in frob])
    basis = np.array(basis, dtype=np.int64).reshape(K * m_cols, k_rows, m_cols)
    if rank(MatrixGF(f, basis.reshape(len(basis), -1))) != len(basis):
        raise RuntimeError("Gabidulin basis is not linearly independent")  # pragma: no cover
    diagram = FerrersDiagram((m_cols,) * k_rows)
    return RankMetricCode(f, diagram, delta, basis, {}, m_cols * K)


def _unit_basis(diagram: FerrersDiagram) -> np.ndarray:
    dots = diagram.dots()
    out = np.zeros((len(dots), diagram.rows, diagram.width), dtype=np.int64)
    for l, (i, c) in enumerate(dots):
        out[l, i, c] = 1
    return out


def _rectangle_basis(diagram: FerrersDiagram, delta: int, f: GF) -> np.ndarray:
    a, b = diagram.nonempty_rows, diagram.width
    out_shape = (diagram.rows, diagram.width)
    if delta > min(a, b):
        return np.zeros((0,) + out_shape, dtype=np.int64)
    if a <= b:
        block = gabidulin_mrd(a, b, delta, f).basis
    else:
        block = gabidulin_mrd(b, a, delta, f).basis.transpose(0, 2, 1)
    out = np.zeros((len(block),) + out_shape, dtype=np.int64)
    out[:, :a, :] = block
    return out


def _distance_two_rows(diagram: FerrersDiagram, f: GF) -> np.ndarray:
    """Distance-2 code for a diagram at least as wide as its number of nonempty rows.

    Rows below the top are free; the top row is ``sum_i a^i * row_i`` computed
    in GF(q^width).  A rank-1 codeword would need ``sum_i u_i a^i`` to lie in
    GF(q), impossible while ``1, a, ..., a^(rows-1)`` are independent.
    """
    a, b = diagram.nonempty_rows, diagram.width
    assert b >= a
    ext = f.extension(b)
    dots = [(i, c) for i, c in diagram.dots() if i > 0]
    out = np.zeros((len(dots), diagram.rows, b), dtype=np.int64)
    for l, (i, c) in enumerate(dots):
        out[l, i, c] = 1
        top = ext.mul(_alpha_power(ext, f, i), _alpha_power(ext, f, c))
        out[l, 0, :] = _coords(ext, f, top)
    return out


def _distance_two_basis(diagram: FerrersDiagram, f: GF) -> np.ndarray:
    a, b = diagram.nonempty_rows, diagram.width
    if b >= a:
        return _distance_two_rows(diagram, f)
    conj = diagram.conjugate()
    small = _distance_two_rows(conj, f)
    out = np.zeros((len(small), diagram.rows, b), dtype=np.int64)
    # anti-transpose: original (i, c) <-> conjugate (b-1-c, a-1-i)
    out[:, :a, :] = small[:, ::-1, ::-1].transpose(0, 2, 1)
    return out


def _null_space(f: GF, a: np.ndarray) -> np.ndarray:
    """Basis (as rows) of ``{x : a @ x = 0}``."""
    ncols = a.shape[1]
    reduced, pivots = rref_array(f, a) if a.shape[0] else (a, [])
    free = [c for c in range(ncols) if c not in pivots]
    out = np.zeros((len(free), ncols), dtype=np.int64)
    for r, c in enumerate(free):
        out[r, c] = 1
        for i, p in enumerate(pivots):
            out[r, p] = f.neg(int(reduced[i, c]))
    return out


def _mrd_subcode_basis(diagram: FerrersDiagram, delta: int, f: GF) -> np.ndarray:
    """Subcode of an MRD code on the bounding rectangle that vanishes off the diagram."""
    a, b = diagram.nonempty_rows, diagram.width
    full = _rectangle_basis(FerrersDiagram((b,) * a + (0,) * (diagram.rows - a)), delta, f)
    if len(full) == 0:
        return full
    outside = ~diagram.support()
    constraints = full[:, outside].T  # (positions, dimG)
    combos = _null_space(f, constraints)
    out = np.zeros((len(combos),) + full.shape[1:], dtype=np.int64)
    flat = full.reshape(len(full), -1)
    for r, coeffs in enumerate(combos):
        acc = np.zeros(flat.shape[1], dtype=np.int64)
        for l, cl in enumerate(coeffs):
            if cl:
                acc = f.add_arr(acc, f.mul_arr(int(cl), flat[l]))
        out[r] = acc.reshape(full.shape[1:])
    return out


def linear_ferrers_basis(diagram: FerrersDiagram, delta: int, f: GF) -> np.ndarray:
    if delta < 1:
        raise ValueError("delta must be >= 1")
    if ferrers_bound(diagram, delta) == 0:
        return np.zeros((0, diagram.rows, diagram.width), dtype=np.int64)
    if delta == 1:
        return _unit_basis(diagram)
    if diagram.is_rectangle():
        return _rectangle_basis(diagram, delta, f)
    if delta == 2:
        return _distance_two_basis(diagram, f)
    return _mrd_subcode_basis(diagram, delta, f)


def build_ferrers_code(
    diagram: FerrersDiagram,
    delta: int,
    f: GF,
    fixed_pending: dict | None = None,
) -> RankMetricCode:
    """Linear Ferrers diagram code meeting the dimension bound for ``delta <= 2``.

    ``fixed_pending`` maps the ``t`` leftmost top-row positions ``(0, 0) ..
    (0, t-1)`` to constants.  Those dots are removed from the support and the
    constants become an offset shared by every codeword.  For ``delta >= 3``
    the result may fall short of the bound; see ``RankMetricCode.shortfall``.
    """
    fixed_pending = dict(fixed_pending or {})
    t = len(fixed_pending)
    if set(fixed_pending) != {(0, c) for c in range(t)}:
        raise ValueError("pending positions must be the leftmost dots of the top row")
    if any(not (0 <= int(v) < f.q) for v in fixed_pending.values()):
        raise ValueError("pending value outside the field")
    reduced = diagram.drop_leading(t)
    small = linear_ferrers_basis(reduced, delta, f)
    basis = np.zeros((len(small), diagram.rows, diagram.width), dtype=np.int64)
    basis[:, :, t:] = small
    target = ferrers_bound(reduced, delta)
    if t and target < ferrers_bound(diagram, delta):
        log.debug("fixing %d top-row dots of %s lowers the bound for delta=%d", t, diagram.row_lengths, delta)
    code = RankMetricCode(f, diagram, delta, basis, {k: int(v) for k, v in fixed_pending.items()}, target)
    if code.shortfall > 0:
        log.warning("Ferrers code for %s, delta=%d: dimension %d below bound %d",
                    diagram.row_lengths, delta, code.dimension, target)
    return code


def min_rank_distance(code: RankMetricCode, chunk: int = 1 << 15) -> int | None:
    """Minimum rank over nonzero codewords of the linear part; ``None`` for a one-word code."""
    if code.size > ENUMERATION_GUARD:
        raise ValueError(f"code has {code.size} codewords; guard is {ENUMERATION_GUARD}")
    if code.dimension == 0:
        return None
    best = None
    for start in range(1, code.size, chunk):
        words = code.linear_codewords(start, start + chunk)
        r = int(batched_rank(code.field, words).min())
        best = r if best is None else min(best, r)
    return best
