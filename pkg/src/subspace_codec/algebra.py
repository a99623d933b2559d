"""Finite-field arithmetic and dense matrices over GF(q).

Field elements are plain integers in ``[0, q)``.  For an extension field the
integer is the coefficient vector of the element in the polynomial basis
``1, x, x^2, ...`` written in base ``|base|`` (constant term least
significant).  Multiplication always goes through log/antilog tables built
once per field; polynomial arithmetic is only used while building them.

GF(2) gets a bit-packed fast path: a row of length ``n`` is an integer whose
most significant bit is column 0.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

MAX_ORDER = 1 << 16


def _factor_prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise ValueError(f"field order must be >= 2, got {q}")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    r, rest = 0, q
    while rest % p == 0:
        rest //= p
        r += 1
    if rest != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, r


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class GF:
    """The finite field with ``q = p^r`` elements.

    Use :func:`field` (or :meth:`extension`) rather than the constructor; both
    are cached so that fields compare by identity.

    Attributes:
        base: the field this one is a simple extension of, ``None`` for GF(p).
        degree: extension degree over ``base`` (1 for prime fields).
        p, r, q: characteristic, absolute degree, order.
        modulus: monic irreducible over ``base``, coefficients from the
            constant term up, leading 1 included.  Empty for prime fields.
    """

    def __init__(self, p: int, base: GF | None = None, degree: int = 1):
        if base is None:
            if _factor_prime_power(p) != (p, 1):
                raise ValueError(f"{p} is not prime")
            self.p, self.r, self.degree = p, 1, 1
            self.q = p
            self.modulus: tuple[int, ...] = ()
        else:
            self.p = base.p
            self.r = base.r * degree
            self.degree = degree
            self.q = base.q**degree
            if self.q > MAX_ORDER:
                raise ValueError(f"field order {self.q} exceeds {MAX_ORDER}")
        self.base = base
        if base is not None:
            self.modulus = smallest_irreducible(base, degree)
            self._powers = np.array([base.q**i for i in range(degree)], dtype=np.int64)
            self._digits = np.array(
                [[(a // base.q**i) % base.q for i in range(degree)] for a in range(self.q)],
                dtype=np.int64,
            )
        self._build_tables()

    # -- construction -----------------------------------------------------------------

    def _poly_mulmod(self, a: Sequence[int], b: Sequence[int]) -> list[int]:
        base = self.base
        m = self.degree
        prod = [0] * (2 * m - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] = base.add(prod[i + j], base.mul(ai, bj))
        for top in range(2 * m - 2, m - 1, -1):
            c = prod[top]
            if c:
                for i in range(m):
                    prod[top - m + i] = base.sub(prod[top - m + i], base.mul(c, self.modulus[i]))
                prod[top] = 0
        return prod[:m]

    def _pack(self, digits: Sequence[int]) -> int:
        return int(sum(int(d) * int(w) for d, w in zip(digits, self._powers)))

    def _build_tables(self) -> None:
        q = self.q
        exp = np.zeros(2 * (q - 1), dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        if self.base is None:
            g = next(g for g in range(1, q) if self._is_generator_prime(g))
            x = 1
            for i in range(q - 1):
                exp[i] = x
                x = x * g % q
        else:
            gen_digits = self._find_generator()
            cur = [1] + [0] * (self.degree - 1)
            for i in range(q - 1):
                exp[i] = self._pack(cur)
                cur = self._poly_mulmod(cur, gen_digits)
        exp[q - 1 :] = exp[: q - 1]
        log[exp[: q - 1]] = np.arange(q - 1)
        if len(set(exp[: q - 1].tolist())) != q - 1:
            raise RuntimeError("generator search failed")  # pragma: no cover
        self.exp = exp
        self.log = log
        self.exp.setflags(write=False)
        self.log.setflags(write=False)
        self._mul_table = None
        if q <= 256:
            a = np.arange(q)
            self._mul_table = self.mul_arr(a[:, None], a[None, :])
            self._add_table = self.add_arr(a[:, None], a[None, :])

    def _is_generator_prime(self, g: int) -> bool:
        return all(pow(g, (self.q - 1) // ell, self.q) != 1 for ell in _prime_factors(self.q - 1))

    def _find_generator(self) -> list[int]:
        m = self.degree
        for g in range(1, self.q):
            digits = [int(d) for d in self._digits[g]]
            if all(self._poly_pow(digits, (self.q - 1) // ell) != [1] + [0] * (m - 1)
                   for ell in _prime_factors(self.q - 1)):
                return digits
        raise RuntimeError("no generator found")  # pragma: no cover

    def _poly_pow(self, a: list[int], e: int) -> list[int]:
        result = [1] + [0] * (self.degree - 1)
        while e:
            if e & 1:
                result = self._poly_mulmod(result, a)
            a = self._poly_mulmod(a, a)
            e >>= 1
        return result

    # -- scalar arithmetic ------------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.base is None:
            return (a + b) % self.p
        return self._pack(self.base.add_arr(self._digits[a], self._digits[b]))

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.base is None:
            return (-a) % self.p
        return self._pack(self.base.neg_arr(self._digits[a]))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.exp[self.log[a] + self.log[b]])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in " + repr(self))
        return int(self.exp[(self.q - 1 - self.log[a]) % (self.q - 1)])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            return 0 if e > 0 else 1
        return int(self.exp[(self.log[a] * e) % (self.q - 1)])

    def digits(self, a: int) -> tuple[int, ...]:
        """Coordinates of ``a`` over ``base`` (constant term first)."""
        if self.base is None:
            return (a,)
        return tuple(int(d) for d in self._digits[a])

    def from_digits(self, digits: Sequence[int]) -> int:
        if self.base is None:
            (a,) = digits
            return int(a)
        return self._pack(digits)

    # -- vectorised arithmetic on integer arrays ---------------------------------------

    def add_arr(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        if self.base is None:
            return (a + b) % self.p
        return self.base.add_arr(self._digits[a], self._digits[b]) @ self._powers

    def neg_arr(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a
        if self.base is None:
            return (-a) % self.p
        return self.base.neg_arr(self._digits[a]) @ self._powers

    def sub_arr(self, a, b) -> np.ndarray:
        if self.p == 2:
            return np.asarray(a, dtype=np.int64) ^ np.asarray(b, dtype=np.int64)
        if self.base is None:
            return (np.asarray(a, dtype=np.int64) - b) % self.p
        return self.add_arr(a, self.neg_arr(b))

    def mul_arr(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.base is None:
            return (a * b) % self.p
        out = self.exp[self.log[a] + self.log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def inv_arr(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError("inverse of 0")
        return self.exp[(self.q - 1 - self.log[a]) % (self.q - 1)]

    # -- misc -------------------------------------------------------------------------

    def extension(self, m: int) -> GF:
        """Degree-``m`` extension of this field (cached)."""
        return _extension(self, m)

    def elements(self) -> range:
        return range(self.q)

    def __repr__(self) -> str:
        if self.base is None:
            return f"GF({self.q})"
        return f"GF({self.base.q}^{self.degree})"


@lru_cache(maxsize=None)
def field(q: int) -> GF:
    """GF(q) with the conventional modulus (cached, so fields compare by identity)."""
    p, r = _factor_prime_power(q)
    if q > MAX_ORDER:
        raise ValueError(f"field order {q} exceeds {MAX_ORDER}")
    prime = _prime_field(p)
    return prime if r == 1 else _extension(prime, r)


@lru_cache(maxsize=None)
def _prime_field(p: int) -> GF:
    return GF(p)


@lru_cache(maxsize=None)
def _extension(base: GF, m: int) -> GF:
    if m < 1:
        raise ValueError("extension degree must be >= 1")
    if m == 1:
        return base
    return GF(base.p, base=base, degree=m)


def _poly_rem(base: GF, num: list[int], den: Sequence[int]) -> list[int]:
    """Remainder of ``num`` modulo monic ``den`` over ``base``."""
    num = list(num)
    d = len(den) - 1
    for top in range(len(num) - 1, d - 1, -1):
        c = num[top]
        if c:
            for i in range(d + 1):
                num[top - d + i] = base.sub(num[top - d + i], base.mul(c, den[i]))
    return num[:d]


def is_irreducible(base: GF, poly: Sequence[int]) -> bool:
    """Trial division of monic ``poly`` by every monic polynomial of degree <= deg/2."""
    deg = len(poly) - 1
    if deg < 1 or poly[-1] != 1:
        raise ValueError("expected a monic polynomial of positive degree")
    if deg == 1:
        return True
    if poly[0] == 0:
        return False
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(base.q), repeat=d):
            if not any(_poly_rem(base, list(poly), list(low) + [1])):
                return False
    return True


def smallest_irreducible(base: GF, degree: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of ``degree`` over ``base``.

    Coefficient tuples are compared from the constant term upward.
    """
    for low in itertools.product(range(base.q), repeat=degree):
        poly = tuple(low) + (1,)
        if is_irreducible(base, poly):
            return poly
    raise RuntimeError("no irreducible polynomial found")  # pragma: no cover


# ---------------------------------------------------------------------------------------
# matrices


@dataclass(frozen=True, eq=False)
class MatrixGF:
    """Immutable dense matrix over a finite field."""

    field: GF
    data: np.ndarray

    def __post_init__(self):
        data = np.array(self.data, dtype=np.int64, copy=True)
        if data.ndim != 2:
            data = data.reshape(len(data), -1) if data.size else data.reshape(0, 0)
        if data.size and (data.min() < 0 or data.max() >= self.field.q):
            raise ValueError(f"entries out of range for {self.field}")
        data.setflags(write=False)
        object.__setattr__(self, "data", data)

    @classmethod
    def from_rows(cls, f: GF, rows: Iterable[Iterable[int]], cols: int | None = None) -> MatrixGF:
        rows = [list(r) for r in rows]
        if not rows:
            return cls(f, np.zeros((0, cols or 0), dtype=np.int64))
        return cls(f, np.array(rows, dtype=np.int64))

    @classmethod
    def zeros(cls, f: GF, rows: int, cols: int) -> MatrixGF:
        return cls(f, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, f: GF, n: int) -> MatrixGF:
        return cls(f, np.eye(n, dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def entries(self) -> tuple[int, ...]:
        return tuple(int(x) for x in self.data.ravel())

    def tolist(self) -> list[list[int]]:
        return self.data.tolist()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MatrixGF):
            return NotImplemented
        return (self.field is other.field and self.data.shape == other.data.shape
                and bool(np.array_equal(self.data, other.data)))

    def __hash__(self) -> int:
        return hash((self.field.q, self.data.shape, self.data.tobytes()))

    def __add__(self, other: MatrixGF) -> MatrixGF:
        _check_same(self, other)
        return MatrixGF(self.field, self.field.add_arr(self.data, other.data))

    def __sub__(self, other: MatrixGF) -> MatrixGF:
        _check_same(self, other)
        return MatrixGF(self.field, self.field.sub_arr(self.data, other.data))

    def __matmul__(self, other: MatrixGF) -> MatrixGF:
        if self.field is not other.field or self.cols != other.rows:
            raise ValueError("shape or field mismatch in product")
        return MatrixGF(self.field, matmul(self.field, self.data, other.data))

    def __str__(self) -> str:
        return format_matrix(self)

    def __repr__(self) -> str:
        return f"MatrixGF({self.field!r}, {self.tolist()})"


def _check_same(a: MatrixGF, b: MatrixGF) -> None:
    if a.field is not b.field:
        raise ValueError("matrices over different fields")
    if a.data.shape != b.data.shape:
        raise ValueError(f"shape mismatch {a.data.shape} vs {b.data.shape}")


def matmul(f: GF, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if f.base is None:
        return (a @ b) % f.p
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for i in range(a.shape[1]):
        out = f.add_arr(out, f.mul_arr(a[:, i : i + 1], b[i : i + 1, :]))
    return out


def format_matrix(m: MatrixGF) -> str:
    """Rows as space-separated integers, one row per line."""
    return "\n".join(" ".join(str(int(x)) for x in row) for row in m.data)


def parse_matrix(text: str, f: GF) -> MatrixGF:
    rows = [[int(tok) for tok in line.split()] for line in text.strip().splitlines() if line.strip()]
    if len({len(r) for r in rows}) > 1:
        raise ValueError("ragged matrix text")
    return MatrixGF.from_rows(f, rows)


def vstack(u: MatrixGF, v: MatrixGF) -> MatrixGF:
    if u.field is not v.field:
        raise ValueError("matrices over different fields")
    if u.cols != v.cols:
        raise ValueError(f"column mismatch: {u.cols} vs {v.cols}")
    return MatrixGF(u.field, np.vstack([u.data, v.data]))


# -- GF(2) bit-packed helpers ---------------------------------------------------------------


def gf2_pack(data: np.ndarray) -> np.ndarray:
    """Pack the last axis of a 0/1 array into uint64 words, column 0 most significant."""
    data = np.asarray(data)
    n = data.shape[-1]
    if n > 63:
        raise ValueError("bit packing supports at most 63 columns")
    weights = (np.uint64(1) << np.arange(n - 1, -1, -1, dtype=np.uint64))
    return (data.astype(np.uint64) * weights).sum(axis=-1, dtype=np.uint64)


def gf2_unpack(words: np.ndarray, n: int) -> np.ndarray:
    shifts = np.arange(n - 1, -1, -1, dtype=np.uint64)
    return ((np.asarray(words, dtype=np.uint64)[..., None] >> shifts) & np.uint64(1)).astype(np.int64)


def gf2_rank_packed(rows: np.ndarray) -> np.ndarray:
    """Ranks of a batch of packed GF(2) row sets, shape ``(..., R)``.

    Each round takes the row with the highest leading bit as pivot and clears
    that bit from every row via ``min(x, x ^ pivot)``.
    """
    rows = np.array(rows, dtype=np.uint64, copy=True)
    rank = np.zeros(rows.shape[:-1], dtype=np.int64)
    for _ in range(rows.shape[-1]):
        piv = rows.max(axis=-1)
        nz = piv != 0
        if not nz.any():
            break
        rank += nz
        np.minimum(rows, rows ^ piv[..., None], out=rows)
    return rank


def _gf2_rref_packed(words: list[int], ncols: int) -> tuple[list[int], list[int]]:
    rows = list(words)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        bit = 1 << (ncols - 1 - c)
        found = next((i for i in range(r, len(rows)) if rows[i] & bit), None)
        if found is None:
            continue
        rows[r], rows[found] = rows[found], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i] & bit:
                rows[i] ^= rows[r]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


# -- elimination ---------------------------------------------------------------------------


def rref_array(f: GF, data: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of a raw integer array; returns (matrix, pivot columns)."""
    data = np.asarray(data, dtype=np.int64)
    nrows, ncols = data.shape
    if f.q == 2 and 0 < ncols <= 63:
        words = [int(w) for w in gf2_pack(data)] if nrows else []
        rows, pivots = _gf2_rref_packed(words, ncols)
        out = gf2_unpack(np.array(rows, dtype=np.uint64), ncols) if nrows else data.copy()
        return out.reshape(nrows, ncols), pivots
    a = data.copy()
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + nz[0]
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = f.mul_arr(a[r], f.inv(int(a[r, c])))
        factors = a[:, c].copy()
        factors[r] = 0
        rows_to_fix = np.nonzero(factors)[0]
        if rows_to_fix.size:
            a[rows_to_fix] = f.sub_arr(a[rows_to_fix], f.mul_arr(factors[rows_to_fix, None], a[r][None, :]))
        pivots.append(c)
        r += 1
    return a, pivots


def rref(m: MatrixGF) -> tuple[MatrixGF, int]:
    """Unique reduced row echelon form and rank; zero rows end up at the bottom."""
    out, pivots = rref_array(m.field, m.data)
    return MatrixGF(m.field, out), len(pivots)


def rank(m: MatrixGF) -> int:
    if m.field.q == 2 and 0 < m.cols <= 63:
        return int(gf2_rank_packed(gf2_pack(m.data)))
    return rref(m)[1]


def rank_of_stack(u: MatrixGF, v: MatrixGF) -> int:
    """Rank of the vertical stack ``[u; v]``."""
    return rank(vstack(u, v))


def batched_rank(f: GF, mats: np.ndarray) -> np.ndarray:
    """Ranks of a stack of matrices, shape ``(P, R, C)``, over ``f``."""
    mats = np.array(mats, dtype=np.int64, copy=True)
    P, R, C = mats.shape
    if f.q == 2 and C <= 63:
        return gf2_rank_packed(gf2_pack(mats))
    rank = np.zeros(P, dtype=np.int64)
    rowidx = np.arange(R)
    for c in range(C):
        col = mats[:, :, c]
        eligible = (col != 0) & (rowidx[None, :] >= rank[:, None])
        has = eligible.any(axis=1)
        if not has.any():
            continue
        idx = np.nonzero(has)[0]
        r = rank[idx]
        pr = eligible[idx].argmax(axis=1)
        pivot_rows = mats[idx, pr].copy()
        mats[idx, pr] = mats[idx, r]
        pivot_rows = f.mul_arr(pivot_rows, f.inv_arr(pivot_rows[:, c])[:, None])
        mats[idx, r] = pivot_rows
        sub = mats[idx]
        factors = np.where(rowidx[None, :] > r[:, None], sub[:, :, c], 0)
        mats[idx] = f.sub_arr(sub, f.mul_arr(factors[:, :, None], pivot_rows[:, None, :]))
        rank[idx] += 1
    return rank
