"""Multilevel (echelon-Ferrers) constructions of constant-dimension codes.

``construct_classic`` fills every word of a constant-weight lexicode with a
Ferrers diagram code.  ``construct_improved`` admits extra skeleton words at
Hamming distance ``2*delta - 2`` from words sharing the same first pivot,
provided both cells fix their pending top-row dots to different tuples.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

import numpy as np

from .algebra import GF, MatrixGF, field
from .ferrers import diagram_from_vector, embed_array, pending_analysis
from .grassmann import Subspace
from .rank_metric import RankMetricCode, build_ferrers_code
from .skeleton import (
    IdentifyingVector,
    constant_weight_lexicode,
    hamming_distance,
    lexicode_with_predicate,
)

METHODS = ("classic", "improved")


@dataclass(frozen=True)
class PendingFix:
    """Constant tuple written into the ``width`` columns right after the first pivot.

    ``value`` is read as a base-q number whose most significant digit sits
    in the leftmost pending column.
    """

    column: int
    width: int
    value: int

    def digits(self, q: int) -> list[int]:
        return [(self.value // q ** (self.width - 1 - c)) % q for c in range(self.width)]

    def fill_map(self, q: int) -> dict[tuple[int, int], int]:
        return {(0, c): d for c, d in enumerate(self.digits(q))}


@dataclass(frozen=True, eq=False)
class CodeComponent:
    vector: IdentifyingVector
    pending: PendingFix | None
    ferrers_code: RankMetricCode

    @property
    def dimension(self) -> int:
        return self.ferrers_code.dimension

    @property
    def size(self) -> int:
        return self.ferrers_code.size

    def materialize(self) -> np.ndarray:
        """All codewords of this cell as k x n RREF arrays."""
        return embed_array(self.vector, self.ferrers_code.codewords())


def make_component(v: IdentifyingVector, delta: int, f: GF, pending: PendingFix | None = None) -> CodeComponent:
    fixed = pending.fill_map(f.q) if pending else None
    if pending and pending.column != v.first_one + 1:
        raise ValueError(f"pending column {pending.column} is not next to the first pivot of {v}")
    return CodeComponent(v, pending, build_ferrers_code(diagram_from_vector(v), delta, f, fixed))


class SizePolynomial(Counter):
    """Exponent -> multiplicity; evaluates to the code size at q."""

    def evaluate(self, q: int) -> int:
        return sum(mult * q**e for e, mult in self.items())

    def __str__(self) -> str:
        terms = []
        for e in sorted((e for e, m in self.items() if m), reverse=True):
            m = self[e]
            if e == 0:
                terms.append(str(m))
                continue
            mono = "q" if e == 1 else f"q^{e}"
            terms.append(mono if m == 1 else f"{m}{mono}")
        return "+".join(terms) if terms else "0"

    @classmethod
    def parse(cls, text: str) -> SizePolynomial:
        out = cls()
        text = text.replace(" ", "")
        if text == "0":
            return out
        for term in text.split("+"):
            m = re.fullmatch(r"(\d*)(q(?:\^(\d+))?)?", term)
            if not m or not term:
                raise ValueError(f"bad polynomial term {term!r}")
            coeff, mono, exp = m.groups()
            e = 0 if mono is None else int(exp) if exp else 1
            out[e] += int(coeff) if coeff else 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, str):
            other = SizePolynomial.parse(other)
        if not isinstance(other, Counter):
            return NotImplemented
        return {e: m for e, m in self.items() if m} == {e: m for e, m in other.items() if m}

    __hash__ = None


@dataclass(eq=False)
class SubspaceCode:
    """An assembled constant-dimension code, stored as its components."""

    n: int
    k: int
    field: GF
    delta: int
    method: str
    components: list[CodeComponent] = dc_field(default_factory=list)

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def min_distance(self) -> int:
        return 2 * self.delta

    @property
    def skeleton(self) -> list[IdentifyingVector]:
        return [c.vector for c in self.components]

    @property
    def size(self) -> int:
        return sum(c.size for c in self.components)

    def size_polynomial(self) -> SizePolynomial:
        return size_polynomial(self)

    def materialize(self) -> np.ndarray:
        """Codewords as a ``(size, k, n)`` array, component by component."""
        parts = [c.materialize() for c in self.components]
        if not parts:
            return np.zeros((0, self.k, self.n), dtype=np.int64)
        return np.concatenate(parts)

    def codewords(self) -> list[Subspace]:
        return [Subspace(MatrixGF(self.field, w)) for w in self.materialize()]


def size_polynomial(code: SubspaceCode) -> SizePolynomial:
    return SizePolynomial(c.dimension for c in code.components)


def _check_params(n: int, k: int, delta: int) -> None:
    if not (1 <= k and 2 * k <= n):
        raise ValueError(f"need 1 <= k and 2k <= n, got n={n}, k={k}")
    if not (1 <= delta <= k):
        raise ValueError(f"need 1 <= delta <= k, got delta={delta}")


def construct_classic(n: int, k: int, delta: int, f: GF) -> SubspaceCode:
    _check_params(n, k, delta)
    skeleton = constant_weight_lexicode(n, k, 2 * delta)
    return SubspaceCode(n, k, f, delta, "classic", [make_component(v, delta, f) for v in skeleton])


class PendingAcceptor:
    """Stateful acceptance rule for the improved greedy scan.

    Within a family (words sharing their first pivot) the tuple width ``t`` is
    fixed by the first member that has pending dots, capped by
    ``pending_width`` when given.  A candidate with at least ``t`` pending dots
    may sit at distance ``2*delta - 2`` from family members that carry a
    tuple; it takes the smallest tuple value not used by those neighbours.
    """

    def __init__(self, delta: int, q: int, pending_width: int | None = None):
        self.delta = delta
        self.q = q
        self.pending_width = pending_width
        self.fixes: dict[IdentifyingVector, PendingFix | None] = {}
        self.family_width: dict[int, int] = {}

    def __call__(self, w: IdentifyingVector, kept: Sequence[IdentifyingVector]) -> bool:
        d_min = 2 * self.delta
        first = w.first_one
        count = pending_analysis(w, self.delta).count
        t = self.family_width.get(first)
        if t is None:
            t = count if self.pending_width is None else min(count, self.pending_width)
        eligible = t >= 1 and count >= t
        used = set()
        for u in kept:
            d = hamming_distance(w, u)
            if d >= d_min:
                continue
            fu = self.fixes[u]
            if (d == d_min - 2 and eligible and u.first_one == first
                    and fu is not None and fu.width == t):
                used.add(fu.value)
                continue
            return False
        if not eligible:
            self.fixes[w] = None
            return True
        value = next((x for x in range(self.q**t) if x not in used), None)
        if value is None:
            return False
        self.family_width.setdefault(first, t)
        self.fixes[w] = PendingFix(first + 1, t, value)
        return True


def construct_improved(n: int, k: int, delta: int, f: GF, pending_width: int | None = None) -> SubspaceCode:
    _check_params(n, k, delta)
    if pending_width is not None and pending_width < 1:
        raise ValueError("pending_width must be >= 1")
    accept = PendingAcceptor(delta, f.q, pending_width)
    skeleton = lexicode_with_predicate(n, k, accept)
    comps = [make_component(v, delta, f, accept.fixes[v]) for v in skeleton]
    return SubspaceCode(n, k, f, delta, "improved", comps)


@dataclass(frozen=True)
class ConstructionConfig:
    """Parameters of one construction run; ``distance`` is the subspace distance 2*delta."""

    n: int
    k: int
    q: int = 2
    distance: int = 4
    method: str = "improved"
    pending_width: int | None = None

    def __post_init__(self):
        if self.distance % 2:
            raise ValueError(f"subspace distance must be even, got {self.distance}")
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")

    @property
    def delta(self) -> int:
        return self.distance // 2

    def build(self) -> SubspaceCode:
        f = field(self.q)
        if self.method == "classic":
            return construct_classic(self.n, self.k, self.delta, f)
        return construct_improved(self.n, self.k, self.delta, f, self.pending_width)


def assemble(n: int, k: int, delta: int, f: GF, method: str,
             parts: Iterable[tuple[IdentifyingVector, PendingFix | None]]) -> SubspaceCode:
    """Rebuild a code from its skeleton and pending fixes (e.g. read from a file)."""
    return SubspaceCode(n, k, f, delta, method, [make_component(v, delta, f, p) for v, p in parts])
