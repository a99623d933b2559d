"""Constant-weight binary lexicodes: the skeleton layer of the multilevel construction."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence


@dataclass(frozen=True, order=True)
class IdentifyingVector:
    """Binary vector marking the pivot columns of an RREF matrix."""

    bits: tuple[int, ...]

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if any(b not in (0, 1) for b in bits):
            raise ValueError(f"not a binary vector: {self.bits!r}")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def parse(cls, text: str) -> IdentifyingVector:
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"not a bitstring: {text!r}")
        return cls(tuple(int(c) for c in text))

    @classmethod
    def from_pivots(cls, pivots: Sequence[int], n: int) -> IdentifyingVector:
        ps = set(pivots)
        return cls(tuple(1 if i in ps else 0 for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.bits)

    @property
    def weight(self) -> int:
        return sum(self.bits)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(i for i, b in enumerate(self.bits) if b)

    @property
    def first_one(self) -> int:
        return self.bits.index(1)

    def __str__(self) -> str:
        return "".join(map(str, self.bits))


def hamming_distance(a: IdentifyingVector, b: IdentifyingVector) -> int:
    if a.n != b.n:
        raise ValueError(f"length mismatch: {a.n} vs {b.n}")
    return sum(x != y for x, y in zip(a.bits, b.bits))


def scan_order(n: int, k: int) -> Iterator[IdentifyingVector]:
    """Weight-k vectors of length n in decreasing lexicographic order (bit 0 most significant)."""
    if not (0 <= k <= n):
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    for pivots in itertools.combinations(range(n), k):
        yield IdentifyingVector.from_pivots(pivots, n)


Acceptor = Callable[[IdentifyingVector, Sequence[IdentifyingVector]], bool]


def lexicode_with_predicate(n: int, k: int, accept: Acceptor) -> list[IdentifyingVector]:
    """Greedy scan keeping each candidate for which ``accept(candidate, kept)`` holds."""
    kept: list[IdentifyingVector] = []
    for cand in scan_order(n, k):
        if accept(cand, kept):
            kept.append(cand)
    return kept


def constant_weight_lexicode(n: int, k: int, d: int) -> list[IdentifyingVector]:
    if not (n >= k >= 1):
        raise ValueError(f"need n >= k >= 1, got n={n}, k={k}")
    if d % 2:
        raise ValueError(f"equal-weight vectors have even distance; got d={d}")
    return lexicode_with_predicate(n, k, lambda c, kept: all(hamming_distance(c, u) >= d for u in kept))
