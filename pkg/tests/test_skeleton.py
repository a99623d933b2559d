from __future__ import annotations

import itertools
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from subspace_codec.skeleton import (
    IdentifyingVector,
    constant_weight_lexicode,
    hamming_distance,
    lexicode_with_predicate,
    scan_order,
)

V = IdentifyingVector.parse


def greedy_oracle(n: int, k: int, d: int) -> list[str]:
    """Greedy scan over bit strings sorted as integers, largest first."""
    words = sorted((w for w in itertools.product("01", repeat=n) if w.count("1") == k), reverse=True)
    kept: list[str] = []
    for w in words:
        if all(sum(a != b for a, b in zip(w, u)) >= d for u in kept):
            kept.append(w)
    return ["".join(w) for w in kept]


def test_vector_basics():
    v = V("1001100")
    assert v.n == 7 and v.weight == 3 and v.pivots == (0, 3, 4) and v.first_one == 0
    assert str(v) == "1001100"
    assert IdentifyingVector.from_pivots([0, 3, 4], 7) == v
    for bad in ("", "10a1", "2"):
        with pytest.raises(ValueError):
            V(bad)


def test_hamming_examples():
    assert hamming_distance(V("111000"), V("111000")) == 0
    assert hamming_distance(V("111000"), V("100110")) == 4
    assert hamming_distance(V("1001100"), V("1001010")) == 2
    with pytest.raises(ValueError):
        hamming_distance(V("1"), V("10"))


def test_example_lexicode_n6():
    # the first three words are the classical example skeleton; a greedy scan
    # must also keep 001011, which is at distance 4 from each of them
    words = [str(v) for v in constant_weight_lexicode(6, 3, 4)]
    assert words[:3] == ["111000", "100110", "010101"]
    assert words == ["111000", "100110", "010101", "001011"]


def test_lexicode_n7_classical():
    words = [str(v) for v in constant_weight_lexicode(7, 3, 4)]
    assert words == greedy_oracle(7, 3, 4)
    assert words[:2] == ["1110000", "1001100"]


@pytest.mark.parametrize("n,k,d", [(6, 3, 4), (7, 3, 4), (8, 3, 4), (9, 3, 4), (8, 4, 4), (9, 3, 6), (10, 4, 6)])
def test_lexicode_matches_oracle(n, k, d):
    words = constant_weight_lexicode(n, k, d)
    assert [str(v) for v in words] == greedy_oracle(n, k, d)
    assert str(words[0]) == "1" * k + "0" * (n - k)
    assert all(hamming_distance(a, b) >= d for a, b in itertools.combinations(words, 2))
    assert [w.bits for w in words] == sorted((w.bits for w in words), reverse=True)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 9).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n))))
def test_distance_two_keeps_everything(nk):
    n, k = nk
    assert len(constant_weight_lexicode(n, k, 2)) == comb(n, k)
    assert list(lexicode_with_predicate(n, k, lambda c, kept: True)) == list(scan_order(n, k))


def test_odd_distance_rejected():
    with pytest.raises(ValueError):
        constant_weight_lexicode(6, 3, 3)


def test_predicate_specialisation():
    rule = lambda c, kept: all(hamming_distance(c, u) >= 4 for u in kept)  # noqa: E731
    assert lexicode_with_predicate(8, 3, rule) == constant_weight_lexicode(8, 3, 4)
