from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from subspace_codec.algebra import MatrixGF, field
from subspace_codec.ferrers import (
    FerrersDiagram,
    corollary_dimension,
    diagram_from_vector,
    embed,
    embed_array,
    extract,
    ferrers_bound,
    identifying_vector,
    non_pivot_part,
    pending_analysis,
    pending_count_oracle,
    pending_formula,
    zero_profile,
)
from subspace_codec.skeleton import IdentifyingVector, scan_order

V = IdentifyingVector.parse


def all_vectors(max_n: int, weights):
    for n in range(1, max_n + 1):
        for k in weights:
            if k <= n:
                yield from scan_order(n, k)


def test_zero_profiles():
    assert zero_profile(V("1001100")).z0 == 0 and zero_profile(V("1001100")).z == (2, 0, 2)
    assert zero_profile(V("1110000")).z == (0, 0, 4)
    p = zero_profile(V("010101"))
    assert (p.z0, p.z) == (1, (1, 1, 0))
    with pytest.raises(ValueError):
        zero_profile(V("000"))


@pytest.mark.parametrize(
    "vector,rows",
    [("100110", (3, 1, 1)), ("1110000", (4, 4, 4)), ("111000", (3, 3, 3)), ("1001100", (4, 2, 2)), ("0010011", (2, 0, 0))],
)
def test_diagram_rows(vector, rows):
    assert diagram_from_vector(V(vector)).row_lengths == rows


def test_diagram_validation_and_shapes():
    with pytest.raises(ValueError):
        FerrersDiagram((1, 2))
    d = FerrersDiagram((4, 2, 1))
    assert d.column_counts_from_left() == [1, 1, 2, 3]
    assert d.conjugate().row_lengths == (3, 2, 1, 1)
    assert d.conjugate().conjugate().row_lengths == d.row_lengths
    assert d.render(1).splitlines()[0] == "o * * *"
    assert d.support().sum() == d.total == len(d.dots())


def test_total_dots_formula():
    for v in all_vectors(9, (1, 2, 3, 4)):
        z = zero_profile(v).z
        assert diagram_from_vector(v).total == sum((i + 1) * zi for i, zi in enumerate(z))


@pytest.mark.parametrize(
    "rows,delta,expected",
    [((4, 2, 1), 2, 3), ((6, 3), 2, 3), ((3, 3, 2, 1), 2, 5), ((4, 4, 4), 2, 8), ((4, 4, 4), 3, 4), ((3, 1, 1), 2, 2)],
)
def test_bound_examples(rows, delta, expected):
    assert ferrers_bound(FerrersDiagram(rows), delta) == expected


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(0, 6), min_size=1, max_size=5))
def test_bound_delta_one_is_total(rows):
    d = FerrersDiagram(tuple(sorted(rows, reverse=True)))
    assert ferrers_bound(d, 1) == d.total


def test_corollary_examples():
    assert corollary_dimension(FerrersDiagram((3, 3, 2, 1)), 2) == 5
    assert corollary_dimension(FerrersDiagram((4, 2, 1)), 2) == 3
    assert corollary_dimension(FerrersDiagram((3, 3)), 1) == 6


def test_corollary_agrees_with_bound_exhaustively():
    applicable = 0
    for v in all_vectors(10, (1, 2, 3, 4)):
        d = diagram_from_vector(v)
        for delta in (1, 2, 3):
            c = corollary_dimension(d, delta)
            if c is not None:
                applicable += 1
                assert c == ferrers_bound(d, delta), (str(v), delta)
    assert applicable > 1000


def test_pending_examples():
    assert pending_analysis(V("1001100"), 2).count == 1
    assert pending_analysis(V("1001100"), 2).columns == (1,)
    assert pending_analysis(V("1110000"), 2).count == 0
    rep = pending_analysis(V("1000101"), 2)
    assert rep.count == 2 and rep.columns == (1, 2)
    # single-row diagrams are pending as a whole
    assert pending_analysis(V("1000011"), 2).count == 4
    assert pending_analysis(V("1001100"), 1).count == 0


def test_pending_formula_matches_oracle_weight3_up_to_10():
    checked = 0
    for v in all_vectors(10, (3,)):
        z1 = zero_profile(v).z[0]
        _, count = pending_formula(v)
        assert count == pending_count_oracle(diagram_from_vector(v), 2, limit=z1), str(v)
        checked += 1
    assert checked == sum(1 for _ in all_vectors(10, (3,)))


def test_pending_removal_preserves_bound():
    for v in all_vectors(9, (2, 3, 4)):
        d = diagram_from_vector(v)
        for delta in (2, 3):
            t = pending_analysis(v, delta).count
            if t:
                assert ferrers_bound(d.drop_leading(t), delta) == ferrers_bound(d, delta)


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 9).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n))), st.sampled_from([2, 3, 4]),
       st.integers(0, 2**30))
def test_embed_extract_round_trip(nk, q, seed):
    n, k = nk
    f = field(q)
    vectors = list(scan_order(n, k))
    rs = np.random.default_rng(seed)
    v = vectors[rs.integers(len(vectors))]
    d = diagram_from_vector(v)
    fill = np.where(d.support(), rs.integers(0, q, (d.rows, d.width)), 0)
    u = embed(v, MatrixGF(f, fill))
    assert identifying_vector(u) == v
    assert extract(u) == MatrixGF(f, fill)
    assert non_pivot_part(u).data.shape == (k, n - k)


def test_embed_examples_and_errors():
    f = field(2)
    u = embed(V("111000"), MatrixGF(f, np.zeros((3, 3), dtype=int)))
    assert u.data.tolist() == np.hstack([np.eye(3, dtype=int), np.zeros((3, 3), dtype=int)]).tolist()
    u = embed(V("100110"), MatrixGF(f, np.zeros((3, 3), dtype=int)))
    assert [int(np.flatnonzero(r)[0]) for r in u.data] == [0, 3, 4]
    bad = np.zeros((3, 3), dtype=int)
    bad[1, 0] = 1  # outside the (3,1,1) diagram
    with pytest.raises(ValueError):
        embed(V("100110"), MatrixGF(f, bad))
    with pytest.raises(ValueError):
        identifying_vector(MatrixGF.from_rows(f, [[1, 1, 0], [0, 1, 0]]))


def test_example_templates_identify():
    f = field(2)
    for text in ("111000", "100110", "010101"):
        v = V(text)
        d = diagram_from_vector(v)
        fills = np.zeros((1, d.rows, d.width), dtype=np.int64)
        assert identifying_vector(MatrixGF(f, embed_array(v, fills)[0])) == v
