from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from subspace_codec.algebra import field
from subspace_codec.multilevel import (
    ConstructionConfig,
    PendingAcceptor,
    PendingFix,
    SizePolynomial,
    assemble,
    construct_classic,
    construct_improved,
    make_component,
)
from subspace_codec.skeleton import IdentifyingVector, lexicode_with_predicate

V = IdentifyingVector.parse


@settings(max_examples=100, deadline=None)
@given(st.dictionaries(st.integers(0, 20), st.integers(1, 5), max_size=6))
def test_polynomial_text_round_trip(terms):
    poly = SizePolynomial(terms)
    assert SizePolynomial.parse(str(poly)) == poly
    assert poly.evaluate(3) == sum(m * 3**e for e, m in terms.items())


def test_polynomial_format():
    assert str(SizePolynomial({8: 1, 4: 1, 3: 1, 2: 2, 1: 1, 0: 1})) == "q^8+q^4+q^3+2q^2+q+1"
    assert str(SizePolynomial()) == "0"
    assert SizePolynomial.parse("q^12+3q^4+2q+1") == {12: 1, 4: 3, 1: 2, 0: 1}
    assert SizePolynomial({2: 1}) == "q^2"
    with pytest.raises(ValueError):
        SizePolynomial.parse("q^2++1")


def test_classic_small_example():
    code = construct_classic(6, 3, 2, field(2))
    assert [str(v) for v in code.skeleton] == ["111000", "100110", "010101", "001011"]
    assert code.size_polynomial() == "q^6+q^2+q+1"
    assert code.size == 71 and len(code.materialize()) == 71


def test_improved_worked_example_assignments():
    code = construct_improved(7, 3, 2, field(2))
    fixes = {str(c.vector): c.pending for c in code.components}
    assert fixes["1001100"] == PendingFix(1, 1, 0)
    assert fixes["1001010"] == PendingFix(1, 1, 1)
    assert fixes["1000101"] == PendingFix(1, 1, 1)
    dims = {str(c.vector): c.dimension for c in code.components}
    assert (dims["1110000"], dims["1001100"], dims["1001010"], dims["1000101"]) == (8, 4, 3, 1)
    assert dims["0101001"] == dims["0100110"] == 2


def test_improved_predicate_admits_distance_two_neighbour():
    accept = PendingAcceptor(2, 2)
    words = [str(v) for v in lexicode_with_predicate(7, 3, accept)]
    assert words[1:3] == ["1001100", "1001010"]


@pytest.mark.parametrize("q", [2, 3])
@pytest.mark.parametrize("n", [6, 7, 8, 9])
def test_improved_at_least_classic(n, q):
    f = field(q)
    classic = construct_classic(n, 3, 2, f)
    improved = construct_improved(n, 3, 2, f)
    assert improved.size >= classic.size
    for code in (classic, improved):
        assert code.components[0].dimension == (n - 3) * (3 - 2 + 1)
        assert code.size == code.size_polynomial().evaluate(q)


@pytest.mark.parametrize("n,k", [(4, 2), (5, 2), (6, 2), (6, 3), (7, 3), (8, 4)])
def test_maximal_distance_reduces_to_classic(n, k):
    f = field(2)
    a, b = construct_improved(n, k, k, f), construct_classic(n, k, k, f)
    assert [(c.vector, c.dimension) for c in a.components] == [(c.vector, c.dimension) for c in b.components]
    assert all(c.pending is None for c in a.components)


def test_pending_width_knob():
    f = field(2)
    assert construct_improved(8, 3, 2, f, pending_width=1).size_polynomial().evaluate(2) <= \
        construct_improved(8, 3, 2, f).size
    with pytest.raises(ValueError):
        construct_improved(8, 3, 2, f, pending_width=0)


def test_determinism():
    a = construct_improved(8, 3, 2, field(3)).materialize()
    b = construct_improved(8, 3, 2, field(3)).materialize()
    assert np.array_equal(a, b)


def test_parameter_validation():
    f = field(2)
    with pytest.raises(ValueError):
        construct_classic(5, 3, 2, f)
    with pytest.raises(ValueError):
        construct_improved(6, 3, 4, f)
    with pytest.raises(ValueError):
        ConstructionConfig(7, 3, distance=3)
    with pytest.raises(ValueError):
        ConstructionConfig(7, 3, method="other")
    with pytest.raises(ValueError):
        make_component(V("1001100"), 2, f, PendingFix(2, 1, 0))


def test_config_and_assemble_round_trip():
    code = ConstructionConfig(7, 3, q=3, distance=4).build()
    again = assemble(7, 3, 2, field(3), "improved", [(c.vector, c.pending) for c in code.components])
    assert np.array_equal(code.materialize(), again.materialize())
    subspaces = code.codewords()
    assert len(subspaces) == code.size and subspaces[0].dim == 3
