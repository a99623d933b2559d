from __future__ import annotations

import numpy as np
import pytest

from subspace_codec.algebra import field
from subspace_codec.grassmann import enumerate_grassmannian
from subspace_codec.multilevel import construct_classic, construct_improved
from subspace_codec.skeleton import IdentifyingVector
from subspace_codec.verify import min_pairwise_distance, verify_code, verify_codewords, verify_propositions


def test_whole_grassmannian():
    f = field(2)
    words = np.array([s.basis.data for s in enumerate_grassmannian(4, 2, f)])
    rep = verify_codewords(f, words, 2, full_scan=True)
    assert rep.n_codewords == 35 and rep.min_distance == 2 and rep.passed
    words3 = np.array([s.basis.data for s in enumerate_grassmannian(4, 2, field(3))])
    rep = verify_codewords(field(3), words3, 4, full_scan=True)
    assert rep.n_codewords == 130 and rep.min_distance == 2 and not rep.passed


def test_duplicate_codeword_fails():
    code = construct_improved(7, 3, 2, field(2))
    words = code.materialize()
    words = np.concatenate([words, words[5:6]])
    rep = verify_codewords(code.field, words, 4, expected_size=code.size, full_scan=True)
    assert not rep.distinct and rep.min_distance == 0 and not rep.size_ok and not rep.passed


def test_rank_deficient_word_fails():
    f = field(2)
    words = np.zeros((2, 2, 4), dtype=np.int64)
    words[0] = [[1, 0, 0, 0], [0, 1, 0, 0]]
    words[1, 0] = [0, 0, 1, 0]
    assert not verify_codewords(f, words, 2).passed


def test_unreduced_input_is_canonicalised():
    f = field(3)
    code = construct_classic(6, 3, 2, f)
    words = code.materialize()
    mixed = words.copy()
    mixed[:, 0] = f.add_arr(words[:, 0], words[:, 1])
    rep = verify_codewords(f, mixed, 4, code.size, full_scan=True)
    assert rep.passed and rep.min_distance == 4


@pytest.mark.parametrize("q", [2, 3])
def test_result_independent_of_workers(q):
    code = construct_improved(7, 3, 2, field(q)) if q == 2 else construct_classic(6, 3, 2, field(q))
    words = code.materialize()
    one = min_pairwise_distance(code.field, words, None, jobs=1)
    three = min_pairwise_distance(code.field, words, None, jobs=3)
    assert one == three


def test_early_exit_flags():
    f = field(2)
    words = np.array([s.basis.data for s in enumerate_grassmannian(4, 2, f)])
    rep = verify_codewords(f, words, 4)
    assert rep.early_exit and not rep.passed
    assert rep.pairs_checked < 35 * 34 // 2


def test_guard():
    with pytest.raises(ValueError):
        verify_code(construct_improved(9, 3, 2, field(2)), guard=1000)


def test_report_formats():
    rep = verify_code(construct_classic(6, 3, 2, field(2)), full_scan=True)
    assert "PASS" in rep.to_text()
    d = rep.to_dict()
    assert d["passed"] and d["min_distance"] == 4 and d["pairs_checked"] == 71 * 70 // 2


def test_propositions_small_exhaustive():
    rep = verify_propositions(6, 3, 2, field(2))
    assert rep.ok
    assert all(c.exhaustive and c.instances > 0 for c in rep.checks)


def test_worked_pair_rank_bound():
    vecs = [IdentifyingVector.parse("1001100"), IdentifyingVector.parse("1001010")]
    rep = verify_propositions(7, 3, 2, field(2), vectors=vecs)
    pend = rep.checks[2]
    # every fill of both cells (pending dot fixed), both value orders
    assert pend.ok and pend.instances == 2 * 2**7 * 2**6


def test_propositions_sampled_q3():
    rep = verify_propositions(6, 3, 2, field(3), samples=2000, seed=1)
    assert rep.ok
    assert not rep.checks[0].exhaustive
