import pytest

from qleaders import geometry
from qleaders.code import LinearCode
from qleaders.galois import GaloisField
from qleaders.leadercw import (leader_codewords, verify_test_set, verify_weight_bound,
                               verify_zero_neighbour_props)
from qleaders.leaderset import build_list, within_1_of_CL

from conftest import CORPUS_NAMES, closure, words


def test_C3(C3):
    assert set(leader_codewords(build_list(C3))) == words(C3.space, "1 1", "2 2")


def test_C2(C2):
    lcw = leader_codewords(build_list(C2))
    assert set(lcw) == words(C2.space, "1 1 1")


def test_length_one_code():
    C = LinearCode(GaloisField(3), [[1]])
    assert set(leader_codewords(build_list(C))) == {(1,), (2,)}


def test_witnesses_are_valid(C3):
    lc = build_list(C3)
    S = C3.space
    for c, entry in leader_codewords(lc).items():
        for n1, (i, j), n2 in entry.witnesses:
            w = S.add_generator(n1, i, j)
            assert S.is_standard_form(w)
            assert within_1_of_CL(lc, n1) and within_1_of_CL(lc, w)
            assert lc.is_leader(n2)
            assert S.sub(w, n2) == c


def test_C3_properties(C3):
    lc = build_list(C3)
    lcw = leader_codewords(lc)
    assert verify_test_set(lcw, lc).passed
    rep = verify_weight_bound(lcw, lc)
    assert rep.passed and "max weight 2" in rep.findings[0]
    assert verify_zero_neighbour_props(lcw, lc).passed


def test_repetition_bound_is_tight(C2):
    lc = build_list(C2)
    assert "max weight 3, covering radius 1, bound 3" in verify_weight_bound(leader_codewords(lc), lc).findings[0]


@pytest.mark.parametrize("name", CORPUS_NAMES)
def test_corpus(name):
    lc = closure(name)
    lcw = leader_codewords(lc)
    assert set(lcw) == geometry.leader_codewords(lc.code)
    assert verify_test_set(lcw, lc).passed
    assert verify_weight_bound(lcw, lc).passed
    assert verify_zero_neighbour_props(lcw, lc).passed
    assert geometry.is_test_set(lc.code, lcw)


def test_hamming_zero_neighbours_contain_leader_codewords():
    lc = closure("hamming_7_4")
    Z = geometry.zero_neighbours(lc.code)
    assert set(leader_codewords(lc)) <= Z
