import pytest

from qleaders import geometry
from qleaders.code import LinearCode
from qleaders.galois import GaloisField

from conftest import CORPUS_NAMES, load, words


def test_voronoi_C2(C2):
    S = C2.space
    assert geometry.voronoi(C2, S.zero).members == words(S, "0 0 0", "1 0 0", "0 1 0", "0 0 1")
    assert geometry.voronoi(C2, S.parse("1 1 1")).members == words(S, "1 1 1", "1 1 0", "1 0 1", "0 1 1")


def test_literal_voronoi_drops_zero(C2):
    S = C2.space
    assert geometry.voronoi(C2, S.parse("1 1 1"), literal=True).members == set(S.words())
    assert geometry.zero_neighbours(C2, literal=True) == set()


def test_voronoi_C3(C3):
    S = C3.space
    assert words(S, "1 1", "1 0", "0 1", "2 1", "1 2") <= geometry.voronoi(C3, S.parse("1 1")).members


def test_x_operator(C2):
    S = C2.space
    CL = geometry.coset_leaders(C2)
    assert geometry.x_operator(C2, CL) == words(S, "1 1 0", "1 0 1", "0 1 1")
    assert geometry.x_operator(C2, set(S.words())) == set()
    C = LinearCode(GaloisField(3), [[1, 1]])
    assert geometry.x_operator(C, {C.space.zero}) == words(C.space, "1 0", "2 0", "0 1", "0 2")


def test_zero_neighbours(C2, C3):
    assert geometry.zero_neighbours(C2) == words(C2.space, "1 1 1")
    assert geometry.zero_neighbours(C3) == words(C3.space, "1 1", "2 2")


def test_is_test_set(C2):
    S = C2.space
    assert geometry.is_test_set(C2, words(S, "1 1 1"))
    assert not geometry.is_test_set(C2, set())


@pytest.mark.parametrize("name", CORPUS_NAMES)
def test_invariants(name):
    C = load(name)
    regs = geometry.regions(C)
    zero = C.space.zero
    assert regs[zero].members == geometry.coset_leaders(C)
    assert set().union(*(r.members for r in regs.values())) == set(C.space.words())
    assert geometry.is_test_set(C, geometry.zero_neighbours(C))
    assert geometry.is_test_set(C, [c for c in C.codewords() if any(c)])
