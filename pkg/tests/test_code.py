import pytest

from qleaders import corpus
from qleaders.code import (FixtureError, LinearCode, ResourceBoundError, covering_radius,
                           parse_code_fixture, row_reduce)
from qleaders.galois import GaloisField, FieldError
from qleaders.leaderset import build_list

from conftest import CORPUS_NAMES, closure, load, words


def test_parity_check(C3, C2):
    assert C3.H == [[1, 2]]
    assert C2.H == [[1, 1, 0], [1, 0, 1]]


@pytest.mark.parametrize("name", CORPUS_NAMES)
def test_generator_rows_are_codewords(name):
    C = load(name)
    assert all(C.is_codeword(g) for g in C.generator_words)
    assert len(set(C.codewords())) == C.num_codewords


def test_syndrome(C3, C2):
    S = C3.space
    assert C3.syndrome(S.parse("1 0")) == (1,)
    assert C3.syndrome(S.parse("1 1")) == (0,)
    assert C2.syndrome(C2.space.parse("1 1 0")) == (0, 1)


def test_codewords(C3, C2):
    assert set(C2.codewords()) == words(C2.space, "0 0 0", "1 1 1")
    assert set(C3.codewords()) == words(C3.space, "0 0", "1 1", "2 2")
    C = load("gf4_2_1")
    assert set(C.codewords()) == words(C.space, "0,0 0,0", "1,0 0,1", "0,1 1,1", "1,1 1,0")


def test_syndromes_agree_with_brute_force_cosets():
    C = load("gf4_4_2")
    S = C.space
    cw = list(C.codewords())
    for y in list(S.words())[:40]:
        coset = {S.add(y, c) for c in cw}
        assert {C.syndrome(w) for w in coset} == {C.syndrome(y)}


def test_min_distance(C3, C2):
    assert (C2.min_distance(), C2.error_capacity()) == (3, 1)
    assert (C3.min_distance(), C3.error_capacity()) == (2, 0)
    H = load("hamming_7_4")
    assert (H.min_distance(), H.error_capacity()) == (3, 1)


def test_covering_radius(C3, C2):
    assert covering_radius(C2, build_list(C2).table) == 1
    assert covering_radius(C3, build_list(C3).table) == 1
    assert covering_radius(load("hamming_7_4"), closure("hamming_7_4").table) == 1


def test_row_reduce_rank():
    F = GaloisField(3)
    R, pivots = row_reduce(F, [[1, 2, 0], [2, 1, 0], [0, 0, 1]])
    assert len(pivots) == 2


def test_dependent_rows_rejected():
    with pytest.raises(FieldError):
        LinearCode(GaloisField(2), [[1, 1, 0], [1, 1, 0]])


def test_fixture_roundtrip():
    C = load("gf9_3_1")
    D = LinearCode.from_text(C.to_text())
    assert set(D.codewords()) == set(C.codewords())


@pytest.mark.parametrize("text,line", [
    ("p 3\nm 1\nn 2\nk 1\nG\n1 x\n", 6),
    ("p 3\nm 1\nn two\n", 3),
    ("# c\np 4\nm 1\nn 2\nk 1\nG\n1 1\n", 3),
    ("p 3\nm 1\nn 2\nk 3\nG\n", 4),
    ("p 3\nm 1\nn 2\nk 1\nG\n1 1\n1 1\n", 7),
])
def test_fixture_errors_have_line_numbers(text, line):
    with pytest.raises(FixtureError) as exc:
        parse_code_fixture(text)
    assert exc.value.lineno == line


def test_bounds():
    C = corpus.load("hamming_7_4", max_enum=100)
    with pytest.raises(ResourceBoundError) as exc:
        C.check_space_bound()
    assert exc.value.bound == 100
    with pytest.raises(ResourceBoundError):
        list(corpus.load("hamming_7_4", max_enum=10).codewords())


def test_resolve_bundled_path():
    assert corpus.resolve("fixtures/ternary_2_1.code").name == "ternary_2_1.code"
    assert corpus.resolve("rep_3_1").exists()
    with pytest.raises(FileNotFoundError):
        corpus.resolve("no_such_code")
