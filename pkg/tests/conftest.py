import functools

import pytest

from qleaders import corpus
from qleaders.code import LinearCode
from qleaders.galois import GaloisField
from qleaders.leaderset import build_list
from qleaders.wordspace import WeightCompatibleOrder

CORPUS_NAMES = [e.name for e in corpus.corpus()]


@functools.lru_cache(maxsize=None)
def load(name):
    return corpus.load(name)


@functools.lru_cache(maxsize=None)
def closure(name, tie="lex"):
    code = load(name)
    return build_list(code, WeightCompatibleOrder(code.space, tie))


def words(space, *texts):
    return {space.parse(t) for t in texts}


@pytest.fixture
def C3():
    return LinearCode(GaloisField(3), [[1, 1]], name="C3")


@pytest.fixture
def C2():
    return LinearCode(GaloisField(2), [[1, 1, 1]], name="C2")


@pytest.fixture
def gf4():
    return GaloisField(2, 2, (1, 1, 1))


@pytest.fixture
def gf9():
    return GaloisField(3, 2, (1, 0, 1))
