"""Words of F_q^n seen through the additive monoid generated by Can(F_q).

A word is a flat tuple of ``n*m`` nonnegative integers: the coefficient of
the generator ``e_ij = beta**(j-1) * e_i`` lives at index ``(i-1)*m + (j-1)``.
A tuple is in standard form when every coefficient is below ``p``; standard
forms are in bijection with the vectors of F_q^n and double as them.

Positions ``i`` and generator indices ``j`` are 1-based in the public API,
matching the usual ``e_ij`` notation.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Iterator, Sequence, Union

from .galois import GaloisField

Word = tuple[int, ...]


class WordError(ValueError):
    """Malformed word, mismatched lengths or a violated precondition."""


@dataclass(frozen=True)
class GenSupport:
    """Generalized support: the pairs ``(i, j)`` with a nonzero coefficient."""

    pairs: frozenset[tuple[int, int]]
    n: int

    def __getitem__(self, i: int) -> frozenset[int]:
        return frozenset(j for (k, j) in self.pairs if k == i)

    def __contains__(self, pair: object) -> bool:
        return pair in self.pairs

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self.pairs))

    def __len__(self) -> int:
        return len(self.pairs)


class WordSpace:
    """F_q^n together with its monoid presentation over Can(F_q)."""

    def __init__(self, field: GaloisField, n: int):
        if n < 1:
            raise WordError(f"length must be positive, got {n}")
        self.field = field
        self.n = n
        self.p = field.p
        self.m = field.m
        self.q = field.q
        self.nm = n * field.m
        self.size = self.q**n
        self.zero: Word = (0,) * self.nm

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WordSpace):
            return NotImplemented
        return self.field == other.field and self.n == other.n

    def __hash__(self) -> int:
        return hash((self.field, self.n))

    def __repr__(self) -> str:
        return f"WordSpace({self.field!r}, n={self.n})"

    # construction and conversion
    def flat_index(self, i: int, j: int) -> int:
        if not (1 <= i <= self.n and 1 <= j <= self.m):
            raise WordError(f"generator index ({i}, {j}) out of range")
        return (i - 1) * self.m + (j - 1)

    def generator(self, i: int, j: int) -> Word:
        w = [0] * self.nm
        w[self.flat_index(i, j)] = 1
        return tuple(w)

    def generators(self) -> Iterator[tuple[int, int]]:
        for i in range(1, self.n + 1):
            for j in range(1, self.m + 1):
                yield (i, j)

    def from_vector(self, vec: Sequence[int]) -> Word:
        """Word from a vector of field-element indices."""
        if len(vec) != self.n:
            raise WordError(f"expected {self.n} coordinates, got {len(vec)}")
        out: list[int] = []
        for x in vec:
            out.extend(self.field.coords_of(x))
        return tuple(out)

    def to_vector(self, w: Word) -> tuple[int, ...]:
        """Field-element indices of the coordinates of a standard-form word."""
        m = self.m
        return tuple(self.field.index_of(w[k:k + m]) for k in range(0, self.nm, m))

    def coordinate(self, w: Word, i: int) -> tuple[int, ...]:
        return w[(i - 1) * self.m:i * self.m]

    def words(self) -> Iterator[Word]:
        """Every standard-form word, lexicographically."""
        return itertools.product(range(self.p), repeat=self.nm)

    def _check(self, *ws: Word) -> None:
        for w in ws:
            if len(w) != self.nm:
                raise WordError(f"word {w} has {len(w)} coefficients, expected {self.nm}")

    def is_standard_form(self, w: Word) -> bool:
        return all(0 <= c < self.p for c in w)

    def _require_sf(self, w: Word) -> None:
        self._check(w)
        if not self.is_standard_form(w):
            raise WordError(f"{w} is not in standard form")

    # monoid and vector-space operations
    def standard_form(self, w: Word) -> Word:
        self._check(w)
        p = self.p
        return tuple(c % p for c in w)

    def oplus(self, x: Word, y: Word) -> Word:
        """Coefficient-wise integer sum, without reduction mod p."""
        self._check(x, y)
        return tuple(a + b for a, b in zip(x, y))

    def add(self, x: Word, y: Word) -> Word:
        p = self.p
        return tuple((a + b) % p for a, b in zip(x, y))

    def sub(self, x: Word, y: Word) -> Word:
        p = self.p
        return tuple((a - b) % p for a, b in zip(x, y))

    def neg(self, x: Word) -> Word:
        p = self.p
        return tuple(-a % p for a in x)

    def scale(self, a: int, x: Word) -> Word:
        """Multiply every coordinate by the field element with index ``a``."""
        F = self.field
        return self.from_vector([F.imul(a, v) for v in self.to_vector(x)])

    # supports and weights
    def gen_support(self, w: Word) -> GenSupport:
        self._require_sf(w)
        m = self.m
        pairs = frozenset((k // m + 1, k % m + 1) for k, c in enumerate(w) if c)
        return GenSupport(pairs, self.n)

    def support(self, w: Word) -> frozenset[int]:
        m = self.m
        return frozenset(k // m + 1 for k, c in enumerate(w) if c)

    def weight(self, w: Word) -> int:
        """Hamming weight as a vector of F_q^n (not the generalized-support size)."""
        if self.m == 1:
            return sum(1 for c in w if c)
        m = self.m
        return sum(1 for k in range(0, self.nm, m) if any(w[k:k + m]))

    def distance(self, x: Word, y: Word) -> int:
        return self.weight(self.sub(x, y))

    def can_add(self, w: Word, i: int, j: int) -> bool:
        """True iff ``w + e_ij`` is still in standard form (coefficient <= p-2)."""
        return w[self.flat_index(i, j)] <= self.p - 2

    def add_generator(self, w: Word, i: int, j: int) -> Word:
        """``w (+) e_ij`` as a monoid sum (may leave standard form)."""
        k = self.flat_index(i, j)
        return w[:k] + (w[k] + 1,) + w[k + 1:]

    def remove_generator(self, w: Word, i: int, j: int) -> Word:
        k = self.flat_index(i, j)
        if w[k] == 0:
            raise WordError(f"({i}, {j}) not in the generalized support of {w}")
        return w[:k] + (w[k] - 1,) + w[k + 1:]

    def hamming_neighbours(self, w: Word) -> Iterator[Word]:
        """Words at Hamming distance exactly 1 from ``w``."""
        m, p = self.m, self.p
        for i in range(self.n):
            lo, hi = i * m, (i + 1) * m
            current = w[lo:hi]
            for chunk in itertools.product(range(p), repeat=m):
                if chunk != current:
                    yield w[:lo] + chunk + w[hi:]

    # subword relations
    def subword(self, x: Word, y: Word) -> bool:
        """``x ⊂ y``: coefficient-wise less or equal."""
        self._check(x, y)
        return all(a <= b for a, b in zip(x, y))

    def subword1(self, x: Word, y: Word, relation: str = "generalized") -> bool:
        """``x ⊂₁ y``: ``x ⊂ y`` and the supports of x and y - x are disjoint.

        ``relation="generalized"`` compares generalized supports;
        ``"coordinate"`` compares Hamming supports, so x is y with some
        whole coordinates zeroed.
        """
        _check_relation(relation)
        if not self.subword(x, y):
            return False
        diff = self.sub(y, x)
        if relation == "generalized":
            return not any(a and b for a, b in zip(x, diff))
        return not (self.support(x) & self.support(diff))

    def subwords1(self, y: Word, relation: str = "generalized") -> Iterator[Word]:
        """Every x with ``x ⊂₁ y``, y included."""
        _check_relation(relation)
        self._require_sf(y)
        blocks = self._blocks(y, relation, nonzero=True)
        for mask in range(1 << len(blocks)):
            x = list(y)
            for b, (lo, hi) in enumerate(blocks):
                if mask >> b & 1:
                    x[lo:hi] = [0] * (hi - lo)
            yield tuple(x)

    def superwords1(self, x: Word, relation: str = "generalized") -> Iterator[Word]:
        """Every y with ``x ⊂₁ y``: the zero blocks of x filled arbitrarily."""
        _check_relation(relation)
        self._require_sf(x)
        blocks = self._blocks(x, relation, nonzero=False)
        widths = [hi - lo for lo, hi in blocks]
        for fill in itertools.product(range(self.p), repeat=sum(widths)):
            y = list(x)
            pos = 0
            for (lo, hi), w in zip(blocks, widths):
                y[lo:hi] = fill[pos:pos + w]
                pos += w
            yield tuple(y)

    def _blocks(self, w: Word, relation: str, nonzero: bool) -> list[tuple[int, int]]:
        size = 1 if relation == "generalized" else self.m
        return [(k, k + size) for k in range(0, self.nm, size)
                if any(w[k:k + size]) == nonzero]

    # text notation: digits of a coordinate joined by commas, coordinates by spaces
    def parse(self, text: str) -> Word:
        parts = text.split()
        if len(parts) != self.n:
            raise WordError(f"expected {self.n} coordinates in {text!r}")
        out: list[int] = []
        for part in parts:
            digits = [int(d) for d in part.split(",")]
            if len(digits) != self.m or any(not 0 <= d < self.p for d in digits):
                raise WordError(f"bad field element {part!r} for GF({self.p}^{self.m})")
            out.extend(digits)
        return tuple(out)

    def format(self, w: Word) -> str:
        m = self.m
        return " ".join(",".join(map(str, w[k:k + m])) for k in range(0, self.nm, m))


SUBWORD_RELATIONS = ("generalized", "coordinate")


def _check_relation(relation: str) -> None:
    if relation not in SUBWORD_RELATIONS:
        raise WordError(f"relation must be one of {SUBWORD_RELATIONS}, got {relation!r}")


# admissible tie-breakers: key functions on monoid coefficient tuples
TieBreaker = Callable[[Word], Hashable]


def _lex(w: Word) -> Word:
    return w


def _revlex(w: Word) -> Word:
    return w[::-1]


def _deglex(w: Word) -> tuple[int, Word]:
    return (sum(w), w)


TIE_BREAKERS: dict[str, TieBreaker] = {
    "lex": _lex,
    "revlex": _revlex,
    "deglex": _deglex,
}


def admissibility_violations(key: TieBreaker, nm: int, bound: int = 3,
                             samples: int = 2000, seed: int = 0) -> list[str]:
    """Sample the two admissibility axioms on tuples with coefficients <= bound."""
    rng = random.Random(seed)
    zero = (0,) * nm

    def rand() -> Word:
        return tuple(rng.randint(0, bound) for _ in range(nm))

    bad = []
    for _ in range(samples):
        x, y, z = rand(), rand(), rand()
        if x != zero and not key(zero) < key(x):
            bad.append(f"0 is not below {x}")
        if key(x) == key(y) and x != y:
            bad.append(f"{x} and {y} tie")
        if key(x) < key(y):
            xz = tuple(a + b for a, b in zip(x, z))
            yz = tuple(a + b for a, b in zip(y, z))
            if not key(xz) < key(yz):
                bad.append(f"{x} < {y} but not after adding {z}")
    return bad


LT, EQ, GT = -1, 0, 1


class WeightCompatibleOrder:
    """Hamming weight first, an admissible order on the monoid breaks ties.

    ``tie_breaker`` is a name from :data:`TIE_BREAKERS` or a key function on
    coefficient tuples; custom keys are sampled for admissibility.
    """

    def __init__(self, space: WordSpace, tie_breaker: Union[str, TieBreaker] = "lex"):
        self.space = space
        if isinstance(tie_breaker, str):
            if tie_breaker not in TIE_BREAKERS:
                raise WordError(f"unknown tie-breaker {tie_breaker!r}; "
                                f"choose from {sorted(TIE_BREAKERS)}")
            self.name = tie_breaker
            self._tie = TIE_BREAKERS[tie_breaker]
        else:
            bad = admissibility_violations(tie_breaker, space.nm)
            if bad:
                raise WordError(f"tie-breaker is not admissible: {bad[0]}")
            self.name = getattr(tie_breaker, "__name__", "custom")
            self._tie = tie_breaker

    def __repr__(self) -> str:
        return f"WeightCompatibleOrder({self.name!r})"

    @property
    def tie_key(self) -> TieBreaker:
        return self._tie

    def key(self, w: Word) -> tuple[int, Hashable]:
        return (self.space.weight(w), self._tie(w))

    def compare(self, x: Word, y: Word) -> int:
        kx, ky = self.key(x), self.key(y)
        if kx == ky:
            return EQ
        return LT if kx < ky else GT

    def less(self, x: Word, y: Word) -> bool:
        return self.key(x) < self.key(y)

    def minimum(self, words: Iterable[Word]) -> Word:
        return min(words, key=self.key)

    def sorted(self, words: Iterable[Word]) -> list[Word]:
        return sorted(words, key=self.key)


def check_subword_implies_less(order: WeightCompatibleOrder) -> bool:
    """Exhaustively check that ``a ⊂ b, a != b`` implies ``a ≺ b`` on standard forms."""
    space = order.space
    words = list(space.words())
    for a in words:
        for b in words:
            if a != b and space.subword(a, b) and not order.less(a, b):
                return False
    return True

