"""Linear codes over GF(q): generator/parity-check matrices, syndromes,
codeword enumeration and the coset records shared by the other modules.

Matrices hold field-element indices (see :mod:`qleaders.galois`); words are
the flat coefficient tuples of :mod:`qleaders.wordspace`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, Sequence

from .galois import FieldError, GaloisField
from .wordspace import Word, WordError, WordSpace

DEFAULT_MAX_ENUM = 2**20

Matrix = list[list[int]]
Syndrome = tuple[int, ...]


class ResourceBoundError(RuntimeError):
    """An exhaustive enumeration would exceed its configured bound."""

    def __init__(self, what: str, count: int, bound: int):
        super().__init__(f"{what} needs {count} items, over the max-enum bound of {bound}")
        self.what = what
        self.count = count
        self.bound = bound


class FixtureError(ValueError):
    """Malformed code fixture; ``lineno`` is 1-based."""

    def __init__(self, message: str, lineno: int | None = None):
        prefix = f"line {lineno}: " if lineno is not None else ""
        super().__init__(prefix + message)
        self.lineno = lineno


def check_bound(count: int, bound: int, what: str) -> None:
    if count > bound:
        raise ResourceBoundError(what, count, bound)


def row_reduce(F: GaloisField, M: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form over GF(q) and the pivot columns."""
    R = [list(row) for row in M]
    rows = len(R)
    cols = len(R[0]) if R else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if R[i][c]), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        inv = F.iinv(R[r][c])
        R[r] = [F.imul(inv, x) for x in R[r]]
        for i in range(rows):
            if i != r and R[i][c]:
                f = R[i][c]
                R[i] = [F.isub(a, F.imul(f, b)) for a, b in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
    return R, pivots


def parity_check_from_generator(F: GaloisField, G: Matrix) -> Matrix:
    """H with G*H^T = 0, via the standard form [I | A] of G.

    Columns are permuted so the pivots come first, H' = [A^T | -I] is built
    for the permuted code, and the permutation is undone on H'.
    """
    k, n = len(G), len(G[0])
    R, pivots = row_reduce(F, G)
    if len(pivots) != k:
        raise FieldError(f"generator matrix has rank {len(pivots)}, expected {k}")
    others = [c for c in range(n) if c not in pivots]
    H = [[0] * n for _ in range(n - k)]
    minus_one = F.ineg(1)
    for r, c in enumerate(others):
        for i, pc in enumerate(pivots):
            H[r][pc] = R[i][c]
        H[r][c] = minus_one
    return H


@dataclass
class CosetRecord:
    """One coset: its weight, the canonical leader N and every coset leader."""

    syndrome: Syndrome
    weight: int
    canonical_leader: Word
    leaders: list[Word] = field(default_factory=list)


class SyndromeTable(dict):
    """Mapping syndrome -> :class:`CosetRecord`; complete at q^(n-k) entries."""

    def __init__(self, expected: int):
        super().__init__()
        self.expected = expected

    @property
    def complete(self) -> bool:
        return len(self) == self.expected

    def coset_weight(self, s: Syndrome) -> int:
        return self[s].weight


class LinearCode:
    """An [n, k] linear code over GF(q) given by a generator matrix.

    >>> F = GaloisField(3)
    >>> C = LinearCode(F, [[1, 1]])
    >>> C.H
    [[1, 2]]
    """

    def __init__(self, field: GaloisField, G: Sequence[Sequence[int]],
                 max_enum: int = DEFAULT_MAX_ENUM, name: str | None = None):
        G = [[int(x) for x in row] for row in G]
        if not G or not G[0]:
            raise FieldError("empty generator matrix")
        n = len(G[0])
        if any(len(row) != n for row in G):
            raise FieldError("generator rows have different lengths")
        if any(not 0 <= x < field.q for row in G for x in row):
            raise FieldError("generator entry outside the field")
        self.field = field
        self.G = G
        self.n = n
        self.k = len(G)
        self.name = name
        self.max_enum = max_enum
        self.space = WordSpace(field, n)
        self.H = parity_check_from_generator(field, G)
        self.generator_words = [self.space.from_vector(row) for row in G]
        # contribution of field value a at coordinate i to the syndrome
        self._syndrome_columns = [
            [tuple(field.imul(a, self.H[r][i]) for r in range(n - self.k)) for a in range(field.q)]
            for i in range(n)
        ]

    def check_space_bound(self, what: str = "enumerating F_q^n") -> None:
        check_bound(self.space.size, self.max_enum, what)

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def redundancy(self) -> int:
        return self.n - self.k

    @property
    def num_cosets(self) -> int:
        return self.q ** (self.n - self.k)

    @property
    def num_codewords(self) -> int:
        return self.q**self.k

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<LinearCode{label} [{self.n},{self.k}] over GF({self.q})>"

    def syndrome(self, w: Word) -> Syndrome:
        if len(w) != self.space.nm:
            raise WordError(f"word length {len(w)} does not match the code")
        F = self.field
        s = [0] * (self.n - self.k)
        for i, a in enumerate(self.space.to_vector(w)):
            if a:
                col = self._syndrome_columns[i][a]
                s = [F.iadd(x, y) for x, y in zip(s, col)]
        return tuple(s)

    def is_codeword(self, w: Word) -> bool:
        return not any(self.syndrome(w))

    def codewords(self) -> Iterator[Word]:
        """All q^k codewords, as combinations of the generator rows."""
        check_bound(self.num_codewords, self.max_enum, "enumerating codewords")
        F, space = self.field, self.space
        for coeffs in itertools.product(range(F.q), repeat=self.k):
            vec = [0] * self.n
            for a, row in zip(coeffs, self.G):
                if a:
                    vec = [F.iadd(x, F.imul(a, g)) for x, g in zip(vec, row)]
            yield space.from_vector(vec)

    def min_distance(self) -> int:
        weights = [self.space.weight(c) for c in self.codewords() if any(c)]
        return min(weights) if weights else self.n + 1

    def error_capacity(self) -> int:
        return (self.min_distance() - 1) // 2

    # fixtures
    @classmethod
    def from_text(cls, text: str, max_enum: int = DEFAULT_MAX_ENUM,
                  name: str | None = None) -> LinearCode:
        return parse_code_fixture(text, max_enum=max_enum, name=name)

    @classmethod
    def load(cls, path: str | Path, max_enum: int = DEFAULT_MAX_ENUM) -> LinearCode:
        path = Path(path)
        return parse_code_fixture(path.read_text(), max_enum=max_enum, name=path.stem)

    def to_text(self) -> str:
        F = self.field
        lines = [f"p {F.p}", f"m {F.m}"]
        if F.m > 1:
            lines.append("poly " + " ".join(map(str, F.poly)))
        lines += [f"n {self.n}", f"k {self.k}", "G"]
        lines += [self.space.format(w) for w in self.generator_words]
        return "\n".join(lines) + "\n"


def covering_radius(code: LinearCode, table: SyndromeTable) -> int:
    if not table.complete:
        raise ValueError(f"syndrome table has {len(table)} of {table.expected} cosets")
    return max(rec.weight for rec in table.values())


def parse_code_fixture(text: str, max_enum: int = DEFAULT_MAX_ENUM,
                       name: str | None = None) -> LinearCode:
    """Parse the line-oriented code fixture format.

    ``p``, ``m``, optional ``poly`` (when m > 1), ``n``, ``k``, ``G`` then k
    rows of comma-digit field elements. Blank lines and ``#`` comments are
    skipped; reported line numbers refer to the raw text.
    """
    lines = [(no, ln.split("#", 1)[0].strip()) for no, ln in enumerate(text.splitlines(), 1)]
    lines = [(no, ln) for no, ln in lines if ln]
    pos = 0

    def next_line(expect: str) -> tuple[int, list[str]]:
        nonlocal pos
        if pos >= len(lines):
            raise FixtureError(f"unexpected end of file, expected {expect!r}",
                               lines[-1][0] + 1 if lines else 1)
        no, ln = lines[pos]
        pos += 1
        return no, ln.split()

    def keyed_int(key: str) -> int:
        no, parts = next_line(key)
        if len(parts) != 2 or parts[0] != key:
            raise FixtureError(f"expected '{key} <int>', got {' '.join(parts)!r}", no)
        try:
            return int(parts[1])
        except ValueError:
            raise FixtureError(f"{key} must be an integer", no) from None

    p = keyed_int("p")
    m = keyed_int("m")
    poly = None
    if m > 1:
        no, parts = next_line("poly")
        if parts[0] != "poly":
            raise FixtureError("expected 'poly <c0> ... <cm>' for m > 1", no)
        try:
            poly = [int(c) for c in parts[1:]]
        except ValueError:
            raise FixtureError("poly coefficients must be integers", no) from None
    try:
        F = GaloisField(p, m, poly)
    except FieldError as exc:
        raise FixtureError(str(exc), lines[pos - 1][0]) from None
    n = keyed_int("n")
    k = keyed_int("k")
    if not 1 <= k <= n:
        raise FixtureError(f"need 1 <= k <= n, got k={k}, n={n}", lines[pos - 1][0])
    no, parts = next_line("G")
    if parts != ["G"]:
        raise FixtureError("expected 'G'", no)
    space = WordSpace(F, n)
    G = []
    for _ in range(k):
        no, parts = next_line("generator row")
        try:
            G.append(list(space.to_vector(space.parse(" ".join(parts)))))
        except (WordError, ValueError) as exc:
            raise FixtureError(str(exc), no) from None
    if pos != len(lines):
        raise FixtureError("trailing content after the generator rows", lines[pos][0])
    try:
        return LinearCode(F, G, max_enum=max_enum, name=name)
    except FieldError as exc:
        raise FixtureError(str(exc)) from None
