"""Exact arithmetic in GF(p^m) built as F_p[beta]/(f).

Elements are stored as their m p-adic coordinates ``(a1, ..., am)`` meaning
``a1 + a2*beta + ... + am*beta**(m-1)``.  Internally every element also has
an integer index ``a1 + a2*p + ... + am*p**(m-1)`` which the rest of the
package uses for table lookups.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

MAX_FIELD_ORDER = 256

# Fixed defining polynomials, ascending coefficients, monic.
DEFAULT_POLYNOMIALS: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),  # beta^2 + beta + 1
    (3, 2): (1, 0, 1),  # beta^2 + 1
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (5, 2): (2, 0, 1),
    (3, 3): (1, 2, 0, 1),
}


class FieldError(ValueError):
    """Bad field parameters, mismatched fields or division by zero."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


def _trim(poly: list[int]) -> list[int]:
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


def poly_mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of ``a`` divided by ``b`` over F_p (ascending coefficients)."""
    rem = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    if not b:
        raise FieldError("division by the zero polynomial")
    lead_inv = pow(b[-1], p - 2, p)
    while len(rem) >= len(b):
        shift = len(rem) - len(b)
        factor = rem[-1] * lead_inv % p
        for i, c in enumerate(b):
            rem[shift + i] = (rem[shift + i] - factor * c) % p
        _trim(rem)
    return rem


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg(f)//2."""
    deg = len(f) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not poly_mod(f, list(low) + [1], p):
                return False
    return True


def find_irreducible(p: int, m: int) -> tuple[int, ...]:
    for low in itertools.product(range(p), repeat=m):
        f = tuple(low) + (1,)
        if is_irreducible(f, p):
            return f
    raise FieldError(f"no irreducible polynomial of degree {m} over F_{p}")


class GaloisField:
    """The field GF(p^m) with precomputed addition and multiplication tables.

    >>> F = GaloisField(2, 2)
    >>> b = F.element((0, 1))
    >>> (b * b).coords
    (1, 1)
    """

    def __init__(self, p: int, m: int = 1, poly: Sequence[int] | None = None):
        if not is_prime(p):
            raise FieldError(f"p={p} is not prime")
        if m < 1:
            raise FieldError(f"extension degree must be >= 1, got {m}")
        if p**m > MAX_FIELD_ORDER:
            raise FieldError(f"GF({p}^{m}) exceeds the supported order {MAX_FIELD_ORDER}")
        if m == 1:
            poly = (0, 1)
        elif poly is None:
            poly = DEFAULT_POLYNOMIALS.get((p, m)) or find_irreducible(p, m)
        else:
            poly = tuple(int(c) % p for c in poly)
            if len(poly) != m + 1:
                raise FieldError(f"defining polynomial must have degree {m}")
            if poly[-1] != 1:
                raise FieldError("defining polynomial must be monic")
            if not is_irreducible(poly, p):
                raise FieldError(f"polynomial {poly} is reducible over F_{p}")
        self.p = p
        self.m = m
        self.q = p**m
        self.poly = tuple(poly)
        self._coords = [self._digits(x) for x in range(self.q)]
        q = self.q
        self._add = [self._index([(a + b) % p for a, b in zip(self._coords[x], self._coords[y])])
                     for x in range(q) for y in range(q)]
        self._mul = [self._poly_mul(x, y) for x in range(q) for y in range(q)]
        self._neg = [self._index([(-a) % p for a in self._coords[x]]) for x in range(q)]
        self._inv = [0] * q
        for x in range(1, q):
            self._inv[x] = next(y for y in range(1, q) if self._mul[x * q + y] == 1)

    def _digits(self, x: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.m):
            x, r = divmod(x, self.p)
            out.append(r)
        return tuple(out)

    def _index(self, coords: Sequence[int]) -> int:
        x = 0
        for c in reversed(coords):
            x = x * self.p + c
        return x

    def _poly_mul(self, x: int, y: int) -> int:
        a, b = self._coords[x], self._coords[y]
        prod = [0] * (2 * self.m - 1)
        for i, ai in enumerate(a):
            for j, bj in enumerate(b):
                prod[i + j] += ai * bj
        rem = poly_mod(prod, self.poly, self.p) if self.m > 1 else [prod[0] % self.p]
        rem = rem + [0] * (self.m - len(rem))
        return self._index(rem)

    # integer-index arithmetic, used on hot paths
    def iadd(self, x: int, y: int) -> int:
        return self._add[x * self.q + y]

    def imul(self, x: int, y: int) -> int:
        return self._mul[x * self.q + y]

    def ineg(self, x: int) -> int:
        return self._neg[x]

    def isub(self, x: int, y: int) -> int:
        return self._add[x * self.q + self._neg[y]]

    def iinv(self, x: int) -> int:
        if x == 0:
            raise FieldError("inverse of zero")
        return self._inv[x]

    def coords_of(self, x: int) -> tuple[int, ...]:
        return self._coords[x]

    def index_of(self, coords: Sequence[int]) -> int:
        if len(coords) != self.m or any(not 0 <= c < self.p for c in coords):
            raise FieldError(f"invalid coordinates {tuple(coords)} for GF({self.p}^{self.m})")
        return self._index(coords)

    # value-level API
    def element(self, coords: Sequence[int] | int) -> FieldElement:
        if isinstance(coords, int):
            coords = (coords,) if self.m == 1 else self._coords[coords]
        self.index_of(coords)
        return FieldElement(self, tuple(coords))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, (0,) * self.m)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, (1,) + (0,) * (self.m - 1))

    def elements(self) -> Iterator[FieldElement]:
        for x in range(self.q):
            yield FieldElement(self, self._coords[x])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GaloisField):
            return NotImplemented
        return (self.p, self.m, self.poly) == (other.p, other.m, other.poly)

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.poly))

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GaloisField({self.p})"
        return f"GaloisField({self.p}, {self.m}, poly={self.poly})"


@dataclass(frozen=True)
class FieldElement:
    field: GaloisField
    coords: tuple[int, ...]

    @property
    def index(self) -> int:
        return self.field._index(self.coords)

    def _check(self, other: FieldElement) -> None:
        if not isinstance(other, FieldElement) or other.field != self.field:
            raise FieldError("operands belong to different fields")

    def _wrap(self, x: int) -> FieldElement:
        return FieldElement(self.field, self.field.coords_of(x))

    def __add__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return self._wrap(self.field.iadd(self.index, other.index))

    def __sub__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return self._wrap(self.field.isub(self.index, other.index))

    def __mul__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return self._wrap(self.field.imul(self.index, other.index))

    def __truediv__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return self * other.inverse()

    def __neg__(self) -> FieldElement:
        return self._wrap(self.field.ineg(self.index))

    def inverse(self) -> FieldElement:
        return self._wrap(self.field.iinv(self.index))

    def __bool__(self) -> bool:
        return any(self.coords)

    def __repr__(self) -> str:
        return ",".join(map(str, self.coords))


def add(x: FieldElement, y: FieldElement) -> FieldElement:
    return x + y


def sub(x: FieldElement, y: FieldElement) -> FieldElement:
    return x - y


def mul(x: FieldElement, y: FieldElement) -> FieldElement:
    return x * y


def neg(x: FieldElement) -> FieldElement:
    return -x


def inv(x: FieldElement) -> FieldElement:
    return x.inverse()


def padic_coords(x: FieldElement) -> tuple[int, ...]:
    """The p-adic coordinates ``(a1, ..., am)`` used for generalized supports."""
    return x.coords


def field_axiom_violations(F: GaloisField) -> list[str]:
    """Exhaustively check the field axioms; returns human-readable failures."""
    bad = []
    q = F.q
    add_, mul_ = F.iadd, F.imul
    for x in range(q):
        if add_(x, 0) != x or mul_(x, 1) != x:
            bad.append(f"identity fails at {F.coords_of(x)}")
        if add_(x, F.ineg(x)) != 0:
            bad.append(f"additive inverse fails at {F.coords_of(x)}")
        if x and mul_(x, F.iinv(x)) != 1:
            bad.append(f"multiplicative inverse fails at {F.coords_of(x)}")
        for y in range(q):
            if add_(x, y) != add_(y, x) or mul_(x, y) != mul_(y, x):
                bad.append(f"commutativity fails at {F.coords_of(x)}, {F.coords_of(y)}")
            for z in range(q):
                if add_(add_(x, y), z) != add_(x, add_(y, z)):
                    bad.append("additive associativity fails")
                if mul_(mul_(x, y), z) != mul_(x, mul_(y, z)):
                    bad.append("multiplicative associativity fails")
                if mul_(x, add_(y, z)) != add_(mul_(x, y), mul_(x, z)):
                    bad.append("distributivity fails")
    return bad
