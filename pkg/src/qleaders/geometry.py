"""Brute-force ground truth: cosets, Voronoi regions, boundaries, zero
neighbours, test sets and leader codewords, each evaluated directly from
its definition by scanning F_q^n and the code.

Nothing here uses syndromes, the parity-check matrix or the closure of
:mod:`qleaders.leaderset`; cosets are formed as literal sets ``y + C``.
The functions are deliberately naive.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .code import LinearCode
from .wordspace import WeightCompatibleOrder, Word


@dataclass(frozen=True)
class Coset:
    words: frozenset[Word]
    weight: int
    leaders: frozenset[Word]


@dataclass(frozen=True)
class Region:
    owner: Word
    members: frozenset[Word]


def all_words(code: LinearCode) -> list[Word]:
    code.check_space_bound()
    return list(code.space.words())


def cosets(code: LinearCode) -> list[Coset]:
    """Partition F_q^n into cosets ``y + C`` and record their minimum-weight words."""
    space = code.space
    C = list(code.codewords())
    seen: set[Word] = set()
    out = []
    for y in all_words(code):
        if y in seen:
            continue
        members = frozenset(space.add(y, c) for c in C)
        seen |= members
        weight = min(space.weight(w) for w in members)
        leaders = frozenset(w for w in members if space.weight(w) == weight)
        out.append(Coset(members, weight, leaders))
    return out


def coset_leaders(code: LinearCode) -> set[Word]:
    return {w for cs in cosets(code) for w in cs.leaders}


def canonical_leaders(code: LinearCode, order: WeightCompatibleOrder) -> set[Word]:
    """The ≺-minimum of every coset."""
    return {order.minimum(cs.words) for cs in cosets(code)}


def distance_to(code: LinearCode, y: Word, A: Iterable[Word]) -> int:
    space = code.space
    return min(space.distance(y, a) for a in A)


def voronoi(code: LinearCode, z: Word, literal: bool = False) -> Region:
    """Words at least as close to ``z`` as to every competing codeword.

    By default the competitors are all of C, so that D(0) is the set of
    coset leaders and D(z) is the usual nearest-codeword region.  With
    ``literal=True`` the zero codeword is dropped from the competitors even
    when ``z != 0``.
    """
    space = code.space
    C = list(code.codewords())
    if z not in C:
        raise ValueError(f"{space.format(z)} is not a codeword")
    rivals = [c for c in C if not (literal and not any(c))]
    members = frozenset(
        y for y in all_words(code)
        if all(space.distance(y, z) <= space.distance(y, c) for c in rivals)
    )
    return Region(z, members)


def x_operator(code: LinearCode, A: Iterable[Word]) -> set[Word]:
    """Words whose minimum distance to ``A`` is exactly 1."""
    # min distance exactly 1 <=> y outside A with a Hamming neighbour inside A
    A = set(A)
    space = code.space
    return {
        y for y in all_words(code)
        if y not in A and any(u in A for u in space.hamming_neighbours(y))
    }


def boundary(code: LinearCode, A: Iterable[Word]) -> set[Word]:
    """X(A) together with X of the complement of A in F_q^n."""
    A = set(A)
    complement = set(all_words(code)) - A
    return x_operator(code, A) | x_operator(code, complement)


def regions(code: LinearCode, literal: bool = False) -> dict[Word, Region]:
    return {c: voronoi(code, c, literal) for c in code.codewords()}


def zero_neighbours(code: LinearCode, literal: bool = False) -> set[Word]:
    """Nonzero codewords whose region boundary meets the boundary of D(0)."""
    space = code.space
    regs = regions(code, literal)
    zero_boundary = boundary(code, regs[space.zero].members)
    return {
        z for z, reg in regs.items()
        if any(z) and boundary(code, reg.members) & zero_boundary
    }


def is_test_set(code: LinearCode, T: Iterable[Word]) -> bool:
    """Every word is in D(0) or has its weight reduced by subtracting some v in T."""
    space = code.space
    T = list(T)
    d0 = voronoi(code, space.zero).members
    for y in all_words(code):
        if y in d0:
            continue
        wy = space.weight(y)
        if not any(space.weight(space.sub(y, v)) < wy for v in T):
            return False
    return True


def leader_codewords(code: LinearCode) -> set[Word]:
    """Leader codewords straight from their definition.

    Every ``n1`` in F_q^n and every generator with ``n1 + e_ij`` in standard
    form, both within distance 1 of the leader set, combined with every
    coset leader ``n2`` such that ``n1 + e_ij - n2`` is a nonzero codeword.
    """
    space = code.space
    leaders = coset_leaders(code)
    near = {y for y in all_words(code) if distance_to(code, y, leaders) <= 1}
    C = set(code.codewords())
    out = set()
    for n1 in near:
        for (i, j) in space.generators():
            if not space.can_add(n1, i, j):
                continue
            w = space.add_generator(n1, i, j)
            if w not in near:
                continue
            for n2 in leaders:
                c = space.sub(w, n2)
                if any(c) and c in C:
                    out.add(c)
    return out
