"""Incremental construction of every coset leader.

:func:`build_list` grows an ordered set of words from 0 by adding canonical
generators ``e_ij``, processing words in increasing weight-compatible order.
Whether a processed word ``v`` is expanded depends on how far its weight is
above the weight of ``N(v)``, the first (hence smallest) word of its coset
seen so far:

* excess 0 or 1: every ``v + e_ij`` that stays in standard form is added;
* excess 2: only ``v + e_ij`` where coordinate ``i`` of ``v`` is nonzero
  and coordinate ``i`` is empty in every leader of v's coset;
* larger excess: nothing.

The result contains all coset leaders and every word at Hamming distance at
most one from a coset leader.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field

from .code import CosetRecord, LinearCode, SyndromeTable, Syndrome, check_bound
from .report import Report
from .wordspace import WeightCompatibleOrder, Word, WordError, check_subword_implies_less

Edge = tuple[Word, tuple[int, int]]


@dataclass
class Member:
    word: Word
    syndrome: Syndrome
    weight: int
    excess: int = -1  # weight above N(word); set when processed
    criterion: int | None = None  # 1, 2 or 3; None when no criterion applied
    parents: list[Edge] = field(default_factory=list)


@dataclass
class ListClosure:
    code: LinearCode
    order: WeightCompatibleOrder
    members: dict[Word, Member]
    processed: list[Word]
    table: SyndromeTable

    def __contains__(self, w: Word) -> bool:
        return w in self.members

    def __len__(self) -> int:
        return len(self.members)

    def record(self, w: Word) -> CosetRecord:
        return self.table[self.code.syndrome(w)]

    def coset_weight(self, w: Word) -> int:
        return self.record(w).weight

    def canonical(self, w: Word) -> Word:
        """N(w): the smallest word of w's coset."""
        return self.record(w).canonical_leader

    def is_leader(self, w: Word) -> bool:
        return self.code.space.weight(w) == self.coset_weight(w)

    def leaders_of(self, w: Word) -> list[Word]:
        return self.record(w).leaders


CRITERION3_RULES = ("coordinate", "generator")


def build_list(code: LinearCode, order: WeightCompatibleOrder | None = None,
               max_members: int | None = None,
               criterion3: str = "coordinate") -> ListClosure:
    """Run the closure from 0 until no new words are produced.

    ``criterion3`` selects how excess-2 words pick their generators:
    ``"coordinate"`` requires coordinate i of v to be nonzero (any j with
    ``v + e_ij`` in standard form); ``"generator"`` requires ``(i, j)`` itself
    in the generalized support of v.  The two agree over prime fields.  Only
    ``"coordinate"`` reaches every word near the leader set over GF(p^m)
    with m > 1; ``"generator"`` is kept for comparison.
    """
    if criterion3 not in CRITERION3_RULES:
        raise ValueError(f"criterion3 must be one of {CRITERION3_RULES}")
    space = code.space
    if order is None:
        order = WeightCompatibleOrder(space)
    elif order.space != space:
        raise WordError("order is defined on a different word space")
    check_bound(code.num_cosets, code.max_enum, "syndrome table")
    if max_members is None:
        max_members = code.max_enum
    # cheap guard; full check is exponential in n*m
    if space.size <= 4096 and not check_subword_implies_less(order):
        raise WordError(f"{order!r} does not satisfy a ⊂ b => a ≺ b")

    table = SyndromeTable(code.num_cosets)
    zero = space.zero
    members = {zero: Member(zero, code.syndrome(zero), 0)}
    counter = itertools.count()
    heap = [(order.key(zero), next(counter), zero)]
    processed: list[Word] = []
    gens = list(space.generators())
    p = space.p

    while heap:
        _, _, v = heapq.heappop(heap)
        mem = members[v]
        processed.append(v)
        rec = table.get(mem.syndrome)
        if rec is None:
            rec = CosetRecord(mem.syndrome, mem.weight, v, [v])
            table[mem.syndrome] = rec
        elif mem.weight == rec.weight:
            rec.leaders.append(v)
        mem.excess = mem.weight - rec.weight

        if mem.excess in (0, 1):
            mem.criterion = mem.excess + 1
            succ = [(i, j) for (i, j) in gens if v[(i - 1) * space.m + j - 1] <= p - 2]
        elif mem.excess == 2:
            mem.criterion = 3
            empty_rows = {i for i in range(1, space.n + 1)
                          if not any(any(space.coordinate(lw, i)) for lw in rec.leaders)}
            if criterion3 == "coordinate":
                rows = {i for i in empty_rows if any(space.coordinate(v, i))}
                succ = [(i, j) for (i, j) in gens
                        if i in rows and v[(i - 1) * space.m + j - 1] <= p - 2]
            else:
                succ = [(i, j) for (i, j) in gens
                        if i in empty_rows and 1 <= v[(i - 1) * space.m + j - 1] <= p - 2]
        else:
            succ = []

        for (i, j) in succ:
            u = space.add_generator(v, i, j)
            edge = (v, (i, j))
            if u in members:
                members[u].parents.append(edge)
                continue
            if len(members) >= max_members:
                check_bound(len(members) + 1, max_members, "List closure")
            members[u] = Member(u, code.syndrome(u), space.weight(u), parents=[edge])
            heapq.heappush(heap, (order.key(u), next(counter), u))

    return ListClosure(code, order, members, processed, table)


def coset_leaders(lc: ListClosure) -> set[Word]:
    return {w for rec in lc.table.values() for w in rec.leaders}


def canonical_leaders(lc: ListClosure) -> set[Word]:
    return {rec.canonical_leader for rec in lc.table.values()}


def _require_complete(lc: ListClosure) -> None:
    if not lc.table.complete:
        raise ValueError("closure did not reach every coset")


def within_1_of_CL(lc: ListClosure, w: Word) -> bool:
    """Whether ``d_H(w, CL(C)) <= 1``, by probing every single-coordinate change."""
    _require_complete(lc)
    if lc.is_leader(w):
        return True
    return any(lc.is_leader(u) for u in lc.code.space.hamming_neighbours(w))


def distance_to_leaders(lc: ListClosure, w: Word, leaders: set[Word] | None = None) -> int:
    """Brute-force ``d_H(w, CL(C))`` over the whole leader set."""
    space = lc.code.space
    if leaders is None:
        leaders = coset_leaders(lc)
    return min(space.distance(w, v) for v in leaders)


def verify_ancestor_bound(lc: ListClosure) -> Report:
    """Removing one generator from a coset leader leaves excess at most 1."""
    _require_complete(lc)
    space = lc.code.space
    rep = Report("ancestor bound: w leader, w = y + e_ij => wt(y) <= wt(y + C) + 1")
    for w in sorted(coset_leaders(lc)):
        for (i, j) in space.gen_support(w):
            y = space.remove_generator(w, i, j)
            rep.checked += 1
            if space.weight(y) > lc.coset_weight(y) + 1:
                rep.fail(f"leader {space.format(w)} minus e_{i}{j}: "
                         f"wt {space.weight(y)} > {lc.coset_weight(y)} + 1")
    return rep


def verify_descendant_bound(lc: ListClosure) -> Report:
    """Words at distance 1 from CL(C): excess of ``w - e_ij`` is at most 2, with
    the support condition at position i when it equals 2."""
    _require_complete(lc)
    code = lc.code
    space = code.space
    code.check_space_bound()
    leaders = coset_leaders(lc)
    rep = Report("descendant bound: d(w, CL) = 1, w = y + e_ij => wt(y) <= wt(y + C) + 2")
    for w in space.words():
        if distance_to_leaders(lc, w, leaders) != 1:
            continue
        for (i, j) in space.gen_support(w):
            y = space.remove_generator(w, i, j)
            rep.checked += 1
            wy, cw = space.weight(y), lc.coset_weight(y)
            if wy > cw + 2:
                rep.fail(f"{space.format(w)} minus e_{i}{j}: wt {wy} > {cw} + 2")
            elif wy == cw + 2:
                if not any(space.coordinate(y, i)):
                    rep.fail(f"equality at {space.format(w)}, e_{i}{j}: y is empty at {i}")
                for v in lc.leaders_of(y):
                    if any(space.coordinate(v, i)):
                        rep.fail(f"equality at {space.format(w)}, e_{i}{j}: "
                                 f"leader {space.format(v)} is nonzero at {i}")
    return rep


def verify_completeness(lc: ListClosure, leaders: set[Word] | None = None) -> Report:
    """Every word within distance 1 of CL(C) (brute force) is a member.

    Pass ``leaders`` from an independent enumeration to avoid trusting the
    closure's own leader sets.
    """
    space = lc.code.space
    lc.code.check_space_bound()
    if leaders is None:
        leaders = coset_leaders(lc)
    rep = Report("completeness: d(w, CL) <= 1 => w in List")
    for w in space.words():
        if distance_to_leaders(lc, w, leaders) <= 1:
            rep.checked += 1
            if w not in lc:
                rep.fail(f"{space.format(w)} is missing")
    excess = sum(1 for mem in lc.members.values() if mem.excess > 2)
    if excess:
        rep.note(f"{excess} members exceed N-weight + 2 (stored, not expanded)")
    return rep
