"""Correctable and uncorrectable errors, trial sets and gradient-like decoding.

The correctable errors E0 are the ≺-smallest words of the cosets; E1 is the
rest of F_q^n.  Under the relation ⊂₁ (zeroing part of a word's generalized
support) the two sets form a monotone structure, so E1 is described by its
minimal elements M1.  A trial set is a set T of nonzero codewords such that
``y`` is correctable exactly when no ``c`` in T gives ``y - c ≺ y``; the
gradient-like decoder subtracts such codewords until none helps.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .code import LinearCode
from .leadercw import LeaderCodeword
from .leaderset import ListClosure, canonical_leaders
from .report import Report
from .wordspace import SUBWORD_RELATIONS, WeightCompatibleOrder, Word, WordError

LH_MINIMALITY = ("subword1", "order")
TRIAL_MINIMALITY = ("inclusion", "cardinality")
DEFAULT_RELATION = "coordinate"


class TrialSetError(RuntimeError):
    """An extracted set failed its own verification."""


@dataclass
class ErrorPartition:
    code: LinearCode
    order: WeightCompatibleOrder
    E0: frozenset[Word]
    E1: frozenset[Word]
    relation: str = DEFAULT_RELATION

    @cached_property
    def codewords(self) -> list[Word]:
        return list(self.code.codewords())

    @cached_property
    def nonzero_codewords(self) -> list[Word]:
        return [c for c in self.codewords if any(c)]

    @cached_property
    def M1(self) -> frozenset[Word]:
        return frozenset(minimal_uncorrectable(self))

    @cached_property
    def M0(self) -> frozenset[Word]:
        return frozenset(maximal_correctable(self))

    def h_set(self, y: Word) -> frozenset[Word]:
        return h_set(y, self.code, self.order, self.codewords)


def error_partition(lc: ListClosure, relation: str = DEFAULT_RELATION) -> ErrorPartition:
    """Split F_q^n into correctable and uncorrectable errors.

    ``relation`` picks the ⊂₁ flavour used for M1, M0 and larger halves:
    ``"coordinate"`` zeroes whole coordinates, ``"generalized"`` zeroes
    single generalized-support entries.  They coincide over prime fields.
    """
    if relation not in SUBWORD_RELATIONS:
        raise ValueError(f"relation must be one of {SUBWORD_RELATIONS}")
    code = lc.code
    code.check_space_bound()
    E0 = frozenset(canonical_leaders(lc))
    E1 = frozenset(w for w in code.space.words() if w not in E0)
    return ErrorPartition(code, lc.order, E0, E1, relation)


def h_set(y: Word, code: LinearCode, order: WeightCompatibleOrder,
          codewords: Iterable[Word] | None = None) -> frozenset[Word]:
    """Codewords ``c`` with ``y - c ≺ y``; empty exactly when y is correctable."""
    space = code.space
    if codewords is None:
        codewords = code.codewords()
    ky = order.key(y)
    return frozenset(c for c in codewords if order.key(space.sub(y, c)) < ky)


def minimal_uncorrectable(ep: ErrorPartition) -> set[Word]:
    space = ep.code.space
    return {
        y for y in ep.E1
        if all(x in ep.E0 for x in space.subwords1(y, ep.relation) if x != y)
    }


def maximal_correctable(ep: ErrorPartition) -> set[Word]:
    space = ep.code.space
    return {
        x for x in ep.E0
        if all(y not in ep.E0 for y in space.superwords1(x, ep.relation) if y != x)
    }


def larger_halves(c: Word, code: LinearCode, order: WeightCompatibleOrder,
                  minimality: str = "subword1",
                  relation: str = DEFAULT_RELATION) -> set[Word]:
    """Minimal words ``u`` with ``u - c ≺ u``.

    ``minimality="subword1"`` keeps the ⊂₁-minimal such words;
    ``"order"`` keeps only the ≺-smallest one.
    """
    if not any(c):
        raise WordError("larger halves are defined for nonzero codewords only")
    if minimality not in LH_MINIMALITY:
        raise ValueError(f"minimality must be one of {LH_MINIMALITY}")
    space = code.space
    code.check_space_bound()

    def wins(u: Word) -> bool:
        return order.less(space.sub(u, c), u)

    S = {u for u in space.words() if wins(u)}
    if minimality == "order":
        return {order.minimum(S)}
    return {u for u in S
            if not any(x != u and x in S for x in space.subwords1(u, relation))}


def verify_larger_half_sandwich(ep: ErrorPartition, codewords: Iterable[Word] | None = None,
                                minimality: str = "subword1") -> Report:
    """``wt(c) <= 2 wt(u) <= wt(c) + 2`` for every larger half u of every c."""
    space = ep.code.space
    rep = Report(f"larger-half weight sandwich ({minimality})")
    for c in (ep.nonzero_codewords if codewords is None else codewords):
        wc = space.weight(c)
        for u in larger_halves(c, ep.code, ep.order, minimality, ep.relation):
            rep.checked += 1
            if not wc <= 2 * space.weight(u) <= wc + 2:
                rep.fail(f"c={space.format(c)}, u={space.format(u)}: "
                         f"{wc} <= {2 * space.weight(u)} <= {wc + 2} fails")
    return rep


@dataclass
class TrialSetCheck:
    """The three equivalent trial-set characterisations, evaluated separately."""

    definition: bool
    hitting: bool
    larger_halves: bool
    plus_convention: bool
    report: Report

    @property
    def passed(self) -> bool:
        return self.definition and self.hitting and self.larger_halves


def is_trial_set(T: Iterable[Word], ep: ErrorPartition,
                 minimality: str = "subword1") -> TrialSetCheck:
    """Check T against the definition, against M1 via H(y), and via larger halves.

    ``plus_convention`` records the variant that compares ``y`` with
    ``y + c`` instead of ``y - c``; disagreement between any of the forms is
    reported as a finding.
    """
    code, order = ep.code, ep.order
    space = code.space
    T = sorted(set(T))
    rep = Report("trial set")
    if any(not any(c) for c in T) or any(c not in set(ep.codewords) for c in T):
        rep.fail("T must consist of nonzero codewords")

    definition = True
    plus = True
    for y in space.words():
        rep.checked += 1
        ky = order.key(y)
        reducible = any(order.key(space.sub(y, c)) < ky for c in T)
        if (y in ep.E0) == reducible:
            definition = False
            rep.fail(f"(1) {space.format(y)}: in E0={y in ep.E0}, reducible={reducible}")
        plus_reducible = any(order.key(space.add(y, c)) < ky for c in T)
        if (y in ep.E0) == plus_reducible:
            plus = False

    hitting = True
    Tset = set(T)
    for y in sorted(ep.M1):
        if not ep.h_set(y) & Tset:
            hitting = False
            rep.fail(f"(2) H({space.format(y)}) misses T")

    covered: set[Word] = set()
    for c in T:
        covered |= larger_halves(c, code, order, minimality, ep.relation)
    missing = ep.M1 - covered
    lh = not missing
    for y in sorted(missing):
        rep.fail(f"(3) {space.format(y)} in M1 is not a larger half of T")

    if len({definition, hitting, lh}) > 1:
        rep.note(f"forms disagree: definition={definition}, H-form={hitting}, "
                 f"larger-halves={lh}")
    if plus != definition:
        rep.note(f"y + c convention gives {plus}, y - c convention gives {definition}")
    return TrialSetCheck(definition, hitting, lh, plus, rep)


@dataclass
class TrialSet:
    members: dict[Word, list[tuple[Word, Word]]] = field(default_factory=dict)

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, c: object) -> bool:
        return c in self.members

    def words(self) -> set[Word]:
        return set(self.members)


def extract_trial_set(lc: ListClosure, lcw: dict[Word, LeaderCodeword],
                      ep: ErrorPartition) -> TrialSet:
    """For each closure member t in M1 take ``t - N(t)``; then verify the result."""
    space = lc.code.space
    T = TrialSet()
    for t in lc.processed:
        if t in ep.M1:
            tk = lc.canonical(t)
            T.members.setdefault(space.sub(t, tk), []).append((t, tk))

    check = is_trial_set(T.words(), ep)
    if not check.passed:
        raise TrialSetError(f"extracted set is not a trial set: {check.report.violations[0]}")
    for c in T:
        if c not in lcw:
            raise TrialSetError(f"{space.format(c)} is not a leader codeword")
        halves = larger_halves(c, lc.code, ep.order, relation=ep.relation)
        if not any(y in ep.M1 and space.sub(y, c) in ep.E0 for y in halves):
            raise TrialSetError(f"{space.format(c)} has no larger half in M1 with y - c in E0")
    return T


def verify_monotone_structure(ep: ErrorPartition, relation: str | None = None) -> Report:
    """``x ⊂₁ y`` and x uncorrectable imply y uncorrectable.

    Also counts (as findings) pairs ``y' ⊂ y`` with equal generalized support
    whose correctability differs, which the plain ⊂ relation allows.
    """
    relation = relation or ep.relation
    space = ep.code.space
    rep = Report(f"monotone structure under ⊂₁ ({relation})")
    flips = 0
    for y in space.words():
        for x in space.subwords1(y, relation):
            rep.checked += 1
            if x in ep.E1 and y in ep.E0:
                rep.fail(f"{space.format(x)} ⊂₁ {space.format(y)}, x in E1 but y in E0")
        nz = [k for k, c in enumerate(y) if c]
        ranges = [range(1, y[k] + 1) for k in nz]
        for low in itertools.product(*ranges):
            y2 = list(y)
            for k, c in zip(nz, low):
                y2[k] = c
            y2 = tuple(y2)
            if y2 != y and (y2 in ep.E0) != (y in ep.E0):
                flips += 1
    rep.note(f"{flips} pairs y' ⊂ y with equal support differ in correctability")
    return rep


def minimal_trial_sets(ep: ErrorPartition, candidates: Iterable[Word] | None = None,
                       minimality: str = "inclusion",
                       limit: int = 100_000) -> list[frozenset[Word]]:
    """Minimal trial sets drawn from ``candidates`` (default: every nonzero codeword).

    By definition T is a trial set iff it meets H(y) for every uncorrectable
    y, so the inclusion-minimal ones are the minimal hitting sets of
    ``{H(y) : y in E1}`` restricted to the candidates.  With
    ``minimality="cardinality"`` only those of the smallest size are kept.
    """
    if minimality not in TRIAL_MINIMALITY:
        raise ValueError(f"minimality must be one of {TRIAL_MINIMALITY}")
    pool = set(ep.nonzero_codewords if candidates is None else candidates)
    family = {ep.h_set(y) & pool for y in ep.E1}
    if frozenset() in family:
        return []
    # only inclusion-minimal members of the family constrain a hitting set
    family = [S for S in family if not any(R < S for R in family)]
    found: set[frozenset[Word]] = set()

    def search(chosen: frozenset[Word], remaining: list[frozenset[Word]]) -> None:
        if len(found) > limit:
            raise RuntimeError(f"more than {limit} minimal trial sets")
        if not remaining:
            found.add(chosen)
            return
        pick = min(remaining, key=len)
        for c in sorted(pick):
            nxt = chosen | {c}
            if has_private_sets(nxt):
                search(nxt, [S for S in remaining if c not in S])

    def has_private_sets(chosen: frozenset[Word]) -> bool:
        # each element needs a family set hit by it alone, else chosen is not minimal
        for c in chosen:
            others = chosen - {c}
            if not any(c in S and not S & others for S in family):
                return False
        return True

    search(frozenset(), family)
    out = sorted(found, key=lambda s: (len(s), sorted(s)))
    if minimality == "cardinality" and out:
        out = [s for s in out if len(s) == len(out[0])]
    return out


@dataclass
class DecodeResult:
    received: Word
    residual: Word
    codeword: Word
    steps: int


def gradient_decode(y: Word, T: Iterable[Word], code: LinearCode,
                    order: WeightCompatibleOrder) -> DecodeResult:
    """Subtract codewords from T or -T while that makes the word ≺-smaller.

    At each step the candidate giving the ≺-smallest result is taken.  The
    residual is the estimated error and ``y - residual`` the decoded codeword.
    """
    space = code.space
    cands = set(T)
    cands |= {space.neg(c) for c in cands}
    cands = sorted(cands)
    cur = y
    steps = 0
    while True:
        best = min((space.sub(cur, c) for c in cands), key=order.key, default=None)
        if best is None or not order.less(best, cur):
            break
        cur = best
        steps += 1
        if steps > space.size:
            raise RuntimeError("descent did not terminate")  # unreachable for a total order
    return DecodeResult(y, cur, space.sub(y, cur), steps)


def negation_closed(words: Iterable[Word], code: LinearCode) -> bool:
    words = set(words)
    return all(code.space.neg(w) in words for w in words)
