"""Leader codewords: nonzero codewords ``n1 + e_ij - n2`` where ``n2`` is a
coset leader and both ``n1`` and ``n1 + e_ij`` lie within Hamming distance
one of the leader set.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import geometry
from .code import covering_radius
from .leaderset import ListClosure, within_1_of_CL
from .report import Report
from .wordspace import Word

Witness = tuple[Word, tuple[int, int], Word]


@dataclass
class LeaderCodeword:
    word: Word
    witnesses: list[Witness] = field(default_factory=list)


def leader_codewords(lc: ListClosure) -> dict[Word, LeaderCodeword]:
    """Extract every leader codeword from a finished closure.

    Each member ``w`` near the leader set is split as ``n1 + e_ij`` in every
    possible way (one per generalized-support entry), and every leader
    ``n2`` of w's coset gives the codeword ``w - n2``.  Members cover all
    candidate ``w`` because the closure contains every word within distance
    one of the leaders.
    """
    if not lc.table.complete:
        raise ValueError("closure did not reach every coset")
    space = lc.code.space
    out: dict[Word, LeaderCodeword] = {}
    near: dict[Word, bool] = {}

    def is_near(u: Word) -> bool:
        if u not in near:
            near[u] = within_1_of_CL(lc, u)
        return near[u]

    for w in lc.processed:
        if not is_near(w):
            continue
        for (i, j) in space.gen_support(w):
            n1 = space.remove_generator(w, i, j)
            if not is_near(n1):
                continue
            for n2 in lc.leaders_of(w):
                c = space.sub(w, n2)
                if not any(c):
                    continue
                entry = out.setdefault(c, LeaderCodeword(c))
                entry.witnesses.append((n1, (i, j), n2))
    return out


def verify_test_set(lcw: dict[Word, LeaderCodeword], lc: ListClosure) -> Report:
    """Every word is a coset leader or loses weight by subtracting some leader codeword."""
    code = lc.code
    space = code.space
    code.check_space_bound()
    rep = Report("L(C) is a test set")
    L = list(lcw)
    for y in space.words():
        rep.checked += 1
        if lc.is_leader(y):
            continue
        wy = space.weight(y)
        if not any(space.weight(space.sub(y, v)) < wy for v in L):
            rep.fail(f"{space.format(y)} is not a leader and cannot be reduced")
    return rep


def verify_weight_bound(lcw: dict[Word, LeaderCodeword], lc: ListClosure) -> Report:
    space = lc.code.space
    rho = covering_radius(lc.code, lc.table)
    rep = Report("wt(w) <= 2*rho + 1 on L(C)")
    top = max((space.weight(c) for c in lcw), default=0)
    rep.checked = len(lcw)
    rep.note(f"max weight {top}, covering radius {rho}, bound {2 * rho + 1}")
    for c in lcw:
        if space.weight(c) > 2 * rho + 1:
            rep.fail(f"{space.format(c)} has weight {space.weight(c)} > {2 * rho + 1}")
    return rep


def verify_zero_neighbour_props(lcw: dict[Word, LeaderCodeword], lc: ListClosure,
                                literal_voronoi: bool = False) -> Report:
    """Both containments between leader codewords and the Voronoi geometry.

    (a) every leader codeword w has X(D(0)) meeting D(w) or X(D(w)), and is a
    zero neighbour; (b) every codeword w with X(D(0)) meeting D(w) is a
    leader codeword.
    """
    code = lc.code
    space = code.space
    rep = Report("L(C) vs zero neighbours")
    regs = geometry.regions(code, literal_voronoi)
    x0 = geometry.x_operator(code, regs[space.zero].members)
    Z = geometry.zero_neighbours(code, literal_voronoi)
    for w in sorted(lcw):
        rep.checked += 1
        dw = regs[w].members
        if not x0 & (dw | geometry.x_operator(code, dw)):
            rep.fail(f"{space.format(w)}: X(D(0)) misses D(w) and X(D(w))")
        if w not in Z:
            rep.fail(f"{space.format(w)} is a leader codeword but not a zero neighbour")
    for w, reg in regs.items():
        if any(w) and x0 & reg.members:
            rep.checked += 1
            if w not in lcw:
                rep.fail(f"{space.format(w)}: X(D(0)) meets D(w) but w is not in L(C)")
    extra = Z - set(lcw)
    if extra:
        rep.note(f"{len(extra)} zero neighbours are not leader codewords")
    return rep
