"""Run every check on one code, in a fixed order, and collect the reports."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import errormodel as em
from . import geometry
from .code import LinearCode
from .galois import field_axiom_violations
from .leadercw import (leader_codewords, verify_test_set, verify_weight_bound,
                       verify_zero_neighbour_props)
from .leaderset import (build_list, canonical_leaders, coset_leaders, verify_completeness,
                        verify_ancestor_bound, verify_descendant_bound)
from .report import Report
from .wordspace import WeightCompatibleOrder, admissibility_violations, check_subword_implies_less

ORDER_CHECK_LIMIT = 4096


@dataclass
class Verification:
    code: LinearCode
    reports: list[Report] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    def text(self, verbose: bool = False) -> str:
        lines = [f"code {self.code.name or ''} [{self.code.n},{self.code.k}] over GF({self.code.q})"]
        for r in self.reports:
            lines.append(r.summary())
            shown = r.violations if verbose else r.violations[:3]
            lines += [f"    violation: {v}" for v in shown]
            lines += [f"    finding: {f}" for f in r.findings]
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines)


def field_report(code: LinearCode) -> Report:
    rep = Report(f"field axioms for GF({code.q})")
    rep.checked = code.q**3
    for v in field_axiom_violations(code.field):
        rep.fail(v)
    return rep


def order_report(order: WeightCompatibleOrder) -> Report:
    space = order.space
    rep = Report(f"order axioms ({order.name})")
    for v in admissibility_violations(order.tie_key, space.nm)[:10]:
        rep.fail(v)
    rep.checked = 1
    if space.size <= ORDER_CHECK_LIMIT:
        rep.checked += space.size**2
        if not check_subword_implies_less(order):
            rep.fail("a ⊂ b, a != b does not imply a ≺ b")
    else:
        rep.note(f"a ⊂ b => a ≺ b skipped above {ORDER_CHECK_LIMIT} words")
    return rep


def leader_equivalence_report(lc, cosets) -> Report:
    rep = Report("coset leaders and canonical leaders match brute force")
    space = lc.code.space
    brute_cl = {w for cs in cosets for w in cs.leaders}
    brute_n = {lc.order.minimum(cs.words) for cs in cosets}
    rep.checked = len(brute_cl) + len(brute_n)
    for w in sorted(brute_cl ^ coset_leaders(lc)):
        rep.fail(f"coset leader sets differ at {space.format(w)}")
    for w in sorted(brute_n ^ canonical_leaders(lc)):
        rep.fail(f"canonical leader sets differ at {space.format(w)}")
    return rep


def lcw_equivalence_report(lcw, code: LinearCode) -> Report:
    rep = Report("L(C) matches the definition-literal enumeration")
    brute = geometry.leader_codewords(code)
    rep.checked = len(brute)
    for w in sorted(brute ^ set(lcw)):
        side = "closure only" if w in lcw else "brute force only"
        rep.fail(f"{code.space.format(w)} ({side})")
    return rep


def trial_report(name: str, check: em.TrialSetCheck) -> Report:
    rep = check.report
    rep.name = name
    return rep


def extraction_report(lc, lcw, ep) -> tuple[Report, em.TrialSet | None]:
    rep = Report("extracted trial set")
    try:
        T = em.extract_trial_set(lc, lcw, ep)
    except em.TrialSetError as exc:
        rep.fail(str(exc))
        return rep, None
    rep.checked = len(T)
    rep.note(f"{len(T)} codewords")
    return rep, T


def decoder_report(lc, lcw, ep) -> Report:
    code, order = lc.code, lc.order
    space = code.space
    rep = Report("decoding with L(C) lands on the canonical leader")
    T = list(lcw)
    for y in space.words():
        rep.checked += 1
        res = em.gradient_decode(y, T, code, order)
        if res.steps > space.size:
            rep.fail(f"{space.format(y)}: {res.steps} steps")
        if res.residual != lc.canonical(y):
            rep.fail(f"{space.format(y)}: residual {space.format(res.residual)}, "
                     f"expected {space.format(lc.canonical(y))}")
        elif space.weight(res.residual) != lc.coset_weight(y):
            rep.fail(f"{space.format(y)}: residual weight above coset weight")
    if not em.negation_closed(T, code):
        rep.note("L(C) is not closed under negation")
    return rep


def verify_code(code: LinearCode, tie_breaker: str = "lex", literal_voronoi: bool = False,
                lh_minimality: str = "subword1",
                relation: str = em.DEFAULT_RELATION) -> Verification:
    """Field, order, closure bounds, leader codewords, trial sets, decoder."""
    code.check_space_bound()
    out = Verification(code)
    add = out.reports.append
    order = WeightCompatibleOrder(code.space, tie_breaker)

    add(field_report(code))
    add(order_report(order))
    lc = build_list(code, order)
    add(verify_ancestor_bound(lc))
    add(verify_descendant_bound(lc))
    cosets = geometry.cosets(code)
    add(verify_completeness(lc, {w for cs in cosets for w in cs.leaders}))
    add(leader_equivalence_report(lc, cosets))

    lcw = leader_codewords(lc)
    add(lcw_equivalence_report(lcw, code))
    add(verify_test_set(lcw, lc))
    add(verify_weight_bound(lcw, lc))
    add(verify_zero_neighbour_props(lcw, lc, literal_voronoi))

    ep = em.error_partition(lc, relation)
    add(em.verify_monotone_structure(ep))
    add(trial_report("L(C) is a trial set", em.is_trial_set(lcw, ep, lh_minimality)))
    rep, T = extraction_report(lc, lcw, ep)
    add(rep)
    if T is not None:
        add(trial_report("extracted set is a trial set",
                         em.is_trial_set(T.words(), ep, lh_minimality)))
    add(em.verify_larger_half_sandwich(ep, minimality=lh_minimality))
    add(decoder_report(lc, lcw, ep))
    return out
