"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line with its evidence before
asserting.  Run directly (``python3 tests/test_acceptance.py``) to get just
the nine lines.
"""

import functools
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from qleaders import errormodel as em  # noqa: E402
from qleaders import geometry  # noqa: E402
from qleaders.code import covering_radius  # noqa: E402
from qleaders.leadercw import (leader_codewords, verify_test_set, verify_weight_bound,  # noqa: E402
                               verify_zero_neighbour_props)
from qleaders.leaderset import (build_list, canonical_leaders, coset_leaders,  # noqa: E402
                                verify_completeness, verify_ancestor_bound, verify_descendant_bound)
from qleaders.wordspace import WeightCompatibleOrder  # noqa: E402

from conftest import CORPUS_NAMES, load  # noqa: E402

ORDERS = ("lex", "revlex")


@functools.lru_cache(maxsize=None)
def ctx(name, tie="lex"):
    code = load(name)
    lc = build_list(code, WeightCompatibleOrder(code.space, tie))
    lcw = leader_codewords(lc)
    return code, lc, lcw, em.error_partition(lc)


def fmt_set(space, ws):
    return "{" + ", ".join(sorted(space.format(w).replace(" ", "") for w in ws)) + "}"


def criterion_1():
    bad, slow = [], []
    total = 0.0
    for name in CORPUS_NAMES:
        t0 = time.perf_counter()
        code = load(name)
        lc = build_list(code)
        rep = verify_completeness(lc, geometry.coset_leaders(code))
        dt = time.perf_counter() - t0
        total += dt
        if not rep.passed:
            bad.append(f"{name}: {rep.violations[0]}")
        if dt > 5:
            slow.append(f"{name} {dt:.1f}s")
    ok = not bad and not slow and total < 60
    return ok, f"{len(CORPUS_NAMES)} codes, {total:.1f}s total; " + ("; ".join(bad + slow) or "no missing words")


def criterion_2():
    bad = []
    for name in CORPUS_NAMES:
        for tie in ORDERS:
            code, lc, _, _ = ctx(name, tie)
            if coset_leaders(lc) != geometry.coset_leaders(code):
                bad.append(f"{name}/{tie}: CL differs")
            if canonical_leaders(lc) != geometry.canonical_leaders(code, lc.order):
                bad.append(f"{name}/{tie}: canonical leaders differ")
    return not bad, "; ".join(bad) or f"exact match on {len(CORPUS_NAMES)} codes x {len(ORDERS)} orders"


def criterion_3():
    bad = []
    for name in CORPUS_NAMES:
        _, lc, _, _ = ctx(name)
        for rep in (verify_ancestor_bound(lc), verify_descendant_bound(lc)):
            if not rep.passed:
                bad.append(f"{name}: {len(rep.violations)} violations, e.g. {rep.violations[0]}")
    return not bad, "; ".join(bad) or "no violations"


def criterion_4():
    bad = []
    for name in CORPUS_NAMES:
        code, _, lcw, _ = ctx(name)
        if set(lcw) != geometry.leader_codewords(code):
            bad.append(f"{name}: closure and brute force differ")
    c3, c2 = ctx("ternary_2_1")[0], ctx("rep_3_1")[0]
    l3, l2 = set(ctx("ternary_2_1")[2]), set(ctx("rep_3_1")[2])
    if l3 != {c3.space.parse("1 1"), c3.space.parse("2 2")}:
        bad.append(f"C3 gives {fmt_set(c3.space, l3)}")
    if l2 != {c2.space.parse("1 1 1")}:
        bad.append(f"repetition code gives {fmt_set(c2.space, l2)}")
    detail = f"C3 {fmt_set(c3.space, l3)}, [3,1] {fmt_set(c2.space, l2)}"
    return not bad, "; ".join(bad) or detail


def criterion_5():
    bad = []
    for name in CORPUS_NAMES:
        _, lc, lcw, _ = ctx(name)
        for rep in (verify_test_set(lcw, lc), verify_weight_bound(lcw, lc),
                    verify_zero_neighbour_props(lcw, lc)):
            if not rep.passed:
                bad.append(f"{name}: {rep.name}: {rep.violations[0]}")
    code, lc, lcw, _ = ctx("rep_3_1")
    top = max(code.space.weight(c) for c in lcw)
    rho = covering_radius(code, lc.table)
    if not top == 2 * rho + 1 == 3:
        bad.append(f"repetition code max weight {top}, rho {rho}")
    return not bad, "; ".join(bad) or f"all four hold; [3,1] max weight {top} = 2*{rho}+1"


def criterion_6():
    bad = []
    for name in CORPUS_NAMES:
        for tie in ORDERS:
            code, lc, lcw, ep = ctx(name, tie)
            check = em.is_trial_set(lcw, ep)
            if not check.passed:
                bad.append(f"{name}/{tie}: L(C) {check.report.violations[0]}")
            try:
                T = em.extract_trial_set(lc, lcw, ep)
            except em.TrialSetError as exc:
                bad.append(f"{name}/{tie}: extraction {exc}")
                continue
            if not T.words() <= set(lcw):
                bad.append(f"{name}/{tie}: extracted set not inside L(C)")
    code, lc, lcw, ep = ctx("ternary_2_1")
    S = code.space
    T = em.extract_trial_set(lc, lcw, ep)
    want = {S.parse("1 1"): [(S.parse("1 0"), S.parse("0 2"))],
            S.parse("2 2"): [(S.parse("2 0"), S.parse("0 1"))]}
    if T.members != want:
        bad.append(f"C3 extraction gives {T.members}")
    return not bad, "; ".join(bad) or "L(C) and extracted sets pass all three forms; C3 -> {11 via (10,02), 22 via (20,01)}"


def criterion_7():
    t0 = time.perf_counter()
    bad, info = [], []
    checked = 0
    for name in CORPUS_NAMES:
        code, lc, lcw, ep = ctx(name)
        if code.num_codewords > 64:
            continue
        checked += 1
        S = code.space
        rho = covering_radius(code, lc.table)
        cands = [c for c in ep.nonzero_codewords if S.weight(c) <= 2 * rho + 1]
        found = em.minimal_trial_sets(ep, cands)
        outside = [T for T in found if not T <= set(lcw)]
        if outside:
            bad.append(f"{name}: {len(outside)}/{len(found)} minimal trial sets leave L(C)")
        unrestricted = em.minimal_trial_sets(ep)
        n_out = sum(not T <= set(lcw) for T in unrestricted)
        if n_out:
            info.append(f"{name}: {n_out}/{len(unrestricted)} over all codewords leave L(C)")
    dt = time.perf_counter() - t0
    if dt > 300:
        bad.append(f"took {dt:.0f}s")
    detail = f"{checked} codes, candidates of weight <= 2rho+1, {dt:.1f}s"
    if info:
        detail += " [info: " + "; ".join(info) + "]"
    return not bad, "; ".join(bad) + (" | " if bad else "") + detail


def criterion_8():
    bad = []
    halves = 0
    for name in CORPUS_NAMES:
        _, _, _, ep = ctx(name)
        mono = em.verify_monotone_structure(ep)
        if not mono.passed:
            bad.append(f"{name}: monotone {mono.violations[0]}")
        sand = em.verify_larger_half_sandwich(ep)
        halves += sand.checked
        if not sand.passed:
            bad.append(f"{name}: sandwich {len(sand.violations)}/{sand.checked}, e.g. {sand.violations[0]}")
    return not bad, "; ".join(bad) or f"monotone and sandwich hold ({halves} larger halves)"


def criterion_9():
    bad = []
    n = 0
    for name in CORPUS_NAMES:
        code, lc, lcw, _ = ctx(name)
        S = code.space
        T = list(lcw)
        for y in S.words():
            n += 1
            res = em.gradient_decode(y, T, code, lc.order)
            if res.steps > S.size or res.residual != lc.canonical(y) \
                    or S.weight(res.residual) != lc.coset_weight(y) \
                    or not code.is_codeword(res.codeword):
                bad.append(f"{name}: {S.format(y)}")
    return not bad, "; ".join(bad[:5]) or f"{n} words decoded to their coset's minimum"


CRITERIA = [
    (1, "List completeness", criterion_1),
    (2, "coset-leader equivalence", criterion_2),
    (3, "ancestor and descendant bounds", criterion_3),
    (4, "L(C) oracle equivalence", criterion_4),
    (5, "L(C) four properties", criterion_5),
    (6, "trial sets from leader codewords", criterion_6),
    (7, "minimal trial sets inside L(C)", criterion_7),
    (8, "monotone structure and larger-half sandwich", criterion_8),
    (9, "decoder soundness", criterion_9),
]


def line(num, title, ok, detail):
    return f"{'PASS' if ok else 'FAIL'} criterion {num} ({title}): {detail}"


@pytest.mark.parametrize("num,title,check", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(num, title, check, capsys):
    ok, detail = check()
    with capsys.disabled():
        print("\n" + line(num, title, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = [(num, title, *check()) for num, title, check in CRITERIA]
    for r in results:
        print(line(*r))
    sys.exit(0 if all(r[2] for r in results) else 1)
