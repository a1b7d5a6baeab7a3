"""Command-line front end.

Exit status: 0 success, 1 verification failure, 2 usage or parse error,
3 a resource bound was hit.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import corpus, geometry
from . import errormodel as em
from .code import DEFAULT_MAX_ENUM, FixtureError, ResourceBoundError
from .leadercw import leader_codewords
from .leaderset import build_list
from .verify import verify_code
from .wordspace import TIE_BREAKERS, WeightCompatibleOrder, WordError

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


def _emit(args, header: str, rows: list[list[str]]) -> None:
    if args.format == "tsv":
        for row in rows:
            print("\t".join(row))
        return
    print(header)
    for row in rows:
        print("  " + "  ".join(row))


def _setup(args):
    code = corpus.load(args.code, args.max_enum)
    order = WeightCompatibleOrder(code.space, args.order)
    lc = build_list(code, order)
    return code, order, lc


def cmd_coset_leaders(args) -> int:
    code, order, lc = _setup(args)
    fmt = code.space.format
    rows = []
    for rec in sorted(lc.table.values(), key=lambda r: order.key(r.canonical_leader)):
        syn = "".join(map(str, rec.syndrome))
        for w in order.sorted(rec.leaders):
            mark = "*" if w == rec.canonical_leader else ""
            rows.append([syn, str(rec.weight), fmt(w) + mark])
    _emit(args, f"{len(lc.table)} cosets, {len(rows)} leaders (* = canonical)", rows)
    return EXIT_OK


def cmd_leader_codewords(args) -> int:
    code, order, lc = _setup(args)
    fmt = code.space.format
    lcw = leader_codewords(lc)
    rows = []
    for c in order.sorted(lcw):
        witnesses = lcw[c].witnesses if args.all_witnesses else lcw[c].witnesses[:1]
        for n1, (i, j), n2 in witnesses:
            rows.append([fmt(c), f"{fmt(n1)} + e_{i},{j} - {fmt(n2)}"])
    _emit(args, f"{len(lcw)} leader codewords", rows)
    return EXIT_OK


def cmd_trial_set(args) -> int:
    code, order, lc = _setup(args)
    fmt = code.space.format
    lcw = leader_codewords(lc)
    ep = em.error_partition(lc)
    T = em.extract_trial_set(lc, lcw, ep)
    rows = [[fmt(c), f"from {fmt(t)} - {fmt(tk)}"]
            for c in T for t, tk in T.members[c]]
    _emit(args, f"{len(T)} codewords in the trial set", rows)
    return EXIT_OK


def cmd_zero_neighbours(args) -> int:
    code, order, lc = _setup(args)
    fmt = code.space.format
    Z = geometry.zero_neighbours(code, args.literal_voronoi)
    rows = [[fmt(z)] for z in order.sorted(Z)]
    _emit(args, f"{len(Z)} zero neighbours", rows)
    if args.compare_leader_codewords:
        L = set(leader_codewords(lc))
        _emit(args, "zero neighbours that are not leader codewords",
              [["Z-L", fmt(z)] for z in order.sorted(Z - L)])
        _emit(args, "leader codewords that are not zero neighbours",
              [["L-Z", fmt(w)] for w in order.sorted(L - Z)])
    return EXIT_OK


def cmd_decode(args) -> int:
    code, order, lc = _setup(args)
    space = code.space
    y = space.parse(args.word)
    lcw = leader_codewords(lc)
    if args.set == "trial":
        T = em.extract_trial_set(lc, lcw, em.error_partition(lc)).words()
    else:
        T = set(lcw)
    res = em.gradient_decode(y, T, code, order)
    rows = [["residual", space.format(res.residual)],
            ["codeword", space.format(res.codeword)],
            ["steps", str(res.steps)]]
    _emit(args, f"decoding {space.format(y)}", rows)
    return EXIT_OK


def cmd_verify(args) -> int:
    code = corpus.load(args.code, args.max_enum)
    result = verify_code(code, args.order, args.literal_voronoi, args.lh_minimality)
    if args.format == "tsv":
        for r in result.reports:
            print(f"{'PASS' if r.passed else 'FAIL'}\t{r.name}\t{r.checked}\t{len(r.violations)}")
    else:
        print(result.text(args.verbose))
    return EXIT_OK if result.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", default="lex", choices=sorted(TIE_BREAKERS),
                        help="tie-breaker of the weight-compatible order")
    common.add_argument("--max-enum", type=int, default=DEFAULT_MAX_ENUM,
                        help="largest set the tools will enumerate")
    common.add_argument("--format", default="text", choices=("text", "tsv"))
    vor = common.add_mutually_exclusive_group()
    vor.add_argument("--strict-voronoi", dest="literal_voronoi", action="store_false",
                     help="Voronoi competitors include the zero codeword (default)")
    vor.add_argument("--literal-voronoi", dest="literal_voronoi", action="store_true",
                     help="drop the zero codeword from every Voronoi competition")
    common.set_defaults(literal_voronoi=False)
    common.add_argument("--lh-minimality", default="subword1", choices=em.LH_MINIMALITY,
                        help="which minimal words count as larger halves")

    parser = argparse.ArgumentParser(prog="qleaders", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.add_argument("code", help="code fixture file or bundled fixture name")
        p.set_defaults(func=func)
        return p

    add("coset-leaders", cmd_coset_leaders, "all coset leaders per syndrome")
    p = add("leader-codewords", cmd_leader_codewords, "leader codewords with witnesses")
    p.add_argument("--all-witnesses", action="store_true")
    add("trial-set", cmd_trial_set, "trial set extracted from the closure")
    p = add("zero-neighbours", cmd_zero_neighbours, "zero neighbours by brute force")
    p.add_argument("--compare-leader-codewords", action="store_true")
    p = add("decode", cmd_decode, "gradient-like decoding of one word")
    p.add_argument("word", help='e.g. "2 1", or "1,0 0,1" over GF(p^m)')
    p.add_argument("--set", default="leader", choices=("leader", "trial"))
    p = add("verify", cmd_verify, "run every check; exit 0 iff all pass")
    p.add_argument("-v", "--verbose", action="store_true")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except ResourceBoundError as exc:
        print(f"resource bound: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (FixtureError, WordError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except em.TrialSetError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
