"""Command-line front end: ``hauptmodul verify | expand | group``."""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from .errors import HauptmodulError, OrderTooSmall, UnknownId, UnknownSeries
from .reports import FAIL, PASS, SKIPPED, CheckResult

SUITES = ("exact", "group", "symbolic", "qseries", "numeric")


def _catalog():
    from .exactnum import EXACT_IDS
    from .invariants import SYMBOLIC_IDS
    from .numcheck import NUMERIC_IDS
    from .qexpand import Q_IDS
    from .repgroup import RELATIONS

    return (
        [(i, "exact") for i in EXACT_IDS]
        + [(i, "group") for i in RELATIONS]
        + [(i, "symbolic") for i in SYMBOLIC_IDS]
        + [(i, "qseries") for i in Q_IDS]
        + [(i, "numeric") for i in NUMERIC_IDS]
    )


def run_check(cid, suite, order=None, tol=None):
    """Run one catalog entry; OrderTooSmall turns into a failed report."""
    t0 = time.perf_counter()
    try:
        if suite == "exact":
            from .exactnum import verify_exact

            rep = verify_exact(cid)
        elif suite == "group":
            from .repgroup import verify_group_relation

            rep = verify_group_relation(cid)
        elif suite == "symbolic":
            from .invariants import verify_symbolic_identity

            rep = verify_symbolic_identity(cid)
        elif suite == "qseries":
            from .qexpand import verify_q_identity

            rep = verify_q_identity(cid, order)
        else:
            from .numcheck import verify_numeric

            rep = verify_numeric(cid, tol=tol)
    except OrderTooSmall as exc:
        rep = CheckResult(cid, suite, FAIL, f"order too small: {exc}", order)
    rep.elapsed_ms = int(round((time.perf_counter() - t0) * 1000))
    return rep


def run_verify(suite="all", ids=None, order=None, tol=None, numeric=False):
    """Reports for every selected check, in catalog order."""
    catalog = _catalog()
    known = dict(catalog)
    if ids:
        for i in ids:
            if i not in known:
                raise UnknownId(i)
    if suite not in ("all",) + SUITES:
        raise UnknownId(suite)
    reports = []
    for cid, s in catalog:
        if suite != "all" and s != suite:
            continue
        if ids and cid not in ids:
            continue
        if s == "numeric" and not (numeric or suite == "numeric" or ids):
            reports.append(CheckResult(cid, s, SKIPPED, "numeric checks need --numeric"))
            continue
        reports.append(run_check(cid, s, order, tol))
    return reports


def exit_code(reports):
    return 1 if any(r.status == FAIL for r in reports) else 0


def _fmt(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# series for `expand`


def _series_table():
    from . import qexpand as qx

    def a_form(name):
        def make(order):
            return qx._ev(name, qx.a_vector(order + 1))

        return make

    table = {
        "tau": lambda o: qx.tau_series(o + 1),
        "j": lambda o: qx.j_series(int(o) + 1),
        "j13": lambda o: qx.j_series(int(o // 13) + 1).dilate(13),
        "partition": lambda o: qx.partition_series(max(int(o) + 1, 1)),
        "delta": lambda o: qx.delta_series(max(int(o) + 1, 1)),
        "E4": lambda o: qx.eisenstein_e4(max(int(o) + 1, 1)),
        "Phi12_of_a": a_form("Phi12"),
        "Phi4_of_a": a_form("Phi4"),
        "A0_of_a": a_form("A0"),
    }
    for i in range(1, 7):
        table[f"a{i}"] = (lambda i: lambda o: qx.a_series(i, o + 1))(i)
    return table


SERIES_NAMES = ("eta(m)", "a1", "a2", "a3", "a4", "a5", "a6", "tau", "j", "j13", "partition",
                "delta", "E4", "Phi12_of_a", "Phi4_of_a", "A0_of_a")


def expand_series(name, order):
    """(exponent, coefficient) pairs of a named series for exponents <= order."""
    from . import qexpand as qx

    order = Fraction(order)
    name = name.replace(" ", "")
    if name.startswith("eta(") and name.endswith(")"):
        try:
            m = int(name[4:-1])
        except ValueError:
            raise UnknownSeries(name) from None
        if m <= 0:
            raise UnknownSeries(name)
        s = qx.eta_series(m, order + 1)
    else:
        table = _series_table()
        if name not in table:
            raise UnknownSeries(name)
        s = table[name](order)
    return [(e, c) for e, c in s.items() if e <= order]


def _print_reports(reports, as_json):
    if as_json:
        print(json.dumps([r.to_json() for r in reports], indent=2))
        return
    for r in reports:
        order = "-" if r.order is None else _fmt(r.order)
        print(f"{r.id:<5} {r.suite:<9} {r.status:<8} {order:>6} {r.elapsed_ms:>7} ms  {r.detail}")
    passed = sum(r.status == PASS for r in reports)
    failed = sum(r.status == FAIL for r in reports)
    skipped = sum(r.status == SKIPPED for r in reports)
    print(f"{passed} passed, {failed} failed, {skipped} skipped")


def _group(args):
    from .repgroup import RELATIONS, build_matrix, enumerate_group, verify_group_relation

    if args.enumerate:
        g = enumerate_group([build_matrix("S6"), build_matrix("T6")])
        words = sorted(g.elements.values(), key=lambda w: (len(w), w))[:8]
        letters = "ST"
        sample = [("".join(letters[i] for i in w) or "I") for w in words]
        out = {"order": g.order, "sample_words": sample}
        text = [f"order: {g.order}", "sample words: " + ", ".join(sample)]
    elif args.subgroup_borel:
        g = enumerate_group([build_matrix("H"), build_matrix("T6")])
        index = 1092 // g.order
        out = {"order": g.order, "index": index}
        text = [f"order: {g.order}, index: {index}"]
    else:
        reps = [verify_group_relation(r) for r in RELATIONS]
        out = [r.to_json() for r in reps]
        text = [f"{r.id:<4} {'pass' if r.holds else 'FAIL':<5} {r.detail}" for r in reps]
        if not args.json:
            print("\n".join(text))
        else:
            print(json.dumps(out, indent=2))
        return exit_code(reps)
    print(json.dumps(out, indent=2) if args.json else "\n".join(text))
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="hauptmodul", description="Exact checks of the level-13 identities.")
    sub = p.add_subparsers(dest="command")

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", default="all", choices=("all",) + SUITES)
    v.add_argument("--id", action="append", default=None,
                   help="catalog id (repeatable, or comma separated)")
    v.add_argument("--order", type=Fraction, default=None, help="q-order, inclusive")
    v.add_argument("--tol", type=float, default=None)
    v.add_argument("--numeric", action="store_true", help="also run the numeric suite")
    v.add_argument("--json", action="store_true")

    e = sub.add_parser("expand", help="print a q-expansion")
    e.add_argument("--series", required=True)
    e.add_argument("--order", type=Fraction, required=True, help="largest exponent shown")
    e.add_argument("--json", action="store_true")

    g = sub.add_parser("group", help="group enumeration and relations")
    mode = g.add_mutually_exclusive_group(required=True)
    mode.add_argument("--enumerate", action="store_true")
    mode.add_argument("--subgroup-borel", action="store_true")
    mode.add_argument("--relations", action="store_true")
    g.add_argument("--json", action="store_true")
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    if args.command is None:
        args = parser.parse_args(["verify"] + list(argv or []))
    try:
        if args.command == "verify":
            ids = None
            if args.id:
                ids = [x for chunk in args.id for x in chunk.split(",") if x]
            try:
                reports = run_verify(args.suite, ids, args.order, args.tol, args.numeric)
            except UnknownId as exc:
                print(f"unknown id: {exc}", file=sys.stderr)
                return 2
            _print_reports(reports, args.json)
            return exit_code(reports)
        if args.command == "expand":
            try:
                pairs = expand_series(args.series, args.order)
            except UnknownSeries as exc:
                print(f"unknown series: {exc}", file=sys.stderr)
                return 2
            if args.json:
                print(json.dumps([{"exponent": _fmt(e), "coefficient": _fmt(c)} for e, c in pairs]))
            else:
                print(", ".join(f"{_fmt(e)}: {_fmt(c)}" for e, c in pairs))
            return 0
        return _group(args)
    except HauptmodulError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
