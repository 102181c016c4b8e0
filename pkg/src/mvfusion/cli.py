"""Command-line front end.

Exit codes: 0 success, 1 bad input, 2 theory violation or corpus mismatch,
3 resource budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .corpus import CorpusError, check_case, default_corpus_path, load_corpus
from .fusion import TheoryViolation, _display_gens, fuse, govar
from .groebner import ResourceBudgetExceeded
from .idealkit import Ideal, MultiplicityError, EmptySchemeError
from .polyring import DEGREVLEX, LEX, Ring, RingError
from .tableaux import (
    Tableau,
    TableauError,
    enumerate_tableaux,
    format_datum,
    lusztig_datum,
    parse_datum,
    sigma,
)

EXIT_OK, EXIT_INPUT, EXIT_THEORY, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(ValueError):
    pass


def _infer_m(*texts: str) -> int:
    digits = [int(ch) for t in texts for ch in t if ch.isdigit()]
    return max(digits, default=1)


def _tableau(text: str, m: int) -> Tableau:
    return Tableau.parse(text, m)


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(",", " ").split())
    except ValueError as exc:
        raise UsageError(f"expected a list of integers, got {text!r}") from exc


# ---------------------------------------------------------------------------
# commands


def cmd_fuse(args) -> int:
    m = args.m or _infer_m(args.tab1, args.tab2)
    t1, t2 = _tableau(args.tab1, m), _tableau(args.tab2, m)
    result = fuse(t1, t2, args.mode, verify_coverage=args.verify)
    if args.json:
        print(result.to_json(indent=2))
    else:
        print(result.summary())
    return EXIT_OK


def cmd_lusztig(args) -> int:
    m = args.m or _infer_m(args.tab)
    print(format_datum(lusztig_datum(_tableau(args.tab, m))))
    return EXIT_OK


def cmd_sigma(args) -> int:
    n = parse_datum(args.datum)
    print(sigma(n, args.m))
    return EXIT_OK


def cmd_govar(args) -> int:
    m = args.m or _infer_m(args.tab)
    res = govar(_tableau(args.tab, m))
    gens = _display_gens(res.ideal)
    if args.json:
        print(json.dumps({"tableau": str(res.tableau), "dimension": res.dimension,
                          "generators": [str(g) for g in gens]}, indent=2))
    else:
        print("; ".join(str(g) for g in gens) if gens else "0")
    return EXIT_OK


def cmd_tabs(args) -> int:
    lam, mu = _int_list(args.shape), _int_list(args.weight)
    m = max(len(lam), len(mu), args.m or 0)
    lam, mu = lam + (0,) * (m - len(lam)), mu + (0,) * (m - len(mu))
    tabs = enumerate_tableaux(lam, mu)
    if args.json:
        print(json.dumps([str(t) for t in tabs]))
    else:
        for t in tabs:
            print(t)
    return EXIT_OK


_IDENT = re.compile(r"[A-Za-z_][A-Za-z_0-9]*(?:\[[0-9, ]+\])?")


def read_polynomial_file(text: str) -> tuple[Ring, list[str]]:
    """Polynomials one per line (or ';'-separated); an optional ``vars:`` line
    fixes the variable order, otherwise variables appear in order of use."""
    names: list[str] | None = None
    polys: list[str] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("vars:"):
            names = [v.strip() for v in line[5:].replace(",", " ").split() if v.strip()]
            continue
        polys.extend(p.strip() for p in line.split(";") if p.strip())
    if names is None:
        seen: dict[str, None] = {}
        for p in polys:
            for tok in _IDENT.findall(p):
                seen.setdefault(tok.replace(" ", ""), None)
        names = list(seen)
    if not names:
        names = ["x"]
    return Ring(names), polys


def cmd_gb(args) -> int:
    try:
        text = Path(args.file).read_text() if args.file != "-" else sys.stdin.read()
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc}") from exc
    ring, polys = read_polynomial_file(text)
    I = Ideal.parse(ring, polys)
    order = LEX if args.order == "lex" else DEGREVLEX
    gb = I.groebner(order)
    if args.json:
        print(json.dumps({"variables": list(ring.names), "order": args.order,
                          "basis": [str(g) for g in gb]}, indent=2))
    else:
        for g in gb:
            print(g)
    return EXIT_OK


def _run_case(job):
    case, mode, verbatim = job
    try:
        _, problems = check_case(case, mode, verbatim=verbatim)
    except (TheoryViolation, MultiplicityError, EmptySchemeError) as exc:
        problems = [f"{type(exc).__name__}: {exc}"]
    return case.name, problems


def cmd_corpus(args) -> int:
    path = args.path or default_corpus_path()
    cases = load_corpus(path)
    if not cases:
        print(f"warning: no cases in {path}", file=sys.stderr)
        print("0/0 pass")
        return EXIT_OK
    jobs = [(c, args.mode, args.verbatim) for c in cases]
    workers = args.jobs if args.jobs > 0 else min(4, os.cpu_count() or 1)
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_run_case, jobs))
    else:
        outcomes = [_run_case(j) for j in jobs]
    passed = 0
    for name, problems in outcomes:
        if problems:
            print(f"FAIL {name}")
            for p in problems:
                print(f"  {p}")
        else:
            passed += 1
            if args.verbose:
                print(f"ok   {name}")
    n_errata = sum(len(c.errata) for c in cases)
    if n_errata and not args.verbatim:
        print(f"note: {n_errata} erratum line(s) applied; use --verbatim to compare printed relations")
    print(f"{passed}/{len(cases)} pass")
    return EXIT_OK if passed == len(cases) else EXIT_THEORY


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=int, default=0, help="rank m of GL_m (default: largest entry)")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--budget", type=int, default=None,
                        help="S-pair budget per Groebner computation (overrides MVFUSION_BUDGET)")

    p = argparse.ArgumentParser(prog="mvfusion", description="MV basis products by fusion of orbital varieties")
    sub = p.add_subparsers(dest="command", required=True)

    f = sub.add_parser("fuse", parents=[common], help="product of two MV basis elements")
    f.add_argument("tab1")
    f.add_argument("tab2")
    f.add_argument("--mode", choices=["paper", "strict"], default="paper")
    f.add_argument("--verify", action="store_true", help="also check that no component is unexplained")
    f.set_defaults(func=cmd_fuse)

    lz = sub.add_parser("lusztig", parents=[common], help="Lusztig datum of a tableau")
    lz.add_argument("tab")
    lz.set_defaults(func=cmd_lusztig)

    sg = sub.add_parser("sigma", parents=[common], help="minimal-padding tableau of a Lusztig datum")
    sg.add_argument("datum")
    sg.set_defaults(func=cmd_sigma)

    gv = sub.add_parser("govar", parents=[common], help="prime ideal of a generalized orbital variety")
    gv.add_argument("tab")
    gv.set_defaults(func=cmd_govar)

    tb = sub.add_parser("tabs", parents=[common], help="semistandard tableaux of given shape and weight")
    tb.add_argument("shape")
    tb.add_argument("weight")
    tb.set_defaults(func=cmd_tabs)

    gb = sub.add_parser("gb", parents=[common], help="reduced Groebner basis of polynomials in a file")
    gb.add_argument("file", help="path, or '-' for stdin")
    gb.add_argument("--order", choices=["lex", "degrevlex"], default="degrevlex")
    gb.set_defaults(func=cmd_gb)

    cp = sub.add_parser("corpus", parents=[common], help="run the golden corpus")
    cp.add_argument("path", nargs="?", default=None)
    cp.add_argument("--mode", choices=["paper", "strict"], default="paper")
    cp.add_argument("--verbatim", action="store_true", help="ignore erratum lines")
    cp.add_argument("--jobs", type=int, default=0, help="worker processes (default: up to 4)")
    cp.add_argument("-v", "--verbose", action="store_true")
    cp.set_defaults(func=cmd_corpus)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    saved = os.environ.get("MVFUSION_BUDGET")
    if args.budget is not None:
        os.environ["MVFUSION_BUDGET"] = str(args.budget)
    try:
        return _dispatch(args)
    finally:
        if saved is None:
            os.environ.pop("MVFUSION_BUDGET", None)
        else:
            os.environ["MVFUSION_BUDGET"] = saved


def _dispatch(args) -> int:
    try:
        return args.func(args)
    except ResourceBudgetExceeded as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except TheoryViolation as exc:
        print(f"theory violation: {exc}", file=sys.stderr)
        for d in exc.diagnostics:
            print(f"  {d}", file=sys.stderr)
        return EXIT_THEORY
    except (MultiplicityError, EmptySchemeError) as exc:
        print(f"theory violation: {exc}", file=sys.stderr)
        return EXIT_THEORY
    except (UsageError, TableauError, CorpusError, RingError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
