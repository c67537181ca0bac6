"""Command-line front end: eval, qcheck, verify, list."""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import __version__
from .classical import dedekind_eta, jacobi_theta, theta_char, theta_index_component, unary_g
from .families import FAMILY_IDS, eval_F, eval_G, eval_H, eval_series
from .jacobi import block_f, completed_block_f, correction_R_ml
from .lerch import completed_mu, correction_R, lerch_mu, mordell_h
from .numerics import DEFAULT_TOL, MockThetaError, TauPoint
from .qseries import MOCK_SERIES, identity_ids, run_identity
from .suites import SUITES, run_suite, suite_ch4

SCHEMA_VERSION = 1

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_UNKNOWN = 0, 1, 2, 3


class InputError(Exception):
    pass


class UnknownId(Exception):
    pass


def parse_complex(text: str) -> complex:
    """Parse "a+bi", "bi", "i", "-0.4+1.2i" or a real number (j is accepted for i)."""
    s = text.strip().replace(" ", "").replace("i", "j")
    if re.fullmatch(r"(.*[-+]|)j", s):
        s = s[:-1] + "1j"
    try:
        return complex(s)
    except ValueError as exc:
        raise InputError(f"cannot parse complex number {text!r}") from exc


def parse_rational(text: str):
    """Exact "p/q" or integer as Fraction, decimals as float."""
    s = text.strip()
    try:
        if re.fullmatch(r"[-+]?\d+(/\d+)?", s):
            return Fraction(s)
        return float(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"cannot parse rational {text!r}") from exc


def parse_tau(text: str) -> TauPoint:
    tau = parse_complex(text)
    try:
        return TauPoint.from_complex(tau)
    except MockThetaError as exc:
        raise InputError(str(exc)) from exc


def _need(args, *names):
    for n in names:
        if getattr(args, n) is None:
            raise InputError(f"missing --{n}")


def _functions():
    """function id -> (required parameters, evaluator(args, tau, tol))."""
    c = lambda a, n: parse_complex(getattr(a, n))
    r = lambda a, n: float(parse_rational(getattr(a, n)))
    fns = {
        "mordell_h": (("z",), lambda a, t, tol: mordell_h(c(a, "z"), t, tol)),
        "lerch_mu": (("u", "v"), lambda a, t, tol: lerch_mu(c(a, "u"), c(a, "v"), t, tol)),
        "correction_R": (("u",), lambda a, t, tol: correction_R(c(a, "u"), t, tol)),
        "completed_mu": (("u", "v"), lambda a, t, tol: completed_mu(c(a, "u"), c(a, "v"), t, tol)),
        "jacobi_theta": (("z",), lambda a, t, tol: complex(jacobi_theta(c(a, "z"), t, tol))),
        "theta_char": (("a", "b", "z"), lambda a, t, tol: complex(theta_char(r(a, "a"), r(a, "b"), c(a, "z"), t, tol))),
        "theta_ml": (("m", "l", "z"), lambda a, t, tol: complex(theta_index_component(int(a.m), int(a.l), c(a, "z"), t, tol))),
        "unary_g": (("a", "b"), lambda a, t, tol: complex(unary_g(r(a, "a"), r(a, "b"), t, tol))),
        "dedekind_eta": ((), lambda a, t, tol: complex(dedekind_eta(t, tol))),
        "block_f": (("u", "z", "m"), lambda a, t, tol: block_f(c(a, "u"), c(a, "z"), t, int(a.m), tol)),
        "completed_block_f": (("u", "z", "m"), lambda a, t, tol: completed_block_f(c(a, "u"), c(a, "z"), t, int(a.m), tol)),
        "correction_R_ml": (("m", "l", "u"), lambda a, t, tol: correction_R_ml(int(a.m), int(a.l), c(a, "u"), t, tol)),
    }
    for fid in FAMILY_IDS:
        fns[fid] = (("component",), lambda a, t, tol, f=fid: eval_F(f, int(a.component), t, tol))
        fns["H" + fid[1:]] = (("component",), lambda a, t, tol, f=fid: eval_H(f, int(a.component), t, tol))
        fns["G" + fid[1:]] = (("component",), lambda a, t, tol, f=fid: eval_G(f, int(a.component), t, tol))
    for name in MOCK_SERIES:
        fns[f"series:{name}"] = ((), lambda a, t, tol, n=name: eval_series(n, t, tol))
    return fns


def _emit(obj, out=None):
    text = json.dumps(obj, indent=2, sort_keys=True)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_eval(args) -> int:
    fns = _functions()
    if args.function not in fns:
        raise UnknownId(f"unknown function {args.function!r}")
    needed, fn = fns[args.function]
    _need(args, "tau", *needed)
    tp = parse_tau(args.tau)
    tol = args.tol if args.tol is not None else DEFAULT_TOL
    try:
        val = complex(fn(args, tp.tau, tol))
    except (KeyError, IndexError) as exc:
        raise UnknownId(str(exc)) from exc
    except (MockThetaError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    flags = ["degraded_precision"] if tp.degraded else []
    _emit({"schema_version": SCHEMA_VERSION, "function": args.function, "tau": [tp.x, tp.y],
           "value": [val.real, val.imag], "certified_tol": tol, "flags": flags}, args.out)
    return EXIT_OK


def cmd_qcheck(args) -> int:
    if args.identity not in identity_ids():
        raise UnknownId(f"unknown identity {args.identity!r}")
    rep = run_identity(args.identity, args.order)
    _emit({"schema_version": SCHEMA_VERSION, **rep.as_dict()}, args.out)
    if not rep.passed:
        print(f"first mismatch at exponent {rep.first_mismatch}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def build_report(suites, seed: int, tau_grid=None) -> dict:
    entries = []
    for s in suites:
        if s == "ch4" and tau_grid is not None:
            entries += suite_ch4(seed, taus=tau_grid)
        else:
            entries += run_suite(s, seed)
    entries.sort(key=lambda e: e.identity)
    passed = sum(e.passed for e in entries)
    return {"schema_version": SCHEMA_VERSION, "tool_version": __version__,
            "config": {"suites": list(suites), "seed": seed,
                       "tau_grid": None if tau_grid is None else [[t.real, t.imag] for t in tau_grid]},
            "summary": {"total": len(entries), "passed": passed, "failed": len(entries) - passed},
            "entries": [e.as_dict() for e in entries]}


def cmd_verify(args) -> int:
    if args.suite != "all" and args.suite not in SUITES:
        raise UnknownId(f"unknown suite {args.suite!r}")
    suites = SUITES if args.suite == "all" else (args.suite,)
    grid = None
    if args.tau_grid and args.tau_grid != "default":
        grid = tuple(parse_tau(t).tau for t in args.tau_grid.split(","))
    report = build_report(suites, args.seed, grid)
    _emit(report, args.out)
    return EXIT_OK if report["summary"]["failed"] == 0 else EXIT_FAIL


def cmd_list(args) -> int:
    _emit({"schema_version": SCHEMA_VERSION, "functions": sorted(_functions()),
           "identities": identity_ids(), "suites": list(SUITES) + ["all"], "families": list(FAMILY_IDS)},
          args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mocktheta", description=__doc__)
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", help="evaluate a function at a point")
    e.add_argument("function")
    e.add_argument("--tau")
    for name in ("z", "u", "v", "a", "b", "m", "l", "component"):
        e.add_argument(f"--{name}")
    e.add_argument("--tol", type=float)
    e.add_argument("--out")
    e.set_defaults(func=cmd_eval)

    q = sub.add_parser("qcheck", help="check an exact q-series identity")
    q.add_argument("identity")
    q.add_argument("--order", type=int, default=51)
    q.add_argument("--out")
    q.set_defaults(func=cmd_qcheck)

    v = sub.add_parser("verify", help="run a numerical verification suite")
    v.add_argument("--suite", default="all")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--tau-grid", default="default")
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)

    l = sub.add_parser("list", help="list functions, identities and suites")
    l.add_argument("--out")
    l.set_defaults(func=cmd_list)
    return p


_VALUE_OPTS = {"--tau", "--z", "--u", "--v", "--a", "--b", "--m", "--l", "--component", "--tol",
               "--tau-grid", "--seed", "--order"}


def _join_negative_values(argv):
    """Rewrite "--tau -0.4+1.2i" as "--tau=-0.4+1.2i" so argparse does not read the value as a flag."""
    out, i = [], 0
    while i < len(argv):
        if argv[i] in _VALUE_OPTS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = _join_negative_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(json.dumps({"schema_version": SCHEMA_VERSION, "error": str(exc)}), file=sys.stderr)
        return EXIT_INPUT
    except UnknownId as exc:
        print(json.dumps({"schema_version": SCHEMA_VERSION, "error": str(exc)}), file=sys.stderr)
        return EXIT_UNKNOWN


if __name__ == "__main__":
    sys.exit(main())
