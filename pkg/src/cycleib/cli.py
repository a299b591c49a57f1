"""Command-line front end.

Exit status: 0 on success, 1 when a computation is refused (not
invertible, unsolvable in characteristic p, ...) or a verification suite
fails, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .algebra import bracket, centers_window, gamma_window
from .derivations import Derivation, der_apply, der_bracket, der_solve_commutator
from .endomorphisms import (
    Endo,
    endo_apply,
    endo_classify,
    endo_compose,
    endo_conjugate_diag,
    endo_factorize,
    endo_phi,
    endo_phi_inverse,
)
from .errors import BadIndex, InvalidField, LeibnizError, ParseError
from .finmat import dump_matrix, matrix_of_der, matrix_of_endo
from .kernels import BACKEND
from .scalars import parse_field, parse_scalar
from .textio import parse_der, parse_element, parse_endo, parse_map, parse_polynomial, to_json
from .verify import format_report, run_suites

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

_INPUT_ERRORS = (ParseError, BadIndex, InvalidField)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")

    def exit(self, status=0, message=None):
        # --help and --version
        raise _EarlyExit(status, message or "")


class _EarlyExit(Exception):
    def __init__(self, status, message):
        self.status = status
        self.message = message


def _common():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--field", default="Q", help="Q (default) or GF<p>, e.g. GF5")
    p.add_argument("--window", type=int, default=24, metavar="N", help="window size for matrices and centers (default 24)")
    p.add_argument("--json", action="store_true", help="machine-readable output of the same values")
    p.add_argument("--dump-matrix", action="store_true", help="also print the window matrix of the resulting map")
    return p


def build_parser():
    common = _common()
    parser = _Parser(prog="cycleib", description="Exact computations in the cyclic left Leibniz algebra L = span{a1, a2, ...}, [a1, an] = a(n+1).")
    parser.add_argument("--version", action="version", version=f"cycleib {__version__} (kernels: {BACKEND})")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def add(name, help_text):
        return sub.add_parser(name, parents=[common], help=help_text, description=help_text)

    p = add("bracket", "bracket two elements: [x, y]")
    p.add_argument("x")
    p.add_argument("y")
    p = add("apply", "apply 'endo [...]' or 'der [...]' to an element")
    p.add_argument("map")
    p.add_argument("x")
    p = add("compose", "compose two endomorphisms: f o g")
    p.add_argument("f")
    p.add_argument("g")
    p = add("classify", "ZeroSquareIdeal, MonomorphismProper or Automorphism")
    p.add_argument("f")
    p = add("factor", "split a monomorphism as unipotent o diagonal")
    p.add_argument("f")
    p = add("phi", "polynomial of a unipotent endomorphism")
    p.add_argument("u")
    p = add("phi-inv", "unipotent endomorphism of a polynomial with constant term 1")
    p.add_argument("poly")
    p = add("conjugate", "d^-1 o u o d for d = [mu]")
    p.add_argument("u")
    p.add_argument("--mu", required=True)
    p = add("der-bracket", "Lie bracket of two derivations")
    p.add_argument("f")
    p.add_argument("g")
    p = add("solve-commutator", "theta with [[mu], theta] = target")
    p.add_argument("--mu", required=True)
    p.add_argument("--target", required=True)
    add("centers", "left, right and two-sided centers inside span{a1..aN}")
    p = add("gamma", "k-th lower central term inside span{a1..aN}")
    p.add_argument("--k", type=int, required=True)
    p = add("verify", "run every property suite and print a pass/fail table")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--cases", type=int, default=200)
    p = add("dump-matrix", "print the window matrix of a map")
    p.add_argument("map")
    return parser


def _matrix_text(f, N):
    M = matrix_of_endo(f, N) if isinstance(f, Endo) else matrix_of_der(f, N)
    return f"# {f}  window N={N}  trusted columns 1..{M.valid_cols}\n{dump_matrix(M)}", M


def _emit(args, value, text=None):
    """Render a result value; maps optionally with their window matrix."""
    is_map = isinstance(value, (Endo, Derivation))
    if args.json:
        doc = to_json(value) if hasattr(value, "field") else value
        if is_map and args.dump_matrix:
            _, M = _matrix_text(value, args.window)
            doc = dict(doc, matrix=[[M.field.format(x) for x in r] for r in M.entries], trusted_columns=M.valid_cols)
        return json.dumps(doc, sort_keys=True)
    out = text if text is not None else str(value)
    if is_map and args.dump_matrix:
        out += "\n" + _matrix_text(value, args.window)[0]
    return out


def _dispatch(args):
    fd = parse_field(args.field)
    if args.window < 1:
        raise BadIndex("--window must be positive")
    v = args.verb
    if v == "bracket":
        return EXIT_OK, _emit(args, bracket(parse_element(args.x, fd), parse_element(args.y, fd)))
    if v == "apply":
        f = parse_map(args.map, fd)
        x = parse_element(args.x, fd)
        return EXIT_OK, _emit(args, endo_apply(f, x) if isinstance(f, Endo) else der_apply(f, x))
    if v == "compose":
        return EXIT_OK, _emit(args, endo_compose(parse_endo(args.f, fd), parse_endo(args.g, fd)))
    if v == "classify":
        f = parse_endo(args.f, fd)
        tag = endo_classify(f).value
        if args.json:
            return EXIT_OK, json.dumps({"endo": to_json(f), "class": tag}, sort_keys=True)
        return EXIT_OK, _emit(args, f, text=tag) if args.dump_matrix else tag
    if v == "factor":
        fac = endo_factorize(parse_endo(args.f, fd))
        if args.json:
            return EXIT_OK, json.dumps({"unipotent": to_json(fac.unipotent), "diagonal": str(fac.diagonal)}, sort_keys=True)
        return EXIT_OK, f"unipotent: {fac.unipotent}\ndiagonal: {fac.diagonal}"
    if v == "phi":
        return EXIT_OK, _emit(args, endo_phi(parse_endo(args.u, fd)))
    if v == "phi-inv":
        return EXIT_OK, _emit(args, endo_phi_inverse(parse_polynomial(args.poly, fd)))
    if v == "conjugate":
        mu = parse_scalar(fd, args.mu)
        return EXIT_OK, _emit(args, endo_conjugate_diag(parse_endo(args.u, fd), mu))
    if v == "der-bracket":
        return EXIT_OK, _emit(args, der_bracket(parse_der(args.f, fd), parse_der(args.g, fd)))
    if v == "solve-commutator":
        mu = parse_scalar(fd, args.mu)
        return EXIT_OK, _emit(args, der_solve_commutator(mu, parse_der(args.target, fd)))
    if v == "centers":
        if args.window < 2:
            raise BadIndex("centers needs --window >= 2")
        left, right, center = centers_window(args.window, fd)
        if args.json:
            doc = {"window": args.window, "left": str(left), "right": str(right), "center": str(center)}
            return EXIT_OK, json.dumps(doc, sort_keys=True)
        return EXIT_OK, f"left: {left}\nright: {right}\ncenter: {center}"
    if v == "gamma":
        w = gamma_window(args.k, args.window, fd)
        if args.json:
            return EXIT_OK, json.dumps({"k": args.k, "window": args.window, "subspace": str(w)}, sort_keys=True)
        return EXIT_OK, str(w)
    if v == "verify":
        results = run_suites(fd, seed=args.seed, cases=args.cases)
        status = EXIT_OK if all(r.ok for r in results) else EXIT_FAILURE
        if args.json:
            doc = [
                {"suite": r.name, "field": r.field, "cases": r.cases, "passed": r.passed, "failed": r.failed,
                 "first_failure": r.first_failure}
                for r in results
            ]
            return status, json.dumps(doc, sort_keys=True)
        return status, format_report(results, args.seed, args.cases)
    if v == "dump-matrix":
        f = parse_map(args.map, fd)
        text, M = _matrix_text(f, args.window)
        if args.json:
            doc = dict(to_json(f), matrix=[[fd.format(x) for x in r] for r in M.entries], trusted_columns=M.valid_cols)
            return EXIT_OK, json.dumps(doc, sort_keys=True)
        return EXIT_OK, text
    raise UsageError(f"unknown command {v!r}")


def run_command(argv):
    """Run one command; returns ``(exit status, report text)``."""
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        return EXIT_USAGE, str(exc)
    except _EarlyExit as exc:
        return exc.status, exc.message
    try:
        return _dispatch(args)
    except UsageError as exc:
        return EXIT_USAGE, str(exc)
    except _INPUT_ERRORS as exc:
        return EXIT_USAGE, f"error[{exc.code}]: {exc}"
    except LeibnizError as exc:
        return EXIT_FAILURE, f"error[{exc.code}]: {exc}"


def main(argv=None) -> int:
    status, text = run_command(sys.argv[1:] if argv is None else argv)
    if text:
        is_error = text.startswith(("error[", "cycleib: error"))
        print(text.rstrip("\n"), file=sys.stderr if is_error else sys.stdout)
    return status


if __name__ == "__main__":
    sys.exit(main())
