"""Command-line front end: every result is one JSON document on stdout.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from pathlib import Path
from typing import Any, Sequence

from . import __version__
from .config import Budgets, load_budgets
from .curvature_forms import schubert_form, wedge_decompose
from .errors import BudgetExceeded, InvariantViolation, OracleError
from .grassmann_cohomology import GrassmannianShape, betti_number, rho, schubert_product, sp_product
from .lambda_gamma import chern_class, standard_character, symplectic_character
from .linalg import RationalMatrix
from .partitions import format_partition, parse_partition
from .schur_functor import exterior_matrix, schur_matrix, schur_trace
from .schur_ring import SchurCombination, giambelli, lr_coefficient, pieri, schur_multiply
from .suites import SUITES, Bounds, run_suite

EXIT_OK, EXIT_FAILURE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(ValueError):
    pass


def _partition(text: str):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def _read_matrix(path: str) -> RationalMatrix:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read matrix from {path}: {exc}") from exc
    try:
        matrix = RationalMatrix.from_json(data)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"malformed matrix in {path}: {exc}") from exc
    if not matrix.is_square():
        raise UsageError(f"matrix in {path} is not square")
    return matrix


def _rational(x) -> int | str:
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _shape(pair: Sequence[int] | None) -> GrassmannianShape | None:
    return None if pair is None else GrassmannianShape(*pair)


def cmd_mult(args, budgets: Budgets) -> tuple[Any, int]:
    shape = _shape(args.rect)
    if args.sp and shape is None:
        raise UsageError("--sp needs --rect m n")
    if shape is None:
        return schur_multiply(args.lam, args.mu).to_json(), EXIT_OK
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        if args.sp:
            return sp_product(args.lam, args.mu, shape).to_json(), EXIT_OK
        return schubert_product(args.lam, args.mu, shape).terms.to_json(), EXIT_OK


def cmd_lr(args, budgets):
    return lr_coefficient(args.lam, args.mu, args.nu), EXIT_OK


def cmd_pieri(args, budgets):
    return pieri(args.lam, args.k).to_json(), EXIT_OK


def cmd_giambelli(args, budgets):
    return giambelli(args.lam, args.max_index).to_json(), EXIT_OK


def cmd_rho(args, budgets):
    text = args.combination.strip()
    try:
        combination = (
            SchurCombination.from_json(json.loads(text)) if text.startswith("{")
            else SchurCombination.basis(parse_partition(text))
        )
    except (json.JSONDecodeError, ValueError, TypeError, AttributeError) as exc:
        raise UsageError(f"malformed Schur combination {text!r}: {exc}") from exc
    return rho(combination, GrassmannianShape(*args.rect)).terms.to_json(), EXIT_OK


def cmd_betti(args, budgets):
    shape = GrassmannianShape(args.m, args.n)
    if args.k is not None:
        return betti_number(shape, args.k), EXIT_OK
    return [betti_number(shape, k) for k in range(shape.dimension + 1)], EXIT_OK


def cmd_schur_matrix(args, budgets):
    A = _read_matrix(args.matrix)
    M = schur_matrix(args.lam, A, budgets)
    if M is None:
        return {"matrix": None, "dimension": 0, "trace": 0}, EXIT_OK
    return {"matrix": M.to_json(), "dimension": M.nrows, "trace": _rational(M.trace())}, EXIT_OK


def cmd_trace(args, budgets):
    return _rational(schur_trace(args.lam, _read_matrix(args.matrix), budgets)), EXIT_OK


def cmd_exterior(args, budgets):
    A = _read_matrix(args.matrix)
    if not 1 <= args.k <= A.nrows:
        raise UsageError(f"k must lie in 1..{A.nrows}")
    return exterior_matrix(args.k, A).to_json(), EXIT_OK


def cmd_chern(args, budgets):
    if args.rank is not None:
        x = standard_character(args.rank)
    else:
        x = symplectic_character(args.symplectic)
    return chern_class(args.k, x, budgets).to_json(), EXIT_OK


def cmd_forms(args, budgets):
    m, n = args.m, args.n
    budgets.check_exterior(m, n)
    product = schubert_form(args.lam, m, n, budgets) * schubert_form(args.mu, m, n, budgets)
    out = {
        "lambda": format_partition(args.lam),
        "mu": format_partition(args.mu),
        "m": m,
        "n": n,
        "decomposition": wedge_decompose(args.lam, args.mu, m, n, budgets).to_json(),
        "monomials": len(product),
    }
    if args.dump:
        out["product"] = product.to_json()
    return out, EXIT_OK


def cmd_verify(args, budgets):
    max_m, max_n = args.max_shape
    bounds = Bounds(max_weight=args.max_weight, max_m=max_m, max_n=max_n, seed=args.seed)
    report = run_suite(args.suite, bounds, budgets, threads=args.threads, timing=not args.no_timing)
    return report.to_json(), EXIT_OK if report.ok else EXIT_FAILURE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="schubert-rings", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--config", help="TOML budget file (overrides $SCHUBERT_CONFIG)")
    parser.add_argument("--pretty", action="store_true", help="indented output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mult", help="product s_lam * s_mu, optionally in H*(G(m,n))")
    p.add_argument("lam", type=_partition)
    p.add_argument("mu", type=_partition)
    p.add_argument("--rect", nargs=2, type=_positive, metavar=("M", "N"))
    p.add_argument("--sp", action="store_true", help="quaternionic classes (degrees doubled)")
    p.set_defaults(func=cmd_mult)

    p = sub.add_parser("lr", help="coefficient c^nu_{lam,mu}")
    for name in ("lam", "mu", "nu"):
        p.add_argument(name, type=_partition)
    p.set_defaults(func=cmd_lr)

    p = sub.add_parser("pieri", help="s_lam * e_k")
    p.add_argument("lam", type=_partition)
    p.add_argument("k", type=_positive)
    p.set_defaults(func=cmd_pieri)

    p = sub.add_parser("giambelli", help="s_lam as a polynomial in e_1, e_2, ...")
    p.add_argument("lam", type=_partition)
    p.add_argument("--max-index", type=_nonnegative, help="set e_k = 0 for k above this")
    p.set_defaults(func=cmd_giambelli)

    p = sub.add_parser("rho", help="image of a Schur combination in H*(G(m,n))")
    p.add_argument("combination", help='partition "2,1" or JSON such as \'{"2":1,"1,1":1}\'')
    p.add_argument("--rect", nargs=2, type=_positive, metavar=("M", "N"), required=True)
    p.set_defaults(func=cmd_rho)

    p = sub.add_parser("betti", help="Betti numbers b_2k of G(m,n)")
    p.add_argument("m", type=_positive)
    p.add_argument("n", type=_positive)
    p.add_argument("k", type=_nonnegative, nargs="?")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("schur-matrix", help="matrix of A on the Schur module, with its trace")
    p.add_argument("lam", type=_partition)
    p.add_argument("matrix", help="JSON file holding a square matrix")
    p.set_defaults(func=cmd_schur_matrix)

    p = sub.add_parser("trace", help="trace of A on the Schur module, by the character sum")
    p.add_argument("lam", type=_partition)
    p.add_argument("matrix")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("exterior", help="k-th exterior power of A")
    p.add_argument("k", type=_positive)
    p.add_argument("matrix")
    p.set_defaults(func=cmd_exterior)

    p = sub.add_parser("chern", help="Chern class of a standard torus character")
    p.add_argument("k", type=_positive)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--rank", type=_positive, help="a_1 + ... + a_n")
    group.add_argument("--symplectic", type=_positive, help="sum of a_i + a_i^-1")
    p.set_defaults(func=cmd_chern)

    p = sub.add_parser("forms", help="decompose a wedge product of Schubert forms")
    p.add_argument("lam", type=_partition)
    p.add_argument("mu", type=_partition)
    p.add_argument("m", type=_positive)
    p.add_argument("n", type=_positive)
    p.add_argument("--dump", action="store_true", help="include every monomial of the product")
    p.set_defaults(func=cmd_forms)

    p = sub.add_parser("verify", help="run an invariant suite and emit a report")
    p.add_argument("suite", choices=SUITES + ("all",))
    p.add_argument("--max-weight", type=_nonnegative, default=4)
    p.add_argument("--max-shape", nargs=2, type=_positive, default=(3, 3), metavar=("M", "N"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=_positive, default=1)
    p.add_argument("--no-timing", action="store_true", help="report wall_time as null for reproducible output")
    p.set_defaults(func=cmd_verify)
    return parser


def _emit(payload: Any, pretty: bool) -> None:
    if pretty:
        text = json.dumps(payload, indent=2, ensure_ascii=False)
    else:
        text = json.dumps(payload, separators=(",", ":"), ensure_ascii=False)
    sys.stdout.write(text + "\n")


def _error(message: str) -> None:
    sys.stderr.write(f"schubert-rings: error: {message}\n")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        budgets = load_budgets(args.config)
        payload, code = args.func(args, budgets)
    except BudgetExceeded as exc:
        _error(str(exc))
        return EXIT_BUDGET
    except (InvariantViolation, OracleError) as exc:
        _error(str(exc))
        return EXIT_FAILURE
    except (UsageError, ValueError, OSError, KeyError, TypeError) as exc:
        _error(str(exc))
        return EXIT_USAGE
    _emit(payload, args.pretty)
    return code


if __name__ == "__main__":
    sys.exit(main())
