"""Bounded, exhaustive invariant suites behind ``schubert-rings verify``.

A suite is a list of :class:`Case` objects. Each case computes an expected
and an actual value by two independent routes; a case fails when they differ
or when one route raises an invariant error. Budget errors are not caught.
"""

from __future__ import annotations

import math
import time
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Any, Callable

from . import __version__
from .config import DEFAULT_BUDGETS, Budgets
from .curvature_forms import (
    chern_form,
    curvature_matrix,
    is_zero_form,
    schubert_form,
    schubert_form_rank,
    schubert_form_via_characters,
    wedge_decompose,
)
from .errors import InvariantViolation, OracleError
from .grassmann_cohomology import GrassmannianShape, rho, schubert_class, schubert_product, truncate
from .lambda_gamma import (
    character,
    chern_class,
    chern_to_schubert,
    gamma_op,
    standard_character,
    symplectic_character,
)
from .laurent import GradedPolynomial, LaurentPolynomial, elementary_symmetric
from .partitions import fits_rectangle, format_partition, partitions_of, standard_tableau_count
from .schur_functor import lr_oracle, symmetrizer_norm
from .schur_ring import schur_multiply

SUITES = ("theorem", "oracle", "forms", "lambda", "symmetrizer")


@dataclass(frozen=True)
class Bounds:
    max_weight: int = 4
    max_m: int = 3
    max_n: int = 3
    seed: int = 0


@dataclass
class Case:
    suite: str
    name: str
    compute: Callable[[], tuple[Any, Any]]


@dataclass
class Report:
    suite: str
    cases: int = 0
    failures: list[dict] = field(default_factory=list)
    wall_time: float | None = None
    seed: int = 0
    version: str = __version__

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "cases": self.cases,
            "failures": self.failures,
            "wall_time": self.wall_time,
            "seed": self.seed,
            "version": self.version,
        }


def _jsonable(value: Any) -> Any:
    if hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return value


def _partitions_up_to(w: int) -> list:
    return [lam for k in range(w + 1) for lam in partitions_of(k)]


def _shapes(bounds: Bounds) -> list[tuple[int, int]]:
    return [(m, n) for m in range(1, bounds.max_m + 1) for n in range(1, bounds.max_n + 1)]


def _label(lam) -> str:
    return format_partition(lam) or "()"


def theorem_cases(bounds: Bounds, budgets: Budgets) -> list[Case]:
    """``rho(V^lam (x) V^mu) = sigma_lam . sigma_mu`` on every shape in the bounds."""
    cases = []
    parts = _partitions_up_to(bounds.max_weight)
    for m, n in _shapes(bounds):
        shape = GrassmannianShape(m, n)
        for lam, mu in product(parts, parts):
            def compute(lam=lam, mu=mu, shape=shape):
                with warnings.catch_warnings():
                    warnings.simplefilter("ignore")
                    return schubert_product(lam, mu, shape), rho(schur_multiply(lam, mu), shape)

            cases.append(Case("theorem", f"G({m},{n}) {_label(lam)} x {_label(mu)}", compute))
    return cases


def oracle_cases(bounds: Bounds, budgets: Budgets) -> list[Case]:
    """Character-evaluation oracle against the Pieri/Giambelli product."""
    budgets.check_weight(bounds.max_weight)
    cases = []
    parts = _partitions_up_to(bounds.max_weight)
    for lam, mu in product(parts, parts):
        if lam.weight + mu.weight > bounds.max_weight:
            continue

        def compute(lam=lam, mu=mu):
            return schur_multiply(lam, mu), lr_oracle(lam, mu, seed=bounds.seed, budgets=budgets)

        cases.append(Case("oracle", f"{_label(lam)} x {_label(mu)}", compute))
    return cases


def forms_cases(bounds: Bounds, budgets: Budgets) -> list[Case]:
    cases = []
    for m, n in _shapes(bounds):
        budgets.check_exterior(m, n)
        shape = GrassmannianShape(m, n)
        top = m * n
        tag = f"G({m},{n})"
        for k in range(n + 1):
            cases.append(Case(
                "forms", f"{tag} chern form {k} two ways",
                lambda k=k, m=m, n=n: (
                    chern_form(k, curvature_matrix(m, n, budgets), "subsets"),
                    chern_form(k, curvature_matrix(m, n, budgets), "permutations"),
                ),
            ))
        for lam in _partitions_up_to(top + 2):
            cases.append(Case(
                "forms", f"{tag} vanishing {_label(lam)}",
                lambda lam=lam, m=m, n=n: (not fits_rectangle(lam, n, m), is_zero_form(lam, m, n, budgets)),
            ))
            if fits_rectangle(lam, n, m) and lam.weight <= top:
                cases.append(Case(
                    "forms", f"{tag} type {_label(lam)}",
                    lambda lam=lam, m=m, n=n: (
                        {(lam.weight, lam.weight)},
                        schubert_form(lam, m, n, budgets).form_types(),
                    ),
                ))
            if lam.weight <= 3:
                cases.append(Case(
                    "forms", f"{tag} character route {_label(lam)}",
                    lambda lam=lam, m=m, n=n: (
                        schubert_form(lam, m, n, budgets),
                        schubert_form_via_characters(lam, m, n, budgets),
                    ),
                ))
        for k in range(top + 1):
            cases.append(Case(
                "forms", f"{tag} independence weight {k}",
                lambda k=k, m=m, n=n: (True, _full_rank(schubert_form_rank(k, m, n, budgets))),
            ))
        fitting = shape.basis()
        for lam, mu in product(fitting, fitting):
            if lam.weight + mu.weight > top:
                continue
            cases.append(Case(
                "forms", f"{tag} wedge {_label(lam)} x {_label(mu)}",
                lambda lam=lam, mu=mu, m=m, n=n, shape=shape: (
                    truncate(schur_multiply(lam, mu), shape).terms,
                    wedge_decompose(lam, mu, m, n, budgets),
                ),
            ))
    return cases


def _full_rank(rank_count: tuple[int, int]) -> bool:
    r, count = rank_count
    return r == count


def lambda_cases(bounds: Bounds, budgets: Budgets) -> list[Case]:
    cases = []
    for n in range(1, bounds.max_n + 1):
        for k in range(1, n + 1):
            cases.append(Case(
                "lambda", f"c_{k} of standard rank {n}",
                lambda k=k, n=n: (
                    GradedPolynomial(n, elementary_symmetric(n, k).terms),
                    chern_class(k, standard_character(n), budgets),
                ),
            ))
            cases.append(Case(
                "lambda", f"c_{k} to Schubert on G({bounds.max_m},{n})",
                lambda k=k, n=n: (
                    schubert_class((1,) * k, GrassmannianShape(bounds.max_m, n)),
                    chern_to_schubert(k, GrassmannianShape(bounds.max_m, n), budgets),
                ),
            ))
        for k in range(1, 2 * n + 1, 2):
            cases.append(Case(
                "lambda", f"odd c_{k} of symplectic rank {n}",
                lambda k=k, n=n: (GradedPolynomial.zero(n), chern_class(k, symplectic_character(n), budgets)),
            ))
    # gamma^k of (line - 1) vanishes for k >= 2
    for n in range(1, min(bounds.max_n, 2) + 1):
        for exps in product((-1, 0, 1, 2), repeat=n):
            line = character(exps)
            for k in range(2, max(bounds.max_weight, 2) + 1):
                cases.append(Case(
                    "lambda", f"gamma^{k} of a{list(exps)} - 1",
                    lambda line=line, k=k, n=n: (LaurentPolynomial.zero(n), gamma_op(k, line - 1)),
                ))
    return cases


def symmetrizer_cases(bounds: Bounds, budgets: Budgets) -> list[Case]:
    budgets.check_weight(bounds.max_weight)
    cases = []
    for lam in _partitions_up_to(bounds.max_weight):
        if not lam:
            continue
        p = lam.weight
        cases.append(Case(
            "symmetrizer", f"norm {_label(lam)}",
            lambda lam=lam, p=p: (
                math.factorial(p) // standard_tableau_count(lam, "recursion"),
                symmetrizer_norm(lam, budgets),
            ),
        ))
        cases.append(Case(
            "symmetrizer", f"tableau count {_label(lam)}",
            lambda lam=lam: (standard_tableau_count(lam, "recursion"), standard_tableau_count(lam, "enumerate")),
        ))
    return cases


BUILDERS = {
    "theorem": theorem_cases,
    "oracle": oracle_cases,
    "forms": forms_cases,
    "lambda": lambda_cases,
    "symmetrizer": symmetrizer_cases,
}


def _run_case(case: Case) -> dict | None:
    try:
        expected, actual = case.compute()
    except (InvariantViolation, OracleError) as exc:
        return {"suite": case.suite, "case": case.name, "error": f"{type(exc).__name__}: {exc}"}
    if expected == actual:
        return None
    return {"suite": case.suite, "case": case.name, "expected": _jsonable(expected), "actual": _jsonable(actual)}


def run_suite(name: str, bounds: Bounds = Bounds(), budgets: Budgets = DEFAULT_BUDGETS,
              threads: int = 1, timing: bool = True) -> Report:
    """Build and run a suite (or ``"all"``); failures are sorted so the report is order-independent."""
    names = SUITES if name == "all" else (name,)
    if any(n not in BUILDERS for n in names):
        raise ValueError(f"unknown suite {name!r}")
    start = time.perf_counter()
    cases = [case for n in names for case in BUILDERS[n](bounds, budgets)]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            outcomes = list(pool.map(_run_case, cases))
    else:
        outcomes = [_run_case(case) for case in cases]
    failures = sorted((f for f in outcomes if f), key=lambda f: (f["suite"], f["case"]))
    elapsed = round(time.perf_counter() - start, 3) if timing else None
    return Report(name, len(cases), failures, elapsed, bounds.seed)


__all__ = ["SUITES", "Bounds", "Case", "Report", "run_suite"]
