"""Acceptance criteria, one test each, with wall-clock limits.

Every criterion prints a single PASS/FAIL line (collected in the pytest
terminal summary, or printed directly with ``python tests/test_acceptance.py``).
"""

from __future__ import annotations

import random
import sys
import time
import warnings
from fractions import Fraction
from functools import wraps
from itertools import combinations
from math import comb, factorial
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from oracles import hook_length_count, leibniz_det, semistandard_schur  # noqa: E402
from schubert_rings.curvature_forms import is_zero_form, wedge_decompose  # noqa: E402
from schubert_rings.grassmann_cohomology import (  # noqa: E402
    GrassmannianShape,
    NonFittingClassWarning,
    betti_number,
    rho,
    schubert_class,
    schubert_product,
    sp_product,
    top_pairing,
    truncate,
)
from schubert_rings.lambda_gamma import (  # noqa: E402
    character,
    chern_class,
    chern_to_schubert,
    gamma_op,
    standard_character,
    symplectic_character,
)
from schubert_rings.laurent import GradedPolynomial, elementary_symmetric  # noqa: E402
from schubert_rings.linalg import RationalMatrix  # noqa: E402
from schubert_rings.partitions import fits_rectangle, partitions_of  # noqa: E402
from schubert_rings.schur_functor import (  # noqa: E402
    GroupAlgebraElement,
    Permutation,
    exterior_matrix,
    lr_oracle,
    schur_matrix,
    schur_trace,
    young_symmetrizer,
)
from schubert_rings.schur_ring import schur_multiply  # noqa: E402

RESULTS: dict[int, str] = {}


def criterion(number: int, title: str, limit: float | None = None):
    """Run the body (which returns ``(ok, detail)``), time it, record one line, then assert."""

    def decorate(body):
        @wraps(body)
        def test():
            start = time.perf_counter()
            ok, detail = False, ""
            try:
                ok, detail = body()
            except Exception as exc:  # recorded as a failure, then re-raised
                detail = f"{type(exc).__name__}: {exc}"
                raise
            finally:
                elapsed = time.perf_counter() - start
                in_time = limit is None or elapsed < limit
                budget = f" < {limit:g}s" if limit is not None else ""
                status = "PASS" if ok and in_time else "FAIL"
                if ok and not in_time:
                    detail = f"too slow; {detail}"
                line = f"[{status}] {number:2d}. {title}: {detail} ({elapsed:.2f}s{budget})"
                RESULTS[number] = line
                print(line)
            assert ok, detail
            assert in_time, f"took {elapsed:.2f}s, limit {limit}s"

        return test

    return decorate


def _parts_up_to(w):
    return [lam for k in range(w + 1) for lam in partitions_of(k)]


def _random_matrix(rng, d, spread=5):
    return RationalMatrix(
        [[Fraction(rng.randint(-spread, spread), rng.randint(1, 4)) for _ in range(d)] for _ in range(d)]
    )


@criterion(1, "rho(V^lam (x) V^mu) = sigma_lam . sigma_mu", limit=10)
def test_criterion_01_homomorphism():
    parts = _parts_up_to(4)
    checked = 0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", NonFittingClassWarning)
        for m, n in [(2, 2), (2, 3), (3, 2), (3, 3)]:
            shape = GrassmannianShape(m, n)
            for lam in parts:
                for mu in parts:
                    if rho(schur_multiply(lam, mu), shape) != schubert_product(lam, mu, shape):
                        return False, f"mismatch at G({m},{n}) {lam} x {mu}"
                    checked += 1
    return True, f"{checked} products"


@criterion(2, "character oracle = Pieri/Giambelli product", limit=120)
def test_criterion_02_two_routes():
    parts = [lam for lam in _parts_up_to(6) if not lam or lam[0] <= 4]
    checked = 0
    for lam in parts:
        for mu in parts:
            if lam.weight + mu.weight > 6:
                continue
            if lr_oracle(lam, mu, seed=0) != schur_multiply(lam, mu):
                return False, f"mismatch at {lam} x {mu}"
            checked += 1
    return True, f"{checked} pairs"


@criterion(3, "wedge product of Schubert forms = truncated LR", limit=60)
def test_criterion_03_form_identity():
    checked = 0
    for m, n in [(2, 2), (2, 3)]:
        shape = GrassmannianShape(m, n)
        for lam in shape.basis():
            for mu in shape.basis():
                got = wedge_decompose(lam, mu, m, n)
                if any(not isinstance(c, int) or c < 0 for _, c in got.items()):
                    return False, f"non-integral coefficients at {lam} x {mu}"
                if got != truncate(schur_multiply(lam, mu), shape).terms:
                    return False, f"mismatch at G({m},{n}) {lam} x {mu}"
                checked += 1
    return True, f"{checked} pairs"


@criterion(4, "Schubert form vanishes iff diagram leaves the rectangle", limit=60)
def test_criterion_04_vanishing():
    checked = 0
    for m in (1, 2, 3):
        for n in (1, 2, 3):
            for lam in _parts_up_to(m * n + 2):
                if is_zero_form(lam, m, n) != (not fits_rectangle(lam, n, m)):
                    return False, f"mismatch at G({m},{n}) {lam}"
                checked += 1
    return True, f"{checked} diagrams"


@criterion(5, "c_lam^2 = (p!/f^lam) c_lam", limit=30)
def test_criterion_05_quasi_idempotent():
    one, swap = Permutation((1, 2)), Permutation((2, 1))
    if young_symmetrizer((2,)) != GroupAlgebraElement(2, {one: 1, swap: 1}):
        return False, "c_2 is not 1 + s"
    if young_symmetrizer((1, 1)) != GroupAlgebraElement(2, {one: 1, swap: -1}):
        return False, "c_11 is not 1 - s"
    checked = 0
    for lam in _parts_up_to(5):
        if not lam:
            continue
        c = young_symmetrizer(lam)
        if c * c != c.scale(factorial(lam.weight) // hook_length_count(lam)):
            return False, f"fails for {lam}"
        checked += 1
    return True, f"{checked} shapes; c_2 = 1+s, c_11 = 1-s"


def _diagonal_matching(M, E):
    """Basis matching read off the diagonal: M[i][i] = E[perm i][perm i] for distinct diagonal entries."""
    size = M.nrows
    perm = []
    for i in range(size):
        matches = [j for j in range(size) if E[j, j] == M[i, i] and j not in perm]
        if len(matches) != 1:
            return None
        perm.append(matches[0])
    return perm


@criterion(6, "Schur matrix of (1^k) is the k-th exterior power")
def test_criterion_06_exterior_powers():
    rng = random.Random(2024)
    primes = [2, 3, 5, 7]
    checked = 0
    for n in range(1, 5):
        for k in range(1, n + 1):
            lam = (1,) * k
            D = RationalMatrix.diagonal(primes[:n])
            perm = _diagonal_matching(schur_matrix(lam, D), exterior_matrix(k, D))
            if perm is None:
                return False, f"no basis matching for n={n}, k={k}"
            signs = None
            for _ in range(4):
                A = _random_matrix(rng, n)
                M, E = schur_matrix(lam, A), exterior_matrix(k, A)
                subsets = list(combinations(range(n), k))
                for i, rows in enumerate(subsets):
                    for j, cols in enumerate(subsets):
                        if E[i, j] != leibniz_det([[A[r, c] for c in cols] for r in rows]):
                            return False, f"exterior entry is not a minor (n={n}, k={k})"
                if signs is None:
                    pivot = [E[perm[0], perm[j]] for j in range(M.ncols)]
                    if any(x == 0 for x in pivot):
                        continue
                    signs = [M[0, j] / pivot[j] for j in range(M.ncols)]
                    if any(abs(s) != 1 for s in signs):
                        return False, f"entries differ by more than sign (n={n}, k={k})"
                for i in range(M.nrows):
                    for j in range(M.ncols):
                        if M[i, j] != signs[i] * signs[j] * E[perm[i], perm[j]]:
                            return False, f"not a fixed signed permutation of minors (n={n}, k={k})"
                trace = schur_trace(lam, A)
                if not (M.trace() == E.trace() == trace):
                    return False, f"trace mismatch (n={n}, k={k})"
                if k == 1 and trace != A.trace():
                    return False, "k=1 trace is not Tr A"
                if k == n and trace != A.det():
                    return False, "k=n trace is not det A"
                checked += 1
            if signs is None:
                return False, f"no generic sample for n={n}, k={k}"
    return True, f"{checked} random matrices"


@criterion(7, "Schur matrix is multiplicative")
def test_criterion_07_functoriality():
    rng = random.Random(7)
    checked = 0
    for lam in _parts_up_to(4):
        if not lam:
            continue
        for d in (1, 2, 3):
            for _ in range(20):
                A, B = _random_matrix(rng, d), _random_matrix(rng, d)
                SA, SB, SAB = schur_matrix(lam, A), schur_matrix(lam, B), schur_matrix(lam, A @ B)
                if SAB is None:
                    if SA is not None or SB is not None:
                        return False, f"zero-module inconsistency for {lam}, d={d}"
                    continue
                if SAB != SA @ SB:
                    return False, f"fails for {lam}, d={d}"
                checked += 1
    return True, f"{checked} pairs (20 seeded per shape and size)"


@criterion(8, "character sum = matrix trace = Schur polynomial")
def test_criterion_08_trace_coherence():
    rng = random.Random(8)
    checked = 0
    for lam in _parts_up_to(6):
        for d in (1, 2, 3):
            A = _random_matrix(rng, d)
            M = schur_matrix(lam, A)
            if schur_trace(lam, A) != (M.trace() if M is not None else 0):
                return False, f"random-matrix trace mismatch for {lam}, d={d}"
            values = [Fraction(rng.randint(-4, 6), rng.randint(1, 3)) for _ in range(d)]
            D = RationalMatrix.diagonal(values)
            poly = sum(
                (c * _monomial(values, exp) for exp, c in semistandard_schur(lam, d).items()), Fraction(0)
            )
            MD = schur_matrix(lam, D)
            if not (schur_trace(lam, D) == poly == (MD.trace() if MD is not None else 0)):
                return False, f"diagonal mismatch for {lam}, d={d}"
            checked += 2
    return True, f"{checked} instances, |lam| <= 6, d <= 3"


def _monomial(values, exp):
    out = Fraction(1)
    for v, e in zip(values, exp):
        out *= v ** e
    return out


@criterion(9, "lambda-ring Chern classes", limit=30)
def test_criterion_09_lambda_ring():
    checked = 0
    for n in range(1, 5):
        for k in range(1, n + 1):
            if chern_class(k, standard_character(n)) != GradedPolynomial(n, elementary_symmetric(n, k).terms):
                return False, f"c_{k} of rank {n} is not e_{k}"
            shape = GrassmannianShape(n, n)
            if chern_to_schubert(k, shape) != schubert_class((1,) * k, shape):
                return False, f"c_{k} does not map to sigma_(1^{k}) on G({n},{n})"
            checked += 2
    for exps in [(1,), (-1,), (2,), (1, -1), (0, 3), (2, -1, 1)]:
        xi = character(exps)
        for k in range(2, 6):
            if gamma_op(k, xi - 1) != 0:
                return False, f"gamma^{k}(xi - 1) != 0 for xi = a^{exps}"
            checked += 1
    for n in range(1, 4):
        for k in range(1, 2 * n + 1, 2):
            if chern_class(k, symplectic_character(n)) != 0:
                return False, f"odd c_{k} of symplectic rank {n} is nonzero"
            checked += 1
    return True, f"{checked} identities"


@criterion(10, "Betti numbers, Poincare duality, quaternionic degrees", limit=10)
def test_criterion_10_betti_duality():
    for m in range(1, 6):
        for n in range(1, 6):
            shape = GrassmannianShape(m, n)
            betti = [betti_number(shape, k) for k in range(m * n + 1)]
            if sum(betti) != comb(m + n, n) or betti != betti[::-1]:
                return False, f"Betti numbers wrong for G({m},{n})"
    pairs = 0
    for m in range(1, 4):
        for n in range(1, 4):
            shape = GrassmannianShape(m, n)
            for lam in shape.basis():
                for mu in shape.basis():
                    expected = 1 if mu == shape.complement(lam) else 0
                    if top_pairing(schubert_product(lam, mu, shape)) != expected:
                        return False, f"pairing fails at G({m},{n}) {lam}, {mu}"
                    sigma, tau = schubert_product(lam, mu, shape), sp_product(lam, mu, shape)
                    if tau.terms != sigma.terms or any(
                        tau.degree_of(nu) != 4 * nu.weight or sigma.degree_of(nu) != 2 * nu.weight
                        for nu in tau.terms
                    ):
                        return False, f"quaternionic product differs at G({m},{n}) {lam}, {mu}"
                    pairs += 1
    return True, f"Betti for m,n <= 5; {pairs} pairings"


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
