"""Acceptance criteria. Each test prints one PASS/FAIL line and is summarized at the end of the run."""
import random
import time
from fractions import Fraction

import numpy as np
import pytest

from hankel_inertia.automorphisms import Automorphism, dilate_kernel, involute_kernel, parity_kernel
from hankel_inertia.carleman import carleman_element, negative_count_experiment
from hankel_inertia.generators import (
    kernel_corpus,
    random_higher_term,
    random_kernel,
    random_positive_kernel,
    random_skew_triangular,
)
from hankel_inertia.inertia import homotopy_path, kernel_inertia, numeric_inertia, skew_triangular_inertia
from hankel_inertia.kernel import canonicalize, kernel
from hankel_inertia.oracle import nonzero_spectrum, oracle_inertia
from hankel_inertia.representations import (
    circle_to_line,
    circle_to_sequence,
    kernel_to_line_symbol,
    line_symbol_to_kernel,
    line_to_circle,
    sequence_to_circle,
)
from hankel_inertia.sign import sign_matrix, sign_matrix_to_kernel

SEED = 20240601
REPRESENTATIONS = ("kernel", "line", "circle", "sequence")


@pytest.fixture
def report(request):
    def record(ok: bool, detail: str):
        request.node.criterion_detail = detail
        number, title = request.node.get_closest_marker("criterion").args
        print(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}  ({detail})")
        assert ok, detail

    return record


@pytest.mark.criterion(1, "closed form equals exact oracle on 500 random kernels")
def test_closed_form_matches_oracle(report):
    rng = random.Random(SEED)
    start = time.perf_counter()
    mismatches = []
    for i in range(500):
        k = random_kernel(rng)
        if kernel_inertia(k).counts != oracle_inertia(k).counts:
            mismatches.append(i)
    elapsed = time.perf_counter() - start
    report(not mismatches and elapsed < 60, f"{len(mismatches)} mismatches, {elapsed:.1f}s")


@pytest.mark.criterion(2, "fixture kernels have the stated inertia")
def test_fixtures(report):
    cases = {
        "e^-t": (kernel((1, [1])), (1, 0)),
        "t e^-t": (kernel((1, [0, 1])), (1, 1)),
        "t^2 e^-t": (kernel((1, [0, 0, 1])), (2, 1)),
        "-t^2 e^-t": (kernel((1, [0, 0, -1])), (1, 2)),
        "2 e^-t cos t": (kernel(("1+i", [1]), ("1-i", [1])), (1, 1)),
    }
    wrong = [name for name, (k, expected) in cases.items()
             if not (kernel_inertia(k).counts == oracle_inertia(k).counts == expected)]
    report(not wrong, f"{len(cases) - len(wrong)}/{len(cases)} match" + (f", wrong: {wrong}" if wrong else ""))


@pytest.mark.criterion(3, "positive kernels have no negative part; a K>=1 term adds one")
def test_positive_kernels(report):
    rng = random.Random(SEED + 3)
    failures = 0
    for _ in range(200):
        k = random_positive_kernel(rng)
        extended = canonicalize(list(k.all_terms()) + random_higher_term(rng, [t.alpha for t in k.all_terms()]))
        ok = (kernel_inertia(k).n_minus == 0 == oracle_inertia(k).n_minus
              and kernel_inertia(extended).n_minus >= 1 and oracle_inertia(extended).n_minus >= 1)
        failures += not ok
    report(failures == 0, f"{200 - failures}/200 pass")


@pytest.mark.criterion(4, "skew-triangular closed form equals numeric inertia, homotopy invariant")
def test_skew_triangular(report):
    rng = random.Random(SEED + 4)
    failures = 0
    for _ in range(200):
        S = random_skew_triangular(rng)
        closed = skew_triangular_inertia(S).counts
        ok = numeric_inertia(S, 1e-9).counts == closed
        ok = ok and all(numeric_inertia(homotopy_path(S, eps), 1e-9).counts == closed for eps in (0.0, 0.5, 1.0))
        failures += not ok
    report(failures == 0, f"{200 - failures}/200 pass at tol 1e-9, eps in {{0, 0.5, 1}}")


def _sign_round_trip(k):
    terms = []
    for block in sign_matrix(k).blocks:
        term = sign_matrix_to_kernel(block, block.alpha)
        terms.append(term)
        if block.kind == "pair":
            terms.append(term.conjugate())
    return canonicalize(terms)


@pytest.mark.criterion(5, "exact round trips through sign matrices and all representations")
def test_round_trips(report):
    rng = random.Random(SEED + 5)
    failures = 0
    for _ in range(200):
        k = random_kernel(rng)
        phi = kernel_to_line_symbol(k)
        omega = line_to_circle(phi)
        kappa = circle_to_sequence(omega)
        omega_back = sequence_to_circle(kappa)
        phi_back = circle_to_line(omega_back)
        ok = (_sign_round_trip(k) == k and omega_back == omega and phi_back == phi
              and line_symbol_to_kernel(phi_back) == k)
        failures += not ok
    report(failures == 0, f"{200 - failures}/200 exact")


@pytest.mark.criterion(6, "Carleman finite sections reach N-(V) at N=512 and never exceed it")
def test_carleman(report):
    start = time.perf_counter()
    fixtures = [
        (kernel((1, [-1])), 1),
        (kernel((1, [-10])), 1),
        (kernel((1, [-1]), (2, [-1])), 2),
        (kernel((1, [1])), 0),
        (kernel((1, [0, 1])), 1),
    ]
    counts, ok = [], True
    for v, predicted in fixtures:
        exp = negative_count_experiment(v, (64, 128, 256, 512), 1e-9)
        counts.append(exp.counts[-1])
        ok = ok and exp.predicted == predicted and exp.counts[-1] == predicted and exp.bounded
    ok = ok and [carleman_element(n) for n in range(3)] == [2, 0, Fraction(2, 3)]
    elapsed = time.perf_counter() - start
    report(ok and elapsed < 120, f"counts at N=512 {counts}, {elapsed:.1f}s")


@pytest.mark.criterion(7, "automorphisms preserve inertia; group laws hold exactly")
def test_automorphisms(report):
    from hankel_inertia.representations import convert

    ops = [Automorphism.parse(op) for op in ("dilate:3/2", "dilate:2", "involute", "parity")]
    failures = []
    for name, k in kernel_corpus().items():
        counts = kernel_inertia(k).counts
        for op in ops:
            for kind in REPRESENTATIONS:
                if kernel_inertia(convert(op.apply(convert(k, kind)), "kernel")).counts != counts:
                    failures.append(f"{name}:{op.kind}:{kind}")
        laws = (dilate_kernel(dilate_kernel(k, Fraction(3, 2)), 2) == dilate_kernel(k, 3)
                and dilate_kernel(dilate_kernel(k, 2), Fraction(1, 2)) == k
                and involute_kernel(involute_kernel(k)) == k
                and parity_kernel(parity_kernel(k)) == k)
        if not laws:
            failures.append(f"{name}:group-law")
    report(not failures, f"{len(kernel_corpus())} kernels x {len(ops)} transforms x 4 representations"
           + (f", failures: {failures}" if failures else ""))


@pytest.mark.criterion(8, "rank-one spectrum anchor 2a e^{-at} -> {1}")
def test_rank_one_anchor(report):
    errors = []
    for alpha in (Fraction(1, 2), Fraction(1), Fraction(3)):
        eigs = nonzero_spectrum(kernel((alpha, [2 * alpha])))
        errors.append(abs(eigs[0] - 1.0) if eigs.shape == (1,) else np.inf)
    report(max(errors) <= 1e-10, f"max error {max(errors):.1e}")
