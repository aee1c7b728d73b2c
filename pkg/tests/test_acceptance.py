"""Acceptance gate: one test per criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
pass/fail lines as they complete.
"""

import random
from itertools import combinations

import pytest

from golomb import (
    Ruler,
    SearchConfig,
    build_difference_triangle,
    check_star_inequality,
    construct_cubic,
    construct_half_cubic,
    construct_triangular,
    cubic_bound,
    find_quadratic_collision,
    half_cubic_bound,
    lower_bound,
    quadratic_sequence,
    search_optimal,
    verify_graceful,
    QuadraticFamilyParams,
    TriangularParams,
)
from golomb.cli import main

EXPECTED_OPTIMA = {2: 1, 3: 3, 4: 6, 5: 11, 6: 17, 7: 25, 8: 34, 9: 44}


def report(number, text):
    print("ACCEPTANCE %d: PASS - %s" % (number, text))


@pytest.fixture(scope="module")
def exact_results():
    return {n: search_optimal(SearchConfig(order=n)) for n in range(2, 10)}


def test_criterion_1_cubic_family():
    for n in range(2, 201):
        ruler = construct_cubic(n)
        assert ruler.length() == cubic_bound(n), n
        assert verify_graceful(ruler).graceful, n
    report(1, "cubic construction graceful with exact bound for n=2..200")


def test_criterion_2_half_cubic_family():
    for n in range(2, 201):
        ruler = construct_half_cubic(n)
        assert ruler.length() == half_cubic_bound(n), n
        assert verify_graceful(ruler).graceful, n
    report(2, "half-cubic construction graceful with exact bound for n=2..200")


def test_criterion_3_half_length_ratio():
    ratio_101 = half_cubic_bound(101) / cubic_bound(101)
    assert 0.49 < ratio_101 < 0.51
    # the ratio approaches 1/2 monotonically: its distance to 1/2 shrinks
    gaps = [abs(half_cubic_bound(n) / cubic_bound(n) - 0.5) for n in (11, 51, 101, 201)]
    assert all(a > b for a, b in zip(gaps, gaps[1:]))
    report(3, "length ratio at n=101 is %.4f and approaches 1/2 monotonically" % ratio_101)


def test_criterion_4_shifted_modulus_family():
    for n in range(3, 201):
        ruler = construct_triangular(TriangularParams(order=n, modulus=n - 2))
        assert verify_graceful(ruler).graceful, n
    report(4, "modulus n-2 construction graceful for n=3..200")


def test_criterion_5_quadratic_collision_grid():
    cases = 0
    for a in range(-3, 4):
        if a == 0:
            continue
        for b in range(1, 5):
            if 2 * a + b <= 0:
                continue
            base = -a - 2 * b
            for c in range(base + 1, base + 7):
                params = QuadraticFamilyParams(a=a, b=b, c=c)
                w = find_quadratic_collision(params)
                assert 1 <= w.j1 <= w.i1 <= w.n - 1
                assert 1 <= w.j2 <= w.i2 <= w.n - 1
                assert (w.i1, w.j1) != (w.i2, w.j2)
                # independent recomputation straight from the polynomial
                xs = [a * (i - 1) ** 2 + b * w.n * (i - 1) + c * (i - 1) for i in range(1, w.n + 1)]
                t1 = xs[w.i1] - xs[w.i1 - w.j1]
                t2 = xs[w.i2] - xs[w.i2 - w.j2]
                assert t1 == t2 == w.value
                cases += 1
    # 14 feasible (a, b) combos survive the 2a+b > 0 filter, times 6 c values
    assert cases == 84
    report(5, "quadratic collision verified on all %d grid cases" % cases)


def naive_optimal_length(n):
    bound = half_cubic_bound(n)
    best = None
    for rest in combinations(range(1, bound + 1), n - 1):
        marks = (0,) + rest
        diffs = [b - a for i, a in enumerate(marks) for b in marks[i + 1 :]]
        if len(diffs) != len(set(diffs)):
            continue
        if best is None or marks[-1] < best:
            best = marks[-1]
    return best


def test_criterion_6_exact_search_ground_truth(exact_results):
    for n in range(2, 7):
        assert naive_optimal_length(n) == EXPECTED_OPTIMA[n], n
    for n in range(2, 10):
        result = exact_results[n]
        assert result.optimal, n
        assert result.length == EXPECTED_OPTIMA[n], n
        assert verify_graceful(result.ruler).graceful, n
    report(6, "optimal lengths 1,3,6,11,17,25,34,44 for n=2..9, oracle-confirmed to n=6")


def test_criterion_7_strict_lower_bound(exact_results):
    for n in range(2, 5):
        assert exact_results[n].length == lower_bound(n), n
    for n in range(5, 10):
        assert exact_results[n].length > lower_bound(n), n
    report(7, "optimum equals C(n,2) for n<=4 and strictly exceeds it for n=5..9")


def test_criterion_8_oracle_equivalence():
    rng = random.Random(20260823)
    disagreements = 0
    for _ in range(10_000):
        n = rng.randint(2, 12)
        marks = sorted(rng.sample(range(1, 201), n - 1))
        ruler = Ruler((0,) + tuple(marks))
        diffs = [b - a for i, a in enumerate(ruler.marks) for b in ruler.marks[i + 1 :]]
        graceful = len(diffs) == len(set(diffs))
        rep = verify_graceful(ruler)
        assert rep.graceful == graceful
        if not rep.graceful:
            tri = build_difference_triangle(ruler)
            w = rep.witness
            assert w.first != w.second
            assert tri.entry(*w.first) == tri.entry(*w.second) == w.value
    report(8, "verify_graceful matches the multiset oracle on 10000 random rulers")


def test_criterion_9_star_inequality():
    assert all(check_star_inequality(n) for n in range(2, 10001))
    report(9, "block-separation inequality holds for n=2..10000")


def test_criterion_10_search_determinism(capsys):
    outputs = []
    for jobs in ("1", "8"):
        code = main(["search", "--n", "8", "--jobs", jobs])
        assert code == 0
        out = capsys.readouterr().out
        ruler_lines = [
            line for line in out.splitlines()
            if line.startswith(("marks:", "length:", "optimal:"))
        ]
        outputs.append("\n".join(ruler_lines).encode())
    assert outputs[0] == outputs[1]
    report(10, "search ruler output byte-identical for --jobs 1 and --jobs 8 at n=8")
