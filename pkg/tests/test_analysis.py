import math
from fractions import Fraction
from math import comb

import numpy as np
import pytest
from hypothesis import given, strategies as st

from arraycodes.analysis import (analyze, bch_comparison, bch_inner_rows, ceil_log, concatenated_case,
                                 concatenated_integer_minimum, concatenated_min_redundancy, gc_asymptotic,
                                 gc_chain_problems, gc_lower_bound, gc_redundancy, gc_redundancy_check,
                                 gv_guaranteed, gv_inequality, gv_redundancy, random_gc_chain, reiger_minimum)


def test_reiger():
    assert reiger_minimum(5, 0, 0, 0, 0) == 0
    assert reiger_minimum(8, 2, 1, 3, 1) == 47
    with pytest.raises(ValueError):
        reiger_minimum(8, -1, 0, 0, 0)


def test_ceil_log_exact():
    assert ceil_log(2, 1) == 0 and ceil_log(2, 8) == 3 and ceil_log(2, 9) == 4
    assert ceil_log(16, 16 ** 40 + 1) == 41
    with pytest.raises(ValueError):
        ceil_log(1, 5)


def test_bch_fixed_point():
    assert bch_inner_rows(16, 16, 1) == 3
    rep = bch_comparison(16, 16, 0, 1)
    assert rep.redundancy == rep.params["m"]
    with pytest.raises(ValueError):
        bch_comparison(16, 17, 1, 1)


@pytest.mark.parametrize("q", [4, 8, 16, 32])
def test_bch_verdict_when_long(q):
    for theta in range(1, 5):
        for tau in range(0, 4):
            for n in range(2 * tau + 2, q + 1):
                rep = bch_comparison(q, n, tau, theta)
                m = rep.params["m"]
                assert m == 1 + math.ceil(Fraction(q - 1, q) * (2 * theta - 1)) * ceil_log(q, m * n)
                if m * n > q >= 4 and tau >= 1:
                    assert rep.verdicts["array code smaller"]


def test_gv_values():
    assert gv_redundancy(2, 7, 3) == 3
    for q in (2, 3, 16):
        assert gv_redundancy(q, 10, 2) == 1
    # direct sum
    assert gv_redundancy(3, 12, 5) == ceil_log(3, sum(comb(11, i) * 2 ** i for i in range(4)) + 1)
    with pytest.raises(ValueError):
        gv_redundancy(2, 5, 6)


@pytest.mark.parametrize("q", [2, 4, 8])
def test_gv_inequality_in_guaranteed_range(q):
    for N in range(2, 65):
        top = max(D for D in range(2, N + 1) if gv_guaranteed(q, N, D) or D == 2)
        for D in range(2, top):
            assert gv_redundancy(q, N, D + 1) >= gv_redundancy(q, N, D) + 1
            assert gv_inequality(q, N, D, D + 1)


def test_concatenated_examples():
    rep = concatenated_min_redundancy(3, 20, 1, 1)
    assert rep.verdicts["case"] == 2 and rep.redundancy == 12 and rep.competitors["array code"] == 9
    rep = concatenated_min_redundancy(8, 20, 2, 3)
    assert rep.verdicts["cubic lhs"] == 4284 and rep.verdicts["quadratic rhs"] == 1600
    assert rep.verdicts["array code smaller"]
    rep = concatenated_min_redundancy(4, 10, 2, 0)
    assert rep.redundancy == 2 * 2 * 4


@given(st.integers(1, 30), st.integers(1, 60), st.integers(0, 10), st.integers(0, 10))
def test_concatenated_cases_partition(m, n, tau, theta):
    if n <= 2 * tau:
        return
    span, t = n - 2 * tau, 2 * theta + 1
    c1 = Fraction(span) < Fraction(m + 1, t)
    c2 = span >= (m + 1) * t
    c = concatenated_case(m, n, tau, theta)
    assert [c1, c2, not c1 and not c2].count(True) == 1
    assert c == (1 if c1 else 2 if c2 else 3)
    rep = concatenated_min_redundancy(m, n, tau, theta)
    if c == 3:
        best = concatenated_integer_minimum(m, n, tau, theta)
        if best is not None:
            assert rep.redundancy <= best + 1e-9


def test_gc_exact_values():
    assert gc_lower_bound(0) == 0
    assert gc_lower_bound(1) == 3
    assert gc_lower_bound(4) == 20


def test_gc_asymptotic_sanity():
    # exact sum >= (2 theta + 1) ln theta + 2 gamma theta - C with C = 0
    thetas = list(range(1, 2001)) + list(range(2500, 10001, 500))
    for th in thetas:
        assert gc_lower_bound(th) >= gc_asymptotic(th)


def test_gc_chain_validation():
    d, D, r = [1, 3], [5, 3], [0, 2]
    assert gc_chain_problems(d, D, r, 1, 1) == []
    assert gc_redundancy(D, r, 1) == 4
    assert gc_redundancy_check(d, D, r, 1, 1)
    with pytest.raises(ValueError):
        gc_redundancy_check([1, 1], D, r, 1, 1)
    assert gc_chain_problems([1], [3], [0], 1, 1)


@given(st.integers(0, 10 ** 9), st.integers(1, 8), st.integers(0, 3))
def test_random_chains_are_valid_and_meet_bound(seed, theta, tau):
    rng = np.random.default_rng(seed)
    d, D, r = random_gc_chain(rng, tau, theta)
    assert gc_chain_problems(d, D, r, tau, theta) == []
    assert gc_redundancy_check(d, D, r, tau, theta)


def test_analyze_rows():
    rows = dict(analyze(256, 8, 20, 2, 0, 3, 0))
    assert rows["Reiger minimum"] == 8 * 4 + 6
    assert rows["concatenated: cubic > quadratic"] is True
    assert rows["GC extra redundancy lower bound"] == 2 * 2 * 8 + gc_lower_bound(3)
