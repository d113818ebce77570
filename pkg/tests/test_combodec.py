import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from arraycodes import gf
from arraycodes.arraycode import build_grs_inner, encode_array
from arraycodes.combodec import (OracleBudgetExceeded, SideInformation, decode_interleaved_array,
                                 decode_t123, decode_t124, filter_polynomial, gs_feasibility, oracle_decode,
                                 radius_condition_holds, report, theta, theta_inequality)
from arraycodes.gf import field
from arraycodes.grs import grs_spec

from patterns import plant, random_geometry


@pytest.fixture(scope="module")
def geometry8x20():
    # GF(256), m = 8, n = 20, d = 7, delta = 9
    return build_grs_inner(grs_spec(field(256), 20, 14), 8)


def test_no_corruption_single_symbol_erasure(geometry8x20):
    rng = random.Random(0)
    C, Y, _ = plant(rng, geometry8x20)
    out = decode_t124(geometry8x20, Y, SideInformation(symbol_erasures=[(0, 0)]))
    assert out and out.codeword == C == Y


def test_reference_geometry_t124(geometry8x20):
    rng = random.Random(1)
    for _ in range(100):
        C, Y, pat = plant(rng, geometry8x20, block_errors=[5, 8], block_erasures=[16], symbol_erasures=[(7, 3)])
        out = decode_t124(geometry8x20, Y, pat.side())
        assert out and out.codeword == C


def test_reference_geometry_t123(geometry8x20):
    rng = random.Random(2)
    for _ in range(100):
        C, Y, pat = plant(rng, geometry8x20, block_errors=[5, 8], block_erasures=[16],
                          symbol_errors=[(2, 2), (4, 2), (6, 14)])
        out = decode_t123(geometry8x20, Y, pat.side())
        assert out and out.codeword == C


def test_full_row_symbol_erasures_gf64():
    # m symbol erasures; q = 64 is the least field with room for 4 x 15 betas
    spec = build_grs_inner(grs_spec(field(64), 15, 9), 4)  # d = 7
    rng = random.Random(3)
    for _ in range(1000):
        J, K, _, R = random_geometry(rng, 4, 15, 2, 1, [], varrho=4)
        C, Y, pat = plant(rng, spec, J, K, symbol_erasures=R)
        out = decode_t124(spec, Y, pat.side())
        assert out and out.codeword == C


def test_three_spread_symbol_errors_gf128():
    spec = build_grs_inner(grs_spec(field(128), 15, 8), 6)  # d = 8
    rng = random.Random(4)
    for _ in range(1000):
        J, K, L, _ = random_geometry(rng, 6, 15, 1, 0, [1, 1, 1])
        C, Y, pat = plant(rng, spec, J, K, L)
        out = decode_t123(spec, Y, pat.side())
        assert out and out.codeword == C


def test_t123_without_symbol_errors_is_interleaved(geometry8x20):
    rng = random.Random(5)
    for _ in range(30):
        J, K, _, _ = random_geometry(rng, 8, 20, 2, 1, [])
        C, Y, pat = plant(rng, geometry8x20, J, K)
        a = decode_t123(geometry8x20, Y, pat.side())
        b = decode_interleaved_array(geometry8x20, Y, K)
        assert a and b and a.codeword == b.codeword == C and a.branch == "interleaved"


def test_interleaved_pass_handles_high_rank(geometry8x20):
    # symbol errors raise the rank enough that they decode as block columns
    rng = random.Random(6)
    for _ in range(30):
        J, K, L, _ = random_geometry(rng, 8, 20, 1, 0, [1])
        C, Y, pat = plant(rng, geometry8x20, J, K, L)
        out = decode_t123(geometry8x20, Y, pat.side())
        assert out and out.codeword == C


@pytest.mark.parametrize("tau,rho,shape,branches", [
    (0, 1, [1, 1, 1], {"case1"}),
    (0, 3, [4], {"case2"}),
    (1, 0, [2, 1, 1], {"case3"}),
    (1, 0, [1, 1, 1], {"case2", "case2-fallback"}),
])
def test_t123_branches(tau, rho, shape, branches):
    spec = build_grs_inner(grs_spec(field(128), 15, 11), 8)  # d = 5
    rng = random.Random(7)
    seen = set()
    for _ in range(40):
        J, K, L, _ = random_geometry(rng, 8, 15, tau, rho, shape)
        C, Y, pat = plant(rng, spec, J, K, L)
        out = decode_t123(spec, Y, pat.side())
        assert out and out.codeword == C
        seen.add(out.branch)
    assert seen & branches


def test_t124_rejects_bad_side(geometry8x20):
    Y = [[0] * 20 for _ in range(8)]
    with pytest.raises(ValueError):
        decode_t124(geometry8x20, Y, SideInformation(block_erasures=[3], symbol_erasures=[(0, 3)]))
    with pytest.raises(ValueError):
        decode_t123(geometry8x20, Y, SideInformation(symbol_erasures=[(0, 3)]))


def test_too_many_symbol_erasures_fail_cleanly():
    spec = build_grs_inner(grs_spec(field(64), 10, 4), 2)
    rng = random.Random(8)
    C, Y, pat = plant(rng, spec, symbol_erasures=[(0, 1), (1, 1), (0, 2)])
    out = decode_t124(spec, Y, pat.side())
    assert not out and report(out)["status"] == "capability-exceeded"


def test_report_shape(geometry8x20):
    rng = random.Random(9)
    C, Y, pat = plant(rng, geometry8x20, block_errors=[1], symbol_erasures=[(0, 0)])
    rep = report(decode_t124(geometry8x20, Y, pat.side()))
    assert rep["status"] == "ok" and rep["failure_step"] is None
    assert [1, 1] in rep["corrected_positions"] or [0, 1] in rep["corrected_positions"]


# -- filter polynomials -------------------------------------------------------


@given(st.integers(0, 10 ** 9), st.integers(1, 6))
@settings(max_examples=80)
def test_filter_polynomial_isolates_one_erasure(seed, varrho):
    F = field(64)
    m = 6
    rng = random.Random(seed)
    betas = rng.sample(range(1, 64), varrho)
    for l, b in enumerate(betas):
        others = betas[:l] + betas[l + 1:]
        B = filter_polynomial(F, others, b)
        assert gf.degree(B) == varrho - 1 or (varrho == 1 and B == [1])
        for b2 in others:
            prod = gf.poly_mul(F, B, gf.t_poly(F, m, b2))
            assert all(c == 0 for c in (prod + [0] * m)[varrho - 1:m])
        prod = gf.poly_mul(F, B, gf.t_poly(F, m, b))
        assert (prod + [0] * m)[varrho - 1] == F.pow(b, varrho - 1)


# -- oracle -------------------------------------------------------------------


def small_spec():
    return build_grs_inner(grs_spec(field(9), 4, 2), 2)  # d = 3, delta = 3


def test_oracle_identity_and_recovery():
    spec = small_spec()
    rng = random.Random(10)
    C, Y, pat = plant(rng, spec)
    assert oracle_decode(spec, Y, SideInformation()).codeword == C
    for _ in range(50):
        J, K, L, R = random_geometry(rng, 2, 4, 0, 1, [1])
        C, Y, pat = plant(rng, spec, J, K, L, R)
        out = oracle_decode(spec, Y, pat.side())
        assert out and out.codeword == C


def test_oracle_reports_ambiguity_beyond_caps():
    spec = small_spec()
    rng = random.Random(11)
    kinds = set()
    for _ in range(60):
        C, Y, pat = plant(rng, spec, symbol_errors=[(0, 0), (1, 1), (0, 2)])
        out = oracle_decode(spec, Y, SideInformation(), tau_max=0, theta_max=3)
        kinds.add(out.kind if not out else "ok")
    assert "ambiguous" in kinds


def test_oracle_budget():
    spec = build_grs_inner(grs_spec(field(64), 10, 4), 4)
    with pytest.raises(OracleBudgetExceeded):
        oracle_decode(spec, [[0] * 10 for _ in range(4)], SideInformation(), budget=10)


# -- list-decoding feasibility ------------------------------------------------


def test_gs_examples():
    assert not gs_feasibility(15, 9, 4).feasible
    r = gs_feasibility(255, 128, 16)
    assert r.feasible and 1 <= r.s <= r.L <= 2 * 255 ** 2 + 255
    assert 255 * theta(r.L, r.s, Fraction(128, 255)) >= Fraction(128 + 16 - 1, 2)
    # delta = 1: the radius condition reduces to d >= 2 sqrt(n) - 1
    for n in (16, 25, 40):
        for d in range(2, n + 1):
            assert radius_condition_holds(n, d, 1) == ((d + 1) ** 2 >= 4 * n)


def brute_min_L(n, d, delta, limit):
    target = Fraction(d + delta - 1, 2)
    for L in range(1, limit + 1):
        if any(n * theta(L, s, Fraction(d, n)) >= target for s in range(1, L + 1)):
            return L
    return None


@given(st.integers(2, 18), st.data())
@settings(max_examples=60)
def test_gs_minimal_L_matches_brute_force(n, data):
    d = data.draw(st.integers(1, n))
    delta = data.draw(st.integers(1, 4))
    r = gs_feasibility(n, d, delta)
    if r.feasible:
        assert theta_inequality(n, d, delta, r.L, r.s)
        assert brute_min_L(n, d, delta, r.L) == r.L
    else:
        assert not radius_condition_holds(n, d, delta) or brute_min_L(n, d, delta, 2 * n * n + n) is None


def test_gs_punctures_erasures():
    a = gs_feasibility(60, 30, 4, rho=3, varrho=2)
    b = gs_feasibility(55, 25, 4)
    assert (a.feasible, a.L, a.s) == (b.feasible, b.L, b.s)
