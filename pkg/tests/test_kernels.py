"""Both kernel backends must agree with each other and with gf."""
import random

import pytest
from hypothesis import given, strategies as st

from arraycodes import gf
from arraycodes.gf import field
from arraycodes.kernels import available_backends, make_kernel

BACKENDS = available_backends()
QS = [2, 3, 4, 7, 8, 9, 16, 27, 64]


def kernels(F):
    return {name: make_kernel(F, mod) for name, mod in BACKENDS.items()}


def rand_rows(rng, q, r, c, density=0.7):
    return [[rng.randrange(q) if rng.random() < density else 0 for _ in range(c)] for _ in range(r)]


def test_compiled_backend_present():
    if "cython" not in BACKENDS:
        pytest.skip("compiled extension not built")
    assert BACKENDS["cython"].BACKEND != BACKENDS["python"].BACKEND


@pytest.mark.parametrize("q", QS)
def test_scalar_ops_match_field(q):
    F = field(q)
    for k in kernels(F).values():
        for a in range(q):
            assert k.neg(a) == F.neg(a)
            if a:
                assert k.inv(a) == F.inv(a)
            for b in range(q):
                assert k.add(a, b) == F.add(a, b)
                assert k.sub(a, b) == F.sub(a, b)
                assert k.mul(a, b) == F.mul(a, b)


@given(st.sampled_from(QS), st.integers(0, 10 ** 9))
def test_matrix_kernels_agree(q, seed):
    F = field(q)
    rng = random.Random(seed)
    r, c, c2 = rng.randrange(1, 6), rng.randrange(1, 7), rng.randrange(1, 5)
    A, B = rand_rows(rng, q, r, c), rand_rows(rng, q, r, c)
    C = rand_rows(rng, q, c, c2)
    f = [rng.randrange(q) for _ in range(rng.randrange(0, 4))]
    t = rng.randrange(0, c + 3)
    xs = [rng.randrange(q) for _ in range(5)]
    c0 = rng.randrange(0, c + 1)
    c1 = rng.randrange(c0, c + 1)
    ref_mm = gf.matmul(F, A, C)
    for k in kernels(F).values():
        assert k.matmul(A, C) == ref_mm
        S = k.add_rows(A, B)
        assert k.sub_rows(S, B) == A
        assert S == [[F.add(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(A, B)]
        assert k.rank(A, c0, c1) == (gf.rank(F, [row[c0:c1] for row in A]) if c1 > c0 else 0)
        assert k.eval_many(f, xs) == [gf.poly_eval(F, f, x) for x in xs]
        want = [(gf.poly_mul(F, row, f) + [0] * t)[:t] for row in A]
        assert k.mul_rows_trunc(A, f, t) == want


@given(st.sampled_from([2, 3, 4, 5, 8, 16]), st.integers(0, 10 ** 9))
def test_synthesis_kernels_agree(q, seed):
    F = field(q)
    rng = random.Random(seed)
    nseq, ln = rng.randrange(1, 4), rng.randrange(0, 9)
    rows = rand_rows(rng, q, nseq, ln, density=rng.random())
    start = rng.randrange(0, ln + 1)
    outs = {name: k.feng_tzeng(rows, start, ln) for name, k in kernels(F).items()}
    assert len(set(map(repr, outs.values()))) == 1
    for name, k in kernels(F).items():
        for L in range(0, 4):
            assert repr(k.exact_recurrence(rows, start, ln, L)) == \
                repr(make_kernel(F, BACKENDS["python"]).exact_recurrence(rows, start, ln, L))
