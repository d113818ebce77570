import random
from itertools import combinations, product

import pytest
from hypothesis import given, strategies as st

from arraycodes.gf import field
from arraycodes.grs import (GrsSpec, decode_grs, encode, encode_rows, grs_spec, parity_check, syndrome,
                            syndromes)

from oracles import det


def test_parity_check_examples():
    F = field(7)
    spec = GrsSpec(F, (1, 2, 3), 1)
    assert parity_check(spec) == [[1, 1, 1], [1, 2, 3]]
    H = parity_check(grs_spec(field(16), 10, 4))
    assert H[0] == [1] * 10


def test_every_column_subset_nonsingular():
    F = field(7)
    spec = grs_spec(F, 6, 2)
    H = parity_check(spec)
    for cols in combinations(range(6), spec.redundancy):
        assert det(F, [[row[c] for c in cols] for row in H]) != 0


def test_spec_validation():
    F = field(7)
    with pytest.raises(ValueError):
        GrsSpec(F, (1, 1, 2), 1)
    with pytest.raises(ValueError):
        GrsSpec(F, (0, 1, 2), 1)
    with pytest.raises(ValueError):
        grs_spec(F, 7, 3)
    with pytest.raises(ValueError):
        GrsSpec(F, (1, 2), 3)
    spec = grs_spec(field(9), 5, 2)
    assert GrsSpec.from_dict(spec.to_dict()) == spec


@given(st.sampled_from([(7, 6, 4), (16, 12, 5), (9, 8, 8), (25, 10, 0)]), st.integers(0, 10 ** 9))
def test_encoding_is_systematic_codeword(params, seed):
    q, n, k = params
    F = field(q)
    spec = grs_spec(F, n, k)
    rng = random.Random(seed)
    u = [rng.randrange(q) for _ in range(k)]
    c = encode(spec, u)
    assert c[:k] == u and len(c) == n
    assert syndrome(spec, c) == [0] * spec.redundancy
    assert encode_rows(spec, [u, u]) == [c, c]
    assert encode(spec, [0] * k) == [0] * n


def test_zero_syndrome_decodes_to_zero():
    spec = grs_spec(field(7), 6, 2)
    assert decode_grs(spec, syndrome_vector=[0] * 4) == [0] * 6


def test_all_weight_one_patterns_gf7():
    F = field(7)
    spec = grs_spec(F, 6, 4)
    for j in range(6):
        for v in range(1, 7):
            syn = [F.mul(v, F.pow(spec.locators[j], i)) for i in range(2)]
            e = decode_grs(spec, syndrome_vector=syn)
            assert e == [v if i == j else 0 for i in range(6)]


def test_roundtrip_single_error_gf7():
    F = field(7)
    spec = grs_spec(F, 6, 4)
    rng = random.Random(3)
    for _ in range(50):
        c = encode(spec, [rng.randrange(7) for _ in range(4)])
        j, v = rng.randrange(6), rng.randrange(1, 7)
        y = list(c)
        y[j] = F.add(y[j], v)
        e = decode_grs(spec, received=y)
        assert [F.sub(a, b) for a, b in zip(y, e)] == c


def test_one_error_two_erasures_exhaustive():
    F = field(7)
    spec = grs_spec(F, 6, 2)  # d = 5
    checked = 0
    for K in combinations(range(6), 2):
        for j in (x for x in range(6) if x not in K):
            for v in range(1, 7):
                for a, b in product(range(7), repeat=2):
                    e = [0] * 6
                    e[j], e[K[0]], e[K[1]] = v, a, b
                    got = decode_grs(spec, syndrome_vector=syndrome(spec, e), erasures=K)
                    assert got == e
                    checked += 1
    assert checked == 15 * 4 * 6 * 49


def test_erasures_only_is_interpolation():
    F = field(16)
    spec = grs_spec(F, 12, 6)
    rng = random.Random(1)
    for _ in range(100):
        K = rng.sample(range(12), rng.randrange(0, 7))
        e = [0] * 12
        for j in K:
            e[j] = rng.randrange(16)
        assert decode_grs(spec, syndrome_vector=syndrome(spec, e), erasures=K) == e


@given(st.integers(0, 10 ** 9))
def test_within_capability_exact_and_beyond_never_silent(seed):
    F = field(32)
    spec = grs_spec(F, 20, 10)  # d = 11
    rng = random.Random(seed)
    r = rng.randrange(0, 6)
    t = rng.randrange(0, 7)
    pos = rng.sample(range(20), r + t)
    K, J = pos[:r], pos[r:]
    e = [0] * 20
    for j in J:
        e[j] = rng.randrange(1, 32)
    for j in K:
        e[j] = rng.randrange(32)
    got = decode_grs(spec, syndrome_vector=syndrome(spec, e), erasures=K)
    if 2 * t + r <= spec.d - 1:
        assert got == e
    elif got:
        # a different answer is allowed beyond capability, but it must explain the syndrome
        assert syndrome(spec, got) == syndrome(spec, e)


def test_rowwise_syndromes():
    F = field(8)
    spec = grs_spec(F, 7, 3)
    Y = [[1, 2, 3, 4, 5, 6, 7], [0] * 7]
    assert syndromes(spec, Y) == [syndrome(spec, Y[0]), [0] * 4]
