import math
import random

import pytest
from hypothesis import given, strategies as st

from arraycodes.arraycode import build_grs_inner, build_interleaved
from arraycodes.gf import field
from arraycodes.grs import grs_spec
from arraycodes.sim import (ChannelConfig, FormatError, format_array, parse_array, run_campaign,
                            sample_pattern, trial_rng)


def test_empty_pattern():
    pat = sample_pattern(ChannelConfig(), 4, 6, trial_rng(0, 0), 16)
    assert pat.counts == (0, 0, 0, 0)


def test_infeasible_counts():
    with pytest.raises(ValueError):
        sample_pattern(ChannelConfig(tau=4, rho=3), 2, 6, trial_rng(0, 0), 7)
    with pytest.raises(ValueError):
        sample_pattern(ChannelConfig(tau=5, theta=3), 2, 6, trial_rng(0, 0), 7)
    with pytest.raises(ValueError):
        ChannelConfig(tau=-1)
    with pytest.raises(ValueError):
        ChannelConfig(block_values="gaussian")


def test_supports_disjoint_over_many_samples():
    cfg = ChannelConfig(tau=2, rho=1, theta=3, varrho=1, seed=5)
    for i in range(10 ** 4):
        pat = sample_pattern(cfg, 8, 20, trial_rng(cfg.seed, i), 256)
        assert pat.counts == (2, 1, 3, 1)
        assert pat.disjoint()
        J, K = set(pat.block_errors), set(pat.block_erasures)
        assert all(any(v) for v in pat.block_errors.values())
        assert all(v for v in pat.symbol_errors.values())
        assert not any(j in J for _, j in pat.symbol_erasures)
        assert not any(j in K for _, j in pat.symbol_erasures)


def test_uniform_block_values_can_be_zero():
    cfg = ChannelConfig(tau=3, block_values="uniform")
    zero = sum(1 for i in range(3000)
               for v in sample_pattern(cfg, 1, 5, trial_rng(1, i), 2).block_errors.values() if not any(v))
    assert 3500 < zero < 5500  # about half of 9000 columns over GF(2), m = 1


@pytest.fixture(scope="module")
def spec64():
    return build_grs_inner(grs_spec(field(64), 10, 4), 4)  # d = 7


@pytest.mark.parametrize("decoder,cfg", [
    ("interleaved", ChannelConfig(tau=2, rho=2, seed=1)),
    ("t124", ChannelConfig(tau=2, rho=1, varrho=4, seed=2)),
    ("t123", ChannelConfig(tau=1, rho=1, theta=1, seed=3)),
])
def test_capability_respecting_campaigns_never_fail(spec64, decoder, cfg):
    res = run_campaign(spec64, cfg, decoder, trials=300)
    assert res.failures == 0 and res.miscorrections == 0 and res.rate == 0.0
    assert res.bound is None and res.within_bound is None


def test_campaign_deterministic_and_split_invariant(spec64):
    cfg = ChannelConfig(tau=3, rho=0, block_values="uniform", seed=9)
    spec = build_interleaved(grs_spec(field(8), 7, 3), 4)  # d = 5, beyond half distance with t = 3
    a = run_campaign(spec, cfg, "interleaved", trials=400)
    b = run_campaign(spec, cfg, "interleaved", trials=400)
    c = run_campaign(spec, cfg, "interleaved", trials=400, workers=2, chunk=150)
    assert a.to_dict() == b.to_dict() == c.to_dict()
    assert a.bound == math.exp(-(4 + 5 - 1 - 6) * (5 - 1 - 3) * math.log(8))
    assert a.within_bound
    assert a.failures > 0  # GF(8) is small enough to see failures


def test_unknown_decoder(spec64):
    with pytest.raises(ValueError):
        run_campaign(spec64, ChannelConfig(), "magic", trials=1)


# -- file format --------------------------------------------------------------


@given(st.integers(1, 5), st.integers(1, 6), st.sampled_from([2, 7, 16, 256]), st.integers(0, 10 ** 9))
def test_array_roundtrip(m, n, q, seed):
    rng = random.Random(seed)
    A = [[rng.randrange(q) for _ in range(n)] for _ in range(m)]
    assert parse_array(format_array(A, q)) == (A, q)


def test_comments_and_blank_lines():
    text = "# header\n2 3 7\n\n1 2 3\n# mid\n4 5 6\n"
    assert parse_array(text) == ([[1, 2, 3], [4, 5, 6]], 7)


@pytest.mark.parametrize("text,line,col", [
    ("2 3 7\n1 2 3\n4 x 6\n", 3, 3),
    ("2 3 7\n1 2 3\n4 5 9\n", 3, 5),
    ("2 3 7\n1 2 3\n4 5\n", 3, 4),
    ("2 3 7\n1 2 3\n", 3, 1),
    ("2 3\n", 1, 1),
    ("2 3 7\n1 2 3 4\n4 5 6\n", 2, 7),
])
def test_diagnostics(text, line, col):
    with pytest.raises(FormatError) as info:
        parse_array(text, source="f.txt")
    assert (info.value.line, info.value.col) == (line, col)
    assert str(info.value).startswith("f.txt:%d:%d: " % (line, col))


def test_field_mismatch():
    with pytest.raises(FormatError):
        parse_array("1 1 7\n3\n", q=8)
