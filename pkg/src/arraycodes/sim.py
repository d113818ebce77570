"""Channel model, Monte Carlo campaigns and the plain-text array format.

Randomness comes from numpy's PCG64; trial i of a campaign with seed s uses
the stream seeded by the pair (s, i), so results do not depend on how trials
are split across worker processes.
"""

import json
import math
from dataclasses import asdict, dataclass, field

import numpy as np
from scipy.stats import binom

from .arraycode import encode_array
from .combodec import (ErrorPattern, SideInformation, decode_interleaved_array, decode_t123,
                       decode_t124, oracle_decode)
from .interleaved import failure_bound
from .kernels import kernel_for

DECODERS = ("interleaved", "t124", "t123", "oracle")


@dataclass(frozen=True)
class ChannelConfig:
    """Counts of block errors (tau), block erasures (rho), symbol errors
    (theta) and symbol erasures (varrho).

    block_values is "nonzero" (every block error column is nonzero) or
    "uniform" (i.i.d. uniform over F^m, so a hit column may be error-free).
    """

    tau: int = 0
    rho: int = 0
    theta: int = 0
    varrho: int = 0
    block_values: str = "nonzero"
    seed: int = 0

    def __post_init__(self):
        if min(self.tau, self.rho, self.theta, self.varrho) < 0:
            raise ValueError("counts must be nonnegative")
        if self.block_values not in ("nonzero", "uniform"):
            raise ValueError("block_values must be 'nonzero' or 'uniform'")


def trial_rng(seed, trial):
    return np.random.Generator(np.random.PCG64([seed, trial]))


def _nonzero_vector(rng, q, m):
    while True:
        v = rng.integers(0, q, size=m)
        if v.any():
            return [int(x) for x in v]


def sample_pattern(cfg, m, n, rng, q):
    """Random pattern with pairwise disjoint supports: block errors and
    erasures on distinct columns, symbol errors and erasures on distinct
    entries of the remaining columns."""
    if cfg.tau + cfg.rho > n:
        raise ValueError("more block errors and erasures than columns")
    free = m * (n - cfg.tau - cfg.rho)
    if cfg.theta + cfg.varrho > free:
        raise ValueError("not enough entries for the symbol errors and erasures")
    cols = rng.permutation(n)
    J = sorted(int(j) for j in cols[: cfg.tau])
    K = sorted(int(j) for j in cols[cfg.tau: cfg.tau + cfg.rho])
    rest = sorted(int(j) for j in cols[cfg.tau + cfg.rho:])
    block_errors = {}
    for j in J:
        if cfg.block_values == "uniform":
            block_errors[j] = [int(x) for x in rng.integers(0, q, size=m)]
        else:
            block_errors[j] = _nonzero_vector(rng, q, m)
    block_erasures = {j: [int(x) for x in rng.integers(0, q, size=m)] for j in K}
    picks = rng.choice(free, size=cfg.theta + cfg.varrho, replace=False) if cfg.theta + cfg.varrho else []
    positions = [(int(p) % m, rest[int(p) // m]) for p in picks]
    symbol_errors = {pos: int(rng.integers(1, q)) for pos in positions[: cfg.theta]}
    symbol_erasures = {pos: int(rng.integers(0, q)) for pos in positions[cfg.theta:]}
    return ErrorPattern(block_errors, block_erasures, symbol_errors, symbol_erasures)


def decode_with(spec, name, received, side):
    if name == "interleaved":
        if side.symbol_erasures:
            raise ValueError("the interleaved decoder takes no symbol erasures")
        return decode_interleaved_array(spec, received, side.block_erasures)
    if name == "t124":
        return decode_t124(spec, received, side)
    if name == "t123":
        return decode_t123(spec, received, side)
    if name == "oracle":
        return oracle_decode(spec, received, side)
    raise ValueError("unknown decoder %r" % name)


@dataclass
class CampaignResult:
    trials: int
    failures: int
    miscorrections: int
    decoder: str
    seed: int
    bound: float = None  # analytic failure-probability bound, when one applies
    threshold: int = None  # 99% binomial quantile of the bound
    failed_trials: list = field(default_factory=list)
    miscorrected_trials: list = field(default_factory=list)

    @property
    def rate(self):
        return (self.failures + self.miscorrections) / self.trials if self.trials else 0.0

    @property
    def within_bound(self):
        if self.threshold is None:
            return None
        return self.failures + self.miscorrections <= self.threshold

    @property
    def bound_with_margin(self):
        """bound * (1 + eps): the 99% quantile expressed as a rate."""
        if self.threshold is None:
            return None
        return self.threshold / self.trials

    def to_dict(self):
        d = asdict(self)
        d.update(rate=self.rate, within_bound=self.within_bound, bound_with_margin=self.bound_with_margin)
        return d


def analytic_bound(spec, cfg, decoder):
    """q^-((m+d-1-2t)(d-1-t)) for uniform block errors alone under the
    interleaved decoder; None when it does not apply."""
    if decoder != "interleaved" or cfg.block_values != "uniform":
        return None
    if cfg.rho or cfg.theta or cfg.varrho or not spec.identity_inner:
        return None
    m, d, t = spec.m, spec.d, cfg.tau
    if m < d - 1 or t > d - 2:
        return None
    return math.exp(failure_bound(spec.field.q, m, d, t))


def _run_range(spec, cfg, decoder, start, stop):
    F = spec.field
    q, m, n, k = F.q, spec.m, spec.n, spec.k
    kern = kernel_for(F)
    failed, wrong = [], []
    for i in range(start, stop):
        rng = trial_rng(cfg.seed, i)
        msg = rng.integers(0, q, size=(m, k)).tolist()
        C = encode_array(spec, msg)
        pat = sample_pattern(cfg, m, n, rng, q)
        E = pat.array(F, m, n)
        Y = kern.add_rows(C, E)
        out = decode_with(spec, decoder, Y, pat.side())
        if not out:
            failed.append(i)
        elif out.codeword != C:
            wrong.append(i)
    return failed, wrong


def _worker(args):
    spec_dict, cfg, decoder, start, stop = args
    from .arraycode import ArrayCodeSpec
    return _run_range(ArrayCodeSpec.from_dict(spec_dict), cfg, decoder, start, stop)


def run_campaign(spec, cfg, decoder="interleaved", trials=1000, workers=1, chunk=20000):
    """Encode a random codeword, corrupt it, decode and compare, per trial."""
    if decoder not in DECODERS:
        raise ValueError("unknown decoder %r" % decoder)
    if workers > 1 and trials > chunk:
        from concurrent.futures import ProcessPoolExecutor
        jobs = [(spec.to_dict(), cfg, decoder, s, min(s + chunk, trials)) for s in range(0, trials, chunk)]
        failed, wrong = [], []
        with ProcessPoolExecutor(workers) as pool:
            for f, w in pool.map(_worker, jobs):
                failed += f
                wrong += w
    else:
        failed, wrong = _run_range(spec, cfg, decoder, 0, trials)
    bound = analytic_bound(spec, cfg, decoder)
    threshold = int(binom.ppf(0.99, trials, bound)) if bound is not None else None
    return CampaignResult(trials, len(failed), len(wrong), decoder, cfg.seed, bound, threshold,
                          sorted(failed), sorted(wrong))


# ---------------------------------------------------------------------------
# files


class FormatError(ValueError):
    def __init__(self, message, line=None, col=None, source="<input>"):
        self.line, self.col, self.source = line, col, source
        where = source
        if line is not None:
            where += ":%d" % line
            if col is not None:
                where += ":%d" % col
        super().__init__("%s: %s" % (where, message))


def _tokens(line):
    # (column, token) pairs, columns 1-based
    out = []
    i = 0
    while i < len(line):
        if line[i].isspace():
            i += 1
            continue
        j = i
        while j < len(line) and not line[j].isspace():
            j += 1
        out.append((i + 1, line[i:j]))
        i = j
    return out


def _parse_int(tok, lineno, source):
    col, text = tok
    try:
        return int(text)
    except ValueError:
        raise FormatError("expected an integer, got %r" % text, lineno, col, source) from None


def parse_array(text, q=None, source="<input>"):
    """Parse "m n q" followed by m lines of n field elements.

    Blank lines and lines starting with # are skipped."""
    lines = [(i + 1, l) for i, l in enumerate(text.splitlines()) if l.strip() and not l.lstrip().startswith("#")]
    if not lines:
        raise FormatError("empty array file", source=source)
    lineno, head = lines[0]
    toks = _tokens(head)
    if len(toks) != 3:
        raise FormatError("header must be 'm n q'", lineno, 1, source)
    m, n, qq = (_parse_int(t, lineno, source) for t in toks)
    if m < 1 or n < 1 or qq < 2:
        raise FormatError("header values out of range", lineno, 1, source)
    if q is not None and qq != q:
        raise FormatError("field size %d does not match the code (q=%d)" % (qq, q), lineno, toks[2][0], source)
    body = lines[1:]
    rows = []
    for lineno, line in body[:m]:
        toks = _tokens(line)
        if len(toks) != n:
            col = toks[n][0] if len(toks) > n else len(line) + 1
            raise FormatError("expected %d entries, found %d" % (n, len(toks)), lineno, col, source)
        row = []
        for tok in toks:
            v = _parse_int(tok, lineno, source)
            if not 0 <= v < qq:
                raise FormatError("entry %d outside GF(%d)" % (v, qq), lineno, tok[0], source)
            row.append(v)
        rows.append(row)
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] + 1 if body else lineno + 1)
        raise FormatError("expected %d rows, found %d" % (m, len(body)), where, 1, source)
    return rows, qq


def format_array(A, q):
    lines = ["%d %d %d" % (len(A), len(A[0]) if A else 0, q)]
    lines += [" ".join(str(v) for v in row) for row in A]
    return "\n".join(lines) + "\n"


def read_array(path, q=None):
    with open(path) as fh:
        return parse_array(fh.read(), q, source=str(path))


def write_array(path, A, q):
    with open(path, "w") as fh:
        fh.write(format_array(A, q))


def load_json(path):
    with open(path) as fh:
        text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(exc.msg, exc.lineno, exc.colno, str(path)) from None


def read_side(path):
    d = load_json(path)
    if not isinstance(d, dict):
        raise FormatError("side information must be a JSON object", 1, 1, str(path))
    try:
        return SideInformation.from_dict(d)
    except (TypeError, ValueError) as exc:
        raise FormatError("bad side information: %s" % exc, source=str(path)) from None
