"""Redundancy arithmetic: lower bounds and competing constructions for
correcting block and symbol errors in m x n arrays.

Everything is exact integer arithmetic except the real-valued lower bound of
the concatenated Case 3, which is reported as a float next to its exact
integer verdict.
"""

import math
from dataclasses import dataclass, field
from math import comb

EULER_GAMMA = 0.5772156649015329


@dataclass
class RedundancyReport:
    scheme: str
    params: dict
    redundancy: object  # int, or a float lower bound
    competitors: dict = field(default_factory=dict)
    verdicts: dict = field(default_factory=dict)

    def rows(self):
        yield self.scheme, self.redundancy
        for name, value in self.competitors.items():
            yield name, value


def ceil_div(a, b):
    return -(-a // b)


def ceil_log(q, x):
    """Smallest e >= 0 with q^e >= x (x a positive integer or Fraction)."""
    if q < 2:
        raise ValueError("base must be at least 2")
    if x <= 0:
        raise ValueError("argument must be positive")
    e, p = 0, 1
    while p < x:
        p *= q
        e += 1
    return e


def reiger_minimum(m, tau, rho, theta, varrho):
    """Fewest redundancy symbols any code needs for tau block errors, rho
    block erasures, theta symbol errors and varrho symbol erasures."""
    for v in (m, tau, rho, theta, varrho):
        if v < 0:
            raise ValueError("counts must be nonnegative")
    return m * (2 * tau + rho) + 2 * theta + varrho


# ---------------------------------------------------------------------------
# inner BCH codes


def _bch_symbol_term(q, theta, length):
    # redundancy of a BCH code of this length correcting theta symbol errors, minus one
    return ceil_div((q - 1) * (2 * theta - 1), q) * ceil_log(q, length)


def bch_inner_rows(q, n, theta, max_iter=10 ** 4):
    """Least m with m = 1 + ceil((q-1)/q (2 theta - 1)) * ceil(log_q(m n))."""
    if theta < 1:
        raise ValueError("theta must be positive")
    m = 1
    for _ in range(max_iter):
        nxt = 1 + _bch_symbol_term(q, theta, m * n)
        if nxt == m:
            return m
        if nxt < m:
            break
        m = nxt
    raise ValueError("no fixed point for m found")


def bch_comparison(q, n, tau, theta):
    """This construction with a shortened BCH inner code versus one
    shortened BCH code of length mn correcting tau*m + theta symbol errors."""
    if not 2 * tau + 2 <= n <= q:
        raise ValueError("need 2*tau + 2 <= n <= q")
    m = bch_inner_rows(q, n, theta)
    ours = (2 * tau + 1) * m
    single = 1 + _bch_symbol_term(q, tau * m + theta, m * n)
    return RedundancyReport(
        "array code (BCH inner)",
        {"q": q, "n": n, "m": m, "tau": tau, "theta": theta},
        ours,
        {"single BCH": single},
        {"array code smaller": ours < single, "mn > q >= 4": m * n > q >= 4},
    )


# ---------------------------------------------------------------------------
# Gilbert-Varshamov codes


def gv_volume(q, N, r):
    """sum_{i <= r} C(N, i) (q-1)^i."""
    return sum(comb(N, i) * (q - 1) ** i for i in range(r + 1))


def gv_redundancy(q, N, D):
    if not 1 < D <= N:
        raise ValueError("need 1 < D <= N")
    return ceil_log(q, gv_volume(q, N - 1, D - 2) + 1)


def gv_inequality(q, N, D1, D2):
    """red(N, D2) >= red(N, D1) + (D2 - D1)."""
    if not 1 < D1 <= D2 <= N:
        raise ValueError("need 1 < D1 <= D2 <= N")
    return gv_redundancy(q, N, D2) >= gv_redundancy(q, N, D1) + (D2 - D1)


def gv_guaranteed(q, N, D):
    """D <= (q-1)/(2q-1) N + 2, the range where the inequality is proven."""
    return (D - 2) * (2 * q - 1) <= (q - 1) * N


def gv_comparison(q, m, n, tau, theta):
    N = m * n
    ours = 2 * tau * m + gv_redundancy(q, N, 2 * theta + 1)
    single = gv_redundancy(q, N, 2 * (tau * m + theta) + 1)
    return RedundancyReport(
        "array code (GV inner)",
        {"q": q, "m": m, "n": n, "tau": tau, "theta": theta},
        ours,
        {"single GV code": single},
        {"array code not larger": single >= ours},
    )


# ---------------------------------------------------------------------------
# ordinary concatenation


def concatenated_case(m, n, tau, theta):
    span = n - 2 * tau
    t = 2 * theta + 1
    if span * t < m + 1:
        return 1
    if span >= (m + 1) * t:
        return 2
    return 3


def concatenated_integer_minimum(m, n, tau, theta):
    """Minimum of the Singleton-based bound over integer Delta = D - 2 tau,
    with inner distance ceil((2 theta + 1) / Delta)."""
    t = 2 * theta + 1
    best = None
    for delta in range(1, t + 1):
        if delta + 2 * tau > n:
            break
        d_in = ceil_div(t, delta)
        if d_in > m:
            continue
        val = delta * (m + 1) + d_in * (n - 2 * tau + 1 - delta) + (2 * tau - 1) * (m + 1) - n
        if best is None or val < best:
            best = val
    return best


def concatenated_min_redundancy(m, n, tau, theta):
    """Lower bound on the redundancy of a concatenated code correcting tau
    block errors and theta symbol errors, against (2 tau + 1) m."""
    case = concatenated_case(m, n, tau, theta)
    t = 2 * theta + 1
    span1 = n - 2 * tau + 1
    if case == 1:
        bound = 2 * tau * m + 2 * theta * (n - 2 * tau)
    elif case == 2:
        bound = 2 * (tau + theta) * m
    else:
        bound = 2 * math.sqrt(t * span1 * (m + 1)) - t - span1 + (2 * tau - 1) * m
    ours = (2 * tau + 1) * m
    lhs = 4 * t * span1 * (m + 1)
    rhs = (2 * m + t + span1) ** 2
    verdicts = {
        "case": case,
        "cubic lhs": lhs,
        "quadratic rhs": rhs,
        "cubic exceeds quadratic": lhs > rhs,
    }
    if case == 2:
        verdicts["array code smaller"] = theta > 0
    elif case == 3:
        verdicts["array code smaller"] = lhs > rhs
    else:
        verdicts["array code smaller"] = ours < bound
    return RedundancyReport(
        "concatenated (lower bound)",
        {"m": m, "n": n, "tau": tau, "theta": theta,
         "delta_min": math.sqrt(t * span1 / (m + 1))},
        bound,
        {"array code": ours, "concatenated integer minimum": concatenated_integer_minimum(m, n, tau, theta)},
        verdicts,
    )


# ---------------------------------------------------------------------------
# generalized concatenation


def gc_lower_bound(theta):
    """sum_{j=1}^{theta} ceil((2 theta + 1) / j)."""
    if theta < 0:
        raise ValueError("theta must be nonnegative")
    return sum(ceil_div(2 * theta + 1, j) for j in range(1, theta + 1))


def gc_asymptotic(theta):
    """(2 theta + 1) ln theta + 2 gamma theta, without the O(1) term."""
    return (2 * theta + 1) * math.log(theta) + 2 * EULER_GAMMA * theta


def gc_chain_problems(d, D, r, tau, theta):
    """Reasons the chain (d_i, D_i, r_i), i = 0..v, is not a valid nested
    GC parameter chain with last outer distance 2 tau + 1; empty if valid."""
    out = []
    v = len(d) - 1
    if v < 1 or len(D) != v + 1 or len(r) != v + 1:
        return ["need v >= 1 and three sequences of equal length"]
    if d[0] != 1:
        out.append("d_0 must be 1")
    if r[0] != 0:
        out.append("r_0 must be 0")
    for i in range(1, v + 1):
        if d[i] <= d[i - 1]:
            out.append("d not strictly increasing at %d" % i)
        if D[i] > D[i - 1]:
            out.append("D increasing at %d" % i)
        if r[i] <= r[i - 1]:
            out.append("r not strictly increasing at %d" % i)
    for i in range(v + 1):
        if 2 * theta + 1 > d[i] * (D[i] - 2 * tau):
            out.append("distance condition fails at %d" % i)
        if d[i] > r[i] + 1:
            out.append("inner code %d beats the Singleton bound" % i)
    if D[v] != 2 * tau + 1:
        out.append("last outer distance must be 2 tau + 1")
    return out


def gc_redundancy(D, r, tau):
    """sum_{i=1}^{v} (r_i - r_{i-1}) (D_{i-1} - 1 - 2 tau)."""
    return sum((r[i] - r[i - 1]) * (D[i - 1] - 1 - 2 * tau) for i in range(1, len(r)))


def gc_redundancy_check(d, D, r, tau, theta):
    """True when the extra redundancy of a valid chain reaches the exact
    harmonic-ceiling bound.  Raises ValueError on an invalid chain."""
    problems = gc_chain_problems(d, D, r, tau, theta)
    if problems:
        raise ValueError("; ".join(problems))
    return gc_redundancy(D, r, tau) >= gc_lower_bound(theta)


def random_gc_chain(rng, tau, theta, max_levels=6, slack=3):
    """A random valid chain (d, D, r) for the given tau and theta.

    ``rng`` is a numpy Generator."""
    t = 2 * theta + 1
    # strictly increasing inner distances from 1 up to at least t
    inner = sorted(set(int(x) for x in rng.integers(2, t + 1, size=int(rng.integers(0, max_levels)))))
    d = [1] + [x for x in inner if x < t] + [t + int(rng.integers(0, slack + 1))]
    v = len(d) - 1
    # outer distances: the least allowed value plus a nonincreasing slack
    extra = sorted((int(x) for x in rng.integers(0, slack + 1, size=v)), reverse=True) + [0]
    D = [2 * tau + ceil_div(t, di) + e for di, e in zip(d, extra)]
    for i in range(v - 1, -1, -1):
        D[i] = max(D[i], D[i + 1])
    D[v] = 2 * tau + 1
    r = [0]
    for i in range(1, v + 1):
        r.append(max(r[-1] + 1, d[i] - 1) + int(rng.integers(0, slack + 1)))
    return d, D, r


def analyze(q, m, n, tau, rho=0, theta=0, varrho=0):
    """Scheme-vs-redundancy rows for a parameter set."""
    rows = [("Reiger minimum", reiger_minimum(m, tau, rho, theta, varrho))]
    d = 2 * tau + rho + 2
    rows.append(("array code (MDS row code, d=%d)" % d, m * (d - 1)))
    if theta >= 1 and 2 * tau + 2 <= n <= q:
        rep = bch_comparison(q, n, tau, theta)
        rows.append(("array code, BCH inner (m=%d)" % rep.params["m"], rep.redundancy))
        rows.append(("single BCH code", rep.competitors["single BCH"]))
    if theta >= 1 and m * n >= 2 * (tau * m + theta) + 1:
        rep = gv_comparison(q, m, n, tau, theta)
        rows.append(("array code, GV inner", rep.redundancy))
        rows.append(("single GV code", rep.competitors["single GV code"]))
    if n > 2 * tau:
        rep = concatenated_min_redundancy(m, n, tau, theta)
        rows.append(("concatenated lower bound (case %d)" % rep.verdicts["case"], rep.redundancy))
        rows.append(("concatenated: cubic > quadratic", rep.verdicts["cubic exceeds quadratic"]))
    if theta >= 1:
        rows.append(("GC extra redundancy lower bound", 2 * tau * m + gc_lower_bound(theta)))
    return rows
