"""Decoders for array codes under mixed block errors, block erasures,
symbol errors and symbol erasures, a brute-force reference decoder, and the
list-decoding feasibility calculator."""

import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import combinations

from . import gf
from .arraycode import apply_columns, inverse_transform, transform
from .failures import CAPABILITY_EXCEEDED, INCONSISTENT, RECURRENCE_NOT_FOUND, Failure
from .grs import GrsSpec, decode_modified, erasure_locator, solve_key_equation, syndromes
from .interleaved import decode_from_syndromes, modified_syndromes
from .kernels import kernel_for
from .synthesis import massey

NO_CANDIDATE = "no-candidate"
AMBIGUOUS = "ambiguous"


@dataclass
class SideInformation:
    block_erasures: tuple = ()
    symbol_erasures: tuple = ()  # (kappa, j) pairs

    def __post_init__(self):
        self.block_erasures = tuple(sorted(set(int(j) for j in self.block_erasures)))
        self.symbol_erasures = tuple(sorted(set((int(k), int(j)) for k, j in self.symbol_erasures),
                                            key=lambda p: (p[1], p[0])))

    def validate(self, m, n):
        K = set(self.block_erasures)
        if any(not 0 <= j < n for j in K):
            raise ValueError("block erasure column out of range")
        for kappa, j in self.symbol_erasures:
            if not (0 <= kappa < m and 0 <= j < n):
                raise ValueError("symbol erasure position out of range")
            if j in K:
                raise ValueError("symbol erasure inside an erased column")

    def to_dict(self):
        return {"block_erasures": list(self.block_erasures),
                "symbol_erasures": [list(p) for p in self.symbol_erasures]}

    @classmethod
    def from_dict(cls, d):
        return cls(tuple(d.get("block_erasures", ())), tuple(tuple(p) for p in d.get("symbol_erasures", ())))


@dataclass
class ErrorPattern:
    """Block errors J, block erasures K, symbol errors L, symbol erasures R,
    each with its values."""

    block_errors: dict = dc_field(default_factory=dict)  # j -> m values
    block_erasures: dict = dc_field(default_factory=dict)  # j -> m values
    symbol_errors: dict = dc_field(default_factory=dict)  # (kappa, j) -> value
    symbol_erasures: dict = dc_field(default_factory=dict)  # (kappa, j) -> value

    @property
    def counts(self):
        return (len(self.block_errors), len(self.block_erasures),
                len(self.symbol_errors), len(self.symbol_erasures))

    def side(self):
        return SideInformation(tuple(self.block_erasures), tuple(self.symbol_erasures))

    def disjoint(self):
        J, K = set(self.block_errors), set(self.block_erasures)
        if J & K:
            return False
        for kappa, j in self.symbol_errors:
            if j in J or j in K:
                return False
        for pos in self.symbol_erasures:
            if pos[1] in K or pos in self.symbol_errors:
                return False
        return True

    def array(self, F, m, n):
        E = [[0] * n for _ in range(m)]
        for cols in (self.block_errors, self.block_erasures):
            for j, vals in cols.items():
                for h in range(m):
                    E[h][j] = F.add(E[h][j], vals[h])
        for entries in (self.symbol_errors, self.symbol_erasures):
            for (kappa, j), v in entries.items():
                E[kappa][j] = F.add(E[kappa][j], v)
        return E


@dataclass
class Decoded:
    codeword: list
    error: list
    mu: int = None
    eta: int = None
    branch: str = ""

    def corrected_positions(self):
        return [[h, j] for h, row in enumerate(self.error) for j, v in enumerate(row) if v]


def report(outcome):
    """JSON-ready summary of a decode outcome."""
    if outcome:
        return {"status": "ok", "corrected_positions": outcome.corrected_positions(),
                "mu": outcome.mu, "eta": outcome.eta, "branch": outcome.branch, "failure_step": None}
    return {"status": outcome.kind, "corrected_positions": [], "mu": outcome.info.get("mu"),
            "eta": outcome.info.get("eta"), "branch": outcome.info.get("branch"),
            "failure_step": outcome.step}


def _subtract(F, A, B):
    return kernel_for(F).sub_rows(A, B)


def _finish(spec, received, E, **info):
    err = inverse_transform(spec, E)
    return Decoded(_subtract(spec.field, received, err), err, **info)


def decode_interleaved_array(spec, received, block_erasures=()):
    """Transform, decode the interleaved row code, transform back."""
    Y = transform(spec, received)
    res = decode_from_syndromes(spec.grs, syndromes(spec.grs, Y), block_erasures)
    if not res:
        res.info.setdefault("branch", "interleaved")
        return res.at("interleaved")
    return _finish(spec, received, res.E, mu=res.mu, branch="interleaved")


# ---------------------------------------------------------------------------
# symbol erasures through per-erasure filter polynomials


def filter_polynomial(F, beta_others, beta_target):
    """B(y) = prod over the other erased positions of
    (1 - b y) / (1 - b / beta_target)."""
    B = [1]
    tinv = F.inv(beta_target)
    for b in beta_others:
        scale = F.inv(F.sub(1, F.mul(b, tinv)))
        B = gf.poly_mul(F, B, [scale, F.neg(F.mul(b, scale))])
    return B


def _rowwise(spec_grs, S, K):
    """Decode every syndrome row on its own; returns E or a Failure."""
    n = spec_grs.n
    E = []
    for h, row in enumerate(S):
        sol = decode_modified(spec_grs, [row], K)
        if not sol:
            sol.info["row"] = h
            return sol.at("step4")
        e = [0] * n
        for j, col in sol.columns.items():
            e[j] = col[0]
        E.append(e)
    return E


def _symbol_erasure_stage(spec, received, S, K, R):
    """Resolve the symbol erasures R one at a time, then decode the rows.

    Returns (updated received array, E) or a Failure."""
    F = spec.field
    grs = spec.grs
    k = kernel_for(F)
    nsyn = grs.redundancy
    varrho = len(R)
    m = spec.m
    if varrho > m:
        return Failure(CAPABILITY_EXCEEDED, "step3", "more symbol erasures than rows")
    beta = spec.beta
    S = [list(r) for r in S]
    U = [list(r) for r in received]
    M = erasure_locator(grs, K)
    sigma = k.mul_rows_trunc(S[:varrho], M, nsyn)
    cap = (nsyn - len(K) - 1) // 2
    for ell, (kl, jl) in enumerate(R):
        bl = beta[kl][jl]
        others = [beta[kk][jj] for t, (kk, jj) in enumerate(R) if t != ell]
        B = filter_polynomial(F, others, bl)
        row = [0] * nsyn
        for i, c in enumerate(B):
            if c == 0 or i > varrho - 1:
                continue
            src = sigma[varrho - 1 - i]
            for x in range(nsyn):
                if src[x]:
                    row[x] = F.add(row[x], F.mul(c, src[x]))
        row = k.mul_rows_trunc([row], [1, F.neg(grs.locators[jl])], nsyn)
        sol = solve_key_equation(grs, row, list(K) + [jl], cap)
        if not sol:
            sol.info["erasure"] = [kl, jl]
            return sol.at("step3b")
        e = sol.columns[jl][0]
        eps = F.mul(e, F.pow(bl, 1 - varrho))
        if eps:
            U[kl][jl] = F.sub(U[kl][jl], eps)
            a = grs.locators[jl]
            bpow = 1
            for h in range(m):
                apow = F.mul(eps, bpow)
                for i in range(nsyn):
                    S[h][i] = F.sub(S[h][i], apow)
                    apow = F.mul(apow, a)
                bpow = F.mul(bpow, bl)
    E = _rowwise(grs, S, K)
    if not E:
        return E
    return U, E


def decode_t124(spec, received, side):
    """Block errors, block erasures and symbol erasures (no symbol errors).

    Corrects whenever 2*tau + rho <= d - 2 and the number of symbol erasures
    is at most m.  Without symbol erasures this is the interleaved decoder.
    Returns a Decoded result or a Failure naming the failing step.
    """
    side.validate(spec.m, spec.n)
    K = list(side.block_erasures)
    R = list(side.symbol_erasures)
    if not R:
        return decode_interleaved_array(spec, received, K)
    if spec.beta is None:
        raise ValueError("symbol-erasure decoding needs a GRS-derived inner code")
    Y = transform(spec, received)
    S = syndromes(spec.grs, Y)
    out = _symbol_erasure_stage(spec, received, S, K, R)
    if not out:
        out.info.setdefault("branch", "t124")
        return out
    U, E = out
    return _finish(spec, U, E, branch="t124")


# ---------------------------------------------------------------------------
# symbol errors under the one-crowded-column restriction


def within_unique_caps(spec, err, K):
    """True if err splits into at most floor((d-2-rho)/2) block columns plus
    symbol errors of total weight theta with 2*theta <= delta - 1."""
    rho = len(K)
    tau_max = (spec.d - 2 - rho) // 2
    if tau_max < 0:
        return not any(any(r) for r in err)
    Kset = set(K)
    weights = sorted((sum(1 for h in range(spec.m) if err[h][j]) for j in range(spec.n) if j not in Kset),
                     reverse=True)
    theta = sum(weights[tau_max:])
    return 2 * theta <= spec.delta - 1


def _poly_from_vector(v):
    return gf.trim(v)


def decode_t123(spec, received, side):
    """Block errors, block erasures and symbol errors, where every column but
    one holds at most one symbol error, theta <= m/2 and w + tau + rho <= d-2
    (w + 1 columns carry symbol errors).  No symbol erasures.

    Returns a Decoded result (branch names the path taken) or a Failure.
    """
    side.validate(spec.m, spec.n)
    if side.symbol_erasures:
        raise ValueError("symbol erasures are not supported by this decoder")
    if spec.beta is None:
        raise ValueError("symbol-error decoding needs a GRS-derived inner code")
    F = spec.field
    grs = spec.grs
    k = kernel_for(F)
    m, n = spec.m, spec.n
    K = list(side.block_erasures)
    rho = len(K)
    nsyn = grs.redundancy
    beta = spec.beta

    U = [list(r) for r in received]
    S = syndromes(grs, transform(spec, U))
    sigma, mu = modified_syndromes(grs, S, K)

    # dec3: plain interleaved decoding
    res = decode_from_syndromes(grs, S, K)
    if res:
        err = inverse_transform(spec, res.E)
        if within_unique_caps(spec, err, K):
            return Decoded(_subtract(F, U, err), err, mu=mu, branch="interleaved")

    # dec4: common roots of the left kernel of the tail of sigma
    tail = [row[rho:] for row in sigma]
    basis = gf.left_kernel(F, tail)
    info = {"mu": mu, "branch": "t123"}
    if not basis:
        return Failure(CAPABILITY_EXCEEDED, "dec4a", "syndrome tail has full row rank", info)
    a = []
    for v in basis:
        a = gf.poly_gcd(F, a, v)
    roots = [(kappa, j) for j in range(n) for kappa in range(m) if gf.poly_eval(F, a, beta[kappa][j]) == 0]
    A = gf.poly_from_roots_inverse(F, [beta[kappa][j] for kappa, j in roots])
    eta = len(roots)
    info["eta"] = eta
    R = list(roots)

    def shifted_rows(rows):
        prod = gf.bi_truncated_mul(F, rows, A, var="y")
        return [prod[h] if h < len(prod) else [0] * len(rows[0]) for h in range(eta, m)]

    def crowded_column_pass():
        # decode the filtered rows, then each column against its own GRS code
        Sfull = shifted_rows(S)
        inner_res = decode_from_syndromes(grs, Sfull, K)
        if not inner_res:
            return Failure(inner_res.kind, "dec6a", inner_res.detail, info)
        Ehat = inner_res.E
        Kset = set(K)
        for j in range(n):
            if j in Kset or not any(Ehat[h][j] for h in range(m - eta)):
                continue
            betas = [beta[kappa][j] for kappa in range(m)]
            mult = []
            for b in betas:
                av = gf.poly_eval(F, A, F.inv(b))
                mult.append(F.mul(F.pow(b, eta), av) if av else 1)
            code_j = GrsSpec(F, betas, eta)
            sol = decode_modified(code_j, [[Ehat[h][j] for h in range(m - eta)]], [], mult)
            if not sol:
                continue  # j is not the crowded column
            estar = [0] * m
            for kappa, col in sol.columns.items():
                estar[kappa] = col[0]
            Estar = gf.matmul(F, spec.inner[j], [[x] for x in estar])
            a_j = grs.locators[j]
            for h in range(m):
                U[h][j] = F.sub(U[h][j], estar[h])
                v = Estar[h][0]
                if v:
                    for i in range(nsyn):
                        S[h][i] = F.sub(S[h][i], v)
                        v = F.mul(v, a_j)
        return None

    if eta == mu:
        branch = "case1"
    elif eta == mu - 1:
        branch = "case2"
        Shat = shifted_rows(tail)
        col = None
        for c in range(len(tail[0]) if tail else 0):
            seq = [Shat[h][c] for h in range(m - eta)]
            if any(seq):
                col = seq
                break
        if col is not None:
            rec = massey(F, col)
            lam = list(rec.lam)
            extra = []
            if rec.degree == rec.length:
                rootset = set(R)
                for j in range(n):
                    for kappa in range(m):
                        if (kappa, j) in rootset:
                            continue
                        if gf.poly_eval(F, lam, F.inv(beta[kappa][j])) == 0:
                            extra.append((kappa, j))
            if len(extra) == rec.length and len(extra) <= m - eta:
                R.extend(extra)
            else:
                # the remaining rank may come from a block error; fall
                # through to the column-by-column pass
                branch = "case2-fallback"
                fail = crowded_column_pass()
                if fail is not None:
                    return Failure(RECURRENCE_NOT_FOUND, "dec5c",
                                   "recurrence roots do not match and " + fail.detail, info)
    else:
        branch = "case3"
        fail = crowded_column_pass()
        if fail is not None:
            return fail
    info["branch"] = branch

    # dec7: symbol erasures at R, then dec8
    Kset = set(K)
    RR = [p for p in R if p[1] not in Kset]
    RR.sort(key=lambda p: (p[1], p[0]))
    if RR:
        out = _symbol_erasure_stage(spec, U, S, K, RR)
        if not out:
            out.info.update(info)
            return out.at("dec7")
        U, E = out
    else:
        E = _rowwise(grs, S, K)
        if not E:
            E.info.update(info)
            return E.at("dec7")
    return _finish(spec, U, E, mu=mu, eta=eta, branch=branch)


# ---------------------------------------------------------------------------
# brute-force reference decoder


class OracleBudgetExceeded(RuntimeError):
    pass


def _unit_syndromes(spec):
    cache = getattr(spec, "_unit_syn", None)
    if cache is None:
        F = spec.field
        pw = spec.grs.powers()
        cache = {}
        for j in range(spec.n):
            for kappa in range(spec.m):
                vec = []
                for h in range(spec.m):
                    c = spec.inner[j][h][kappa]
                    vec.extend(F.mul(c, x) for x in pw[j])
                cache[(kappa, j)] = vec
        spec._unit_syn = cache
    return cache


def oracle_decode(spec, received, side, tau_max=None, theta_max=None, budget=10 ** 6):
    """Unique codeword within the given caps consistent with the side
    information, found by trying every maximal error support and solving the
    syndrome equations on it.

    Defaults: tau_max = floor((d-2-rho)/2), theta_max = floor((delta-1-varrho)/2).
    Returns a Decoded result, or a Failure of kind no-candidate / ambiguous.
    """
    F = spec.field
    m, n = spec.m, spec.n
    side.validate(m, n)
    K = list(side.block_erasures)
    R = list(side.symbol_erasures)
    if tau_max is None:
        tau_max = max((spec.d - 2 - len(K)) // 2, 0)
    if theta_max is None:
        theta_max = max((spec.delta - 1 - len(R)) // 2, 0)
    units = _unit_syndromes(spec)
    target = [x for row in syndromes(spec.grs, transform(spec, received)) for x in row]
    Kset, Rset = set(K), set(R)
    free_cols = [j for j in range(n) if j not in Kset]
    tau = min(tau_max, len(free_cols))
    candidates = {}
    tried = 0
    for J in combinations(free_cols, tau):
        Jset = set(J)
        avail = [(kappa, j) for j in free_cols if j not in Jset for kappa in range(m) if (kappa, j) not in Rset]
        theta = min(theta_max, len(avail))
        block_pos = [(kappa, j) for j in sorted(Jset | Kset) for kappa in range(m)]
        fixed = block_pos + [p for p in R if p[1] not in Jset]
        for L in combinations(avail, theta):
            tried += 1
            if tried > budget:
                raise OracleBudgetExceeded("more than %d supports" % budget)
            positions = fixed + list(L)
            sol = _solve_support(F, units, positions, target)
            if sol is None:
                continue
            if sol == "many":
                return Failure(AMBIGUOUS, "oracle", "support %r admits several solutions" % (positions,))
            err = [[0] * n for _ in range(m)]
            for (kappa, j), v in zip(positions, sol):
                err[kappa][j] = v
            key = tuple(tuple(r) for r in err)
            candidates[key] = err
    if not candidates:
        return Failure(NO_CANDIDATE, "oracle")
    if len(candidates) > 1:
        return Failure(AMBIGUOUS, "oracle", "%d consistent codewords" % len(candidates))
    err = next(iter(candidates.values()))
    return Decoded(_subtract(F, received, err), err, branch="oracle")


def _solve_support(F, units, positions, target):
    """Values on positions whose syndrome equals target: a list, None when
    inconsistent, or "many" when not unique."""
    k = kernel_for(F)
    mul, sub, inv = k.mul, k.sub, k.inv
    nvar = len(positions)
    cols = [units[p] for p in positions]
    rows = [[c[i] for c in cols] + [target[i]] for i in range(len(target))]
    piv = []
    pr = 0
    for c in range(nvar + 1):
        sel = next((i for i in range(pr, len(rows)) if rows[i][c]), None)
        if sel is None:
            continue
        if c == nvar:
            return None
        rows[pr], rows[sel] = rows[sel], rows[pr]
        top = rows[pr]
        f = inv(top[c])
        top[:] = [mul(f, v) for v in top]
        for i, row in enumerate(rows):
            if i != pr and row[c]:
                g = row[c]
                row[:] = [sub(x, mul(g, y)) if y else x for x, y in zip(row, top)]
        piv.append(c)
        pr += 1
    if len(piv) < nvar:
        return "many"
    x = [0] * nvar
    for i, c in enumerate(piv):
        x[c] = rows[i][nvar]
    return x


# ---------------------------------------------------------------------------
# list-decoding feasibility


@dataclass
class GsFeasibility:
    feasible: bool
    L: int = None
    s: int = None
    reason: str = ""


def radius_condition_holds(n, d, delta):
    """d >= 2 sqrt(delta n) - delta, evaluated exactly."""
    if d + delta < 0:
        return False
    return (d + delta) ** 2 >= 4 * delta * n


def theta(L, s, x):
    """1 - (s+1)/(2(L+1)) - (L/(2s)) (1 - x) as an exact fraction."""
    x = Fraction(x)
    return 1 - Fraction(s + 1, 2 * (L + 1)) - Fraction(L, 2 * s) * (1 - x)


def theta_inequality(n, d, delta, L, s):
    """n * theta(L, s, d/n) >= (d + delta - 1) / 2, in integers."""
    lhs = 2 * n * s * (L + 1) - n * (s + 1) * s - L * (L + 1) * (n - d)
    return lhs >= (d + delta - 1) * s * (L + 1)


def _best_s(n, d, L):
    x = Fraction(d, n)
    real = math.sqrt(L * (L + 1) * (n - d) / n) if n > d else 1.0
    cands = {1, L}
    for c in (math.floor(real) - 1, math.floor(real), math.ceil(real), math.ceil(real) + 1):
        if 1 <= c <= L:
            cands.add(c)
    return max(sorted(cands), key=lambda s: theta(L, s, x))


def gs_feasibility(n, d, delta, rho=0, varrho=0):
    """Smallest list size L (with the s maximizing theta) for which a
    list decoder of the row code, run on the array collapsed by the inner
    code, reaches the radius needed for unique decoding of the combined
    pattern.  Only decides the sufficient condition d' >= 2 sqrt(delta n') -
    delta with n' = n - rho - varrho and d' = d - rho - varrho."""
    n1 = n - rho - varrho
    d1 = d - rho - varrho
    if n1 <= 0 or d1 <= 0 or d1 > n1:
        return GsFeasibility(False, reason="degenerate punctured parameters")
    if not radius_condition_holds(n1, d1, delta):
        return GsFeasibility(False, reason="radius condition fails")
    if d1 + delta > 2 * n1:
        return GsFeasibility(False, reason="target radius exceeds punctured length")
    limit = 2 * n * n + n
    target = (d1 + delta - 1) / 2
    for L in range(1, limit + 1):
        # float pre-filter at both integer neighbours of the real optimum of s
        real = math.sqrt(L * (L + 1) * (n1 - d1) / n1)
        approx = max(n1 * (1 - (s + 1) / (2 * (L + 1)) - (L / (2 * s)) * (1 - d1 / n1))
                     for s in {min(max(math.floor(real), 1), L), min(max(math.ceil(real), 1), L)})
        if approx + 1e-9 * n1 < target:
            continue
        s = _best_s(n1, d1, L)
        if theta_inequality(n1, d1, delta, L, s):
            return GsFeasibility(True, L, s)
    return GsFeasibility(False, reason="no L up to 2n^2+n")
