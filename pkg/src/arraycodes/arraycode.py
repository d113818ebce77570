"""Array codes C = (row code, inner matrices): an m x n array Gamma is a
codeword when every row of (H_0 Gamma_0 | ... | H_{n-1} Gamma_{n-1}) lies in
the row code, Gamma_j being column j."""

from dataclasses import dataclass, field as dc_field
from itertools import combinations

from . import gf
from .grs import GrsSpec, encode_rows, syndromes

DELTA_CHECK_BUDGET = 10 ** 6


class ArrayCodeSpec:
    def __init__(self, grs, m, inner, delta, beta=None, kind="explicit"):
        if len(inner) != grs.n:
            raise ValueError("need one inner matrix per column")
        for H in inner:
            if len(H) != m or any(len(row) != m for row in H):
                raise ValueError("inner matrices must be m x m")
        self.grs = grs
        self.field = grs.field
        self.m = m
        self.n = grs.n
        self.k = grs.k
        self.d = grs.d
        self.inner = [[list(r) for r in H] for H in inner]
        self.delta = delta
        self.beta = [list(r) for r in beta] if beta is not None else None
        self.kind = kind
        self.identity_inner = all(H == gf.identity(m) for H in self.inner)
        try:
            self.inner_inv = [gf.inverse(self.field, H) for H in self.inner]
        except gf.FieldError:
            self.inner_inv = None

    @property
    def redundancy(self):
        return self.m * (self.n - self.k)

    def to_dict(self):
        d = {
            "field": self.field.to_dict(),
            "m": self.m,
            "n": self.n,
            "k": self.k,
            "alpha": list(self.grs.locators),
            "delta": self.delta,
        }
        if self.kind == "grs-beta":
            d["inner"] = "grs-beta"
            d["beta"] = self.beta
        elif self.kind == "identity":
            d["inner"] = "identity"
        else:
            d["inner"] = {"matrices": self.inner}
            if self.beta is not None:
                d["beta"] = self.beta
        return d

    @classmethod
    def from_dict(cls, d):
        F = gf.GF.from_dict(d["field"])
        grs = GrsSpec(F, d["alpha"], d["k"])
        m = d["m"]
        inner = d["inner"]
        if inner == "grs-beta":
            return build_grs_inner(grs, m, d["beta"])
        if inner == "identity":
            return build_interleaved(grs, m)
        return ArrayCodeSpec(grs, m, inner["matrices"], d["delta"], d.get("beta"))

    def __eq__(self, o):
        return isinstance(o, ArrayCodeSpec) and self.to_dict() == o.to_dict()

    def __repr__(self):
        return "ArrayCodeSpec(%r, m=%d, n=%d, k=%d, delta=%d, %s)" % (
            self.field, self.m, self.n, self.k, self.delta, self.kind)


def grs_inner_matrix(F, m, betas):
    """H = (beta_kappa^h), rows h < m, columns kappa."""
    return [[F.pow(b, h) for b in betas] for h in range(m)]


def default_beta(F, m, n):
    """beta_{kappa,j} = g^(j m + kappa + 1)."""
    return [[F.primitive_power(j * m + kappa + 1) for j in range(n)] for kappa in range(m)]


def build_grs_inner(grs, m, beta=None):
    """Inner matrices from distinct nonzero betas: delta = m + 1."""
    F = grs.field
    n = grs.n
    if m * n > F.q - 1:
        raise ValueError("need m*n <= q-1 distinct nonzero betas")
    if beta is None:
        beta = default_beta(F, m, n)
    flat = [beta[kappa][j] for j in range(n) for kappa in range(m)]
    if 0 in flat or len(set(flat)) != len(flat):
        raise ValueError("betas must be distinct and nonzero")
    inner = [grs_inner_matrix(F, m, [beta[kappa][j] for kappa in range(m)]) for j in range(n)]
    return ArrayCodeSpec(grs, m, inner, m + 1, beta, kind="grs-beta")


def build_mds_instance(F, m, n, k, locators=None):
    """Array code that is itself a GRS code of length mn and redundancy
    (n-k)m: each alpha_j has order dividing (q-1)/m and the betas in column
    j are the m distinct m-th roots of alpha_j."""
    q1 = F.q - 1
    if q1 % m:
        raise ValueError("m must divide q-1")
    step = q1 // m
    if locators is None:
        if n > step:
            raise ValueError("need n <= (q-1)/m")
        locators = [F.primitive_power(m * j) for j in range(n)]
    beta = [[0] * n for _ in range(m)]
    for j, a in enumerate(locators):
        if a == 0 or F.pow(a, step) != 1:
            raise ValueError("locator order must divide (q-1)/m")
        la = F.log[a]
        # a = g^la with m | la; roots g^(la/m + i (q-1)/m)
        base = la // m
        for kappa in range(m):
            beta[kappa][j] = F.primitive_power(base + kappa * step)
    grs = GrsSpec(F, locators, k)
    return build_grs_inner(grs, m, beta)


def build_interleaved(grs, m):
    """Plain m-fold interleaving: identity inner matrices (delta = 2)."""
    inner = [gf.identity(m) for _ in range(grs.n)]
    return ArrayCodeSpec(grs, m, inner, 2 if grs.n * m > 1 else 1, kind="identity")


def apply_columns(F, mats, A):
    """Array whose column j is mats[j] times column j of A."""
    m = len(A)
    n = len(A[0]) if A else 0
    out = [[0] * n for _ in range(m)]
    mul, add = F.mul, F.add
    for j in range(n):
        H = mats[j]
        col = [A[h][j] for h in range(m)]
        if not any(col):
            continue
        for h in range(len(H)):
            acc = 0
            row = H[h]
            for kk in range(m):
                if row[kk] and col[kk]:
                    acc = add(acc, mul(row[kk], col[kk]))
            out[h][j] = acc
    return out


def transform(spec, A):
    """Z with Z_j = H_j A_j."""
    if spec.identity_inner:
        return [list(r) for r in A]
    return apply_columns(spec.field, spec.inner, A)


def inverse_transform(spec, Z):
    if spec.identity_inner:
        return [list(r) for r in Z]
    if spec.inner_inv is None:
        raise gf.FieldError("inner matrices are not invertible")
    return apply_columns(spec.field, spec.inner_inv, Z)


def encode_array(spec, message):
    """Encode an m x k message: rows go through the row code, then each
    column is pulled back through H_j^-1."""
    if len(message) != spec.m or any(len(r) != spec.k for r in message):
        raise ValueError("message must be m x k")
    return inverse_transform(spec, encode_rows(spec.grs, message))


def is_codeword(spec, A):
    if len(A) != spec.m or any(len(r) != spec.n for r in A):
        raise ValueError("array must be m x n")
    S = syndromes(spec.grs, transform(spec, A))
    return not any(any(r) for r in S)


@dataclass
class Certificate:
    ok: bool
    delta: int
    method: str  # "structural", "exhaustive" or "unverified"
    singular: list = dc_field(default_factory=list)
    dependent: tuple = None
    detail: str = ""


def _hin_columns(spec):
    cols = []
    for j in range(spec.n):
        H = spec.inner[j]
        for kappa in range(spec.m):
            cols.append([H[h][kappa] for h in range(spec.m)])
    return cols


def _comb(a, b):
    from math import comb
    return comb(a, b)


def validate_spec(spec, exhaustive_delta_check=False, budget=DELTA_CHECK_BUDGET):
    """Check invertibility of every H_j and that every delta-1 columns of
    H_in = (H_0 | ... | H_{n-1}) are independent.  Column j*m + kappa of
    H_in is column kappa of H_j."""
    F = spec.field
    m, n, delta = spec.m, spec.n, spec.delta
    singular = [j for j, H in enumerate(spec.inner) if gf.rank(F, H) != m]
    if singular:
        return Certificate(False, delta, "structural", singular, detail="singular inner matrices")
    if spec.beta is not None:
        flat = [spec.beta[kappa][j] for j in range(n) for kappa in range(m)]
        seen = {}
        for idx, b in enumerate(flat):
            if b == 0:
                return Certificate(False, delta, "structural", dependent=(idx,), detail="zero beta")
            if b in seen:
                return Certificate(False, delta, "structural", dependent=(seen[b], idx), detail="repeated beta")
            seen[b] = idx
    cols = _hin_columns(spec)
    size = delta - 1
    affordable = _comb(len(cols), size) <= budget
    if exhaustive_delta_check or spec.beta is None:
        if not affordable:
            if spec.beta is not None:
                return Certificate(True, delta, "structural", detail="exhaustive check over budget")
            return Certificate(False, delta, "unverified", detail="exhaustive check over budget")
        for sub in combinations(range(len(cols)), size):
            M = [cols[c] for c in sub]
            if gf.rank(F, M) != size:
                return Certificate(False, delta, "exhaustive", dependent=sub)
        return Certificate(True, delta, "exhaustive")
    return Certificate(True, delta, "structural")


def true_delta(F, inner, m):
    """Largest delta such that every delta-1 columns of H_in are independent
    (brute force; tiny instances only)."""
    cols = []
    for H in inner:
        for kappa in range(m):
            cols.append([H[h][kappa] for h in range(m)])
    size = 0
    while size < m:
        ok = all(gf.rank(F, [cols[c] for c in sub]) == size + 1
                 for sub in combinations(range(len(cols)), size + 1))
        if not ok:
            break
        size += 1
    return size + 1


# ---------------------------------------------------------------------------
# the weight-2 counterexample for codes linear over GF(q^m)


def _primitive_poly_over(F, m):
    """Least monic degree-m polynomial over F (by base-q coefficient code)
    whose root generates GF(q^m)*."""
    q = F.q
    order = q ** m - 1
    for code in range(q ** m):
        low = []
        c = code
        for _ in range(m):
            low.append(c % q)
            c //= q
        if low[0] == 0:
            continue
        f = low + [1]
        # period of x modulo f
        cur = [1] + [0] * (m - 1)
        period = 0
        for step in range(1, order + 1):
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                cur = [F.sub(cur[i], F.mul(top, f[i])) for i in range(m)]
            if cur[0] == 1 and not any(cur[1:]):
                period = step
                break
        if period == order:
            return f
    raise gf.FieldError("no primitive polynomial")


def companion_matrix(F, f):
    m = len(f) - 1
    C = [[0] * m for _ in range(m)]
    for i in range(1, m):
        C[i][i - 1] = 1
    for i in range(m):
        C[i][m - 1] = F.neg(f[i])
    return C


def _mat_pow(F, C, e):
    R = gf.identity(len(C))
    B = C
    while e:
        if e & 1:
            R = gf.matmul(F, R, B)
        B = gf.matmul(F, B, B)
        e >>= 1
    return R


def pairwise_independent(F, columns):
    return all(gf.rank(F, [a, b]) == 2 for a, b in combinations(columns, 2))


def spread_inner(F, m, n):
    """Invertible m x m matrices whose columns are pairwise independent for
    as many leading j as the projective space allows; later matrices fall
    back to the identity.  Returns (inner, count of spread matrices)."""
    points = []
    for v in range(1, F.q ** m):
        vec = []
        c = v
        for _ in range(m):
            vec.append(c % F.q)
            c //= F.q
        lead = next(x for x in reversed(vec) if x)
        if lead == 1:
            points.append(vec)
    used = [False] * len(points)
    inner = []
    spread = 0

    def pick(chosen, start):
        if len(chosen) == m:
            return list(chosen)
        for i in range(start, len(points)):
            if used[i]:
                continue
            trial = chosen + [i]
            if gf.rank(F, [points[t] for t in trial]) == len(trial):
                got = pick(trial, i + 1)
                if got:
                    return got
        return None

    for j in range(n):
        got = pick([], 0)
        if got is None:
            inner.append(gf.identity(m))
            continue
        for i in got:
            used[i] = True
        inner.append(gf.transpose([points[i] for i in got]))
        spread += 1
    return inner, spread


@dataclass
class Counterexample:
    gamma: list  # m x n array with exactly two nonzero entries
    companions: list  # C_0 .. C_{n-1}
    exponents: list  # C_j = C^exponents[j]
    collision: tuple  # (column of H_1, column of H_0)
    modulus: list


def counterexample_weight2(F, m, n, inner):
    """Weight-2 nonzero array Gamma with sum_j C_j H_j Gamma_j = 0, where the
    C_j are n distinct powers of a companion matrix, C_0 = I.

    Needs the 2m columns of H_0 and H_1 pairwise independent (delta >= 3
    restricted to the first two blocks); the smallest exponent e with a
    column of C^e H_1 equal to a column of H_0 is chosen for C_1.
    """
    if n < 2 or n > F.q ** m - 1:
        raise ValueError("need 2 <= n <= q^m - 1")
    cols0 = [[inner[0][h][c] for h in range(m)] for c in range(m)]
    cols1 = [[inner[1][h][c] for h in range(m)] for c in range(m)]
    if not pairwise_independent(F, cols0 + cols1):
        raise ValueError("columns of H_0 and H_1 must be pairwise independent")
    f = _primitive_poly_over(F, m)
    C = companion_matrix(F, f)
    order = F.q ** m - 1
    vecs = [list(v) for v in cols1]
    found = None
    for e in range(1, order):
        vecs = [gf.matmul(F, C, [[x] for x in v]) for v in vecs]
        vecs = [[row[0] for row in v] for v in vecs]
        for a, v in enumerate(vecs):
            for b, u in enumerate(cols0):
                if v == u:
                    found = (e, a, b)
                    break
            if found:
                break
        if found:
            break
    e, a, b = found
    exps = [0, e]
    nxt = 1
    while len(exps) < n:
        if nxt not in exps:
            exps.append(nxt)
        nxt += 1
    comps = [_mat_pow(F, C, x) for x in exps]
    gamma = [[0] * n for _ in range(m)]
    gamma[b][0] = F.neg(1)
    gamma[a][1] = 1
    return Counterexample(gamma, comps, exps, (a, b), f)


def counterexample_residual(F, cx, inner):
    """sum_j C_j H_j Gamma_j as an m-vector (zero for a valid counterexample)."""
    m = len(cx.gamma)
    total = [0] * m
    for j, (Cj, Hj) in enumerate(zip(cx.companions, inner)):
        col = [[cx.gamma[h][j]] for h in range(m)]
        v = gf.matmul(F, gf.matmul(F, Cj, Hj), col)
        total = [F.add(x, y[0]) for x, y in zip(total, v)]
    return total
