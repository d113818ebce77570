"""Generalized Reed-Solomon codes: parity checks, systematic encoding and an
error-and-erasure decoder built on the key equation."""

from .failures import INCONSISTENT, LOCATOR_NOT_SPLITTING, Failure
from .gf import GF, inverse, poly_derivative, poly_from_roots_inverse
from .kernels import kernel_for
from .synthesis import feng_tzeng


class GrsSpec:
    """[n, k, n-k+1] code with parity-check matrix (alpha_j^i), i < n-k."""

    def __init__(self, F, locators, k):
        locators = tuple(int(a) for a in locators)
        n = len(locators)
        if not 0 <= k <= n:
            raise ValueError("dimension must satisfy 0 <= k <= n")
        if n > F.q - 1:
            raise ValueError("length exceeds q - 1")
        if len(set(locators)) != n or 0 in locators:
            raise ValueError("locators must be distinct and nonzero")
        self.field = F
        self.locators = locators
        self.n = n
        self.k = k
        self.d = n - k + 1
        self.redundancy = n - k
        self.inv_locators = [F.inv(a) for a in locators]
        self._powers = None
        self._gen = None

    def powers(self):
        """n x (d-1) matrix of alpha_j^i: the transpose of the parity check."""
        if self._powers is None:
            F = self.field
            self._powers = [[F.pow(a, i) for i in range(self.redundancy)] for a in self.locators]
        return self._powers

    def to_dict(self):
        return {"field": self.field.to_dict(), "n": self.n, "k": self.k, "locators": list(self.locators)}

    @classmethod
    def from_dict(cls, d):
        return cls(GF.from_dict(d["field"]), d["locators"], d["k"])

    def __eq__(self, o):
        return isinstance(o, GrsSpec) and (self.field, self.locators, self.k) == (o.field, o.locators, o.k)

    def __hash__(self):
        return hash((self.field, self.locators, self.k))

    def __repr__(self):
        return "GrsSpec(%r, n=%d, k=%d)" % (self.field, self.n, self.k)


def grs_spec(F, n, k, locators=None):
    """GrsSpec with default locators alpha_j = g^j."""
    if locators is None:
        locators = [F.primitive_power(j) for j in range(n)]
    return GrsSpec(F, locators, k)


def parity_check(spec, multipliers=None):
    F = spec.field
    H = [[F.pow(a, i) for a in spec.locators] for i in range(spec.redundancy)]
    if multipliers is not None:
        H = [[F.mul(v, x) for v, x in zip(multipliers, row)] for row in H]
    return H


def syndromes(spec, rows):
    """Row-wise syndromes Y H^T of an m x n array."""
    return kernel_for(spec.field).matmul([list(r) for r in rows], spec.powers())


def syndrome(spec, word):
    return syndromes(spec, [word])[0]


def _systematic_map(spec):
    # parity part P (k x (n-k)) with codeword = (u, u P)
    if spec._gen is None:
        F = spec.field
        k, r = spec.k, spec.redundancy
        Hm = [row[:k] for row in parity_check(spec)]
        Hp = [row[k:] for row in parity_check(spec)]
        Hp_inv = inverse(F, Hp) if r else []
        # H_m u + H_p c_p = 0  =>  c_p = -Hp^{-1} H_m u
        M = kernel_for(F).matmul(Hp_inv, Hm) if r else []
        spec._gen = [[F.neg(M[i][j]) for i in range(r)] for j in range(k)]
    return spec._gen


def encode(spec, message):
    """Systematic encoding: positions 0..k-1 carry the message."""
    message = list(message)
    if len(message) != spec.k:
        raise ValueError("message must have length k")
    if spec.redundancy == 0:
        return message
    P = _systematic_map(spec)
    if spec.k == 0:
        return [0] * spec.n
    return message + kernel_for(spec.field).matmul([message], P)[0]


def encode_rows(spec, messages):
    """Encode every row of an m x k message array."""
    messages = [list(r) for r in messages]
    if spec.redundancy == 0:
        return messages
    if spec.k == 0:
        return [[0] * spec.n for _ in messages]
    parity = kernel_for(spec.field).matmul(messages, _systematic_map(spec))
    return [u + p for u, p in zip(messages, parity)]


def erasure_locator(spec, erasures):
    """M(x) = prod over erasures of (1 - alpha_j x)."""
    return poly_from_roots_inverse(spec.field, [spec.locators[j] for j in erasures])


class KeyEquationSolution:
    """Error columns found by the key-equation decoder."""

    __slots__ = ("columns", "errors", "lam", "length")

    def __init__(self, columns, errors, lam, length):
        self.columns = columns  # dict j -> list of m values
        self.errors = errors  # sorted list of located error positions
        self.lam = lam
        self.length = length


def solve_key_equation(spec, sigma, erasures, cap, multipliers=None):
    """Locate and evaluate errors from modified syndromes.

    ``sigma`` holds m rows S_h(x) M(x) mod x^(d-1) where M is the erasure
    locator of ``erasures``.  The shortest common recurrence constrained from
    index |erasures| on gives the error locator; its roots must be distinct
    inverse locators outside the erasures.  Values follow the bivariate
    Forney formula, and the result is checked against sigma.
    """
    F = spec.field
    k = kernel_for(F)
    nsyn = spec.redundancy
    erasures = list(erasures)
    r = len(erasures)
    rec = feng_tzeng(F, sigma, r, cap)
    if not rec:
        return rec
    lam = list(rec.lam)
    if rec.degree != rec.length:
        return Failure(LOCATOR_NOT_SPLITTING, detail="degenerate locator")
    inv = spec.inv_locators
    errors = []
    if rec.length:
        vals = k.eval_many(lam, inv)
        errors = [j for j, v in enumerate(vals) if v == 0]
        eset = set(erasures)
        if len(errors) != rec.length or any(j in eset for j in errors):
            return Failure(LOCATOR_NOT_SPLITTING, detail="%d roots for degree %d" % (len(errors), rec.length))
    M = erasure_locator(spec, erasures)
    omega = k.mul_rows_trunc(sigma, lam, nsyn)
    dlam = poly_derivative(F, lam)
    dM = poly_derivative(F, M)
    support = errors + erasures
    xs = [inv[j] for j in support]
    denoms = []
    lam_d = k.eval_many(dlam, xs[: len(errors)])
    m_at = k.eval_many(M, xs[: len(errors)])
    for t in range(len(errors)):
        denoms.append(F.mul(lam_d[t], m_at[t]))
    lam_at = k.eval_many(lam, xs[len(errors):])
    dm_at = k.eval_many(dM, xs[len(errors):])
    for t in range(len(erasures)):
        denoms.append(F.mul(lam_at[t], dm_at[t]))
    factors = []
    for t, j in enumerate(support):
        if denoms[t] == 0:
            return Failure(LOCATOR_NOT_SPLITTING, detail="vanishing denominator")
        f = F.neg(F.div(spec.locators[j], denoms[t]))
        if multipliers is not None:
            f = F.div(f, multipliers[j])
        factors.append(f)
    om_vals = [k.eval_many(row, xs) for row in omega]
    columns = {}
    for t, j in enumerate(support):
        columns[j] = [F.mul(factors[t], om_vals[h][t]) for h in range(len(sigma))]
    # consistency: the found errors must reproduce sigma exactly
    if support:
        pw = spec.powers()
        A = []
        for j in support:
            row = pw[j]
            if multipliers is not None:
                row = [F.mul(multipliers[j], v) for v in row]
            A.append(row)
        E = [[columns[j][h] for j in support] for h in range(len(sigma))]
        check = k.mul_rows_trunc(k.matmul(E, A), M, nsyn)
    else:
        check = [[0] * nsyn for _ in sigma]
    if any(list(a) != list(b) for a, b in zip(check, sigma)):
        return Failure(INCONSISTENT)
    return KeyEquationSolution(columns, errors, lam, rec.length)


def decode_grs(spec, received=None, syndrome_vector=None, erasures=(), multipliers=None):
    """Error vector e for a received word (or a raw syndrome of length d-1).

    Corrects t errors and |erasures| erasures whenever 2t + |erasures| <= d-1.
    Returns a list of n values, or a Failure.
    """
    F = spec.field
    erasures = sorted(set(erasures))
    if len(erasures) > spec.redundancy:
        raise ValueError("more erasures than redundancy")
    if syndrome_vector is None:
        if received is None:
            raise ValueError("need a received word or a syndrome")
        H = parity_check(spec, multipliers)
        syn = [0] * spec.redundancy
        for i, row in enumerate(H):
            acc = 0
            for a, b in zip(row, received):
                acc = F.add(acc, F.mul(a, b))
            syn[i] = acc
    else:
        syn = list(syndrome_vector)
        if len(syn) != spec.redundancy:
            raise ValueError("syndrome must have length d-1")
    sol = decode_modified(spec, [syn], erasures, multipliers)
    if not sol:
        return sol
    e = [0] * spec.n
    for j, col in sol.columns.items():
        e[j] = col[0]
    return e


def decode_modified(spec, syndrome_rows, erasures, multipliers=None, cap=None):
    """Key-equation decoding of several syndrome rows sharing one erasure set,
    with the classical cap floor((d-1-r)/2) unless given."""
    k = kernel_for(spec.field)
    erasures = list(erasures)
    M = erasure_locator(spec, erasures)
    sigma = k.mul_rows_trunc([list(s) for s in syndrome_rows], M, spec.redundancy)
    if cap is None:
        cap = (spec.redundancy - len(erasures)) // 2
    return solve_key_equation(spec, sigma, erasures, cap, multipliers)
