"""Decoders for m-fold interleaved codes: a rank-aware decoder for interleaved
GRS codes and a generic column-reduction decoder for any linear code."""

import math
from dataclasses import dataclass

from . import gf
from .failures import AMBIGUOUS_SUPPORT, INCONSISTENT, RANK_DEFICIENT, Failure
from .grs import erasure_locator, solve_key_equation, syndromes
from .kernels import kernel_for


@dataclass
class InterleavedResult:
    E: list  # m x n error array
    J: tuple  # located error columns (erasures excluded)
    mu: int


def modified_syndromes(spec, S, erasures):
    """sigma = S(y,x) M(x) mod x^(d-1) and the rank of its columns r..d-2."""
    k = kernel_for(spec.field)
    nsyn = spec.redundancy
    M = erasure_locator(spec, erasures)
    sigma = k.mul_rows_trunc([list(r) for r in S], M, nsyn)
    mu = k.rank(sigma, len(erasures), nsyn)
    return sigma, mu


def decode_from_syndromes(spec, S, erasures=()):
    """Rank-aware interleaved decoding starting from the m x (d-1) syndromes."""
    erasures = sorted(set(erasures))
    m = len(S)
    sigma, mu = modified_syndromes(spec, S, erasures)
    r = len(erasures)
    cap = (spec.d + mu - r) // 2
    sol = solve_key_equation(spec, sigma, erasures, cap)
    if not sol:
        sol.info["mu"] = mu
        return sol
    E = [[0] * spec.n for _ in range(m)]
    for j, col in sol.columns.items():
        for h in range(m):
            E[h][j] = col[h]
    return InterleavedResult(E, tuple(sol.errors), mu)


def decode_interleaved_grs(spec, Y, erasures=()):
    """Error array E of Y = codewords + E for an interleaved GRS code.

    Succeeds whenever the t error columns outside the r erased columns
    satisfy 2t + r <= d + mu - 2, mu being the rank of the error columns.
    Returns an InterleavedResult or a Failure.
    """
    return decode_from_syndromes(spec, syndromes(spec, Y), erasures)


def column_rank(F, M, c0, c1):
    return kernel_for(F).rank([list(r) for r in M], c0, c1)


def decode_generic_rank(F, H, S, erasures=()):
    """Column-reduction decoder for an interleaved code with parity check H.

    Handles t independent error columns (mu = t) with t <= d - 2 - r.  The
    erased columns are removed first by row operations on H that turn its
    erased part into an identity block on top.
    """
    erasures = sorted(set(erasures))
    red = len(H)
    n = len(H[0]) if H else 0
    m = len(S)
    r = len(erasures)
    rest = [j for j in range(n) if j not in set(erasures)]
    if r:
        HK = [[row[j] for j in erasures] for row in H]
        R, piv, T = gf.row_reduce(F, HK, r)
        if len(piv) != r:
            return Failure(RANK_DEFICIENT, detail="erased columns of H dependent")
        H1 = gf.matmul(F, T, H)
        S1 = gf.matmul(F, S, gf.transpose(T)) if m else []
    else:
        H1, S1 = [list(row) for row in H], [list(row) for row in S]
    Hbar = [[H1[i][j] for j in rest] for i in range(r, red)]
    Stil = [row[r:] for row in S1]
    nbar = red - r
    if m and nbar:
        R, piv, P = gf.row_reduce(F, gf.transpose(Stil), m)
    else:
        piv, P = [], gf.identity(nbar)
    mu = len(piv)
    Hp = gf.matmul(F, P[mu:], Hbar) if nbar > mu else []
    if Hp:
        U = [c for c in range(len(rest)) if not any(Hp[i][c] for i in range(len(Hp)))]
    else:
        U = list(range(len(rest)))
    if len(U) != mu:
        return Failure(AMBIGUOUS_SUPPORT, detail="%d candidate columns for rank %d" % (len(U), mu), info={"mu": mu})
    E = [[0] * n for _ in range(m)]
    if mu:
        A = [[Hbar[i][c] for i in range(nbar)] for c in U]
        X = gf.solve_left(F, A, Stil)
        if X is None:
            return Failure(INCONSISTENT, info={"mu": mu})
        for h in range(m):
            for t, c in enumerate(U):
                E[h][rest[c]] = X[h][t]
    if r:
        for h in range(m):
            for a, j in enumerate(erasures):
                acc = S1[h][a]
                for c in U:
                    jj = rest[c]
                    acc = F.sub(acc, F.mul(E[h][jj], H1[a][jj]))
                E[h][j] = acc
    if gf.matmul(F, E, gf.transpose(H)) != [list(row) for row in S]:
        return Failure(INCONSISTENT, info={"mu": mu})
    return InterleavedResult(E, tuple(rest[c] for c in U), mu)


def failure_bound_exponent(m, d, t):
    """e with failure probability at most q^-e for t uniform error columns."""
    if m < d - 1:
        raise ValueError("bound needs m >= d - 1")
    if not 0 <= t <= d - 2:
        raise ValueError("bound needs 0 <= t <= d - 2")
    return (m + d - 1 - 2 * t) * (d - 1 - t)


def failure_bound(q, m, d, t):
    """Natural log of the failure-probability bound q^-((m+d-1-2t)(d-1-t))."""
    return -failure_bound_exponent(m, d, t) * math.log(q)
