"""Planting helpers shared by the decoder tests."""

from arraycodes.arraycode import encode_array
from arraycodes.combodec import ErrorPattern


def nonzero_vector(rng, q, m):
    while True:
        v = [rng.randrange(q) for _ in range(m)]
        if any(v):
            return v


def plant(rng, spec, block_errors=(), block_erasures=(), symbol_errors=(), symbol_erasures=()):
    """Random codeword plus a pattern on the given positions with random
    values (nonzero where an error is required).  Returns (C, Y, pattern)."""
    F, m, q = spec.field, spec.m, spec.field.q
    pat = ErrorPattern(
        {j: nonzero_vector(rng, q, m) for j in block_errors},
        {j: [rng.randrange(q) for _ in range(m)] for j in block_erasures},
        {p: rng.randrange(1, q) for p in symbol_errors},
        {p: rng.randrange(q) for p in symbol_erasures},
    )
    assert pat.disjoint()
    C = encode_array(spec, [[rng.randrange(q) for _ in range(spec.k)] for _ in range(m)])
    E = pat.array(F, m, spec.n)
    Y = [[F.add(a, b) for a, b in zip(rc, re)] for rc, re in zip(C, E)]
    return C, Y, pat


def random_geometry(rng, m, n, tau, rho, symbol_cols, varrho=0):
    """Disjoint block-error columns, block-erasure columns, symbol-error
    positions (one list of row counts per carrying column) and symbol-erasure
    positions."""
    cols = rng.sample(range(n), tau + rho + len(symbol_cols))
    J, K, Lcols = cols[:tau], cols[tau:tau + rho], cols[tau + rho:]
    L = [(kappa, j) for j, cnt in zip(Lcols, symbol_cols) for kappa in rng.sample(range(m), cnt)]
    free = [(kappa, j) for j in range(n) if j not in J and j not in K for kappa in range(m)
            if (kappa, j) not in L]
    R = rng.sample(free, varrho)
    return J, K, L, R
