"""Slow, obviously-correct reference computations used to freeze expected
values.  Nothing here touches the exp/log tables or the kernels."""

from itertools import combinations, permutations, product


def poly_mulmod_p(p, a, b, modulus):
    """Product of two base-p packed elements modulo a packed modulus, by
    schoolbook polynomial arithmetic over Z/p."""
    def unpack(x):
        out = []
        while x:
            out.append(x % p)
            x //= p
        return out

    A, B, M = unpack(a), unpack(b), unpack(modulus)
    prod = [0] * (len(A) + len(B))
    for i, x in enumerate(A):
        for j, y in enumerate(B):
            prod[i + j] = (prod[i + j] + x * y) % p
    w = len(M) - 1
    inv_lead = pow(M[-1], p - 2, p)
    for top in range(len(prod) - 1, w - 1, -1):
        c = prod[top] * inv_lead % p
        if c:
            for i in range(w + 1):
                prod[top - w + i] = (prod[top - w + i] - c * M[i]) % p
    return sum(c * p ** i for i, c in enumerate(prod[:w]))


def det(F, M):
    """Leibniz expansion; tiny matrices only."""
    n = len(M)
    total = 0
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = 1
        for i in range(n):
            term = F.mul(term, M[i][perm[i]])
        total = F.sub(total, term) if inv % 2 else F.add(total, term)
    return total


def rank_by_minors(F, M):
    rows, cols = len(M), len(M[0]) if M else 0
    for k in range(min(rows, cols), 0, -1):
        for rs in combinations(range(rows), k):
            for cs in combinations(range(cols), k):
                if det(F, [[M[r][c] for c in cs] for r in rs]):
                    return k
    return 0


def holds(F, lam, seqs, start):
    L = len(lam) - 1
    for s in seqs:
        for j in range(start + L, len(s)):
            acc = 0
            for i, c in enumerate(lam):
                acc = F.add(acc, F.mul(c, s[j - i]))
            if acc:
                return False
    return True


def shortest_recurrence_length(F, seqs, start, max_len):
    """Least L for which some lam = 1 + lam_1 x + ... + lam_L x^L holds on
    every sequence from start + L on, by exhaustive search."""
    for L in range(max_len + 1):
        for tail in product(range(F.q), repeat=L):
            if holds(F, (1,) + tail, seqs, start):
                return L
    return None


def hamming_weight(A):
    return sum(1 for row in A for v in row if v)


def all_vectors(q, n):
    return product(range(q), repeat=n)
