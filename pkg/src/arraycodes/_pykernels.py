"""Pure-Python hot kernels.  Same API as the compiled ``_ckernels`` module."""

BACKEND = "python"


class Kernel:
    """Bulk operations over one field, driven by its exp/log tables.

    addmode: 0 xor (p = 2), 1 mod p (prime field), 2 base-p digit-wise.
    """

    def __init__(self, q, p, addmode, exp, log):
        self.q = q
        self.p = p
        self.addmode = addmode
        self.exp = list(exp)
        self.log = list(log)

    # scalar helpers
    def add(self, a, b):
        if self.addmode == 0:
            return a ^ b
        p = self.p
        if self.addmode == 1:
            s = a + b
            return s - p if s >= p else s
        r, scale = 0, 1
        while a or b:
            r += ((a % p + b % p) % p) * scale
            a //= p
            b //= p
            scale *= p
        return r

    def neg(self, a):
        if self.addmode == 0:
            return a
        p = self.p
        if self.addmode == 1:
            return p - a if a else 0
        r, scale = 0, 1
        while a:
            r += ((p - a % p) % p) * scale
            a //= p
            scale *= p
        return r

    def sub(self, a, b):
        if self.addmode == 0:
            return a ^ b
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self.exp[self.log[a] + self.log[b]]

    def inv(self, a):
        return self.exp[(self.q - 1 - self.log[a]) % (self.q - 1)]

    # bulk kernels
    def add_rows(self, A, B):
        """Entry-wise A + B of two equally shaped arrays."""
        if self.addmode == 0:
            return [[a ^ b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]
        add = self.add
        return [[add(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]

    def sub_rows(self, A, B):
        if self.addmode == 0:
            return [[a ^ b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]
        sub = self.sub
        return [[sub(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]

    def matmul(self, A, B):
        exp, log = self.exp, self.log
        add = self.add
        cols = len(B[0]) if B else 0
        out = []
        for row in A:
            acc = [0] * cols
            for t, a in enumerate(row):
                if a == 0:
                    continue
                la = log[a]
                brow = B[t]
                for j in range(cols):
                    b = brow[j]
                    if b:
                        acc[j] = add(acc[j], exp[la + log[b]])
            out.append(acc)
        return out

    def mul_rows_trunc(self, rows, f, t):
        """Each row times the polynomial f, truncated to length t."""
        exp, log = self.exp, self.log
        add = self.add
        out = []
        for r in rows:
            acc = [0] * t
            for i, a in enumerate(r):
                if a == 0 or i >= t:
                    continue
                la = log[a]
                for k in range(min(len(f), t - i)):
                    b = f[k]
                    if b:
                        acc[i + k] = add(acc[i + k], exp[la + log[b]])
            out.append(acc)
        return out

    def rank(self, rows, c0, c1):
        """Rank of the submatrix of rows restricted to columns [c0, c1)."""
        M = [list(r[c0:c1]) for r in rows]
        exp, log = self.exp, self.log
        q1 = self.q - 1
        nrows, ncols = len(M), c1 - c0
        rk = 0
        for c in range(ncols):
            sel = -1
            for i in range(rk, nrows):
                if M[i][c]:
                    sel = i
                    break
            if sel < 0:
                continue
            M[rk], M[sel] = M[sel], M[rk]
            piv = M[rk]
            lp = log[piv[c]]
            for i in range(rk + 1, nrows):
                v = M[i][c]
                if v:
                    lf = (log[v] - lp) % q1
                    row = M[i]
                    for k in range(c, ncols):
                        if piv[k]:
                            row[k] = self.sub(row[k], exp[lf + log[piv[k]]])
            rk += 1
            if rk == nrows:
                break
        return rk

    def eval_many(self, f, xs):
        exp, log = self.exp, self.log
        add = self.add
        out = []
        for x in xs:
            acc = 0
            if x == 0:
                out.append(f[0] if f else 0)
                continue
            lx = log[x]
            for c in reversed(f):
                if acc:
                    acc = exp[log[acc] + lx]
                acc = add(acc, c)
            out.append(acc)
        return out

    def feng_tzeng(self, rows, start, end):
        """Shortest common linear recurrence of rows[h][start:end].

        Returns (L, lam): lam[0] = 1, len(lam) <= L + 1 and for every row h
        and every start + L <= j < end: sum_i lam[i] * rows[h][j - i] = 0.
        Sequences are visited time-major, rows in order; each row keeps its
        own auxiliary polynomial from its last length change."""
        exp, log = self.exp, self.log
        add, sub = self.add, self.sub
        q1 = self.q - 1
        nseq = len(rows)
        C = [1]
        L = 0
        aux = [None] * nseq  # (B, log d_B, n_B, L_B)
        for n in range(end - start):
            pos = start + n
            for h in range(nseq):
                s = rows[h]
                d = 0
                lim = min(len(C) - 1, L, n)
                for i in range(lim + 1):
                    c = C[i]
                    v = s[pos - i]
                    if c and v:
                        d = add(d, exp[log[c] + log[v]])
                if d == 0:
                    continue
                a = aux[h]
                if a is None:
                    B, ldB, nB, LB = [1], 0, -1, 0
                else:
                    B, ldB, nB, LB = a
                shift = n - nB
                lc = (log[d] - ldB) % q1
                need = shift + len(B)
                newC = C + [0] * (need - len(C)) if need > len(C) else list(C)
                for i, b in enumerate(B):
                    if b:
                        newC[i + shift] = sub(newC[i + shift], exp[lc + log[b]])
                newL = max(L, shift + LB)
                if n - L > nB - LB:
                    aux[h] = (C, log[d], n, L)
                C, L = newC, newL
        while len(C) > 1 and C[-1] == 0:
            C.pop()
        return L, C

    def exact_recurrence(self, rows, start, end, L):
        """A recurrence of length L (lam[0] = 1) for all rows over positions
        [start, end), found by Gaussian elimination, or None."""
        if L == 0:
            for r in rows:
                for j in range(start, end):
                    if r[j]:
                        return None
            return [1]
        eqs = []
        for r in rows:
            for j in range(start + L, end):
                eqs.append([r[j - i] for i in range(1, L + 1)] + [self.neg(r[j])])
        exp, log = self.exp, self.log
        q1 = self.q - 1
        pivots = []
        rk = 0
        for c in range(L):
            sel = -1
            for i in range(rk, len(eqs)):
                if eqs[i][c]:
                    sel = i
                    break
            if sel < 0:
                continue
            eqs[rk], eqs[sel] = eqs[sel], eqs[rk]
            linv = (q1 - log[eqs[rk][c]]) % q1
            eqs[rk] = [exp[linv + log[v]] if v else 0 for v in eqs[rk]]
            piv = eqs[rk]
            for i in range(len(eqs)):
                if i != rk and eqs[i][c]:
                    lf = log[eqs[i][c]]
                    eqs[i] = [self.sub(x, exp[lf + log[y]]) if y else x for x, y in zip(eqs[i], piv)]
            pivots.append(c)
            rk += 1
        for i in range(rk, len(eqs)):
            if eqs[i][L]:
                return None
        lam = [1] + [0] * L
        for i, c in enumerate(pivots):
            lam[c + 1] = eqs[i][L]
        while len(lam) > 1 and lam[-1] == 0:
            lam.pop()
        return lam
