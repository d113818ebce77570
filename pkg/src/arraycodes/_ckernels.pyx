# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels.  Same API and results as ``_pykernels``."""

from libc.stdlib cimport malloc, free

BACKEND = "cython"


cdef class Kernel:
    cdef public int q, p, addmode
    cdef int *exp_t
    cdef int *log_t
    cdef int q1

    def __cinit__(self, int q, int p, int addmode, exp, log):
        cdef int i
        self.q = q
        self.p = p
        self.q1 = q - 1
        self.addmode = addmode
        self.exp_t = <int *>malloc(sizeof(int) * 2 * q)
        self.log_t = <int *>malloc(sizeof(int) * q)
        for i in range(len(exp)):
            self.exp_t[i] = exp[i]
        for i in range(q):
            self.log_t[i] = log[i]

    def __dealloc__(self):
        free(self.exp_t)
        free(self.log_t)

    cdef inline int _add(self, int a, int b) nogil:
        cdef int r, scale, p
        if self.addmode == 0:
            return a ^ b
        p = self.p
        if self.addmode == 1:
            r = a + b
            return r - p if r >= p else r
        r = 0
        scale = 1
        while a or b:
            r += ((a % p + b % p) % p) * scale
            a //= p
            b //= p
            scale *= p
        return r

    cdef inline int _neg(self, int a) nogil:
        cdef int r, scale, p
        if self.addmode == 0:
            return a
        p = self.p
        if self.addmode == 1:
            return p - a if a else 0
        r = 0
        scale = 1
        while a:
            r += ((p - a % p) % p) * scale
            a //= p
            scale *= p
        return r

    cdef inline int _sub(self, int a, int b) nogil:
        if self.addmode == 0:
            return a ^ b
        return self._add(a, self._neg(b))

    cdef inline int _mul(self, int a, int b) nogil:
        if a == 0 or b == 0:
            return 0
        return self.exp_t[self.log_t[a] + self.log_t[b]]

    def add(self, int a, int b):
        return self._add(a, b)

    def neg(self, int a):
        return self._neg(a)

    def sub(self, int a, int b):
        return self._sub(a, b)

    def mul(self, int a, int b):
        return self._mul(a, b)

    def inv(self, int a):
        return self.exp_t[(self.q1 - self.log_t[a]) % self.q1]

    def add_rows(self, A, B):
        cdef int a, b
        out = []
        for ra, rb in zip(A, B):
            row = []
            for a, b in zip(ra, rb):
                row.append(self._add(a, b))
            out.append(row)
        return out

    def sub_rows(self, A, B):
        cdef int a, b
        out = []
        for ra, rb in zip(A, B):
            row = []
            for a, b in zip(ra, rb):
                row.append(self._sub(a, b))
            out.append(row)
        return out

    def matmul(self, A, B):
        cdef int rows = len(A)
        cdef int inner = len(B)
        cdef int cols = len(B[0]) if inner else 0
        cdef int i, t, j, a, la, b
        cdef int *bm = <int *>malloc(sizeof(int) * (inner * cols + 1))
        cdef int *acc = <int *>malloc(sizeof(int) * (cols + 1))
        try:
            for t in range(inner):
                row = B[t]
                for j in range(cols):
                    bm[t * cols + j] = row[j]
            out = []
            for i in range(rows):
                arow = A[i]
                for j in range(cols):
                    acc[j] = 0
                for t in range(inner):
                    a = arow[t]
                    if a == 0:
                        continue
                    la = self.log_t[a]
                    for j in range(cols):
                        b = bm[t * cols + j]
                        if b:
                            acc[j] = self._add(acc[j], self.exp_t[la + self.log_t[b]])
                out.append([acc[j] for j in range(cols)])
            return out
        finally:
            free(bm)
            free(acc)

    def mul_rows_trunc(self, rows, f, int t):
        cdef int nf = len(f)
        cdef int i, k, a, la, b, n
        cdef int *fc = <int *>malloc(sizeof(int) * (nf + 1))
        cdef int *acc = <int *>malloc(sizeof(int) * (t + 1))
        try:
            for k in range(nf):
                fc[k] = f[k]
            out = []
            for r in rows:
                n = len(r)
                for k in range(t):
                    acc[k] = 0
                for i in range(min(n, t)):
                    a = r[i]
                    if a == 0:
                        continue
                    la = self.log_t[a]
                    for k in range(min(nf, t - i)):
                        b = fc[k]
                        if b:
                            acc[i + k] = self._add(acc[i + k], self.exp_t[la + self.log_t[b]])
                out.append([acc[k] for k in range(t)])
            return out
        finally:
            free(fc)
            free(acc)

    def rank(self, rows, int c0, int c1):
        cdef int nrows = len(rows)
        cdef int ncols = c1 - c0
        cdef int i, c, k, sel, rk, lp, lf, v, tmp
        if nrows == 0 or ncols <= 0:
            return 0
        cdef int *M = <int *>malloc(sizeof(int) * nrows * ncols)
        try:
            for i in range(nrows):
                r = rows[i]
                for c in range(ncols):
                    M[i * ncols + c] = r[c0 + c]
            rk = 0
            for c in range(ncols):
                sel = -1
                for i in range(rk, nrows):
                    if M[i * ncols + c]:
                        sel = i
                        break
                if sel < 0:
                    continue
                if sel != rk:
                    for k in range(ncols):
                        tmp = M[rk * ncols + k]
                        M[rk * ncols + k] = M[sel * ncols + k]
                        M[sel * ncols + k] = tmp
                lp = self.log_t[M[rk * ncols + c]]
                for i in range(rk + 1, nrows):
                    v = M[i * ncols + c]
                    if v:
                        lf = (self.log_t[v] - lp + self.q1) % self.q1
                        for k in range(c, ncols):
                            if M[rk * ncols + k]:
                                M[i * ncols + k] = self._sub(
                                    M[i * ncols + k],
                                    self.exp_t[lf + self.log_t[M[rk * ncols + k]]])
                rk += 1
                if rk == nrows:
                    break
            return rk
        finally:
            free(M)

    def eval_many(self, f, xs):
        cdef int nf = len(f)
        cdef int k, x, lx, acc
        cdef int *fc = <int *>malloc(sizeof(int) * (nf + 1))
        try:
            for k in range(nf):
                fc[k] = f[k]
            out = []
            for xo in xs:
                x = xo
                if x == 0:
                    out.append(fc[0] if nf else 0)
                    continue
                lx = self.log_t[x]
                acc = 0
                for k in range(nf - 1, -1, -1):
                    if acc:
                        acc = self.exp_t[self.log_t[acc] + lx]
                    acc = self._add(acc, fc[k])
                out.append(acc)
            return out
        finally:
            free(fc)

    def feng_tzeng(self, rows, int start, int end):
        cdef int nseq = len(rows)
        cdef int N = end - start
        cdef int width = 0
        cdef int n, h, i, d, pos, lim, shift, lc, need, L, newL, clen, nlen, tmp
        cdef int cap = N + 2
        if nseq:
            width = len(rows[0])
        cdef int *S = <int *>malloc(sizeof(int) * (nseq * width + 1))
        cdef int *C = <int *>malloc(sizeof(int) * (cap + 1))
        cdef int *T = <int *>malloc(sizeof(int) * (cap + 1))
        # per-row auxiliaries
        cdef int *AB = <int *>malloc(sizeof(int) * (nseq * (cap + 1) + 1))
        cdef int *Alen = <int *>malloc(sizeof(int) * (nseq + 1))
        cdef int *Ald = <int *>malloc(sizeof(int) * (nseq + 1))
        cdef int *An = <int *>malloc(sizeof(int) * (nseq + 1))
        cdef int *AL = <int *>malloc(sizeof(int) * (nseq + 1))
        cdef int *Bp
        cdef int Blen, ldB, nB, LB
        cdef int one = 1
        try:
            for h in range(nseq):
                r = rows[h]
                for i in range(width):
                    S[h * width + i] = r[i]
                Alen[h] = 0
            C[0] = 1
            clen = 1
            L = 0
            for n in range(N):
                pos = start + n
                for h in range(nseq):
                    d = 0
                    lim = clen - 1
                    if L < lim:
                        lim = L
                    if n < lim:
                        lim = n
                    for i in range(lim + 1):
                        if C[i] and S[h * width + pos - i]:
                            d = self._add(d, self.exp_t[self.log_t[C[i]] + self.log_t[S[h * width + pos - i]]])
                    if d == 0:
                        continue
                    if Alen[h] == 0:
                        Bp = &one
                        Blen = 1
                        ldB = 0
                        nB = -1
                        LB = 0
                    else:
                        Bp = &AB[h * (cap + 1)]
                        Blen = Alen[h]
                        ldB = Ald[h]
                        nB = An[h]
                        LB = AL[h]
                    shift = n - nB
                    lc = (self.log_t[d] - ldB + self.q1) % self.q1
                    need = shift + Blen
                    nlen = clen if clen > need else need
                    for i in range(nlen):
                        T[i] = C[i] if i < clen else 0
                    for i in range(Blen):
                        if Bp[i]:
                            T[i + shift] = self._sub(T[i + shift], self.exp_t[lc + self.log_t[Bp[i]]])
                    newL = L if L > shift + LB else shift + LB
                    if n - L > nB - LB:
                        for i in range(clen):
                            AB[h * (cap + 1) + i] = C[i]
                        Alen[h] = clen
                        Ald[h] = self.log_t[d]
                        An[h] = n
                        AL[h] = L
                    for i in range(nlen):
                        C[i] = T[i]
                    clen = nlen
                    L = newL
            while clen > 1 and C[clen - 1] == 0:
                clen -= 1
            return L, [C[i] for i in range(clen)]
        finally:
            free(S); free(C); free(T); free(AB)
            free(Alen); free(Ald); free(An); free(AL)

    def exact_recurrence(self, rows, int start, int end, int L):
        cdef int i, j, c, k, sel, rk, neq, ncol, linv, lf, v, tmp
        if L == 0:
            for r in rows:
                for j in range(start, end):
                    if r[j]:
                        return None
            return [1]
        ncol = L + 1
        neq = 0
        for r in rows:
            if end - start - L > 0:
                neq += end - start - L
        if neq == 0:
            return [1]
        cdef int *E = <int *>malloc(sizeof(int) * neq * ncol)
        cdef int *piv = <int *>malloc(sizeof(int) * (L + 1))
        try:
            k = 0
            for r in rows:
                for j in range(start + L, end):
                    for i in range(1, L + 1):
                        E[k * ncol + i - 1] = r[j - i]
                    E[k * ncol + L] = self._neg(r[j])
                    k += 1
            rk = 0
            for c in range(L):
                sel = -1
                for i in range(rk, neq):
                    if E[i * ncol + c]:
                        sel = i
                        break
                if sel < 0:
                    continue
                if sel != rk:
                    for k in range(ncol):
                        tmp = E[rk * ncol + k]
                        E[rk * ncol + k] = E[sel * ncol + k]
                        E[sel * ncol + k] = tmp
                linv = (self.q1 - self.log_t[E[rk * ncol + c]]) % self.q1
                for k in range(ncol):
                    v = E[rk * ncol + k]
                    if v:
                        E[rk * ncol + k] = self.exp_t[linv + self.log_t[v]]
                for i in range(neq):
                    if i != rk and E[i * ncol + c]:
                        lf = self.log_t[E[i * ncol + c]]
                        for k in range(ncol):
                            v = E[rk * ncol + k]
                            if v:
                                E[i * ncol + k] = self._sub(E[i * ncol + k], self.exp_t[lf + self.log_t[v]])
                piv[rk] = c
                rk += 1
            for i in range(rk, neq):
                if E[i * ncol + L]:
                    return None
            lam = [1] + [0] * L
            for i in range(rk):
                lam[piv[i] + 1] = E[i * ncol + L]
            while len(lam) > 1 and lam[len(lam) - 1] == 0:
                lam.pop()
            return lam
        finally:
            free(E)
            free(piv)
