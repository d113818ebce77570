"""Finite fields GF(p^w), dense polynomials and small dense matrices.

Field elements are plain ints in ``range(q)``.  For extension fields the int
packs the coefficients of the residue polynomial base p, lowest degree in the
least significant digit.  Polynomials are coefficient lists, lowest degree
first, trimmed so that the zero polynomial is ``[]``.  Matrices are lists of
row lists.
"""

from functools import lru_cache


class FieldError(ArithmeticError):
    pass


def _factor_prime_power(q):
    if q < 2:
        raise ValueError("field order must be a prime power >= 2")
    p = 2
    while p * p <= q and q % p:
        p += 1
    if q % p:
        p = q
    w, r = 0, q
    while r % p == 0:
        r //= p
        w += 1
    if r != 1:
        raise ValueError("%d is not a prime power" % q)
    return p, w


def _is_prime(p):
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def _prime_factors(n):
    out = []
    i = 2
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            while n % i == 0:
                n //= i
        i += 1
    if n > 1:
        out.append(n)
    return out


def _modulus_period(p, modulus):
    """Multiplicative order of x modulo a monic polynomial over GF(p), or 0
    if x is not invertible or its powers do not reach 1 within p^w - 1 steps."""
    w = len(modulus) - 1
    if modulus[0] == 0:
        return 0
    cur = [1] + [0] * (w - 1)
    limit = p ** w - 1
    for step in range(1, limit + 1):
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(w):
                cur[i] = (cur[i] - top * modulus[i]) % p
        if cur[0] == 1 and not any(cur[1:]):
            return step
    return 0


@lru_cache(maxsize=None)
def least_primitive_modulus(p, w):
    """Least monic primitive polynomial of degree w over GF(p), ordering
    candidates by their base-p integer encoding."""
    q = p ** w
    for code in range(q, 2 * q):
        coeffs = []
        c = code
        for _ in range(w + 1):
            coeffs.append(c % p)
            c //= p
        if _modulus_period(p, coeffs) == q - 1:
            return tuple(coeffs)
    raise FieldError("no primitive polynomial found")


class GF:
    """The finite field with q = p^w elements."""

    def __init__(self, p, w=1, modulus=None):
        if not _is_prime(p):
            raise ValueError("characteristic must be prime")
        if w < 1:
            raise ValueError("extension degree must be >= 1")
        self.p = p
        self.w = w
        self.q = q = p ** w
        if q > 1 << 16:
            raise ValueError("fields larger than 2^16 are not supported")
        if w == 1:
            self.modulus = (0, 1) if modulus is None else tuple(modulus)
        elif modulus is None:
            self.modulus = least_primitive_modulus(p, w)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != w + 1 or modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree %d" % w)
            self.modulus = modulus
        if p == 2:
            self._addmode = 0
        elif w == 1:
            self._addmode = 1
        else:
            self._addmode = 2
        self._build_tables()

    # -- construction -----------------------------------------------------

    def _times_x(self, a):
        # multiply the packed residue a by x modulo the modulus
        p, w = self.p, self.w
        digits = self.to_coeffs(a)
        top = digits[-1]
        digits = [0] + digits[:-1]
        if top:
            for i in range(w):
                digits[i] = (digits[i] - top * self.modulus[i]) % p
        return self.from_coeffs(digits)

    def _slow_mul(self, a, b):
        acc = 0
        for d in reversed(self.to_coeffs(b)):
            acc = self._times_x(acc)
            for _ in range(d):
                acc = self._add_raw(acc, a)
        return acc

    def _build_tables(self):
        q = self.q
        if self.w == 1:
            g = self._find_prime_generator()
            step = lambda a: a * g % q
        else:
            if _modulus_period(self.p, list(self.modulus)) == q - 1:
                g = self.p  # residue of x
                step = self._times_x
            else:
                g = self._find_extension_generator()
                step = lambda a: self._slow_mul(a, g)
        exp = [0] * (2 * (q - 1))
        log = [-1] * q
        a = 1
        for i in range(q - 1):
            if log[a] != -1:
                raise FieldError("modulus is not irreducible")
            exp[i] = a
            log[a] = i
            a = step(a)
        if a != 1:
            raise FieldError("modulus is not irreducible")
        for i in range(q - 1, 2 * (q - 1)):
            exp[i] = exp[i - (q - 1)]
        self.exp = exp
        self.log = log
        self.generator = g

    def _find_prime_generator(self):
        q = self.q
        if q == 2:
            return 1
        order = q - 1
        primes = _prime_factors(order)
        for g in range(2, q):
            if all(pow(g, order // r, q) != 1 for r in primes):
                return g
        raise FieldError("no generator")

    def _find_extension_generator(self):
        order = self.q - 1
        primes = _prime_factors(order)
        for g in range(2, self.q):
            if all(self._slow_pow(g, order // r) != 1 for r in primes):
                if self._slow_pow(g, order) != 1:
                    raise FieldError("modulus is not irreducible")
                return g
        raise FieldError("modulus is not irreducible")

    def _slow_pow(self, a, e):
        r = 1
        while e:
            if e & 1:
                r = self._slow_mul(r, a)
            a = self._slow_mul(a, a)
            e >>= 1
        return r

    # -- element coding ---------------------------------------------------

    def to_coeffs(self, a):
        p = self.p
        out = []
        for _ in range(self.w):
            out.append(a % p)
            a //= p
        return out

    def from_coeffs(self, coeffs):
        v = 0
        for c in reversed(coeffs):
            v = v * self.p + c
        return v

    # -- arithmetic -------------------------------------------------------

    def _add_raw(self, a, b):
        if self._addmode == 0:
            return a ^ b
        p = self.p
        if self._addmode == 1:
            return (a + b) % p
        r, scale = 0, 1
        while a or b:
            r += ((a % p + b % p) % p) * scale
            a //= p
            b //= p
            scale *= p
        return r

    add = _add_raw

    def neg(self, a):
        if self._addmode == 0:
            return a
        p = self.p
        if self._addmode == 1:
            return (p - a) % p
        r, scale = 0, 1
        while a:
            r += ((p - a % p) % p) * scale
            a //= p
            scale *= p
        return r

    def sub(self, a, b):
        if self._addmode == 0:
            return a ^ b
        if self._addmode == 1:
            return (a - b) % self.p
        return self._add_raw(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self.exp[self.log[a] + self.log[b]]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in GF(%d)" % self.q)
        return self.exp[(self.q - 1 - self.log[a]) % (self.q - 1)]

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.q)
        if a == 0:
            return 0
        return self.exp[(self.log[a] - self.log[b]) % (self.q - 1)]

    def pow(self, a, e):
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("zero to a negative power")
            return 1 if e == 0 else 0
        return self.exp[(self.log[a] * e) % (self.q - 1)]

    def scalar(self, n):
        """Image of the integer n in the prime subfield."""
        return n % self.p

    def elements(self):
        return range(self.q)

    def nonzero(self):
        return range(1, self.q)

    def primitive_power(self, i):
        return self.exp[i % (self.q - 1)]

    # -- identity ---------------------------------------------------------

    def to_dict(self):
        return {"p": self.p, "w": self.w, "modulus": list(self.modulus)}

    @classmethod
    def from_dict(cls, d):
        return field(d["p"] ** d["w"], tuple(d["modulus"]) if d["w"] > 1 else None)

    def _key(self):
        return (self.p, self.w, self.modulus)

    def __eq__(self, other):
        return isinstance(other, GF) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return "GF(%d)" % self.q


@lru_cache(maxsize=None)
def field(q, modulus=None):
    """Cached field of order q (default modulus when none is given)."""
    p, w = _factor_prime_power(q)
    return GF(p, w, modulus)


# ---------------------------------------------------------------------------
# univariate polynomials on coefficient lists


def trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def degree(a):
    """Degree of a trimmed or untrimmed list; -1 for zero."""
    for i in range(len(a) - 1, -1, -1):
        if a[i]:
            return i
    return -1


def poly_add(F, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = F.add(out[i], c)
    return trim(out)


def poly_sub(F, a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        out.append(F.sub(x, y))
    return trim(out)


def poly_scale(F, a, c):
    return trim([F.mul(x, c) for x in a])


def poly_mul(F, a, b, trunc=None):
    """Product of a and b, truncated mod x^trunc when given."""
    if not a or not b:
        return []
    n = len(a) + len(b) - 1
    if trunc is not None:
        n = min(n, trunc)
    out = [0] * n
    mul, add = F.mul, F.add
    for i, x in enumerate(a):
        if x == 0 or i >= n:
            continue
        for j in range(min(len(b), n - i)):
            if b[j]:
                out[i + j] = add(out[i + j], mul(x, b[j]))
    return trim(out)


def poly_divmod(F, a, b):
    b = trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = trim(a)
    db = len(b) - 1
    inv_lead = F.inv(b[-1])
    if len(r) <= db:
        return [], r
    quo = [0] * (len(r) - db)
    while len(r) - 1 >= db and r:
        shift = len(r) - 1 - db
        c = F.mul(r[-1], inv_lead)
        quo[shift] = c
        for i, x in enumerate(b):
            r[i + shift] = F.sub(r[i + shift], F.mul(c, x))
        r = trim(r)
    return trim(quo), r


def poly_monic(F, a):
    a = trim(a)
    if not a:
        return []
    return poly_scale(F, a, F.inv(a[-1]))


def poly_gcd(F, a, b):
    """Monic greatest common divisor; gcd(0, 0) = 0."""
    a, b = trim(a), trim(b)
    while b:
        a, b = b, poly_divmod(F, a, b)[1]
    return poly_monic(F, a)


def poly_eval(F, a, x):
    acc = 0
    mul, add = F.mul, F.add
    for c in reversed(a):
        acc = add(mul(acc, x), c)
    return acc


def poly_derivative(F, a):
    return trim([F.mul(F.scalar(i), a[i]) for i in range(1, len(a))])


def poly_from_roots_inverse(F, points):
    """prod (1 - xi x) over the given points xi."""
    out = [1]
    for xi in points:
        out = poly_mul(F, out, [1, F.neg(xi)])
    return out


def t_poly(F, m, xi):
    """Coefficients of sum_{i<m} xi^i y^i (not trimmed: length m unless xi=0)."""
    if m < 1:
        raise ValueError("m must be positive")
    out = [1]
    cur = 1
    for _ in range(1, m):
        cur = F.mul(cur, xi)
        out.append(cur)
    return trim(out)


class Poly:
    """Immutable polynomial with operator sugar over the list helpers."""

    __slots__ = ("field", "coeffs")

    def __init__(self, F, coeffs=()):
        self.field = F
        self.coeffs = tuple(trim(int(c) for c in coeffs))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __add__(self, o):
        return Poly(self.field, poly_add(self.field, self.coeffs, o.coeffs))

    def __sub__(self, o):
        return Poly(self.field, poly_sub(self.field, self.coeffs, o.coeffs))

    def __mul__(self, o):
        if isinstance(o, int):
            return Poly(self.field, poly_scale(self.field, self.coeffs, o))
        return Poly(self.field, poly_mul(self.field, self.coeffs, o.coeffs))

    def __divmod__(self, o):
        qq, r = poly_divmod(self.field, self.coeffs, o.coeffs)
        return Poly(self.field, qq), Poly(self.field, r)

    def __floordiv__(self, o):
        return divmod(self, o)[0]

    def __mod__(self, o):
        return divmod(self, o)[1]

    def __call__(self, x):
        return poly_eval(self.field, self.coeffs, x)

    def __eq__(self, o):
        return isinstance(o, Poly) and self.field == o.field and self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return "Poly(%r, %r)" % (self.field, list(self.coeffs))

    def truncate(self, t):
        return Poly(self.field, self.coeffs[:t])

    def mul_trunc(self, o, t):
        return Poly(self.field, poly_mul(self.field, self.coeffs, o.coeffs, t))

    def derivative(self):
        return Poly(self.field, poly_derivative(self.field, self.coeffs))

    def monic(self):
        return Poly(self.field, poly_monic(self.field, self.coeffs))

    def gcd(self, o):
        return Poly(self.field, poly_gcd(self.field, self.coeffs, o.coeffs))


# ---------------------------------------------------------------------------
# bivariate polynomials: list of rows, row h = coefficient of y^h (a poly in x)


def bi_truncated_mul(F, a, f, x_bound=None, y_bound=None, var="x"):
    """Multiply the bivariate array a (rows: y powers, columns: x powers) by
    the univariate f in x or y, then reduce mod x^x_bound and y^y_bound.

    The result is a dense array with len(a) rows (or y_bound rows) and
    x_bound columns (or the natural width)."""
    rows = len(a)
    width = max((len(r) for r in a), default=0)
    if var == "x":
        out_w = x_bound if x_bound is not None else width + max(len(f) - 1, 0)
        out = []
        for r in a:
            prod = poly_mul(F, trim(r), f, out_w)
            out.append(prod + [0] * (out_w - len(prod)))
        if y_bound is not None:
            out = out[:y_bound] + [[0] * out_w for _ in range(y_bound - len(out))]
        return out
    if var != "y":
        raise ValueError("var must be 'x' or 'y'")
    out_h = y_bound if y_bound is not None else rows + max(len(f) - 1, 0)
    out_w = width if x_bound is None else x_bound
    out = [[0] * out_w for _ in range(out_h)]
    for h, r in enumerate(a):
        for i, c in enumerate(f):
            if c == 0 or h + i >= out_h:
                continue
            tgt = out[h + i]
            for j in range(min(len(r), out_w)):
                if r[j]:
                    tgt[j] = F.add(tgt[j], F.mul(c, r[j]))
    return out


def bi_eval_x(F, a, x):
    """Evaluate each row at x: returns the y-polynomial as a coefficient list."""
    return [poly_eval(F, r, x) for r in a]


class BiPoly:
    """Bivariate polynomial in F_{m,n}(y, x) backed by a coefficient array."""

    __slots__ = ("field", "rows")

    def __init__(self, F, rows):
        self.field = F
        self.rows = tuple(tuple(int(c) for c in r) for r in rows)

    @property
    def shape(self):
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    def mul_x(self, f, x_bound=None, y_bound=None):
        return BiPoly(self.field, bi_truncated_mul(self.field, self.rows, list(f), x_bound, y_bound, "x"))

    def mul_y(self, f, x_bound=None, y_bound=None):
        return BiPoly(self.field, bi_truncated_mul(self.field, self.rows, list(f), x_bound, y_bound, "y"))

    def eval_x(self, x):
        return bi_eval_x(self.field, self.rows, x)

    def __eq__(self, o):
        return isinstance(o, BiPoly) and self.field == o.field and self.rows == o.rows

    def __hash__(self):
        return hash((self.field, self.rows))

    def __repr__(self):
        return "BiPoly(%r, %r)" % (self.field, [list(r) for r in self.rows])


# ---------------------------------------------------------------------------
# matrices


def zeros(r, c):
    return [[0] * c for _ in range(r)]


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(M, ncols=None):
    if not M:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*M)]


def matmul(F, A, B):
    if not A:
        return []
    inner = len(B)
    cols = len(B[0]) if B else 0
    out = []
    mul, add = F.mul, F.add
    for row in A:
        acc = [0] * cols
        for t in range(inner):
            a = row[t]
            if a == 0:
                continue
            brow = B[t]
            for j in range(cols):
                if brow[j]:
                    acc[j] = add(acc[j], mul(a, brow[j]))
        out.append(acc)
    return out


def row_reduce(F, M, ncols=None, track=True):
    """Reduced row echelon form.  Returns (R, pivots, T) with T·M = R and T
    invertible, pivots the pivot column of each nonzero row of R.  With
    track=False, T is None."""
    rows = len(M)
    cols = ncols if ncols is not None else (len(M[0]) if M else 0)
    R = [list(r) for r in M]
    T = identity(rows) if track else None
    pivots = []
    pr = 0
    for c in range(cols):
        if pr == rows:
            break
        sel = None
        for i in range(pr, rows):
            if R[i][c]:
                sel = i
                break
        if sel is None:
            continue
        R[pr], R[sel] = R[sel], R[pr]
        inv = F.inv(R[pr][c])
        R[pr] = [F.mul(inv, v) for v in R[pr]]
        if track:
            T[pr], T[sel] = T[sel], T[pr]
            T[pr] = [F.mul(inv, v) for v in T[pr]]
        for i in range(rows):
            if i != pr and R[i][c]:
                f = R[i][c]
                R[i] = [F.sub(x, F.mul(f, y)) if y else x for x, y in zip(R[i], R[pr])]
                if track:
                    T[i] = [F.sub(x, F.mul(f, y)) if y else x for x, y in zip(T[i], T[pr])]
        pivots.append(c)
        pr += 1
    return R, pivots, T


def rank(F, M):
    return len(row_reduce(F, M, track=False)[1])


def left_kernel(F, M):
    """Basis of {a : a·M = 0}, one vector per free row index of M^T, sorted
    by the index of the last nonzero coordinate (strictly increasing)."""
    rows = len(M)
    if rows == 0:
        return []
    Mt = transpose(M) if M and M[0] else []
    R, pivots, _ = row_reduce(F, Mt, rows, track=False) if Mt else ([], [], None)
    free = [c for c in range(rows) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * rows
        v[f] = 1
        for i, pc in enumerate(pivots):
            if R[i][f]:
                v[pc] = F.neg(R[i][f])
        basis.append(v)
    return basis


def inverse(F, M):
    n = len(M)
    R, pivots, T = row_reduce(F, M, n)
    if len(pivots) != n:
        raise FieldError("matrix is singular")
    return T


def solve_left(F, A, B):
    """Some X with X·A = B (rows of B in the row space of A), or None."""
    # X A = B  <=>  A^T X^T = B^T
    At = transpose(A)
    k = len(A)
    out = []
    aug_cols = k
    R, pivots, T = row_reduce(F, At, aug_cols)
    for b in B:
        rhs = [sum_dot(F, T[i], b) for i in range(len(T))]
        for i in range(len(pivots), len(rhs)):
            if rhs[i]:
                return None
        x = [0] * k
        for i, pc in enumerate(pivots):
            x[pc] = rhs[i]
        out.append(x)
    return out


def sum_dot(F, u, v):
    acc = 0
    for a, b in zip(u, v):
        if a and b:
            acc = F.add(acc, F.mul(a, b))
    return acc
