"""Exact arithmetic in Q(theta) with theta**n = a, plus the verification tools.

Elements are stored as an integer coefficient vector over a positive common
denominator.  Everything here is exact; there is no floating point anywhere.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd, lcm, prod

from .arith import Factorization, SquarefreeDecomposition, floor_sum
from .errors import DomainError, RankError


@dataclass(frozen=True, eq=False)
class PureField:
    """The field Q(theta), theta**n = a.  Build it with ``basis.validate_field``."""

    n: int
    a: int
    n_fact: Factorization
    a_fact: Factorization
    sq_decomp: SquarefreeDecomposition
    r: dict  # p -> v_p(a**(p-1) - 1) - 1, for primes p | n with p not dividing a

    def __eq__(self, other):
        return isinstance(other, PureField) and (self.n, self.a) == (other.n, other.a)

    def __hash__(self):
        return hash((self.n, self.a))

    def __repr__(self):
        return f"PureField(n={self.n}, a={self.a})"

    @property
    def primes(self):
        return self.n_fact.primes()

    def s(self, p):
        return self.n_fact.as_dict()[p]

    def r_of(self, p):
        """r for any prime p | n; -1 when p divides a."""
        return self.r.get(p, -1)

    def element(self, num, den=1):
        return FieldElement.make(self, num, den)

    def theta_power(self, m):
        num = [0] * self.n
        num[m] = 1
        return FieldElement(1, tuple(num), self)

    def power_basis(self):
        return [self.theta_power(m) for m in range(self.n)]


def _poly_mulmod(u, v, n, a):
    out = [0] * n
    for i, ci in enumerate(u):
        if not ci:
            continue
        for j, cj in enumerate(v):
            if cj:
                k = i + j
                if k >= n:
                    out[k - n] += a * ci * cj
                else:
                    out[k] += ci * cj
    return out


@dataclass(frozen=True)
class FieldElement:
    """(1/den) * sum(num[i] * theta**i), in lowest terms."""

    den: int
    num: tuple
    field: PureField

    @classmethod
    def make(cls, field, num, den=1):
        num = [int(c) for c in num]
        if len(num) != field.n:
            raise DomainError(f"expected {field.n} coefficients, got {len(num)}")
        if den == 0:
            raise DomainError("zero denominator")
        if den < 0:
            den, num = -den, [-c for c in num]
        g = gcd(den, *num)
        return cls(den // g, tuple(c // g for c in num), field)

    @classmethod
    def from_fractions(cls, field, coords):
        den = lcm(*(Fraction(c).denominator for c in coords))
        return cls.make(field, [Fraction(c) * den for c in coords], den)

    def coords(self):
        return [Fraction(c, self.den) for c in self.num]

    def _check(self, other):
        if self.field != other.field:
            raise DomainError(f"elements of different fields: {self.field} vs {other.field}")

    def __add__(self, other):
        self._check(other)
        d = lcm(self.den, other.den)
        s, t = d // self.den, d // other.den
        return FieldElement.make(self.field, [s * x + t * y for x, y in zip(self.num, other.num)], d)

    def __neg__(self):
        return FieldElement(self.den, tuple(-c for c in self.num), self.field)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return FieldElement.make(self.field, [c * other.numerator for c in self.num],
                                     self.den * other.denominator)
        return element_mul(self, other)

    __rmul__ = __mul__

    def scale_den(self, q):
        return FieldElement.make(self.field, self.num, self.den * q)

    def is_zero(self):
        return not any(self.num)


def element_mul(x, y):
    x._check(y)
    f = x.field
    return FieldElement.make(f, _poly_mulmod(x.num, y.num, f.n, f.a), x.den * y.den)


def _int_multiplication_matrix(num, n, a):
    # column j holds the coordinates of num * theta**j
    m = [[0] * n for _ in range(n)]
    for i, c in enumerate(num):
        if not c:
            continue
        for j in range(n):
            k = i + j
            if k >= n:
                m[k - n][j] = a * c
            else:
                m[k][j] = c
    return m


def multiplication_matrix(x):
    n = x.field.n
    m = _int_multiplication_matrix(x.num, n, x.field.a)
    return [[Fraction(v, x.den) for v in row] for row in m]


def trace(x):
    m = multiplication_matrix(x)
    return sum(m[i][i] for i in range(len(m)))


def _int_trace(num, n):
    # diagonal of the regular representation: entry j is the theta**j
    # coordinate of num * theta**j, which only the constant term reaches
    return n * num[0]


def _newton_charpoly(num, n, a, modulus=None):
    """Characteristic polynomial of multiplication by ``num`` on Z[y]/(y**n - a).

    Integer coefficients, leading first.  Power sums come from exact
    traces of successive powers; the Newton-Girard divisions are exact.

    With ``modulus`` = L (a multiple of n!), everything is carried mod L and
    coefficient k is returned mod L * k! / n!.  Each division by k then
    stays exact because k divides the current modulus.
    """
    power_sums = []
    cur = list(num)
    if modulus is not None:
        cur = [c % modulus for c in cur]
    for k in range(1, n + 1):
        power_sums.append(_int_trace(cur, n))
        if k < n:
            cur = _poly_mulmod(cur, num, n, a)
            if modulus is not None:
                cur = [c % modulus for c in cur]
    e = [1]
    mod = modulus
    for k in range(1, n + 1):
        acc = 0
        for i in range(1, k + 1):
            term = e[k - i] * power_sums[i - 1]
            acc += term if i % 2 else -term
        if mod is not None:
            acc %= mod
            mod //= k
        q, rem = divmod(acc, k)
        assert rem == 0, "non-exact Newton step on an integral element"
        e.append(q)
    return [c if k % 2 == 0 else -c for k, c in enumerate(e)]


def _poly_pow(coeffs, g):
    out = [1]
    for _ in range(g):
        res = [0] * (len(out) + len(coeffs) - 1)
        for i, u in enumerate(out):
            for j, v in enumerate(coeffs):
                res[i + j] += u * v
        out = res
    return out


def _subfield_step(num, n):
    """Largest g | n with every nonzero coefficient at an index divisible by g."""
    g = n
    for i, c in enumerate(num):
        if c:
            g = gcd(g, i)
    return g


def _scaled_charpoly(x):
    """(integer charpoly of the numerator on the smallest pure subfield, its g)."""
    n, a = x.field.n, x.field.a
    g = _subfield_step(x.num, n)
    sub = [x.num[i] for i in range(0, n, g)]
    return _newton_charpoly(sub, n // g, a), g


def char_poly(x):
    """Monic characteristic polynomial of x over Q, coefficients leading first.

    If x lies in Q(theta**g) the polynomial is computed there and raised to
    the g-th power, which is what the regular representation on K gives.
    """
    sub, g = _scaled_charpoly(x)
    q = x.den
    scaled = [Fraction(c, q**k) for k, c in enumerate(sub)]
    if g == 1:
        return scaled
    den = lcm(*(c.denominator for c in scaled))
    # raise the cleared polynomial in integers, then divide once
    ints = [int(c * den) for c in scaled]
    powered = _poly_pow(ints, g)
    return [Fraction(c, den**g) for c in powered]


def char_poly_matrix(matrix):
    """Characteristic polynomial of a square rational matrix (Berkowitz, division free).

    Returned leading first.  Used as a second route to cross-check ``char_poly``.
    """
    n = len(matrix)
    den = lcm(*(Fraction(v).denominator for row in matrix for v in row)) if n else 1
    m = [[int(Fraction(v) * den) for v in row] for row in matrix]
    # Berkowitz on the integer matrix m; then undo the scaling
    vect = [1]
    for r in range(n):
        a_rr = m[r][r]
        row = m[r][:r]
        col = [m[i][r] for i in range(r)]
        sub = [mi[:r] for mi in m[:r]]
        # toeplitz entries: 1, -a_rr, -R C, -R A C, ...
        t = [1, -a_rr]
        cvec = col
        for _ in range(r):
            t.append(-sum(x * y for x, y in zip(row, cvec)))
            cvec = [sum(sub[i][j] * cvec[j] for j in range(r)) for i in range(r)]
        new = [0] * (r + 2)
        for i in range(r + 2):
            s = 0
            for j in range(min(i, len(vect) - 1) + 1):
                if i - j < len(t):
                    s += t[i - j] * vect[j]
            new[i] = s
        vect = new
    return [Fraction(c, den**k) for k, c in enumerate(vect)]


def is_algebraic_integer(x):
    """True iff the characteristic polynomial of x has integer coefficients.

    Only the residues of the numerator's coefficients mod den**k matter, so
    the polynomial is computed modulo den**d * d! on the smallest subfield.
    """
    if x.den == 1:
        return True
    n, a, q = x.field.n, x.field.a, x.den
    g = _subfield_step(x.num, n)
    d = n // g
    sub = [x.num[i] for i in range(0, n, g)]
    coeffs = _newton_charpoly(sub, d, a, modulus=q**d * factorial(d))
    return all(c % q**k == 0 for k, c in enumerate(coeffs))


def det_int(m):
    """Bareiss fraction-free determinant of an integer matrix."""
    m = [list(row) for row in m]
    n = len(m)
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1] if n else 1


def disc_of_elements(xs):
    """det(Tr(x_i x_j)) for n elements, as an exact Fraction."""
    xs = list(xs)
    if not xs:
        raise DomainError("need n elements")
    f = xs[0].field
    if len(xs) != f.n:
        raise DomainError(f"need exactly {f.n} elements, got {len(xs)}")
    for x in xs:
        xs[0]._check(x)
    n, a = f.n, f.a
    nums = [x.num for x in xs]
    gram = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            gram[i][j] = gram[j][i] = _int_trace(_poly_mulmod(nums[i], nums[j], n, a), n)
    return Fraction(det_int(gram), prod(x.den for x in xs) ** 2)


def power_basis_disc(n, a):
    sign = -1 if ((n - 1) * (n - 2) // 2) % 2 else 1
    return sign * n**n * a ** (n - 1)


def coordinate_det(xs):
    """Determinant of the coordinate matrix of xs in the power basis."""
    n = len(xs)
    den = lcm(*(x.den for x in xs))
    rows = [[c * (den // x.den) for c in x.num] for x in xs]
    return Fraction(det_int(rows), den**n)


def transition_determinant(field, profile):
    """Index of Z[theta] in the module spanned by the constructed basis.

    C is taken from the floor-sum closed form and each p-exponent from the
    profile; the latter is checked against n_p * sum(p**(s-j), j=1..d).
    """
    n = field.n
    c_total = 1
    for j, aj in field.sq_decomp.parts.items():
        c_total *= aj ** floor_sum(j, n)
    t = c_total
    for p in profile.S:
        exp = sum(profile.k[p])
        s, d = field.s(p), profile.d[p]
        n_p = n // p**s
        closed = n_p * sum(p ** (s - j) for j in range(1, d + 1))
        assert exp == closed, (p, exp, closed)
        t *= p**exp
    return t


def hnf(rows):
    """Row Hermite normal form: positive pivots, entries above a pivot in [0, pivot)."""
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return []
    ncols = len(rows[0])
    if any(len(r) != ncols for r in rows):
        raise DomainError("rows of unequal length")
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        while True:
            nz = [i for i in range(r, len(rows)) if rows[i][c]]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(rows[i][c]))
            rows[r], rows[piv] = rows[piv], rows[r]
            done = True
            for i in range(r + 1, len(rows)):
                if rows[i][c]:
                    q = rows[i][c] // rows[r][c]
                    rows[i] = [x - q * y for x, y in zip(rows[i], rows[r])]
                    if rows[i][c]:
                        done = False
            if done:
                break
        if r < len(rows) and rows[r][c]:
            if rows[r][c] < 0:
                rows[r] = [-x for x in rows[r]]
            pv = rows[r][c]
            for i in range(r):
                q = rows[i][c] // pv
                if q:
                    rows[i] = [x - q * y for x, y in zip(rows[i], rows[r])]
            r += 1
    return [row for row in rows if any(row)]


def rank(rows):
    return len(hnf(rows))


def _cleared_rows(xs, den):
    return [[c * (den // x.den) for c in x.num] for x in xs]


def module_span_equal(xs, ys):
    """Whether the Z-spans of xs and ys coincide (HNF on a common denominator)."""
    xs, ys = list(xs), list(ys)
    for x in xs + ys:
        xs[0]._check(x)
    den = lcm(*(x.den for x in xs + ys))
    hx, hy = hnf(_cleared_rows(xs, den)), hnf(_cleared_rows(ys, den))
    n = xs[0].field.n
    if len(hx) != len(xs) or len(hy) != len(ys) or len(xs) != n or len(ys) != n:
        raise RankError("module_span_equal needs two Q-bases of the field")
    return hx == hy
