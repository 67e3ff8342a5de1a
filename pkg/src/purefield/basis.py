"""Explicit integral bases of pure fields Q(a**(1/n)).

Pipeline per field: the denominators C_m, the per-prime exponent profile
(k, j, n/p**k), the unit adjusters (a', w), the elements delta_{p,m}, their
Bezout combination beta_m, and finally gamma_m = (theta**m + beta_m) / den_m.
"""

from dataclasses import dataclass, field as dc_field
from math import gcd, lcm, prod

from .arith import (bezout, factorize, integer_root, mod_inverse, p_adic_valuation,
                    squarefree_decompose, symmetric_residue)
from .errors import DomainError, HypothesisViolation
from .field import FieldElement, PureField, hnf


def r_value(a, p):
    """v_p(a**(p-1) - 1) - 1, or -1 when p | a."""
    if a % p == 0:
        return -1
    return p_adic_valuation(p, a ** (p - 1) - 1) - 1


def truncated_r(a, p, s):
    """min(r, s) using arithmetic mod p**(s+2) only."""
    if a % p == 0:
        return -1
    mod = p ** (s + 2)
    x = (pow(a % mod, p - 1, mod) - 1) % mod
    v = s + 1 if x == 0 else p_adic_valuation(p, x)
    return min(v - 1, s)


def _is_perfect_power(a, p):
    if a < 0:
        return p % 2 == 1 and integer_root(-a, p) is not None
    return integer_root(a, p) is not None


def validate_field(n, a):
    """Check the hypotheses on (n, a) and return the populated PureField.

    Raises HypothesisViolation with codes ``degree``, ``unit-radicand``,
    ``excluded-prime``, ``reducible`` or ``nth-power``.
    """
    if n < 2:
        raise HypothesisViolation("degree", f"degree must be >= 2, got {n}")
    if a == 0 or abs(a) == 1:
        raise HypothesisViolation("unit-radicand", f"|a| must be >= 2, got a = {a}")
    n_fact = factorize(n)
    a_fact = factorize(a)
    a_exps = a_fact.as_dict()
    for p in n_fact.primes():
        t = a_exps.get(p, 0)
        if t and t % p == 0:
            raise HypothesisViolation(
                "excluded-prime", f"v_{p}(a) = {t} not coprime to {p}")
    # Capelli: x^n - a is irreducible iff a is no p-th power for p | n and
    # a != -4 b^4 when 4 | n
    for p in n_fact.primes():
        if _is_perfect_power(a, p):
            raise HypothesisViolation(
                "reducible", f"x^{n} - ({a}) is reducible: a is a perfect {p}-th power")
    if n % 4 == 0 and a < 0 and (-a) % 4 == 0 and integer_root(-a // 4, 4) is not None:
        raise HypothesisViolation("reducible", f"x^{n} - ({a}) is reducible: a = -4 b^4")
    sq = squarefree_decompose(a, n, a_fact)
    r = {p: r_value(a, p) for p in n_fact.primes() if a % p}
    return PureField(n, a, n_fact, a_fact, sq, r)


def c_sequence(field):
    n = field.n
    parts = field.sq_decomp.parts
    return [prod(aj ** (j * m // n) for j, aj in parts.items()) for m in range(n)]


@dataclass(frozen=True)
class ExponentProfile:
    """Per prime p in S: k_m, j_m and n/p**k_m for m = 0..n-1."""

    S: tuple                       # primes p | n with r_p >= 1, increasing
    d: dict                        # p -> min(r_p, s_p)
    k: dict                        # p -> tuple of k_{p,m}
    j: dict                        # p -> tuple of j_{p,m}
    n_part: dict                   # p -> tuple of n / p**k_{p,m}

    def S_m(self, m):
        return tuple(p for p in self.S if self.k[p][m] >= 1)


def exponent_profile(field):
    n = field.n
    S = tuple(p for p in field.primes if field.r_of(p) >= 1)
    d, ks, js, ns = {}, {}, {}, {}
    for p in S:
        d[p] = min(field.r_of(p), field.s(p))
        kk, jj, nn = [], [], []
        for m in range(n):
            k = max(k for k in range(d[p] + 1) if m >= n - n // p**k)
            kk.append(k)
            nn.append(n // p**k)
            jj.append(m - (n - n // p**k))
        ks[p], js[p], ns[p] = tuple(kk), tuple(jj), tuple(nn)
    return ExponentProfile(S, d, ks, js, ns)


def canonical_a_prime(a, p, s, k):
    """a' with a * a'**(p**k) = 1 (mod p**(k+1)), from b' = a**(p-2)."""
    mod = p ** (k + 1)
    b = pow(a, p - 2, mod) if p > 2 else 1
    if k < s:
        b = pow(b, p ** (s - 1 - k), mod)
    return symmetric_residue(b, mod)


@dataclass(frozen=True)
class Adjuster:
    p: int
    m: int
    k: int
    j: int
    a_prime: int
    w: int
    u: int = 1
    z: int = 1


def unit_adjusters(field, profile, C):
    """{(p, m): Adjuster} for every m and p in S_m; u and z are filled by beta_combine."""
    out = {}
    for m in range(field.n):
        for p in profile.S_m(m):
            k = profile.k[p][m]
            ap = canonical_a_prime(field.a, p, field.s(p), k)
            pk = p**k
            w = mod_inverse(C[m] * ap ** (pk - 1), pk) if pk > 1 else 1
            out[p, m] = Adjuster(p, m, k, profile.j[p][m], ap, w)
    return out


def eta_element(field, p, k, a_prime):
    """eta_k / p**k where eta_k = sum_{j < p**k} (a' theta**(n/p**k))**j."""
    if p not in field.primes or field.a % p == 0:
        raise DomainError(f"{p} must divide n and not divide a")
    d = min(field.r_of(p), field.s(p))
    if not 1 <= k <= d:
        raise DomainError(f"k = {k} outside 1..{d}")
    n = field.n
    step = n // p**k
    num = [0] * n
    for j in range(p**k):
        num[j * step] = a_prime**j
    return FieldElement.make(field, num, p**k)


def delta_element(field, C_m, m, p, profile, a_prime, w):
    """Integer coefficient vector of delta_{p,m} (all zeros when k_{p,m} = 0)."""
    n = field.n
    num = [0] * n
    k = profile.k[p][m] if p in profile.k else 0
    if k == 0:
        return num
    j0, step = profile.j[p][m], profile.n_part[p][m]
    for r in range(p**k - 1):
        num[j0 + r * step] += w * C_m * a_prime**r
    return num


def beta_combine(field, m, deltas, profile):
    """Bezout combination sum(u_p z_p delta_p) over S_m, primes in increasing order.

    Returns (coefficients, {p: (u, z)}).
    """
    Sm = profile.S_m(m)
    if set(deltas) != set(Sm):
        raise DomainError(f"deltas given for {sorted(deltas)}, S_{m} = {list(Sm)}")
    n = field.n
    if not Sm:
        return [0] * n, {}
    zs = [prod(q ** profile.k[q][m] for q in Sm if q != p) for p in Sm]
    g, us = bezout(zs)
    assert g == 1, (m, zs)
    beta = [0] * n
    for p, u, z in zip(Sm, us, zs):
        for i, c in enumerate(deltas[p]):
            beta[i] += u * z * c
    return beta, {p: (u, z) for p, u, z in zip(Sm, us, zs)}


@dataclass(frozen=True)
class BasisElement:
    m: int
    numerator: tuple      # theta**m + beta_m, unreduced
    denominator: int      # C_m * prod p**k_{p,m}
    choices: dict = dc_field(default_factory=dict)  # p -> Adjuster

    def element(self, field):
        return FieldElement.make(field, self.numerator, self.denominator)


@dataclass(frozen=True)
class IntegralBasis:
    field: PureField
    basis: tuple          # BasisElement for m = 0..n-1
    profile: ExponentProfile
    C: tuple

    @property
    def branch(self):
        return "S-nonempty" if self.profile.S else "S-empty"

    @property
    def elements(self):
        return [b.element(self.field) for b in self.basis]

    def denominators(self):
        return [b.denominator for b in self.basis]


def integral_basis(field):
    if not isinstance(field, PureField):
        raise DomainError("integral_basis expects a PureField; use validate_field")
    n = field.n
    C = c_sequence(field)
    profile = exponent_profile(field)
    adj = unit_adjusters(field, profile, C)
    out = []
    for m in range(n):
        Sm = profile.S_m(m)
        deltas = {p: delta_element(field, C[m], m, p, profile, adj[p, m].a_prime, adj[p, m].w)
                  for p in Sm}
        beta, uz = beta_combine(field, m, deltas, profile)
        num = list(beta)
        assert num[m] == 0
        num[m] = 1
        den = C[m] * prod(p ** profile.k[p][m] for p in Sm)
        choices = {}
        for p in Sm:
            u, z = uz[p]
            a0 = adj[p, m]
            choices[p] = Adjuster(p, m, a0.k, a0.j, a0.a_prime, a0.w, u, z)
        out.append(BasisElement(m, tuple(num), den, choices))
    return IntegralBasis(field, tuple(out), profile, tuple(C))


def prime_power_basis(p, s, a):
    """Integral basis of Q(a**(1/p**s)); the general construction with a single prime."""
    return integral_basis(validate_field(p**s, a))


def compute(n, a):
    return integral_basis(validate_field(n, a))


def canonicalize(basis):
    """HNF-normalized version of a basis: list of (m, numerator, denominator).

    Rows are taken over a common denominator with coordinates in descending
    degree, so each element is theta**m plus lower terms reduced modulo the
    later pivots.
    """
    n = basis.field.n
    den = lcm(*(b.denominator for b in basis.basis))
    rows = [[c * (den // b.denominator) for c in reversed(b.numerator)] for b in basis.basis]
    out = []
    for row in hnf(rows):
        num = list(reversed(row))
        m = max(i for i, c in enumerate(num) if c)
        g = gcd(den, *num)
        out.append((m, tuple(c // g for c in num), den // g))
    assert len(out) == n
    return sorted(out)
