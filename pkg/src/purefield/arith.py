"""Integer utilities: factorization, valuations, squarefree parts, Bezout."""

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd, isqrt, prod
import random

from .errors import DomainError, HypothesisViolation, NotInvertibleError

TRIAL_BOUND = 10**6

# Deterministic Miller-Rabin witnesses, valid for all n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


@lru_cache(maxsize=1)
def _small_primes():
    sieve = bytearray([1]) * (TRIAL_BOUND + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, isqrt(TRIAL_BOUND) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytearray(len(range(i * i, TRIAL_BOUND + 1, i)))
    return [i for i in range(2, 1000) if sieve[i]], sieve


def is_prime(m):
    if m < 2:
        return False
    for p in _MR_BASES:
        if m % p == 0:
            return m == p
    d, r = m - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for b in _MR_BASES:
        x = pow(b, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(r - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def _pollard_rho(m):
    # Brent's variant; seeded so repeated runs agree.
    if m % 2 == 0:
        return 2
    rng = random.Random(m)
    while True:
        y, c, step = rng.randrange(1, m), rng.randrange(1, m), 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % m
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(step, r - k)):
                    y = (y * y + c) % m
                    q = q * abs(x - y) % m
                g = gcd(q, m)
                k += step
            r *= 2
        if g == m:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % m
                g = gcd(abs(x - ys), m)
        if g != m:
            return g


def _split(m, out):
    if m == 1:
        return
    if is_prime(m):
        out[m] = out.get(m, 0) + 1
        return
    d = _pollard_rho(m)
    _split(d, out)
    _split(m // d, out)


@dataclass(frozen=True)
class Factorization:
    sign: int
    factors: tuple  # ((prime, exponent), ...) with primes increasing

    def value(self):
        return self.sign * prod(p**e for p, e in self.factors)

    def primes(self):
        return [p for p, _ in self.factors]

    def as_dict(self):
        return dict(self.factors)


def factorize(m):
    """Factor a nonzero integer: trial division below 10**6, then Pollard rho."""
    if m == 0:
        raise DomainError("cannot factor 0")
    sign = -1 if m < 0 else 1
    m = abs(m)
    found = {}
    if m < 1000 * 1000:
        # cheap path for desk-sized inputs
        p = 2
        while p * p <= m:
            while m % p == 0:
                found[p] = found.get(p, 0) + 1
                m //= p
            p += 1 if p == 2 else 2
        if m > 1:
            found[m] = found.get(m, 0) + 1
        return Factorization(sign, tuple(sorted(found.items())))

    primes, sieve = _small_primes()
    for p in primes:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            found[p] = e
    # remaining trial division by odd candidates checked against the sieve
    p = 1001
    limit = min(TRIAL_BOUND, isqrt(m))
    while p <= limit and m > 1:
        if sieve[p] and m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            found[p] = e
            limit = min(TRIAL_BOUND, isqrt(m))
        p += 2
    if m > 1:
        if m <= TRIAL_BOUND**2:
            found[m] = found.get(m, 0) + 1
        else:
            rest = {}
            _split(m, rest)
            for q, e in rest.items():
                found[q] = found.get(q, 0) + e
    return Factorization(sign, tuple(sorted(found.items())))


def p_adic_valuation(p, m):
    if m == 0:
        raise DomainError("valuation of 0 is infinite")
    if p < 2:
        raise DomainError(f"{p} is not prime")
    e = 0
    while m % p == 0:
        m //= p
        e += 1
    return e


@dataclass(frozen=True)
class SquarefreeDecomposition:
    """|a| = prod a_j**j with a_j squarefree and pairwise coprime."""

    sign: int
    parts: dict = field(default_factory=dict)  # j -> a_j, only entries with a_j > 1

    def part(self, j):
        return self.parts.get(j, 1)

    def value(self):
        return self.sign * prod(aj**j for j, aj in self.parts.items())


def squarefree_decompose(a, n, fact=None):
    """Group the primes of |a| by exact exponent.

    ``fact`` may pass an existing factorization of ``a`` to avoid refactoring.
    """
    if a == 0:
        raise DomainError("a must be nonzero")
    fact = fact or factorize(a)
    parts = {}
    for q, t in fact.factors:
        if t >= n:
            raise HypothesisViolation(
                "nth-power", f"|a| is not {n}-th power free: {q}^{t} divides a")
        parts[t] = parts.get(t, 1) * q
    return SquarefreeDecomposition(-1 if a < 0 else 1, dict(sorted(parts.items())))


def floor_sum(t, n):
    """sum(floor(t*m/n) for m in 1..n-1), in closed form."""
    return ((n - 1) * (t - 1) + gcd(t, n) - 1) // 2


def _egcd(x, y):
    # returns (g, s, t) with s*x + t*y = g >= 0
    old_r, r = x, y
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def bezout(values):
    """gcd of ``values`` with coefficients from a left fold of extended Euclid."""
    values = list(values)
    if not values or all(v == 0 for v in values):
        raise DomainError("bezout needs at least one nonzero value")
    g = abs(values[0])
    coeffs = [-1 if values[0] < 0 else 1]
    for v in values[1:]:
        g, s, t = _egcd(g, v)
        coeffs = [c * s for c in coeffs] + [t]
    return g, tuple(coeffs)


def mod_inverse(x, m):
    if m < 2:
        raise DomainError(f"modulus must be >= 2, got {m}")
    g, s, _ = _egcd(x % m, m)
    if g != 1:
        raise NotInvertibleError(f"{x} is not invertible modulo {m}")
    return s % m


def symmetric_residue(x, m):
    """Representative of x mod m in (-m/2, m/2]."""
    x %= m
    return x - m if 2 * x > m else x


def integer_root(x, k):
    """Exact k-th root of x >= 0 if x is a perfect k-th power, else None."""
    if x < 0:
        raise DomainError("negative input")
    if x < 2:
        return x
    r = round(x ** (1.0 / k)) if x.bit_length() < 1000 else None
    if r is None:
        # Newton iteration in integers
        r = 1 << ((x.bit_length() + k - 1) // k)
        while True:
            nr = ((k - 1) * r + x // r ** (k - 1)) // k
            if nr >= r:
                break
            r = nr
    for c in (r - 1, r, r + 1):
        if c >= 0 and c**k == x:
            return c
    return None


def is_squarefree(m):
    return m != 0 and all(e == 1 for _, e in factorize(m).factors)
