"""Closed-form discriminant of a pure field."""

from dataclasses import dataclass
from math import gcd, prod

from .basis import truncated_r


@dataclass(frozen=True)
class DiscriminantFactorization:
    sign: int
    exponents: dict  # prime -> exponent >= 0, primes dividing n or a

    @property
    def value(self):
        return self.sign * prod(p**e for p, e in self.exponents.items())

    def factors(self):
        """Primes with positive exponent, increasing."""
        return {p: e for p, e in sorted(self.exponents.items()) if e}


def d_K_formula(field):
    n, a = field.n, field.a
    sign = -1 if ((n - 1) * (n - 2) // 2) % 2 else 1
    if a < 0 and (n - 1) % 2:
        sign = -sign
    exps = {}
    for p, s in field.n_fact.factors:
        d = truncated_r(a, p, s)
        if d > 0:
            n_p = n // p**s
            exps[p] = n * s - 2 * n_p * sum(p ** (s - j) for j in range(1, d + 1))
        else:
            exps[p] = n * s
    for q, t in field.a_fact.factors:
        exps[q] = exps.get(q, 0) + n - gcd(t, n)
    return DiscriminantFactorization(sign, dict(sorted(exps.items())))
