"""Periodicity of integral bases in a, for squarefree radicands."""

from dataclasses import dataclass

from .arith import factorize, is_squarefree
from .basis import integral_basis, validate_field
from .errors import HypothesisViolation
from .field import FieldElement, is_algebraic_integer


def period_modulus(n):
    if n < 2:
        raise HypothesisViolation("degree", f"degree must be >= 2, got {n}")
    out = n
    for p in factorize(n).primes():
        out *= p
    return out


@dataclass(frozen=True)
class PeriodClass:
    n: int
    modulus: int
    residue: int

    @classmethod
    def of(cls, n, a):
        mod = period_modulus(n)
        return cls(n, mod, a % mod)


@dataclass
class TransferReport:
    n: int
    a: int
    a_prime: int
    modulus: int
    min_rs: dict             # p -> (min(r, s), min(r', s))
    forward: list            # (m, integral over a') for the basis over a
    backward: list           # (m, integral over a) for the basis over a'
    denominators: tuple      # (dens over a, dens over a')

    @property
    def min_rs_equal(self):
        return all(x == y for x, y in self.min_rs.values())

    @property
    def denominators_equal(self):
        return self.denominators[0] == self.denominators[1]

    @property
    def passed(self):
        return (all(ok for _, ok in self.forward) and all(ok for _, ok in self.backward)
                and self.min_rs_equal and self.denominators_equal)

    def failures(self):
        return ([("forward", m) for m, ok in self.forward if not ok]
                + [("backward", m) for m, ok in self.backward if not ok])


def _transfer(basis, target):
    out = []
    for b in basis.basis:
        x = FieldElement.make(target, b.numerator, b.denominator)
        out.append((b.m, is_algebraic_integer(x)))
    return out


def _min_rs(field):
    return {p: min(field.r_of(p), field.s(p)) for p in field.primes}


def transfer_check(field, a_prime, modulus=None):
    """Move each basis element's coefficient vector to the other field and test integrality.

    ``modulus`` overrides the period for probing; with it, failures are only
    reported, never treated as a contradiction.
    """
    n, a = field.n, field.a
    for v in (a, a_prime):
        if not is_squarefree(v):
            raise HypothesisViolation("not-squarefree", f"{v} is not squarefree")
    mod = modulus if modulus is not None else period_modulus(n)
    if (a - a_prime) % mod:
        raise HypothesisViolation(
            "not-congruent", f"{a} and {a_prime} are not congruent modulo {mod}")
    other = validate_field(n, a_prime)
    b1, b2 = integral_basis(field), integral_basis(other)
    m1, m2 = _min_rs(field), _min_rs(other)
    return TransferReport(
        n, a, a_prime, mod,
        {p: (m1[p], m2[p]) for p in field.primes},
        _transfer(b1, other), _transfer(b2, field),
        (tuple(b1.denominators()), tuple(b2.denominators())),
    )
