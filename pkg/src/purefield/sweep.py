"""Parameter sweeps over grids of (n, a), shared by the test suite and scripts/."""

from dataclasses import dataclass
from math import comb
import random

from .arith import is_squarefree
from .basis import canonical_a_prime, eta_element, integral_basis, validate_field
from .discriminant import d_K_formula
from .errors import HypothesisViolation
from .field import (coordinate_det, disc_of_elements, is_algebraic_integer, power_basis_disc,
                    transition_determinant)
from .periodicity import period_modulus, transfer_check


@dataclass(frozen=True)
class GridConfig:
    n_min: int = 2
    n_max: int = 12
    a_min: int = 2          # bounds on |a|
    a_max: int = 500
    negative: bool = True

    def radicands(self):
        pos = range(self.a_min, self.a_max + 1)
        if not self.negative:
            return list(pos)
        return list(pos) + [-a for a in pos]


@dataclass(frozen=True)
class FieldCheck:
    n: int
    a: int
    branch: str
    oracle: bool           # every basis element integral
    disc: int              # trace-form discriminant of the basis
    d_K: int               # closed form
    index: int             # transition determinant (closed form)
    index_from_coords: int

    @property
    def disc_match(self):
        return self.disc == self.d_K

    @property
    def index_identity(self):
        return (power_basis_disc(self.n, self.a) == self.index**2 * self.d_K
                and self.index == self.index_from_coords)


def iter_grid_fields(cfg=GridConfig()):
    for n in range(cfg.n_min, cfg.n_max + 1):
        for a in cfg.radicands():
            try:
                yield validate_field(n, a)
            except HypothesisViolation:
                continue


def check_field(field):
    basis = integral_basis(field)
    els = basis.elements
    disc = disc_of_elements(els)
    assert disc.denominator == 1
    inv = 1 / abs(coordinate_det(els))
    assert inv.denominator == 1
    return FieldCheck(field.n, field.a, basis.branch,
                      all(is_algebraic_integer(x) for x in els),
                      int(disc), d_K_formula(field).value,
                      transition_determinant(field, basis.profile), int(inv))


def run_grid(cfg=GridConfig()):
    return [check_field(f) for f in iter_grid_fields(cfg)]


def perturbation_sample(cfg=GridConfig(), count=100, seed=0,
                        primes=(2, 3, 5, 7, 11, 13, 17, 19, 23)):
    """Random grid basis elements with the denominator times an extra prime.

    A basis element divided by any prime is never integral, so each of these
    must be rejected by the oracle.
    """
    rng = random.Random(seed)
    fields = list(iter_grid_fields(cfg))
    out = []
    while len(out) < count:
        f = rng.choice(fields)
        gamma = rng.choice(integral_basis(f).elements)
        out.append(gamma.scale_den(rng.choice(primes)))
    return out


@dataclass(frozen=True)
class LemmaConfig:
    primes: tuple = (2, 3, 5, 7)
    s_max: int = 3
    a_max: int = 500        # bound on |a|


def lemma_cases(cfg=LemmaConfig()):
    """(field, p, s, k, a') for p^s-th pure fields with r >= 1 and 1 <= k <= min(r, s)."""
    for p in cfg.primes:
        for s in range(1, cfg.s_max + 1):
            for a in GridConfig(a_max=cfg.a_max).radicands():
                try:
                    f = validate_field(p**s, a)
                except HypothesisViolation:
                    continue
                r = f.r_of(p)
                for k in range(1, min(r, s) + 1):
                    yield f, p, s, k, canonical_a_prime(a, p, s, k)


def lemma_divisibility_failures(field, p, k, a_prime):
    """j in 1..p^k for which p^(jk) fails to divide C(p^k, j) (a a'^(p^k) - 1)^(j-1)."""
    pk = p**k
    x = field.a * a_prime**pk - 1
    bad = []
    for j in range(1, pk + 1):
        mod = p ** (j * k)
        if comb(pk, j) % mod * pow(x, j - 1, mod) % mod:
            bad.append(j)
    return bad


def eta_integral(field, p, k, a_prime):
    return is_algebraic_integer(eta_element(field, p, k, a_prime))


def squarefree_congruent_pairs(n, count, a_max=500, seed=0):
    """Up to ``count`` pairs (a, a') of squarefree valid radicands with a = a' mod the period."""
    mod = period_modulus(n)
    rng = random.Random(seed * 1000 + n)
    cands = [a for a in GridConfig(a_max=a_max).radicands() if is_squarefree(a)]
    rng.shuffle(cands)
    pairs = []
    for a in cands:
        for k in (1, -1, 2, -2, 3):
            b = a + k * mod
            if abs(b) >= 2 and is_squarefree(b):
                pairs.append((a, b))
                break
        if len(pairs) >= count:
            break
    return pairs


def periodicity_reports(n, count=20, a_max=500, seed=0):
    return [transfer_check(validate_field(n, a), b)
            for a, b in squarefree_congruent_pairs(n, count, a_max, seed)]
