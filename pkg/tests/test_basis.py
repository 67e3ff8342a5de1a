from math import comb, prod

import pytest
from hypothesis import given, settings, strategies as st

from purefield.basis import (beta_combine, c_sequence, canonical_a_prime, canonicalize,
                             delta_element, eta_element, exponent_profile, integral_basis,
                             prime_power_basis, r_value, truncated_r, unit_adjusters,
                             validate_field)
from purefield.errors import DomainError, HypothesisViolation
from purefield.field import (FieldElement, coordinate_det, is_algebraic_integer,
                             module_span_equal, transition_determinant)

from golden import EXAMPLES, listed_basis


def grid_field(n, a):
    try:
        return validate_field(n, a)
    except HypothesisViolation:
        return None


valid_fields = st.tuples(st.integers(2, 12), st.integers(-500, 500)).map(
    lambda t: grid_field(*t)).filter(lambda f: f is not None)


# --- validation -----------------------------------------------------------------

def test_validate_example_1():
    f = validate_field(8, 833)
    assert f.r == {2: 5}
    assert f.r_of(2) == r_value(833, 2) == 5


@pytest.mark.parametrize("n, a, code", [
    (4, 4, "excluded-prime"),
    (2, 9, "reducible"),
    (3, 8, "reducible"),
    (3, -8, "reducible"),
    (4, 2 * 3**4, "nth-power"),
    (2, 1, "unit-radicand"),
    (2, -1, "unit-radicand"),
    (2, 0, "unit-radicand"),
    (1, 5, "degree"),
    (6, 5**3, "reducible"),           # a cube, 6-th power free
    (6, 3**3 * 2, "excluded-prime"),  # v_3(a) = 3
])
def test_validate_rejections(n, a, code):
    with pytest.raises(HypothesisViolation) as e:
        validate_field(n, a)
    assert e.value.code == code


def test_validate_reason_text():
    with pytest.raises(HypothesisViolation) as e:
        validate_field(4, 4)
    assert "not coprime to 2" in e.value.reason


def test_capelli_against_sympy():
    sympy = pytest.importorskip("sympy")
    x = sympy.symbols("x")
    for n in range(2, 9):
        for a in range(-60, 61):
            if abs(a) < 2:
                continue
            try:
                validate_field(n, a)
                verdict = "irreducible"
            except HypothesisViolation as e:
                if e.code != "reducible":
                    continue
                verdict = "reducible"
            factors = sympy.factor_list(x**n - a)[1]
            truth = "irreducible" if len(factors) == 1 and factors[0][1] == 1 else "reducible"
            assert verdict == truth, (n, a)


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
def test_truncated_r_matches_direct(p):
    for a in range(-300, 301):
        if abs(a) < 2 or a % p == 0:
            continue
        for s in (1, 2, 3):
            assert truncated_r(a, p, s) == min(r_value(a, p), s)


# --- C_m and exponent profiles --------------------------------------------------

def test_c_sequence_examples():
    assert c_sequence(validate_field(10, 150)) == [1] * 5 + [5] * 5
    assert c_sequence(validate_field(6, 2 * 5**2 * 13**5)) == [
        1, 1, 13, 5 * 13**2, 5 * 13**3, 5 * 13**4]
    assert c_sequence(validate_field(9, 26)) == [1] * 9
    assert c_sequence(validate_field(8, 833)) == [1] * 4 + [7] * 4


@given(valid_fields)
@settings(max_examples=150, deadline=None)
def test_theta_power_over_c_is_integral(f):
    for m, c in enumerate(c_sequence(f)):
        assert is_algebraic_integer(f.theta_power(m).scale_den(c))


def test_profile_example_1():
    prof = exponent_profile(validate_field(8, 833))
    assert prof.S == (2,) and prof.d == {2: 3}
    assert prof.k[2] == (0, 0, 0, 0, 1, 1, 2, 3)
    assert prof.j[2][4:] == (0, 1, 0, 0)


def test_profile_example_2():
    prof = exponent_profile(validate_field(9, 26))
    assert prof.d == {3: 2}
    assert prof.k[3] == (0,) * 6 + (1, 1, 2)
    assert prof.j[3][6:] == (0, 1, 0)


def test_profile_example_5():
    prof = exponent_profile(validate_field(6, 37))
    assert prof.S == (2, 3)
    assert prof.k[3] == (0, 0, 0, 0, 1, 1)
    assert prof.k[2] == (0, 0, 0, 1, 1, 1)
    assert [prof.S_m(m) for m in range(6)] == [(), (), (), (2,), (2, 3), (2, 3)]


@given(valid_fields)
@settings(max_examples=200, deadline=None)
def test_profile_invariants(f):
    prof = exponent_profile(f)
    n = f.n
    for p in prof.S:
        ks = prof.k[p]
        assert ks[0] == 0 and prof.j[p][0] == 0
        assert list(ks) == sorted(ks)
        for m in range(n):
            k = ks[m]
            assert m == n - n // p**k + prof.j[p][m]
            assert prof.n_part[p][m] == n // p**k
            assert 0 <= k <= prof.d[p]
            if k < prof.d[p]:
                assert m < n - n // p ** (k + 1)
        s, d = f.s(p), prof.d[p]
        assert sum(ks) == (n // p**s) * sum(p ** (s - j) for j in range(1, d + 1))


# --- adjusters, eta, delta, beta ------------------------------------------------

def test_adjusters_example_1():
    f = validate_field(8, 833)
    prof = exponent_profile(f)
    adj = unit_adjusters(f, prof, c_sequence(f))
    assert {m: adj[2, m].a_prime for m in range(4, 8)} == {4: 1, 5: 1, 6: 1, 7: 1}
    assert {m: adj[2, m].w for m in range(4, 8)} == {4: 1, 5: 1, 6: 3, 7: 7}


def test_adjusters_example_2_and_4():
    f = validate_field(9, 26)
    adj = unit_adjusters(f, exponent_profile(f), c_sequence(f))
    assert all(adj[3, m].a_prime == -1 and adj[3, m].w == 1 for m in (6, 7, 8))
    g = validate_field(6, 2 * 5**2 * 13**5)
    adj = unit_adjusters(g, exponent_profile(g), c_sequence(g))
    assert sorted(adj) == [(3, 4), (3, 5)]
    assert all(adj[3, m].a_prime == -1 and adj[3, m].w == 2 for m in (4, 5))


@given(valid_fields)
@settings(max_examples=200, deadline=None)
def test_adjuster_congruences(f):
    prof = exponent_profile(f)
    C = c_sequence(f)
    for (p, m), adj in unit_adjusters(f, prof, C).items():
        k = adj.k
        assert k >= 1
        assert (f.a * adj.a_prime ** (p**k) - 1) % p ** (k + 1) == 0
        assert 1 <= adj.w <= max(1, p**k - 1)
        assert (adj.w * C[m] * adj.a_prime ** (p**k - 1) - 1) % p**k == 0


def test_eta_examples():
    e = eta_element(validate_field(2, 5), 2, 1, 1)
    assert (e.den, e.num) == (2, (1, 1))
    assert is_algebraic_integer(e)
    e = eta_element(validate_field(9, 26), 3, 2, -1)
    assert e.den == 9 and e.num == tuple((-1) ** j for j in range(9))
    assert is_algebraic_integer(e)
    e = eta_element(validate_field(8, 833), 2, 3, 1)
    assert e.den == 8 and e.num == (1,) * 8
    assert is_algebraic_integer(e)


def test_eta_range():
    f = validate_field(9, 26)
    with pytest.raises(DomainError):
        eta_element(f, 3, 3, -1)
    with pytest.raises(DomainError):
        eta_element(validate_field(4, 6), 2, 1, 1)


def test_delta_examples():
    f = validate_field(8, 833)
    prof = exponent_profile(f)
    C = c_sequence(f)
    assert delta_element(f, C[6], 6, 2, prof, 1, 3) == [21, 0, 21, 0, 21, 0, 0, 0]
    assert delta_element(f, C[4], 4, 2, prof, 1, 1) == [7, 0, 0, 0, 0, 0, 0, 0]
    assert delta_element(f, C[2], 2, 2, prof, 1, 1) == [0] * 8
    g = validate_field(9, 26)
    pg = exponent_profile(g)
    assert delta_element(g, 1, 8, 3, pg, -1, 1) == [(-1) ** j for j in range(8)] + [0]


def test_beta_examples():
    f = validate_field(6, 37)
    prof = exponent_profile(f)
    C = c_sequence(f)
    adj = unit_adjusters(f, prof, C)

    def deltas(m):
        return {p: delta_element(f, C[m], m, p, prof, adj[p, m].a_prime, adj[p, m].w)
                for p in prof.S_m(m)}

    beta3, uz3 = beta_combine(f, 3, deltas(3), prof)
    assert beta3 == [1, 0, 0, 0, 0, 0] and uz3 == {2: (1, 1)}
    beta4, uz4 = beta_combine(f, 4, deltas(4), prof)
    assert beta4 == [-2, 3, -2, 0, 0, 0]
    assert uz4 == {2: (1, 3), 3: (-1, 2)}
    assert beta_combine(f, 1, {}, prof)[0] == [0] * 6
    with pytest.raises(DomainError):
        beta_combine(f, 4, {2: [0] * 6}, prof)


@given(valid_fields)
@settings(max_examples=200, deadline=None)
def test_beta_degree_bound(f):
    basis = integral_basis(f)
    prof = basis.profile
    for b in basis.basis:
        Sm = prof.S_m(b.m)
        assert b.numerator[b.m] == 1
        assert all(c == 0 for c in b.numerator[b.m + 1:])
        if Sm:
            bound = b.m - min(prof.n_part[p][b.m] for p in Sm)
            assert all(c == 0 for c in b.numerator[bound + 1:b.m])


# --- the basis ------------------------------------------------------------------

@pytest.mark.parametrize("key", sorted(EXAMPLES))
def test_golden_span_equal(key):
    f = validate_field(*key)
    assert module_span_equal(integral_basis(f).elements, listed_basis(f))


def test_literal_examples():
    # canonical choices reproduce the listed numerators exactly
    for key in EXAMPLES:
        f = validate_field(*key)
        got = [(x.den, x.num) for x in integral_basis(f).elements]
        assert got == [(x.den, x.num) for x in listed_basis(f)]


def test_branches():
    assert integral_basis(validate_field(10, 150)).branch == "S-empty"
    assert integral_basis(validate_field(6, 37)).branch == "S-nonempty"


@given(valid_fields)
@settings(max_examples=150, deadline=None)
def test_basis_elements_integral_and_index(f):
    basis = integral_basis(f)
    els = basis.elements
    assert all(is_algebraic_integer(x) for x in els)
    assert 1 / abs(coordinate_det(els)) == transition_determinant(f, basis.profile)


@given(valid_fields)
@settings(max_examples=60, deadline=None)
def test_canonicalize(f):
    basis = integral_basis(f)
    canon = canonicalize(basis)
    ys = [FieldElement.make(f, num, den) for _, num, den in canon]
    assert module_span_equal(basis.elements, ys)
    for m, num, den in canon:
        assert num[m] > 0 and den > 0 and all(c == 0 for c in num[m + 1:])


def theorem_prime_power_basis(p, s, a):
    """Direct transcription of the prime-power recipe (separate from integral_basis)."""
    n = p**s
    f = validate_field(n, a)
    C = c_sequence(f)
    r = -1 if a % p == 0 else r_value(a, p)
    d = min(r, s)
    phi = n - n // p
    out = []
    for m in range(n):
        if r <= 0 or m < phi:
            out.append(FieldElement.make(f, [int(i == m) for i in range(n)], C[m]))
            continue
        k = max(k for k in range(d + 1) if m >= n - n // p**k)
        j = m - (n - n // p**k)
        mod = p ** (k + 1)
        ap = pow(a, (p - 2) * p ** (s - k - 1), mod) if k < s else pow(a, p - 2, mod)
        w = next(w for w in range(1, p**k + 1) if (w * C[m] * ap ** (p**k - 1) - 1) % p**k == 0)
        num = [0] * n
        num[m] = 1
        for i in range(p**k - 1):
            num[j + i * (n // p**k)] += w * C[m] * ap**i
        out.append(FieldElement.make(f, num, p**k * C[m]))
    return f, out


@pytest.mark.parametrize("p, s", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (7, 1)])
def test_prime_power_agrees(p, s):
    for a in list(range(2, 120)) + list(range(-120, -1)):
        try:
            f, recipe = theorem_prime_power_basis(p, s, a)
        except HypothesisViolation:
            continue
        ours = prime_power_basis(p, s, a)
        assert module_span_equal(ours.elements, recipe), (p, s, a)
        assert all(is_algebraic_integer(x) for x in recipe)


def test_lemma_divisibility_small():
    for p, s, a in [(2, 3, 833), (3, 2, 26), (3, 1, 37), (5, 2, 7), (7, 1, 19)]:
        f = validate_field(p**s, a)
        for k in range(1, min(f.r_of(p), s) + 1):
            ap = canonical_a_prime(a, p, s, k)
            x = a * ap ** (p**k) - 1
            assert x % p ** (k + 1) == 0
            for j in range(1, p**k + 1):
                assert comb(p**k, j) * x ** (j - 1) % p ** (j * k) == 0


def test_a_prime_example_values():
    assert canonical_a_prime(26, 3, 2, 1) == -1
    assert canonical_a_prime(26, 3, 2, 2) == -1
    assert canonical_a_prime(833, 2, 3, 2) == 1
    assert prod([canonical_a_prime(37, 3, 1, 1), canonical_a_prime(37, 2, 1, 1)]) == 1
