"""Field arithmetic: exhaustive laws, characters, quadratic counting."""

import numpy as np
import pytest

from codescope.gf import (
    FieldError,
    count_diagonal_quadratic,
    default_modulus,
    factorize,
    field,
    field_of_order,
    is_prime,
)

SMALL_PRIME_POWERS = [q for q in range(2, 50) if len(factorize(q)) == 1]


def brute_irreducible_deg2(coeffs, p):
    """Degree-2 irreducibility by trying all monic linear factor pairs."""
    c0, c1, c2 = coeffs
    assert c2 == 1
    for a in range(p):
        for b in range(p):
            # (x + a)(x + b) = x^2 + (a+b)x + ab
            if (a + b) % p == c1 and (a * b) % p == c0:
                return False
    return True


def test_prime_field_basics():
    F2 = field(2)
    assert F2.primitive_element == 1
    F5 = field(5)
    assert F5.add(4, 1) == 0
    assert F5.pow(2, 2) == 4 == F5.neg(1)  # 2^2 = -1 in GF(5)
    assert F5.sub(0, 1) == 4
    assert F5.inv(2) == 3
    assert field_of_order(5) is F5


def test_default_modulus_f4_is_the_unique_irreducible():
    # oracle: factor every monic quadratic over GF(2) into linear terms
    irreducibles = [
        (c0, c1, 1)
        for c0 in range(2)
        for c1 in range(2)
        if brute_irreducible_deg2((c0, c1, 1), 2)
    ]
    assert irreducibles == [(1, 1, 1)]
    assert field(2, 2).modulus == (1, 1, 1)
    assert default_modulus(3, 2) == (1, 0, 1)  # x^2 + 1, no square root of -1 in GF(3)


def test_f4_multiplication_and_trace():
    F4 = field(2, 2)
    # x * x = x + 1 under x^2 + x + 1
    assert F4.mul(2, 2) == 3
    assert F4.trace(0) == 0
    assert F4.trace(1) == 0  # 1 + 1
    assert F4.trace(2) == 1  # x + x^2 = x + (x+1)
    assert F4.trace(3) == 1


@pytest.mark.parametrize("q", [q for q in SMALL_PRIME_POWERS if q <= 32])
def test_field_laws_exhaustive(q):
    F = field_of_order(q)
    a = np.arange(q)
    ADD, MUL = F.ADD, F.MUL
    assert np.array_equal(ADD, ADD.T)
    assert np.array_equal(MUL, MUL.T)
    # identities and inverses
    assert np.array_equal(ADD[a, 0], a)
    assert np.array_equal(MUL[a, 1], a)
    assert np.array_equal(ADD[a, F.NEG[a]], np.zeros(q, dtype=np.int64))
    assert np.array_equal(MUL[a[1:], F.INV[a[1:]]], np.ones(q - 1, dtype=np.int64))
    # associativity and distributivity over all triples
    i, j, k = np.meshgrid(a, a, a, indexing="ij")
    assert np.array_equal(ADD[ADD[i, j], k], ADD[i, ADD[j, k]])
    assert np.array_equal(MUL[MUL[i, j], k], MUL[i, MUL[j, k]])
    assert np.array_equal(MUL[i, ADD[j, k]], ADD[MUL[i, j], MUL[i, k]])


@pytest.mark.parametrize("q", [q for q in SMALL_PRIME_POWERS if q % 2])
def test_quadratic_character(q):
    F = field_of_order(q)
    chi = {a: F.quadratic_character(a) for a in F.units}
    squares = {F.mul(a, a) for a in F.units}
    assert all((chi[a] == 1) == (a in squares) for a in F.units)
    for a in F.units:
        for b in F.units:
            assert chi[F.mul(a, b)] == chi[a] * chi[b]
    assert (chi[F.neg(1)] == 1) == (q % 4 == 1)


def test_quadratic_character_small_values():
    assert field(3).quadratic_character(2) == -1
    assert field(5).quadratic_character(4) == 1
    F9 = field(3, 2)
    assert F9.quadratic_character(F9.neg(1)) == 1  # 9 = 1 mod 4


def test_quadratic_character_domain_errors():
    with pytest.raises(FieldError):
        field(3).quadratic_character(0)
    with pytest.raises(FieldError):
        field(2, 2).quadratic_character(1)


def test_count_diagonal_quadratic_known_cases():
    F3, F5, F7 = field(3), field(5), field(7)
    r = count_diagonal_quadratic(F3, 1, 1, F3.neg(1))
    assert (r.count, r.nonzero_count) == (4, 4)
    r = count_diagonal_quadratic(F5, 1, 1, F5.neg(1))
    assert (r.count, r.nonzero_count) == (4, 0)
    gamma = 2  # 2^2 = -1 in GF(5)
    assert sorted(r.solutions) == sorted(
        [(gamma, 0), (F5.neg(gamma), 0), (0, gamma), (0, F5.neg(gamma))]
    )
    assert count_diagonal_quadratic(F7, 1, 1, F7.neg(1)).count == 8


@pytest.mark.parametrize("q", [3, 5, 9])
def test_count_diagonal_quadratic_formula(q):
    F = field_of_order(q)
    minus_one = F.neg(1)
    for a1 in F.units:
        for a2 in F.units:
            expected = q - F.quadratic_character(F.mul(minus_one, F.mul(a1, a2)))
            for t in F.units:
                assert count_diagonal_quadratic(F, a1, a2, t).count == expected


def test_count_diagonal_quadratic_rejects_even_q_and_zero_args():
    with pytest.raises(FieldError):
        count_diagonal_quadratic(field(2, 2), 1, 1, 1)
    with pytest.raises(FieldError):
        count_diagonal_quadratic(field(5), 0, 1, 1)


@pytest.mark.parametrize("q", [q for q in SMALL_PRIME_POWERS if q <= 32])
def test_frobenius_is_additive_and_fixes_prime_subfield(q):
    F = field_of_order(q)
    fixed = [a for a in F.elements if F.frobenius(a) == a]
    assert fixed == list(range(F.p))
    for a in F.elements:
        for b in F.elements:
            assert F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b))
        assert F.trace(F.frobenius(a)) == F.trace(a)


def test_trace_is_additive_into_prime_subfield():
    F8 = field(2, 3)
    for a in F8.elements:
        assert F8.trace(a) in (0, 1)
        for b in F8.elements:
            assert F8.trace(F8.add(a, b)) == (F8.trace(a) + F8.trace(b)) % 2


def test_log_antilog_round_trip():
    F = field(2, 4)
    for a in F.units:
        assert F.antilog[F.log[a]] == a
    for i in range(2 * (F.q - 1)):
        assert F.log[F.antilog[i % (F.q - 1)]] == i % (F.q - 1)


def test_pow_conventions():
    F = field(3, 2)
    assert F.pow(0, 0) == 1
    assert F.pow(0, 5) == 0
    assert F.pow(F.primitive_element, F.q - 1) == 1
    assert F.pow(2, -1) == F.inv(2)
    with pytest.raises(FieldError):
        F.pow(0, -1)


def test_construction_errors():
    with pytest.raises(FieldError):
        field(6)
    with pytest.raises(FieldError):
        field(2, 11)  # 2048 > 1024
    with pytest.raises(FieldError):
        field(2, 2, modulus=[0, 0, 1])  # x^2 = x * x
    with pytest.raises(FieldError):
        field(2, 2, modulus=[1, 1])  # wrong degree
    with pytest.raises(FieldError):
        field_of_order(12)
    with pytest.raises(FieldError):
        field(5).inv(0)
    with pytest.raises(FieldError):
        field(5).add(5, 0)


def test_is_prime():
    assert [n for n in range(2, 30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
