import json
from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from hookimm import characters as ch
from hookimm.errors import InvalidArgument
from hookimm.partitions import kostka, partitions_of, syt_count, transpose, z_value

FAMILIES = ("irreducible", "induced_sign", "induced_trivial", "power_sum", "monomial", "forgotten")
small_partition = st.integers(1, 6).flatmap(lambda n: st.sampled_from(partitions_of(n)))


@pytest.mark.parametrize("n", range(1, 7))
def test_character_table_matches_jacobi_trudi(n):
    for lam in partitions_of(n):
        for mu in partitions_of(n):
            assert ch.character_value(lam, mu) == oracles.character_jacobi_trudi(lam, mu)


@pytest.mark.parametrize("n", range(1, 8))
def test_orthogonality_and_degrees(n):
    t = ch.character_table(n)
    parts = partitions_of(n)
    for a in range(len(parts)):
        assert ch.irreducible_character(parts[a]).at_identity() == syt_count(parts[a])
        for b in range(len(parts)):
            s = sum(Fraction(t[a][c] * t[b][c], z_value(parts[c])) for c in range(len(parts)))
            assert s == (a == b)


def test_trivial_and_sign():
    for n in range(1, 6):
        assert ch.irreducible_character((n,)) == ch.trivial_character(n)
        sgn = ch.irreducible_character((1,) * n)
        assert all(sgn[mu] == (-1) ** (n - len(mu)) for mu in partitions_of(n))
        assert ch.named_trace("induced_sign", (n,)) == sgn
        reg = ch.named_trace("induced_sign", (1,) * n)
        assert reg.at_identity() == factorial(n) and sum(abs(v) for v in reg.values.values()) == factorial(n)
    assert ch.irreducible_character((3, 1)).at_identity() == 3


def test_power_sum_trace():
    for lam in partitions_of(5):
        psi = ch.named_trace("psi", lam)
        assert all(psi[mu] == (z_value(lam) if mu == lam else 0) for mu in partitions_of(5))
        assert ch.frobenius(psi) == ch.SymmetricFunction.basis_element("p", lam)


def test_newton_identities_by_hand():
    e2 = ch.to_power_basis(ch.SymmetricFunction.basis_element("e", (2,)))
    h2 = ch.to_power_basis(ch.SymmetricFunction.basis_element("h", (2,)))
    assert e2.coeffs == {(2,): Fraction(-1, 2), (1, 1): Fraction(1, 2)}
    assert h2.coeffs == {(2,): Fraction(1, 2), (1, 1): Fraction(1, 2)}


def test_frobenius_of_trivial_is_h_n():
    for n in range(1, 6):
        f = ch.frobenius(ch.trivial_character(n))
        assert f == ch.SymmetricFunction.basis_element("h", (n,))
        assert all(f[mu] == Fraction(1, z_value(mu)) for mu in partitions_of(n))
        assert ch.inverse_frobenius(ch.SymmetricFunction.basis_element("e", (n,))) == ch.sign_character(n)


def test_schur_and_irreducible_paths_agree():
    assert ch.inverse_frobenius(ch.SymmetricFunction.basis_element("s", (3, 1))) == ch.irreducible_character((3, 1))


@pytest.mark.parametrize("n", range(1, 8))
def test_frobenius_roundtrip(n):
    for fam in FAMILIES:
        for lam in partitions_of(n):
            t = ch.named_trace(fam, lam)
            assert ch.inverse_frobenius(ch.frobenius(t)) == t


@pytest.mark.parametrize("n", range(1, 7))
def test_basis_conversions_roundtrip(n):
    for b in ch.BASES:
        for lam in partitions_of(n):
            x = ch.SymmetricFunction.basis_element(b, lam)
            for c in ch.BASES:
                y = ch.to_basis(x, c)
                assert y.basis == c and ch.to_basis(y, b).coeffs == x.coeffs


def test_omega():
    for lam in partitions_of(5):
        p = ch.SymmetricFunction.basis_element("p", lam)
        assert ch.omega(p).coeffs == (p * (-1) ** (5 - len(lam))).coeffs
        assert ch.omega(ch.SymmetricFunction.basis_element("s", lam)) == ch.SymmetricFunction.basis_element(
            "s", transpose(lam))
        assert ch.omega(ch.SymmetricFunction.basis_element("e", lam)) == ch.SymmetricFunction.basis_element("h", lam)
    assert ch.omega(ch.SymmetricFunction.basis_element("s", (4,))) == ch.SymmetricFunction.basis_element("s", (1,) * 4)


@given(st.integers(1, 7).flatmap(lambda n: st.lists(st.integers(-5, 5), min_size=len(partitions_of(n)),
                                                     max_size=len(partitions_of(n))).map(lambda v: (n, v))),
       st.sampled_from(ch.BASES))
def test_omega_is_involution(data, basis):
    n, v = data
    f = ch.SymmetricFunction(n, basis, dict(zip(partitions_of(n), v)))
    assert ch.omega(ch.omega(f)).coeffs == f.coeffs


@pytest.mark.parametrize("n", range(1, 8))
def test_kostka_expansions(n):
    for lam in partitions_of(n):
        chi = ch.irreducible_character(lam)
        assert chi == ch.trace_combination((kostka(lam, mu), ch.named_trace("phi", mu)) for mu in partitions_of(n))
        assert chi == ch.trace_combination(
            (kostka(transpose(lam), mu), ch.named_trace("gamma", mu)) for mu in partitions_of(n))


def test_kostka_inverse():
    for n in range(1, 7):
        K, Ki = ch.kostka_matrix(n), ch.inverse_kostka_matrix(n)
        m = len(K)
        for i in range(m):
            for j in range(m):
                assert sum(K[i][r] * Ki[r][j] for r in range(m)) == (i == j)


def test_theta_levels():
    for n in range(1, 7):
        assert ch.theta_level(n, n) == ch.named_trace("monomial", (1,) * n)
        assert ch.theta_level(n, 1) == ch.named_trace("monomial", (n,))
        total = ch.trace_combination((1, ch.theta_level(n, l)) for l in range(1, n + 1))
        assert total == ch.trivial_character(n)


def test_hook_expansion_small():
    assert ch.hook_in_theta_basis(3, 2) == [0, 1, 2]
    chi21 = ch.theta_level(3, 2) + ch.theta_level(3, 3) * 2
    assert chi21 == ch.irreducible_character((2, 1))


@pytest.mark.parametrize("n", range(1, 8))
def test_hook_expansion(n):
    for k in range(1, n + 1):
        c = ch.hook_in_theta_basis(n, k)
        assert c == [comb(l - 1, n - k) for l in range(1, n + 1)]
        assert ch.trace_combination((x, ch.theta_level(n, l)) for l, x in enumerate(c, start=1)) == \
            ch.hook_character(n, k)


def test_difference_coefficients_boundary_cases():
    for n in range(2, 11):
        for k in range(2, n + 1):
            c = ch.hook_difference_coefficients(n, k)
            assert c == ch.hook_difference_direct(n, k)
            assert all(x == 0 for x in c[: n - k])
            assert c[n - k] == Fraction(1, comb(n - 1, k - 1))
            assert min(c) >= 0
    with pytest.raises(InvalidArgument):
        ch.hook_difference_coefficients(3, 1)


def test_printed_difference_form_differs_above_the_middle_case():
    # n=3, k=3, l=2: binom(1,0)/binom(2,2) - binom(1,1)/binom(2,1) = 1/2, not (3-2)/(2-1)
    assert ch.hook_difference_direct(3, 3)[1] == Fraction(1, 2)
    assert ch.hook_difference_printed(3, 3)[1] == 1


def test_difference_matches_normalized_hooks():
    for n in range(2, 7):
        for k in range(2, n + 1):
            diff = ch.hook_character(n, k) * Fraction(1, comb(n - 1, k - 1)) - \
                ch.hook_character(n, k - 1) * Fraction(1, comb(n - 1, k - 2))
            c = ch.hook_difference_coefficients(n, k)
            assert diff == ch.trace_combination((x, ch.theta_level(n, l)) for l, x in enumerate(c, start=1))


@given(small_partition, st.sampled_from(FAMILIES))
def test_trace_json_roundtrip(lam, fam):
    t = ch.named_trace(fam, lam)
    assert ch.TraceVector.from_json(json.loads(json.dumps(t.to_json()))) == t
    f = ch.frobenius(t)
    assert ch.SymmetricFunction.from_json(json.loads(json.dumps(f.to_json()))) == f


def test_parse_trace():
    assert ch.parse_trace("chi:411") == ch.irreducible_character((4, 1, 1))
    assert ch.parse_trace("theta:4:2") == ch.theta_level(4, 2)
    assert ch.parse_trace("sgn:3") == ch.sign_character(3)
    assert ch.parse_trace("epsilon:21") == ch.named_trace("induced_sign", (2, 1))


def test_trace_errors():
    with pytest.raises(InvalidArgument):
        ch.TraceVector(3, {(2, 1, 1): 1})
    with pytest.raises(InvalidArgument):
        ch.trivial_character(3) + ch.trivial_character(4)
    with pytest.raises(InvalidArgument):
        ch.SymmetricFunction(2, "q", {})
