"""The character formula, sigma matrix, beta, kernel tools, sum identity."""

import random
from fractions import Fraction

import pytest

from gamma0char.charformula import (
    CharacterParams,
    beta,
    dedekind_identity_quotient,
    eval_character,
    kernel_exponent_check,
    sigma_matrix,
)
from gamma0char.dirichlet import divisors, enumerate_characters
from gamma0char.exact import gcd_all
from gamma0char.farey import build_generators, generators
from gamma0char.sampling import random_gamma0
from gamma0char.sl2 import NEG_I, T, Gamma0Element, UniModular, sigma


def _params(n, chi_index=0, r1=0, **weights):
    chi = enumerate_characters(n)[chi_index]
    r_l = {l: Fraction(0) for l in divisors(n) if l > 1}
    for key, value in weights.items():
        r_l[int(key[1:])] = Fraction(value)
    return CharacterParams.from_map(chi, r1, r_l)


def test_eval_character_trivial_params():
    rng = random.Random(47)
    for n in (2, 7, 12):
        params = _params(n)
        gens = generators(n)
        for _ in range(30):
            gamma = random_gamma0(rng, gens)
            assert eval_character(params, gamma).value == 0


def test_eval_character_examples():
    gamma = Gamma0Element(UniModular(-2, 1, -7, 3), 7)
    assert eval_character(_params(7, r1=1), gamma).value == Fraction(1, 6)
    gamma2 = Gamma0Element(T, 2)
    assert eval_character(_params(2, r2=Fraction(1, 2)), gamma2).value == Fraction(1, 2)


def test_eval_character_level_mismatch():
    with pytest.raises(ValueError):
        eval_character(_params(7), Gamma0Element(T, 14))


def test_eval_character_is_homomorphism():
    rng = random.Random(53)
    for n in (2, 6, 7, 12, 18):
        gens = generators(n)
        chars = enumerate_characters(n)
        for trial in range(3):
            params = CharacterParams.from_map(
                chars[rng.randrange(len(chars))],
                rng.randrange(12),
                {
                    l: Fraction(rng.randrange(-6, 7), rng.randrange(1, 9))
                    for l in divisors(n)
                    if l > 1
                },
            )
            for _ in range(200):
                x = random_gamma0(rng, gens, letters=5)
                y = random_gamma0(rng, gens, letters=5)
                assert (
                    eval_character(params, x * y)
                    == eval_character(params, x) + eval_character(params, y)
                )


def test_parameter_composition_matches_pointwise_product():
    rng = random.Random(59)
    n = 12
    gens = generators(n)
    chars = enumerate_characters(n)
    divs = [l for l in divisors(n) if l > 1]
    for _ in range(10):
        p1 = CharacterParams.from_map(
            chars[rng.randrange(len(chars))],
            rng.randrange(12),
            {l: Fraction(rng.randrange(-4, 5), rng.randrange(1, 7)) for l in divs},
        )
        p2 = CharacterParams.from_map(
            chars[rng.randrange(len(chars))],
            rng.randrange(12),
            {l: Fraction(rng.randrange(-4, 5), rng.randrange(1, 7)) for l in divs},
        )
        composed = p1.compose(p2)
        for _ in range(50):
            gamma = random_gamma0(rng, gens, letters=5)
            assert eval_character(composed, gamma) == eval_character(
                p1, gamma
            ) + eval_character(p2, gamma)


def test_params_validation():
    chi = enumerate_characters(6)[0]
    with pytest.raises(ValueError):
        CharacterParams.from_map(chi, 0, {2: Fraction(1)})  # missing divisors 3, 6
    params = _params(6, r1=25)
    assert params.r1 == 1


def test_sigma_matrix_examples():
    m7 = sigma_matrix(7)
    assert m7.cols == (7,)
    assert m7.entries == ((-6,),)
    m4 = sigma_matrix(4)
    assert m4.cols == (2, 4)
    assert m4.entries[0] == (-1, -3)
    assert len(m4.entries) == 2
    assert len(m4.entries[0]) == 2
    for p in (11, 23, 97):
        mp = sigma_matrix(p)
        assert mp.cols == (p,)
        assert mp.entries[0] == (1 - p,)


def test_sigma_matrix_recomputes_from_sigma():
    for n in (6, 10, 12):
        mat = sigma_matrix(n)
        gens = generators(n)
        for row, g in zip(mat.entries, gens.free):
            for value, l in zip(row, mat.cols):
                assert value == sigma(Gamma0Element(g, n), l)


def test_beta_table_values():
    assert beta(2, 2) == 1
    assert beta(5, 5) == 4
    assert beta(7, 7) == 6
    assert beta(13, 13) == 12
    assert beta(10, 2) == 1
    assert beta(26, 13) == 12
    # conjecture-backed perfect-square rows
    assert beta(25, 25) == 24
    assert beta(9, 9) == 8


def test_beta_domain_errors():
    with pytest.raises(ValueError):
        beta(10, 3)
    with pytest.raises(ValueError):
        beta(10, 1)
    with pytest.raises(ValueError):
        beta(1, 1)


def test_beta_independent_of_generator_set():
    for n in (6, 9, 10, 12, 24, 36):
        fresh = build_generators(n, "rightmost")
        for l in [l for l in divisors(n) if l > 1]:
            alt = gcd_all([sigma(Gamma0Element(g, n), l) for g in fresh.free])
            assert alt == beta(n, l)


def test_kernel_exponent_check_examples():
    assert kernel_exponent_check(Gamma0Element(T, 7)) == (1, False)
    assert kernel_exponent_check(Gamma0Element(NEG_I, 7)) == (0, True)
    gens = generators(7)
    h1, h2 = gens.elliptic3
    gamma = Gamma0Element(h1 * T * h2 * T.inv(), 7)
    assert kernel_exponent_check(gamma) == (0, True)


def test_kernel_exponent_check_rejects_other_levels():
    with pytest.raises(ValueError):
        kernel_exponent_check(Gamma0Element(T, 6))


def test_kernel_biconditional_random():
    rng = random.Random(61)
    for n in (2, 3, 4, 5, 7, 9, 13, 25):
        gens = generators(n)
        for _ in range(150):
            gamma = random_gamma0(rng, gens)
            total, in_kernel = kernel_exponent_check(gamma)
            assert in_kernel == (total == 0)
            assert in_kernel == (sigma(gamma, n) == 0)


def test_dedekind_identity_examples():
    assert dedekind_identity_quotient(2, 2, 1) == -1
    assert dedekind_identity_quotient(3, 3, 1) == -1


def test_dedekind_identity_bulk_random():
    rng = random.Random(67)
    from gamma0char.sampling import random_coprime_pair

    for n in (2, 3, 4, 5, 7, 9, 13, 25):
        for _ in range(120):
            c, d = random_coprime_pair(rng, n, 10**4)
            dedekind_identity_quotient(n, c, d)


def test_dedekind_identity_domain_errors():
    with pytest.raises(ValueError):
        dedekind_identity_quotient(6, 6, 1)
    with pytest.raises(ValueError):
        dedekind_identity_quotient(2, 3, 1)
    with pytest.raises(ValueError):
        dedekind_identity_quotient(2, 4, 2)
