import math

import pytest

from app.errors import InvalidCartan, NotRealRoot
from app.rootsys.cartan import (
    ALPHA1,
    ALPHA2,
    RootVec,
    TorusPoint,
    Weight,
    godement,
    godement_growth_constants,
    in_A_prime,
    is_real_root,
    new_cartan,
    norm,
    pair,
    real_roots_in_box,
    reflect_weight,
    rho,
    simple_pairings,
    simple_reflection,
    torus_eval,
    varpi2,
)


def test_new_cartan_golden_ratio_squared(cd3):
    assert cd3.gamma == pytest.approx(2.6180339887, rel=1e-10)
    assert cd3.gram == ((2, -3), (-3, 2))
    assert cd3.disc == pytest.approx(math.sqrt(5), rel=1e-12)


@pytest.mark.parametrize("m", [2, 1, 0, -3])
def test_new_cartan_rejects_non_hyperbolic(m):
    with pytest.raises(InvalidCartan):
        new_cartan(m)


def test_gamma_is_root_of_characteristic_polynomial(cd_any):
    g = cd_any.gamma
    assert g * g - cd_any.m * g + 1 == pytest.approx(0.0, abs=1e-9)
    assert g > 1


def test_simple_roots_are_real(cd_any):
    assert norm(cd_any, ALPHA1) == 2
    assert is_real_root(cd_any, ALPHA2)


def test_imaginary_vector_is_not_real(cd3):
    alpha = RootVec(1, 1)
    assert norm(cd3, alpha) == -2
    assert not is_real_root(cd3, alpha)
    with pytest.raises(NotRealRoot):
        pair(cd3, rho(cd3), alpha)


@pytest.mark.parametrize("i", [1, 2])
def test_reflection_preserves_norm_and_is_involution(cd_any, i):
    for c1 in range(-50, 51):
        for c2 in range(-50, 51):
            alpha = RootVec(c1, c2)
            image = simple_reflection(cd_any, i, alpha)
            assert norm(cd_any, image) == norm(cd_any, alpha)
            assert simple_reflection(cd_any, i, image) == alpha


def test_reflection_of_simple_root_is_negative(cd3):
    assert simple_reflection(cd3, 1, ALPHA1) == RootVec(-1, 0)
    assert simple_reflection(cd3, 2, ALPHA1) == RootVec(1, 3)


def test_real_roots_in_box_all_have_norm_two(cd_any):
    roots = real_roots_in_box(cd_any, 200)
    assert ALPHA1 in roots and -ALPHA2 in roots
    assert all(norm(cd_any, r) == 2 for r in roots)
    assert all(r.is_positive() or r.is_negative() for r in roots)


def test_real_roots_in_box_known_small_roots(cd3):
    positive = {r for r in real_roots_in_box(cd3, 10) if r.is_positive()}
    assert positive == {RootVec(1, 0), RootVec(0, 1), RootVec(1, 3), RootVec(3, 1), RootVec(3, 8), RootVec(8, 3)}


def test_norm_two_vectors_are_exactly_the_weyl_orbit(cd_any):
    bound = 40
    orbit = {r for r in real_roots_in_box(cd_any, bound) if r.is_positive()}
    norm_two = {
        RootVec(c1, c2)
        for c1 in range(bound + 1)
        for c2 in range(bound + 1)
        if (c1, c2) != (0, 0) and is_real_root(cd_any, RootVec(c1, c2))
    }
    assert orbit == norm_two


def test_rho_and_varpi2_pairings(cd_any):
    assert simple_pairings(cd_any, rho(cd_any)) == (1, 1)
    assert simple_pairings(cd_any, varpi2(cd_any)) == (0, 1)


def test_pair_is_linear_in_coroot(cd3):
    lam = Weight(0.5, -1.25)
    alpha = RootVec(3, 8)
    p1, p2 = simple_pairings(cd3, lam)
    assert pair(cd3, lam, alpha) == pytest.approx(3 * p1 + 8 * p2)


def test_reflect_weight_matches_pairing_rule(cd3):
    lam = Weight(2.0, -1.0)
    p1, _ = simple_pairings(cd3, lam)
    image = reflect_weight(cd3, 1, lam)
    assert image == Weight(lam.s1 - p1, lam.s2)


def test_torus_eval_of_rho(cd3, a22):
    # ρ(h_{α_i}) = 1 이므로 a^ρ = x₁x₂
    assert torus_eval(cd3, a22, rho(cd3)) == pytest.approx(4.0, rel=1e-14)


def test_torus_eval_of_zero_weight(cd3, a22):
    assert torus_eval(cd3, a22, Weight(0, 0)) == 1.0


def test_torus_eval_overflow_is_infinite(cd3, a22):
    assert torus_eval(cd3, a22, Weight(-5000, 0)) == math.inf


def test_torus_eval_complex_weight(cd3):
    a = TorusPoint(math.e, 1.0)
    value = torus_eval(cd3, a, Weight(0.5j, 0))
    # μ(h₁) = 2·0.5i, ln x₁ = 1
    assert value == pytest.approx(complex(math.cos(1.0), math.sin(1.0)), rel=1e-14)


@pytest.mark.parametrize(
    "mu, mu_prime",
    [
        (Weight(1, 0), Weight(0, 1)),
        (Weight(0.5, -1.25), Weight(-2, 3.5)),
        (Weight(2 + 1j, 0.5), Weight(-0.25j, 1)),
        (rho(new_cartan(3)) * -3, Weight(1, 3)),
    ],
)
def test_torus_eval_is_multiplicative(cd3, mu, mu_prime):
    a = TorusPoint(2.0, 1.8)
    expected = torus_eval(cd3, a, mu) * torus_eval(cd3, a, mu_prime)
    assert torus_eval(cd3, a, mu + mu_prime) == pytest.approx(expected, rel=1e-12)


def test_torus_point_rejects_nonpositive():
    with pytest.raises(ValueError):
        TorusPoint(0.0, 1.0)


def test_in_A_prime(cd3, a22):
    assert in_A_prime(cd3, a22)
    assert not in_A_prime(cd3, TorusPoint(0.5, 0.5))
    assert not in_A_prime(cd3, TorusPoint(1.0, 1.0))


def test_godement_boundary_is_excluded(cd3):
    assert godement(cd3, Weight(3, 3))
    # ν(h_{α_i}) = -2 정확히 경계
    assert not godement(cd3, Weight(2, 2))
    assert not godement(cd3, Weight(0, 0))
    assert godement(cd3, Weight(3 + 1j, 3 - 2j))


def test_godement_growth_constants_positive(cd3):
    for nu in (Weight(3, 3), Weight(3.2, 3), Weight(5, 4.5)):
        assert godement(cd3, nu)
        c_nu, d_nu = godement_growth_constants(cd3, nu)
        assert c_nu > 0 and d_nu > 0


def test_godement_growth_constants_swap(cd3):
    c_nu, d_nu = godement_growth_constants(cd3, Weight(3.2, 3))
    c_sw, d_sw = godement_growth_constants(cd3, Weight(3, 3.2))
    assert c_nu == pytest.approx(d_sw)
    assert d_nu == pytest.approx(c_sw)
