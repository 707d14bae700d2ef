from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from g2quat import rootlattice as rl
from g2quat.rootlattice import Coweight, Weight

weights = st.builds(lambda a, b: Weight(a, a + 2 * b), st.integers(-50, 50), st.integers(-50, 50))


def test_parity_enforced():
    with pytest.raises(ValueError):
        Weight(1, 0)
    with pytest.raises(ValueError):
        Coweight(0, 1)


@pytest.mark.parametrize(
    "w, c, expected",
    [
        (rl.ALPHA1, rl.ALPHA1_CO, 2),
        (rl.E2x2, rl.ALPHA1_CO, 3),
        (rl.E1x2, rl.ALPHA2_CO, 1),
        (rl.E1x2, rl.ALPHA1_CO, -1),
        (rl.E2x2, rl.ALPHA2_CO, -1),
    ],
)
def test_pairing_table(w, c, expected):
    assert rl.pairing(w, c) == expected


def test_coroots_match_named_values():
    assert rl.coroot(rl.ALPHA1) == Coweight(-1, 3)
    assert rl.coroot(rl.ALPHA2) == Coweight(1, -1)
    for a in rl.ROOTS:
        assert rl.pairing(a, rl.coroot(a)) == 2


def test_fundamental_weights_dual_to_simple_coroots():
    assert rl.LAMBDA1.fundamental_coords() == (1, 0)
    assert rl.LAMBDA2.fundamental_coords() == (0, 1)
    assert rl.pairing(rl.ALPHA1, rl.LAMBDA1_CO) == 1 and rl.pairing(rl.ALPHA2, rl.LAMBDA1_CO) == 0
    assert rl.pairing(rl.ALPHA1, rl.LAMBDA2_CO) == 0 and rl.pairing(rl.ALPHA2, rl.LAMBDA2_CO) == 1


def test_rho_is_half_sum_of_positive_roots():
    assert sum(rl.POSITIVE_ROOTS, rl.ZERO) == 2 * Weight(4, 2)
    assert rl.RHO_G == Weight(4, 2)


def test_weyl_group_is_dihedral_of_order_12():
    W = rl.WEYL_GROUP
    assert len(W) == 12
    assert len({g.matrix2 for g in W}) == 12
    for g in W:
        for h in W:
            assert (g @ h).sign == g.sign * h.sign
        assert g @ g.inverse() == rl.IDENTITY
    assert rl.S_ALPHA1.sign == rl.S_ALPHA2.sign == -1
    rot = rl.S_ALPHA1 @ rl.S_ALPHA2
    p, n = rot, 1
    while p != rl.IDENTITY:
        p, n = p @ rot, n + 1
    assert n == 6
    assert rl.LONGEST.sign == 1
    assert rl.LONGEST(Weight(3, 5)) == Weight(-3, -5)


def test_omega_h_is_sign_changes():
    assert len(rl.OMEGA_H) == 4
    assert {g(Weight(1, 3)) for g in rl.OMEGA_H} == {Weight(x, y) for x in (1, -1) for y in (3, -3)}


def test_weyl_act_examples():
    assert rl.S_ALPHA2(rl.RHO_G) == Weight(1, 3)
    assert rl.S_ALPHA1(rl.BETA) == rl.BETA
    assert rl.IDENTITY(Weight(5, 7)) == Weight(5, 7)
    # reflections on 2e1, 2e2
    assert rl.S_ALPHA1(rl.E1x2) == Weight(1, 1)
    assert rl.S_ALPHA1(rl.E2x2) == Weight(3, -1)


@given(weights)
def test_weyl_action_preserves_form_and_pairing(w):
    for g in rl.WEYL_GROUP:
        gw = g(w)
        assert rl.inner(gw, gw) == rl.inner(w, w)
        for c in (rl.ALPHA1_CO, rl.RHO_CO, Coweight(3, 7)):
            assert rl.pairing(gw, g.act_coweight(c)) == rl.pairing(w, c)


@given(weights)
def test_orbit_size_and_dominant_conjugate(w):
    orb = rl.weyl_orbit(w)
    assert 12 % len(orb) == 0
    assert (len(orb) == 12) == rl.is_regular(w)
    d = rl.dominant_conjugate(w)
    assert rl.is_dominant(d) and d in orb
    assert sum(rl.is_dominant(x) for x in orb) == 1


def test_dominance_examples():
    assert rl.is_dominant(rl.RHO_G)
    assert rl.is_dominant(rl.BETA)
    assert not rl.is_dominant(rl.ALPHA1)
    assert rl.weyl_orbit(rl.ZERO) == {rl.ZERO}
    assert len(rl.weyl_orbit(rl.RHO_G)) == 12
    assert len(rl.weyl_orbit(rl.BETA)) == 6


def test_inner_product_normalization():
    assert {rl.inner(a, a) for a in rl.SHORT_POSITIVE} == {Fraction(2)}
    assert {rl.inner(a, a) for a in rl.LONG_POSITIVE} == {Fraction(6)}


def test_hc_parameter_and_minimal_k_type():
    assert rl.hc_parameter(2) == Weight(1, 3)
    assert rl.hc_parameter(3) == rl.S_ALPHA2(Weight(7, 3))
    for k in range(2, 101):
        assert rl.minimal_k_type(k) == Weight(0, 2 * k)
    with pytest.raises(ValueError):
        rl.hc_parameter(1)


def test_transfer_weights():
    assert rl.transfer_weights(6) == (Weight(15, 5), Weight(16, 4), Weight(0, 10))
    assert rl.transfer_weights(3) == (Weight(6, 2), Weight(7, 1), Weight(0, 4))
    for k in range(3, 201):
        assert rl.transfer_weights(k) == (Weight(3 * k - 3, k - 1), Weight(3 * k - 2, k - 2), Weight(0, 2 * k - 2))
    with pytest.raises(ValueError):
        rl.transfer_weights(2)
