import cmath

import pytest

from g2quat.errors import BoundExceeded
from g2quat.rootlattice import BETA, LAMBDA1, LAMBDA2, SHORT_ROOTS, WEYL_GROUP, ZERO, Weight, dominant_weights
from g2quat.weylchar import (
    SEVEN_WEIGHTS,
    TorusElement,
    char_at,
    char_at_limit,
    char_from_weights,
    eval_weight,
    freudenthal_multiplicities,
    tensor_decompose,
    weyl_dim,
)

SAMPLE_TORI = [TorusElement.identity(), TorusElement(2, 0, 2), TorusElement(3, 1, 3), TorusElement(7, 1, 5), TorusElement(12, 1, 9), TorusElement(5, 2, 4)]


def test_weyl_dim_examples():
    assert weyl_dim(ZERO) == 1
    assert weyl_dim(LAMBDA1) == 7
    assert weyl_dim(BETA) == 14
    assert weyl_dim(2 * LAMBDA1) == 27
    assert weyl_dim(LAMBDA1 + LAMBDA2) == 64
    with pytest.raises(ValueError):
        weyl_dim(Weight(-1, 1))


def test_freudenthal_agrees_with_weyl_dim():
    for lam in dominant_weights(10):
        mults = freudenthal_multiplicities(lam)
        assert sum(mults.values()) == weyl_dim(lam)
        # Weyl invariance of multiplicities
        for mu, m in mults.items():
            assert all(mults[g(mu)] == m for g in WEYL_GROUP)


def test_seven_dim_weights():
    assert set(freudenthal_multiplicities(LAMBDA1)) == set(SEVEN_WEIGHTS)
    assert freudenthal_multiplicities(BETA)[ZERO] == 2


def test_bound():
    with pytest.raises(BoundExceeded):
        freudenthal_multiplicities(Weight.from_fundamental(10, 10), bound=1000)


def test_eval_weight():
    t = TorusElement(3, 2, 0)
    assert eval_weight(Weight(2, 0), t) == eval_weight(Weight(4, 0), TorusElement(6, 2, 0))
    assert eval_weight(Weight(2, 0), TorusElement.identity()) == 1
    assert eval_weight(ZERO, t) == 1
    z = cmath.exp(2j * cmath.pi * 4 / 6)
    assert abs(complex(eval_weight(Weight(2, 0), t)) - z) < 1e-12


def test_torus_reduction_and_order():
    t = TorusElement(4, 5, 7)
    assert (t.c, t.d) == (1, 3)
    assert TorusElement(2, 1, 1).order() == 2
    assert TorusElement(4, 2, 2).normalized() == TorusElement(2, 1, 1)
    assert TorusElement(6, 0, 0).is_identity()
    with pytest.raises(ValueError):
        TorusElement(3, 1, 0)


def test_char_at_identity_is_dimension():
    for lam in dominant_weights(9)[:50]:
        assert char_at(lam, TorusElement.identity()) == weyl_dim(lam)


def test_char_matches_weight_sum_at_sample_points():
    for lam in dominant_weights(8):
        mults = freudenthal_multiplicities(lam)
        for t in SAMPLE_TORI:
            assert char_at(lam, t) == char_from_weights(mults, t)


def test_limit_agrees_with_direct_at_regular_points():
    for t in [TorusElement(7, 1, 5), TorusElement(12, 1, 9), TorusElement(8, 1, 5)]:
        assert t.is_regular()
        for lam in dominant_weights(4):
            assert char_at_limit(lam, t) == char_at(lam, t)


def test_tensor_products():
    assert tensor_decompose(LAMBDA1, LAMBDA1) == {2 * LAMBDA1: 1, BETA: 1, LAMBDA1: 1, ZERO: 1}
    for lam in dominant_weights(3):
        for mu in dominant_weights(2):
            dec = tensor_decompose(lam, mu)
            assert sum(m * weyl_dim(nu) for nu, m in dec.items()) == weyl_dim(lam) * weyl_dim(mu)


def test_canonical_is_orbit_invariant():
    t = TorusElement(12, 1, 9)
    reps = {t.act(w).canonical() for w in WEYL_GROUP}
    assert len(reps) == 1
    assert len(t.stabilizer()) == 1


def test_irregular_point_character():
    # order-2 central-looking element: eigenvalues on the 7 are (1, 1, 1, -1, -1, -1, -1)
    t = TorusElement(2, 0, 2)
    assert not t.is_regular()
    assert char_at(LAMBDA1, t) == -1
    assert sum(1 for r in SHORT_ROOTS if t.exponent(r) == 0) == 2
