from g2quat.modforms import dim_cusp_forms

# dimensions of S_k(SL2(Z)) for even k = 12..60, from the ring generated by E4, E6
CLASSICAL = {12: 1, 14: 0, 16: 1, 18: 1, 20: 1, 22: 1, 24: 2, 26: 1, 28: 2, 30: 2, 32: 2, 34: 2, 36: 3,
             38: 2, 40: 3, 42: 3, 44: 3, 46: 3, 48: 4, 50: 3, 52: 4, 54: 4, 56: 4, 58: 4, 60: 5}


def _monomial_count(k: int) -> int:
    # dim M_k = #{(a, b) : 4a + 6b = k}; cusp forms lose one dimension for k >= 4
    if k % 2 or k < 0:
        return 0
    m = sum(1 for b in range(k // 6 + 1) if (k - 6 * b) % 4 == 0)
    return max(m - 1, 0) if k >= 4 else 0


def test_examples():
    assert dim_cusp_forms(2) == 0
    assert dim_cusp_forms(14) == 0
    assert (dim_cusp_forms(12), dim_cusp_forms(24), dim_cusp_forms(36)) == (1, 2, 3)


def test_small_and_odd():
    assert all(dim_cusp_forms(k) == 0 for k in range(-5, 12))
    assert all(dim_cusp_forms(k) == 0 for k in range(1, 201, 2))


def test_against_classical_table():
    for k, d in CLASSICAL.items():
        assert dim_cusp_forms(k) == d


def test_against_monomial_count():
    for k in range(0, 201):
        assert dim_cusp_forms(k) == _monomial_count(k)


def test_periodicity():
    for k in range(4, 200, 2):
        assert dim_cusp_forms(k + 12) == dim_cusp_forms(k) + 1
