"""Krawtchouk/Lloyd identities, exact and exhaustive over their stated ranges."""

from math import comb

import pytest

from terncode.kraw import binomial, krawtchouk, lloyd


def brute_krawtchouk(t, x, m, h=3):
    """Independent evaluation of the defining sum (the test oracle)."""
    total = 0
    for j in range(t + 1):
        cj = comb(x, j) if 0 <= j <= x else 0
        cmj = comb(m - x, t - j) if 0 <= t - j <= m - x else 0
        total += (-1) ** j * (h - 1) ** (t - j) * cj * cmj
    return total


def test_binomial_edges():
    assert binomial(5, 0) == 1
    assert binomial(5, 6) == 0
    assert binomial(5, -1) == 0


def test_krawtchouk_at_zero():
    for m in range(1, 15):
        for t in range(m + 1):
            assert krawtchouk(t, 0, m) == 2**t * comb(m, t)


def test_krawtchouk_degree_zero():
    for m in range(1, 10):
        for x in range(m + 1):
            assert krawtchouk(0, x, m) == 1


def test_krawtchouk_frozen_value():
    # K_2(3, 9) by the defining sum: 4*C(6,2) - 2*3*C(6,1) + C(3,2) = 60 - 36 + 3
    assert brute_krawtchouk(2, 3, 9) == 27
    assert krawtchouk(2, 3, 9) == 27


def test_lloyd_frozen_value():
    # Psi_3(2, 9) as the brute-force partial sum of the defining formula
    assert sum(brute_krawtchouk(t, 2, 9) for t in range(4)) == 196
    assert lloyd(3, 2, 9) == 196


def test_lloyd_at_one():
    for m in range(2, 15):
        for k in range(m):
            assert lloyd(k, 1, m) == 2**k * comb(m - 1, k)


def test_lloyd_degree_zero():
    for m in range(1, 8):
        for x in range(m + 1):
            assert lloyd(0, x, m) == 1


def test_matches_brute_force():
    for m in range(1, 11):
        for x in range(m + 1):
            for t in range(m + 1):
                assert krawtchouk(t, x, m) == brute_krawtchouk(t, x, m)


def test_invalid_points():
    with pytest.raises(ValueError):
        krawtchouk(3, 0, 2)
    with pytest.raises(ValueError):
        krawtchouk(1, 5, 4)
    with pytest.raises(ValueError):
        lloyd(1, -1, 4)


# --- the identity suite over the stated exhaustive ranges -------------------


def test_lloyd_shift_identity_m_le_20():
    # Psi_k(x, m) = K_k(x-1, m-1) for 1 <= x <= m, 1 <= k <= m-1
    for m in range(2, 21):
        for x in range(1, m + 1):
            for k in range(1, m):
                assert lloyd(k, x, m) == krawtchouk(k, x - 1, m - 1)


def test_lloyd_bound_m_le_20():
    # |Psi_k(x, m)| <= 2^k C(m-1, k), tight at x = 1
    for m in range(2, 21):
        for k in range(1, m):
            bound = 2**k * comb(m - 1, k)
            assert lloyd(k, 1, m) == bound
            for x in range(1, m + 1):
                assert abs(lloyd(k, x, m)) <= bound


def test_positivity_combinations_m_le_20():
    # Both combinations expand as sums of nonnegative terms.  The second is
    # strictly positive throughout; the first degenerates to exactly 0 at
    # the single boundary point (t, i) = (1, m), since K_1(m, m) = -m, and
    # is strictly positive everywhere else in the window.
    for m in range(3, 21):
        for i in range(1, m + 1):
            for t in range(1, (m - 1) // 2 + 1):
                base = 2**t * comb(m, t)
                plus_two = base + 2 * krawtchouk(t, i, m)
                if (t, i) == (1, m):
                    assert plus_two == 0
                else:
                    assert plus_two > 0
                assert base - krawtchouk(t, i, m) > 0


def test_shell_dominance_m_le_24():
    # a_k > sum_{j<k} a_j with a_j = 2^j C(m, j), for m >= 9
    for m in range(9, 25):
        a = [2**j * comb(m, j) for j in range(m + 1)]
        for k in range(2, (m - 1) // 2 + 1):
            assert a[k] > sum(a[1:k])


def test_partial_sum_avoids_lloyd_offset_m_le_20():
    # sum_{j<=k} 2^j C(m,j) != -2 (Psi_k(i,m) - 1) for all 1 <= i <= m
    for m in range(5, 21):
        for k in range(2, (m - 1) // 2 + 1):
            lhs = sum(2**j * comb(m, j) for j in range(1, k + 1))
            for i in range(1, m + 1):
                assert lhs != -2 * (lloyd(k, i, m) - 1)


def test_magnitudes_fit_int64():
    # numpy paths carry doubled real parts and their 4-term sums in int64
    assert 8 * 3**16 < 2**62
    for m in (20, 24):
        assert 2**m * comb(m, m // 2) < 2**62
