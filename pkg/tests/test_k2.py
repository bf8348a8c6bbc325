import pytest

from artifact.core import Inapplicable, LengthMultiset, is_type_cy, lengths_of, verify
from artifact.k2 import (SPECIAL_BASES, k2_dispatch, small_b, small_bc, small_c, theta,
                         theta_double, theta_prime)


def test_theta_examples():
    assert theta(3, 5, 2, 0) == [0, 1, 2, 5, 6, 3]
    assert theta(3, 5, 0, 2) == [0, 5, 6, 1, 2, 3]
    t = 20
    assert theta(9, t, 8, 0) == [0, 1, 2, t, t + 1, 3, 4, t + 2, t + 3, 5, 6, t + 4, t + 5,
                                 7, 8, t + 6, t + 7, 9]


def test_theta_prime_examples():
    p = theta_prime(3, 5, 1, 1, "high")
    assert p == [0, 1, 6, 5, 2]
    assert lengths_of(p) == {1: 2, 3: 1, 5: 1}
    assert 3 not in p


def test_theta_prime_keeps_upper_ones():
    for s in range(3, 16, 2):
        for t in range(s + 1, s + 11):
            for c in range(1, s):
                p = theta_prime(s, t, s - 1 - c, c, "high")
                edges = {frozenset(e) for e in zip(p, p[1:])}
                for i in range(0, s - 2, 2):
                    assert frozenset((t + i, t + i + 1)) in edges


def test_theta_double():
    p = theta_double(5, 7, 2, 2)
    assert p[0] == 0 and p[-1] == 3
    assert sum(lengths_of(p).values()) == 5 - 2 + 2 + 2


def test_theta_rejects():
    with pytest.raises(ValueError):
        theta(4, 9, 2, 1)
    with pytest.raises(ValueError):
        theta(5, 9, 2, 1)
    with pytest.raises(ValueError):
        theta(9, 9, 4, 4)


def test_small_bc_examples():
    r = small_bc(7, 2, 2)
    assert verify(r, "1^6,5^2,7^2").ok and r.v == 11
    assert small_bc(7, 0, 0).path == tuple(range(7))
    assert verify(small_bc(7, 5, 1), "1^6,5^5,7").ok


def test_small_bc_range():
    for y in range(4, 18):
        for b in range(y):
            for c in range(y - b):
                r = small_bc(y, b, c)
                assert verify(r, LengthMultiset.of((1, y - 1), (y - 2, b), (y, c))).ok
    with pytest.raises(Inapplicable):
        small_bc(7, 4, 3)


def test_small_b_examples():
    r = small_b(10, 3, 7)
    assert verify(r, "1^9,8^3,10^7").ok and is_type_cy(r, 10)
    r = small_b(9, 2, 7)
    assert r.standard and r.lengths[7] == 2 and r.lengths[9] == 7


def test_special_bases_match_keys():
    for (y, _step, b, c), path in SPECIAL_BASES.items():
        got = lengths_of(path)
        assert got.get(y - 2, 0) == b and got.get(y, 0) == c
        assert sorted(path) == list(range(len(path)))


def test_small_c_examples():
    r = small_c(10, 8, 2)
    assert r.standard and is_type_cy(r, 8)
    r = small_c(9, 6, 1)
    assert r.path[-1] == 15
    assert verify(r, "1^8,7^6,9").ok


@pytest.mark.parametrize("y", range(5, 13))
def test_small_b_and_small_c_ranges(y):
    for b in range(1, y):
        for c in range(max(0, y - b), 2 * y + 1):
            r = small_b(y, b, c)
            assert r.standard and r.lengths.get(y - 2, 0) == b and r.lengths.get(y, 0) == c
            assert r.lengths[1] <= y
    for c in range(1, y - 1):
        for b in range(max(0, y - c), 2 * y + 1):
            r = small_c(y, b, c)
            assert r.standard and r.lengths.get(y - 2, 0) == b and r.lengths.get(y, 0) == c


def test_dispatch_examples():
    assert verify(k2_dispatch(9, 9, 14, 20), "1^9,7^14,9^20").ok
    assert verify(k2_dispatch(8, 8, 10, 12), "1^8,6^10,8^12").ok
    assert k2_dispatch(6, 6, 0, 0).path == tuple(range(7))


def test_dispatch_larger_y():
    for y in (19, 20):
        for b, c in ((0, 3 * y), (2 * y + 1, y + 3), (y - 1, 2 * y - 1), (3 * y, 0)):
            r = k2_dispatch(y, y, b, c)
            assert verify(r, LengthMultiset.of((1, y), (y - 2, b), (y, c))).ok and r.standard
