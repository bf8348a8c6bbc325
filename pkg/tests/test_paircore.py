from math import gcd

import pytest

from artifact.core import LengthMultiset, verify
from artifact.paircore import (forest_realization, gamma_forest, perfect_two, perfect_two_split,
                               standard_two, upper_end_order)


def test_perfect_two_examples():
    assert perfect_two(14, 5).path == (0, 5, 10, 15, 1, 6, 11, 16, 2, 7, 12, 17, 3, 8, 13, 18, 4, 9, 14, 19)
    assert perfect_two(9, 7).path[:10] == (0, 7, 14, 5, 12, 3, 10, 1, 8, 15)
    assert perfect_two(2, 3).path == (0, 3, 1, 4, 2, 5)


def test_perfect_two_rejects_non_coprime():
    with pytest.raises(ValueError):
        perfect_two(4, 6)


def test_split():
    first, second = perfect_two_split(5, 6)
    assert verify(second, "5^7,6^4").ok and second.perfect
    a, b = perfect_two_split(2, 3)
    assert a.lengths == {2: 2, 3: 3}
    assert b.lengths == {2: 4, 3: 1}


def test_standard_two():
    assert standard_two(2, 3, "first").path == (0, 3, 1, 4, 2)
    for x in range(2, 9):
        for y in range(x + 1, 12):
            if gcd(x, y) != 1:
                continue
            for which in ("first", "second"):
                r = standard_two(x, y, which)
                assert r.standard and not r.perfect


def test_gamma_forest():
    f = gamma_forest(3, 8, 3)
    assert f.v == 42 and len(f.paths) == 3
    lengths = LengthMultiset()
    for p in f.paths:
        lengths = lengths + LengthMultiset(abs(a - b) for a, b in zip(p, p[1:]))
    assert lengths == {5: 15, 8: 24}
    g = gamma_forest(2, 6, 1)
    assert sorted(p[0] for p in g.paths) == [0, 1]
    assert sorted(p[-1] for p in g.paths) == [10, 11]


def test_upper_end_orders_are_cyclic_shifts():
    for y in range(3, 21):
        for k in range(2, y):
            for j in (1, 2, 3):
                order = upper_end_order(gamma_forest(k, y, j))
                shifts = [tuple((i + s) % k for i in range(k)) for s in range(k)]
                rev = [tuple((s - i) % k for i in range(k)) for s in range(k)]
                assert order in shifts or order in rev


def test_forest_realization_examples():
    assert forest_realization(2, 6, 1).path == (0, 6, 2, 8, 4, 10, 11, 5, 9, 3, 7, 1)
    r = forest_realization(3, 8, 3)
    assert verify(r, "1^2,5^15,8^24").ok and r.perfect
    r = forest_realization(3, 6, 1)
    assert verify(r, "1^2,3^3,6^6").ok and r.perfect
