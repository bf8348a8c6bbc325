import pytest

from artifact.core import Inapplicable, LengthMultiset, lengths_of, verify
from artifact.fauxsets import fauxset, omega, omega_or_curl, qstar, tail_curl, traversal


def test_fauxset_and_traversal():
    assert fauxset(12, 7, 6) == [6]
    assert fauxset(25, 7, 0) == [0, 7, 14, 21]
    assert lengths_of(traversal(25, 7, 0)) == {7: 3}
    assert qstar(25, 7, 5) == 2
    assert qstar(25, 7, 2) == 3


@pytest.mark.parametrize("v,x,b", [(25, 7, 18), (29, 8, 21), (12, 7, 5), (22, 7, 15)])
def test_omega_reference_cases(v, x, b):
    r = omega(v, x, b)
    assert verify(r, {1: x - 1, x: b}).ok and r.standard


def test_omega_exact_path():
    assert omega(12, 7, 5).path == (0, 7, 6, 5, 4, 11, 10, 3, 2, 9, 8, 1)


def test_omega_trivial():
    assert omega(7, 7, 0).path == tuple(range(7))


def test_omega_exception_case():
    # x odd, b mod x odd and > 1, b div x >= 1
    with pytest.raises(Inapplicable):
        omega(24, 7, 17)


@pytest.mark.parametrize("v,x,b", [(25, 7, 17), (29, 8, 20), (12, 7, 4), (22, 7, 14)])
def test_tail_curl_reference_cases(v, x, b):
    r = tail_curl(v, x, b)
    assert verify(r, {1: x, x: b}).ok and r.standard


def test_tail_curl_exact_path():
    assert tail_curl(12, 7, 4).path == (0, 7, 6, 5, 4, 11, 10, 3, 2, 1, 8, 9)
    assert tail_curl(8, 7, 0).path == tuple(range(8))


def test_omega_or_curl_covers_small_range():
    for x in range(2, 9):
        for b in range(0, 3 * x):
            for a in (x, x + 3):
                r = omega_or_curl(x, a, b)
                assert verify(r, LengthMultiset.of((1, a), (x, b))).ok


def test_omega_or_curl_at_x_minus_one_matches_omega():
    for x in range(2, 9):
        for b in range(0, 3 * x):
            try:
                r = omega(b + x, x, b)
            except Inapplicable:
                continue
            assert omega_or_curl(x, x - 1, b) == r


def test_omega_or_curl_needs_ones():
    with pytest.raises(Inapplicable):
        omega_or_curl(7, 5, 3)
