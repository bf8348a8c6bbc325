import pytest

from artifact.core import Inapplicable, verify
from artifact.drivers import construct, forest_cases, multisets


def test_construct_routes():
    for text in ("1^6", "1^6,7^8", "2^2,3^3", "5^7,6^4", "1^5,7^2,8^6", "1^7,5^9,7^9", "1,4^4,6^6"):
        r = construct(text)
        assert verify(r, text).ok and r.standard


def test_construct_inapplicable():
    with pytest.raises(Inapplicable):
        construct("2^4")
    with pytest.raises(Inapplicable):
        construct("1,2,3,4")


def test_multisets_enumeration():
    ms = multisets((1, 2, 3), 4)
    assert len(ms) == 10
    assert all(m.size() == 3 for m in ms)


def test_forest_cases_include_divisor_and_small_k():
    cases = forest_cases(8, 1)
    assert (4, 8, 1) in cases and (3, 8, 1) in cases and (3, 6, 1) in cases
    assert (4, 5, 1) not in cases
