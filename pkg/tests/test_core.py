import pytest

from artifact.core import (LengthMultiset, MultisetParseError, Realization, VerificationFailure,
                           admissible, certify, is_type_cy, lengths_of, reduce_cyclic, type_cy_edges,
                           verify)


def test_parse_and_print():
    L = LengthMultiset.parse("1^5,7^2,8^6")
    assert L.as_dict() == {1: 5, 7: 2, 8: 6}
    assert str(L) == "1^5,7^2,8^6"
    assert str(LengthMultiset.parse("{1, 4^4, 6^6}")) == "1,4^4,6^6"
    assert LengthMultiset.parse("") == LengthMultiset()


@pytest.mark.parametrize("bad", ["1^", "x", "0^3", "3^0", "1^2^3"])
def test_parse_rejects(bad):
    with pytest.raises(MultisetParseError):
        LengthMultiset.parse(bad)


def test_no_zero_multiplicity_stored():
    L = LengthMultiset({1: 0, 2: 3})
    assert L.support() == {2}
    assert L.size() == 3


def test_lengths_of():
    assert lengths_of([0, 3, 1, 4, 2, 5]) == {2: 2, 3: 3}
    assert lengths_of([0]) == {}
    assert lengths_of([0, 8, 9, 1, 2, 10, 11, 3, 4, 12, 5, 13, 6, 7]) == LengthMultiset.parse("1^5,7^2,8^6")


def test_verify():
    rep = verify([0, 3, 1, 4, 2, 5], "2^2,3^3")
    assert rep.ok and rep.perfect
    assert not verify([0, 1, 1, 2]).hamiltonian
    columns = [0, 5, 10, 15, 1, 6, 11, 16, 2, 7, 12, 17, 3, 8, 13, 18, 4, 9, 14, 19]
    rep = verify(columns, "5^15,14^4")
    assert rep.ok and rep.perfect
    assert rep.cyclic_realized == {5: 15, 6: 4}


def test_verify_reports_mismatch():
    rep = verify([0, 1, 2], "2^2")
    assert not rep.ok
    assert rep.problems


def test_certify_raises():
    with pytest.raises(VerificationFailure):
        certify([0, 2, 1], "1^2")
    with pytest.raises(VerificationFailure):
        certify([1, 0, 2], "1,2", standard=True)


def test_reduce_cyclic():
    assert reduce_cyclic({17: 2}, 20) == {3: 2}
    assert reduce_cyclic({5: 15, 14: 4}, 20) == {5: 15, 6: 4}
    assert reduce_cyclic({1: 4}, 8) == {1: 4}
    L = reduce_cyclic({3: 2, 9: 5}, 11)
    assert reduce_cyclic(L, 11) == L


def test_type_cy():
    assert is_type_cy([0, 1, 2, 3], 2)
    assert not is_type_cy([0, 2, 1, 3], 2)
    assert type_cy_edges(10, 4) == [(8, 9), (6, 7)]


def test_admissible():
    assert not admissible({3: 5}, 6)
    assert admissible({1: 9}, 10)
    assert admissible({1: 19, 19: 8, 20: 15}, 43)
    with pytest.raises(ValueError):
        admissible({1: 8, 15: 19, 16: 12}, 43)


def test_realization_json_round_trip():
    r = Realization([0, 3, 1, 4, 2, 5])
    back = Realization.from_json(r.to_json())
    assert back == r
    assert r.to_dict()["perfect"] is True
    with pytest.raises(MultisetParseError):
        Realization.from_json("{not json")
