import pytest

from artifact.core import Inapplicable, LengthMultiset, Realization, is_type_cy, lengths_of, verify
from artifact.fauxsets import omega
from artifact.paircore import perfect_two, standard_two
from artifact.transforms import (bridge, complement, concat, grow_at, grow_cy, growable_anchors,
                                 interior_reversal, prepend_ones, standardize, translate)


def test_translate():
    assert translate([0, 1], 3) == [3, 4]
    assert translate([0], 0) == [0]


def test_complement():
    assert complement(Realization([0, 1, 2])).path == (2, 1, 0)
    r = Realization([0, 3, 1, 4, 2, 5])
    assert complement(r).path == (5, 2, 4, 1, 3, 0)
    assert complement(complement(r)) == r
    assert complement(r).lengths == r.lengths


def test_standardize_prefers_identity():
    assert standardize([0, 2, 1]).path == (0, 2, 1)
    assert standardize([1, 2, 0]).path == (0, 2, 1)


def test_concat_unions_multisets():
    g = standard_two(2, 3, "first")
    h = perfect_two(2, 3)
    r = concat(g, h)
    assert verify(r, "2^4,3^5").ok
    assert r.standard


def test_concat_of_unit_paths():
    r = concat(Realization([0, 1]), Realization([0, 1]))
    assert r.path == (0, 1, 2)


def test_prepend_ones():
    base = Realization([0, 8, 9, 1, 2, 10, 11, 3, 4, 12, 5, 13, 6, 7])
    assert prepend_ones(base, 0) == base
    assert verify(prepend_ones(base, 3), "1^8,7^2,8^6").ok
    r = prepend_ones(perfect_two(2, 3), 2)
    assert verify(r, "1^2,2^2,3^3").ok and r.perfect


def test_interior_reversal_involution():
    r = perfect_two(5, 6)
    assert interior_reversal(interior_reversal(r)) == r


def test_bridge():
    assert bridge([[0, 3], [1, 4], [2, 5]], (2, 2)) == [0, 3, 1, 4, 2, 5]
    assert bridge([[0]], ()) == [0]
    with pytest.raises(Inapplicable):
        bridge([[0, 3], [1, 4]], (5,))


def test_grow_cy_identity_and_full():
    r = omega(14, 7, 7)
    assert grow_cy(r, 7, 0) == r
    if is_type_cy(r, 7):
        g = grow_cy(r, 7, 7)
        assert lengths_of(g) == r.lengths + {7: 7}


def test_grow_at_delta():
    r = omega(23, 7, 16)
    anchors = growable_anchors(r, 7)
    assert anchors
    for m in anchors:
        g = grow_at(r, 7, m)
        assert g.v == r.v + 7
        assert verify(g, r.lengths + LengthMultiset({7: 7})).ok


def test_grow_at_rejects_bad_anchor():
    with pytest.raises(ValueError):
        grow_at(omega(14, 7, 7), 7, 3)
