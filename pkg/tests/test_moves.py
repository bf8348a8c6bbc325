import pytest

from artifact.core import Inapplicable, LengthMultiset, lengths_of, verify
from artifact.fauxsets import omega, omega_or_curl
from artifact.moves import (TOWARD_Y, TOWARD_YM2, beta_apply, beta_neighbors, gamma_moves,
                            local_search)
from artifact.oracle import search


def test_beta_apply_examples():
    p = beta_apply([0, 1, 2, 5, 6, 3], 5, TOWARD_Y, 2)
    assert p == [0, 1, 6, 5, 2, 3]
    assert lengths_of(p) == {1: 3, 3: 1, 5: 1}
    q = beta_apply(p, 5, TOWARD_Y, 1, form=2)
    assert q == [0, 5, 6, 1, 2, 3]
    assert lengths_of(q) == {1: 3, 5: 2}


def test_beta_round_trip():
    p = [0, 1, 2, 5, 6, 3]
    q = beta_apply(p, 5, TOWARD_Y, 2)
    assert beta_apply(q, 5, TOWARD_YM2, 2) == p


def test_beta_missing_window():
    with pytest.raises(Inapplicable):
        beta_apply([0, 1, 2, 3], 5, TOWARD_Y, 2)


def test_beta_neighbors_swap_one_length():
    p = [0, 1, 2, 5, 6, 3]
    base = lengths_of(p)
    moves = list(beta_neighbors(p, 5))
    assert moves
    for _desc, q in moves:
        assert sorted(q) == sorted(p)
        assert lengths_of(q) == base - {3: 1} + {5: 1}


def test_gamma_moves_on_small_path():
    p = [0, 3, 1, 4, 2, 5]
    base = lengths_of(p)
    for (_g, kind, *_rest), q in gamma_moves(p, 3):
        assert verify(q).hamiltonian
        if kind == "y_to_ym1":
            assert lengths_of(q) == base - {3: 1} + {2: 1}
        else:
            assert lengths_of(q) == base - {2: 1} + {3: 1}
    assert gamma_moves([0, 1], 3) == []


def test_local_search_identity_and_size_check():
    r = omega(14, 7, 7)
    assert local_search(r, r.lengths) == r
    with pytest.raises(Inapplicable):
        local_search(r, "1^3")


def test_local_search_reaches_small_targets():
    for y in range(4, 8):
        for b in range(1, y):
            for c in range(1, y):
                target = LengthMultiset.of((1, y), (y - 1, b), (y, c))
                if search(target, "standard") is None:
                    continue
                start = omega_or_curl(y, y, b + c)
                r = local_search(start, target, budget=100_000)
                assert verify(r, target).ok and r.standard
