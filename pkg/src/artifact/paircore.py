"""Perfect realizations for two-element supports and spanning linear forests."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import gcd

from .core import Inapplicable, LengthMultiset, Realization, certify
from .fauxsets import traversal
from .transforms import bridge, interior_reversal


def perfect_two(x: int, y: int) -> Realization:
    """Perfect realization of {x^(y-1), y^(x+1)} in K_(x+y+1).

    Residue classes modulo ``y`` are walked upwards. When ``y`` divides
    ``v`` they are taken in natural order; otherwise in the order
    0, t, 2t, ... modulo ``y`` with ``t = y - r + 1``.
    """
    if x <= 1 or y <= 1 or gcd(x, y) != 1:
        raise ValueError(f"need coprime x, y > 1, got ({x}, {y})")
    v = x + y + 1
    r = v % y
    t = 1 if r == 0 else y - r + 1
    order = [(i * t) % y for i in range(y)]
    path = [lab for i in order for lab in traversal(v, y, i)]
    return certify(path, LengthMultiset.of((x, y - 1), (y, x + 1)),
                   perfect=True, what="perfect_two")


def perfect_two_split(x: int, y: int) -> tuple[Realization, Realization]:
    """Perfect realizations of {x^(y-1), y^(x+1)} and {x^(y+1), y^(x-1)}.

    The second is the interior reversal of the first.
    """
    if not 1 < x < y:
        raise ValueError(f"need 1 < x < y, got ({x}, {y})")
    first = perfect_two(x, y)
    second = interior_reversal(first)
    certify(second.path, LengthMultiset.of((x, y + 1), (y, x - 1)),
            perfect=True, what="perfect_two_split")
    return first, second


def standard_two(x: int, y: int, which: str = "first") -> Realization:
    """Drop the final edge of one of the split realizations.

    ``first`` gives {x^(y-1), y^x}, ``second`` gives {x^y, y^(x-1)}.
    """
    first, second = perfect_two_split(x, y)
    if which == "first":
        src, target = first, LengthMultiset.of((x, y - 1), (y, x))
    elif which == "second":
        src, target = second, LengthMultiset.of((x, y), (y, x - 1))
    else:
        raise ValueError("which must be 'first' or 'second'")
    return certify(src.path[:-1], target, standard=True, what="standard_two")


@dataclass(frozen=True)
class LinearForest:
    v: int
    k: int
    paths: tuple[tuple[int, ...], ...]

    def lengths(self) -> LengthMultiset:
        return LengthMultiset(abs(a - b) for p in self.paths for a, b in zip(p, p[1:]))


def gamma_forest(k: int, y: int, j: int) -> LinearForest:
    """The k-path forest realizing {(y-k)^(j(y-k)), y^(jy)} in K_(j(2y-k)+k).

    One block lives on {0..2y-1} with y-edges (i, i+y) and (y-k)-edges
    (k+i, y+i); further blocks are translates by 2y-k sharing k labels.
    Path ``i`` starts at the lower end ``i``.
    """
    if not 0 < k < y or j < 1:
        raise ValueError(f"need 0 < k < y and j >= 1, got k={k}, y={y}, j={j}")
    step = 2 * y - k
    v = j * step + k
    adj: dict[int, list[int]] = {u: [] for u in range(v)}
    for blk in range(j):
        o = blk * step
        for i in range(y):
            adj[o + i].append(o + i + y)
            adj[o + i + y].append(o + i)
        for i in range(y - k):
            adj[o + k + i].append(o + y + i)
            adj[o + y + i].append(o + k + i)
    paths = []
    for i in range(k):
        p, prev = [i], None
        while True:
            nxt = [w for w in adj[p[-1]] if w != prev]
            if not nxt:
                break
            prev = p[-1]
            p.append(nxt[0])
        paths.append(tuple(p))
    forest = LinearForest(v, k, tuple(paths))
    if sorted(u for p in paths for u in p) != list(range(v)):
        raise AssertionError("forest does not span")
    return forest


def upper_end_order(forest: LinearForest) -> tuple[int, ...]:
    """Offsets ``p[-1] - (v - k)`` of each path's upper end, by lower end."""
    return tuple(p[-1] - (forest.v - forest.k) for p in forest.paths)


def _forest_orders(k: int, identity_ends: bool) -> list[tuple[int, ...]]:
    if identity_ends:
        return [tuple(range(k))]
    first = (0,) + tuple(range(k - 1, 0, -1))
    rest = [(0,) + p for p in permutations(range(1, k)) if (0,) + p != first]
    return [first] + rest


def forest_realization(k: int, y: int, j: int) -> Realization:
    """Join the forest's paths with k-1 1-edges.

    Supported when ``k`` divides ``y`` (with ``y/k > 1``), or when
    ``k`` is 2, 3 or 4 and ``y > k + 1``.
    """
    divisible = y % k == 0 and y // k > 1
    small = k in (2, 3, 4) and y > k + 1
    if not (divisible or small):
        raise Inapplicable(f"no forest joining for k={k}, y={y}")
    forest = gamma_forest(k, y, j)
    identity = upper_end_order(forest) == tuple(range(k))
    if not identity and k > 4:
        raise Inapplicable(f"end order {upper_end_order(forest)} unsupported for k={k}")
    target = LengthMultiset.of((1, k - 1), (y - k, j * (y - k)), (y, j * y))
    for order in _forest_orders(k, identity):
        try:
            path = bridge([forest.paths[i] for i in order], [1] * (k - 1), orient=True)
        except Inapplicable:
            continue
        return certify(path, target, standard=True, what="forest_realization")
    raise Inapplicable(f"no 1-edge joining order for k={k}, y={y}, j={j}")
