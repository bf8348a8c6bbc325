"""Local rewrites on paths and a best-first search that chains them.

The five-vertex switch trades a (t-2)-edge for a t-edge, a relocation moves
one vertex and trades a t-edge for a (t-1)-edge.
"""

from __future__ import annotations

import heapq
from typing import Iterator, Mapping, Sequence

from .core import BudgetExhausted, Inapplicable, Realization, certify, lengths_of, multiset

TOWARD_Y = "toward_y"
TOWARD_YM2 = "toward_ym2"


def beta_patterns(y: int, j: int) -> dict[tuple[str, int], tuple[tuple[int, ...], tuple[int, ...]]]:
    """(direction, form) -> (before, after) windows for pivot ``j``."""
    f1_lo = (j - 1, j, y + j - 2, y + j - 1, j + 1)
    f1_hi = (j - 1, y + j - 1, y + j - 2, j, j + 1)
    f2_lo = (j - 1, j, y + j, y + j - 1, j + 1)
    f2_hi = (j - 1, y + j - 1, y + j, j, j + 1)
    return {
        (TOWARD_Y, 1): (f1_lo, f1_hi),
        (TOWARD_Y, 2): (f2_lo, f2_hi),
        (TOWARD_YM2, 1): (f1_hi, f1_lo),
        (TOWARD_YM2, 2): (f2_hi, f2_lo),
    }


def _find_window(p: Sequence[int], window: tuple[int, ...]) -> tuple[int, bool] | None:
    n = len(window)
    rev = window[::-1]
    for i in range(len(p) - n + 1):
        seg = tuple(p[i:i + n])
        if seg == window:
            return i, False
        if seg == rev:
            return i, True
    return None


def beta_apply(p, y: int, direction: str, j: int, form: int | None = None,
               at: int | None = None) -> list[int]:
    """Rewrite one five-vertex window; the middle three vertices are reversed.

    ``toward_y`` turns a (y-2)-edge into a y-edge, ``toward_ym2`` undoes
    it. ``at`` pins the window's start position (checked against the
    pattern), otherwise the window is searched in both reading directions.
    """
    if direction not in (TOWARD_Y, TOWARD_YM2):
        raise ValueError(f"unknown direction {direction!r}")
    path = list(p.path) if isinstance(p, Realization) else list(p)
    pats = beta_patterns(y, j)
    forms = (1, 2) if form is None else (form,)
    for fm in forms:
        before, _ = pats[(direction, fm)]
        if at is not None:
            seg = tuple(path[at:at + 5])
            if seg == before or seg == before[::-1]:
                hit = (at, seg != before)
            else:
                continue
        else:
            hit = _find_window(path, before)
            if hit is None:
                continue
        i, _flipped = hit
        path[i + 1:i + 4] = path[i + 1:i + 4][::-1]
        return path
    raise Inapplicable(f"no {direction} window at pivot {j}")


def beta_neighbors(p: Sequence[int], y: int) -> Iterator[tuple[tuple, list[int]]]:
    """Every single switch available in ``p`` for upper length ``y``."""
    for i in range(len(p) - 4):
        seg = tuple(p[i:i + 5])
        for window in (seg, seg[::-1]):
            j = window[0] + 1
            if window[4] != j + 1:
                continue
            for (direction, fm), (before, _) in beta_patterns(y, j).items():
                if window == before:
                    out = list(p)
                    out[i + 1:i + 4] = out[i + 1:i + 4][::-1]
                    yield ("beta", direction, fm, j, i), out


def _net(removed: list[int], added: list[int]) -> tuple[list[int], list[int]]:
    removed = list(removed)
    left = []
    for x in added:
        if x in removed:
            removed.remove(x)
        else:
            left.append(x)
    return removed, left


def gamma_moves(p, y: int) -> list[tuple[tuple, list[int]]]:
    """All single-vertex relocations whose net effect swaps one y-edge for a
    (y-1)-edge or the reverse, leaving every other length unchanged."""
    path = list(p.path) if isinstance(p, Realization) else list(p)
    n = len(path)
    out: list[tuple[tuple, list[int]]] = []
    if n < 3:
        return out
    for i in range(n):
        u = path[i]
        gone = []
        made = []
        if i > 0:
            gone.append(abs(u - path[i - 1]))
        if i < n - 1:
            gone.append(abs(u - path[i + 1]))
        if 0 < i < n - 1:
            made.append(abs(path[i - 1] - path[i + 1]))
        ok = set(gone) | {y, y - 1}
        rest = path[:i] + path[i + 1:]
        for k in range(n):
            if k == i:
                continue
            left = rest[k - 1] if k > 0 else None
            right = rest[k] if k < n - 1 else None
            # every new edge must cancel a removed one or be the swapped length
            bridge_len = abs(left - right) if left is not None and right is not None else None
            if left is not None and abs(u - left) not in ok and abs(u - left) != bridge_len:
                continue
            if right is not None and abs(u - right) not in ok and abs(u - right) != bridge_len:
                continue
            r = list(gone)
            m = list(made)
            if bridge_len is not None:
                r.append(bridge_len)
            if left is not None:
                m.append(abs(u - left))
            if right is not None:
                m.append(abs(u - right))
            r, m = _net(r, m)
            if len(r) != 1 or len(m) != 1:
                continue
            if r[0] == y and m[0] == y - 1:
                kind = "y_to_ym1"
            elif r[0] == y - 1 and m[0] == y:
                kind = "ym1_to_y"
            else:
                continue
            out.append((("gamma", kind, u, i, k), rest[:k] + [u] + rest[k:]))
    return out


def support_moves(p: Sequence[int], support: frozenset[int]) -> Iterator[tuple[tuple, list[int]]]:
    """Segment reversals whose two new edges stay inside ``support``."""
    n = len(p)
    for i in range(n - 1):
        for k in range(i + 1, n):
            if i == 0 and k == n - 1:
                continue
            if i > 0 and abs(p[i - 1] - p[k]) not in support:
                continue
            if k < n - 1 and abs(p[i] - p[k + 1]) not in support:
                continue
            yield ("reverse", i, k), list(p[:i]) + list(p[i:k + 1])[::-1] + list(p[k + 1:])


def _distance(a: Mapping[int, int], b: Mapping[int, int]) -> int:
    keys = set(a) | set(b)
    return sum(abs(a.get(x, 0) - b.get(x, 0)) for x in keys)


def local_search(start, target: Mapping[int, int] | str, budget: int = 100_000,
                 standard: bool = True) -> Realization:
    """Best-first search towards ``target``.

    Neighbours are switches, relocations and support-preserving segment
    reversals. States are ordered by L1 distance of the realized multiset to the
    target, then by number of moves, then by discovery order, so the
    result is deterministic. Failure after ``budget`` expansions says
    nothing about existence.
    """
    target = multiset(target)
    path = list(start.path) if isinstance(start, Realization) else list(start)
    if target.size() != len(path) - 1:
        raise Inapplicable(f"target has {target.size()} lengths, path has {len(path) - 1} edges")
    y = max(target) if target else 1
    have = lengths_of(path)
    if have == target and (not standard or path[0] == 0):
        return certify(path, target, what="local_search")
    support = target.support()
    seen = {tuple(path)}
    tie = 0
    heap = [(_distance(have, target), 0, tie, path)]
    expanded = 0
    while heap:
        _d, moves, _t, cur = heapq.heappop(heap)
        expanded += 1
        if expanded > budget:
            break
        nbrs = list(beta_neighbors(cur, y))
        nbrs += gamma_moves(cur, y)
        nbrs += support_moves(cur, support)
        for _desc, nxt in nbrs:
            key = tuple(nxt)
            if key in seen:
                continue
            seen.add(key)
            got = lengths_of(nxt)
            if got == target and (not standard or nxt[0] == 0 or nxt[-1] == 0):
                if nxt[0] != 0 and standard:
                    nxt = nxt[::-1]
                return certify(nxt, target, standard=standard, what="local_search")
            tie += 1
            heapq.heappush(heap, (_distance(got, target), moves + 1, tie, nxt))
    raise BudgetExhausted(f"local search spent {budget} expansions without reaching {target}")

