"""Concatenation calculus and growth operators.

Functions here accept either a :class:`Realization` or a bare sequence of
labels. Helpers that produce partial paths (``translate``, ``bridge``)
return plain lists; everything that claims to produce a Hamiltonian path
returns a :class:`Realization`.
"""

from __future__ import annotations

from typing import Sequence

from .core import Inapplicable, Realization, edge_set, is_type_cy


def _path(r) -> list[int]:
    return list(r.path) if isinstance(r, Realization) else list(r)


def _v(r) -> int:
    return r.v if isinstance(r, Realization) else len(r)


def translate(r, t: int) -> list[int]:
    return [x + t for x in _path(r)]


def reverse(r) -> Realization:
    return Realization(_path(r)[::-1], _v(r))


def complement(r) -> Realization:
    v = _v(r)
    return Realization([v - 1 - x for x in _path(r)], v)


def standardize(r) -> Realization:
    """Reorient a Hamiltonian path so that it starts at 0 where possible.

    Tries the path itself, its reverse, its complement and the reversed
    complement, in that order. A path with neither 0 nor v-1 at an end is
    returned unchanged.
    """
    p, v = _path(r), _v(r)
    for cand in (p, p[::-1], [v - 1 - x for x in p], [v - 1 - x for x in reversed(p)]):
        if cand and cand[0] == 0:
            return Realization(cand, v)
    return Realization(p, v)


def _require_standard(r, name: str) -> None:
    p = _path(r)
    if not p or p[0] != 0:
        raise ValueError(f"{name} must be standard (start at 0)")


def concat(g, h) -> Realization:
    """Join two standard realizations at a shared vertex.

    The complement of ``g`` meets the translate of ``h`` by ``v_g - 1`` at
    the label ``v_g - 1``. The joined path starts at 0 when ``g`` is perfect
    and ends at the top label when ``h`` is perfect; the result is
    reoriented by :func:`standardize`.
    """
    _require_standard(g, "g")
    _require_standard(h, "h")
    gp, hp = _path(g), _path(h)
    vg, vh = _v(g), _v(h)
    joined = [vg - 1 - x for x in reversed(gp)] + [x + vg - 1 for x in hp[1:]]
    return standardize(Realization(joined, vg + vh - 1))


def prepend_ones(h, s: int) -> Realization:
    """Add ``s`` leading 1-edges to a standard realization."""
    _require_standard(h, "h")
    if s < 0:
        raise ValueError("s must be non-negative")
    hp = _path(h)
    return Realization(list(range(s)) + [x + s for x in hp], _v(h) + s)


def interior_reversal(r) -> Realization:
    """Keep both end vertices and reverse everything between them."""
    p = _path(r)
    if len(p) < 3:
        return Realization(p, _v(r))
    return Realization([p[0]] + p[-2:0:-1] + [p[-1]], _v(r))


def bridge(paths: Sequence[Sequence[int]], bridge_lengths: Sequence[int],
           orient: bool = False) -> list[int]:
    """Concatenate paths end to start, checking each junction length.

    With ``orient`` set, every path after the first may be reversed when
    that is what makes the junction length come out right (the given
    orientation is preferred).
    """
    paths = [list(p) for p in paths]
    if len(bridge_lengths) != max(len(paths) - 1, 0):
        raise ValueError("need exactly one bridge length per junction")
    if not paths:
        return []
    out = list(paths[0])
    for idx, (p, ell) in enumerate(zip(paths[1:], bridge_lengths)):
        if abs(out[-1] - p[0]) == ell:
            out.extend(p)
        elif orient and abs(out[-1] - p[-1]) == ell:
            out.extend(reversed(p))
        else:
            raise Inapplicable(
                f"junction {idx}: |{out[-1]} - {p[0]}| != {ell}")
    return out


def _splice(path: list[int], u: int, w: int, inner: Sequence[int]) -> None:
    """Insert ``inner`` (ordered from u towards w) on the edge u-w."""
    pos = {x: i for i, x in enumerate(path)}
    i, k = pos.get(u), pos.get(w)
    if i is None or k is None or abs(i - k) != 1:
        raise Inapplicable(f"edge ({u}, {w}) not present")
    if k == i + 1:
        path[k:k] = list(inner)
    else:
        path[i:i] = list(reversed(inner))


def replace_edge(r, u: int, w: int, inner: Sequence[int], v: int | None = None) -> Realization:
    """Replace edge u-w by the walk u, *inner, w. ``v`` defaults to the new size."""
    p = _path(r)
    _splice(p, u, w, inner)
    return Realization(p, len(p) if v is None else v)


def grow_cy(r, y: int, extra: int) -> Realization:
    """Add ``extra`` y-edges to a realization of type C_y.

    ``extra == y`` is the full growth, which keeps the type. A smaller even
    ``extra`` rewires the guaranteed 1-edges from the largest offset down.
    """
    if extra == 0:
        return Realization(_path(r), _v(r))
    if not is_type_cy(r, y):
        raise ValueError(f"realization is not of type C_{y}")
    if extra != y and (extra % 2 or extra > y):
        raise ValueError("partial growth needs an even extra below y")
    p, v = _path(r), _v(r)
    odd = y % 2 == 1
    js = list(range(3 if odd else 2, y + 1, 2))
    if extra != y:
        js = sorted(js, reverse=True)[: extra // 2]
    for j in js:
        _splice(p, v - j, v - j + 1, [v + y - j, v + y - j + 1])
    if extra == y and odd:
        if p[-1] == v - 1:
            p.append(v + y - 1)
        else:
            p.insert(0, v + y - 1)
    return Realization(p, v + len(js) * 2 + (1 if extra == y and odd else 0))


def _path_from_edges(n: int, edges: list[tuple[int, int]]) -> list[int] | None:
    adj: list[list[int]] = [[] for _ in range(n)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    ends = [x for x in range(n) if len(adj[x]) == 1]
    if n == 1:
        return [0]
    if len(ends) != 2:
        return None
    start = 0 if 0 in ends else ends[0]
    out, prev = [start], -1
    while len(out) < n:
        nxt = [w for w in adj[out[-1]] if w != prev]
        if not nxt:
            return None
        prev = out[-1]
        out.append(nxt[0])
    return out


def grow_at(r, y: int, m: int) -> Realization:
    """Grow ``r`` at anchor ``m``: a realization of L + {y^y} in K_{v+y}.

    Labels up to ``m`` stay, labels from ``m-y+1`` up are copied ``y``
    higher, the ``y`` new y-edges join the two copies of the overlap
    window, and one copy of each doubled edge inside the window is dropped.
    Drop choices are tried in lexicographic order (keep the low copy
    first) with degree and cycle pruning.
    """
    p, v = _path(r), _v(r)
    if not (y <= m < v):
        raise ValueError(f"anchor must satisfy y <= m < v, got m={m}")
    lo = m - y + 1
    fixed: list[tuple[int, int]] = []
    doubled: list[tuple[int, int]] = []
    for a, b in zip(p, p[1:]):
        a, b = min(a, b), max(a, b)
        low_side = b <= m
        high_side = a >= lo
        if low_side and high_side:
            doubled.append((a, b))
        elif low_side:
            fixed.append((a, b))
        elif high_side:
            fixed.append((a + y, b + y))
        else:
            raise Inapplicable(f"edge ({a}, {b}) crosses the window at m={m}")
    fixed.extend((m - y + i, m + i) for i in range(1, y + 1))
    n = v + y

    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    deg = [0] * n
    for a, b in fixed:
        deg[a] += 1
        deg[b] += 1
        ra, rb = find(a), find(b)
        if ra == rb or deg[a] > 2 or deg[b] > 2:
            raise Inapplicable(f"not {y}-growable at {m}")
        parent[ra] = rb

    chosen: list[tuple[int, int]] = []

    def place(i: int) -> bool:
        if i == len(doubled):
            return True
        a, b = doubled[i]
        for e in ((a, b), (a + y, b + y)):
            u, w = e
            if deg[u] >= 2 or deg[w] >= 2:
                continue
            ru, rw = find(u), find(w)
            if ru == rw:
                continue
            saved = parent[:]
            deg[u] += 1
            deg[w] += 1
            parent[ru] = rw
            chosen.append(e)
            if place(i + 1):
                return True
            chosen.pop()
            deg[u] -= 1
            deg[w] -= 1
            parent[:] = saved
        return False

    if not place(0):
        raise Inapplicable(f"not {y}-growable at {m}")
    path = _path_from_edges(n, fixed + chosen)
    if path is None:
        raise Inapplicable(f"not {y}-growable at {m}")
    return standardize(Realization(path, n))


def growable_anchors(r, y: int) -> list[int]:
    """All anchors at which ``r`` can be grown by ``y``."""
    out = []
    for m in range(y, _v(r)):
        try:
            grow_at(r, y, m)
        except Inapplicable:
            continue
        out.append(m)
    return out


__all__ = [
    "translate", "reverse", "complement", "standardize", "concat",
    "prepend_ones", "interior_reversal", "bridge", "replace_edge",
    "grow_cy", "grow_at", "growable_anchors", "edge_set",
]
