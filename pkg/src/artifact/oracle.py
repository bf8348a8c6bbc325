"""Exhaustive backtracking search for linear realizations of small multisets.

This is the ground truth the constructions are checked against, so it
shares no code with them beyond the multiset type.
"""

from __future__ import annotations

import sys
from itertools import product
from typing import Mapping

from .core import BudgetExhausted, CapExceeded, LengthMultiset, multiset, reduce_cyclic

DEFAULT_CAP = 32
MODES = ("any", "standard", "perfect")


class _Search:
    def __init__(self, L: LengthMultiset, mode: str, limit: int | None,
                 cap: int, want_all: bool):
        if mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        self.v = L.size() + 1
        if self.v > cap:
            raise CapExceeded(f"v={self.v} exceeds the search cap {cap}")
        self.lengths = sorted(L)
        self.left = [L[x] for x in self.lengths]
        self.mode = mode
        self.limit = limit
        self.nodes = 0
        self.want_all = want_all
        self.found: list[int] | None = None
        self.count = 0
        self.used = [False] * self.v
        self.path: list[int] = []

    def _tick(self) -> None:
        self.nodes += 1
        if self.limit is not None and self.nodes > self.limit:
            raise BudgetExhausted(f"node budget {self.limit} exhausted")

    def _accept(self) -> bool:
        p = self.path
        if self.mode == "perfect" and p[-1] != self.v - 1:
            return False
        if self.mode == "any" and self.want_all and p[0] > p[-1]:
            return False
        return True

    def _dfs(self, depth: int) -> bool:
        self._tick()
        if depth == self.v - 1:
            if self._accept():
                if self.want_all:
                    self.count += 1
                    return False
                self.found = list(self.path)
                return True
            return False
        cur = self.path[-1]
        v, used, top = self.v, self.used, self.v - 1
        last_step = depth == self.v - 2
        for idx, ell in enumerate(self.lengths):
            if not self.left[idx]:
                continue
            for nxt in (cur - ell, cur + ell):
                if nxt < 0 or nxt >= v or used[nxt]:
                    continue
                if self.mode == "perfect" and nxt == top and not last_step:
                    continue
                self.left[idx] -= 1
                used[nxt] = True
                self.path.append(nxt)
                hit = self._dfs(depth + 1)
                self.path.pop()
                used[nxt] = False
                self.left[idx] += 1
                if hit:
                    return True
        return False

    def run(self) -> None:
        if self.mode == "any":
            roots = range(self.v) if self.want_all else range((self.v - 1) // 2 + 1)
        else:
            roots = [0]
        old = sys.getrecursionlimit()
        sys.setrecursionlimit(max(old, 4 * self.v + 100))
        try:
            for root in roots:
                self.used[root] = True
                self.path = [root]
                hit = self._dfs(0)
                self.used[root] = False
                if hit:
                    return
        finally:
            sys.setrecursionlimit(old)


def search(L: Mapping[int, int] | str, mode: str = "standard", limit: int | None = None,
           cap: int = DEFAULT_CAP) -> list[int] | None:
    """First realization in the fixed expansion order, or None if none exists.

    Raises BudgetExhausted when ``limit`` nodes are spent without a verdict.
    ``None`` is only returned after the whole space was exhausted.
    """
    s = _Search(multiset(L), mode, limit, cap, want_all=False)
    s.run()
    return s.found


def count(L: Mapping[int, int] | str, mode: str = "standard", limit: int | None = None,
          cap: int = DEFAULT_CAP) -> int:
    """Number of realizations; in ``any`` mode a path and its reverse count once."""
    s = _Search(multiset(L), mode, limit, cap, want_all=True)
    s.run()
    return s.count


def exists(L, mode: str = "standard", limit: int | None = None, cap: int = DEFAULT_CAP) -> bool:
    return search(L, mode, limit, cap) is not None


def cyclic_witness(L: Mapping[int, int] | str, v: int, limit: int | None = None,
                   cap: int = DEFAULT_CAP) -> list[int] | None:
    """A linear path whose lengths reduce modulo ``v`` to ``L``, if one exists.

    Every cyclic length ``x`` may appear linearly as ``x`` or ``v - x``;
    each such lift is searched in turn.
    """
    L = multiset(L)
    if L.size() != v - 1:
        raise ValueError(f"need {v - 1} lengths for K_{v}")
    if any(x > v // 2 for x in L):
        raise ValueError("cyclic lengths must not exceed v/2")
    items = list(L.items())
    choices = [range(m + 1) if 2 * x != v else range(1) for x, m in items]
    for split in product(*choices):
        acc: dict[int, int] = {}
        for (x, m), flipped in zip(items, split):
            acc[x] = acc.get(x, 0) + m - flipped
            if flipped:
                acc[v - x] = acc.get(v - x, 0) + flipped
        lift = LengthMultiset(acc)
        path = search(lift, "any", limit, cap)
        if path is not None:
            assert reduce_cyclic(lift, v) == L
            return path
    return None
