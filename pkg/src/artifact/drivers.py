"""Sweeps that rebuild the published results from the constructions.

Each driver returns a ``SweepReport``: one named check per line with its
verdict, plus counts and wall time. The CLI ``theorem`` subcommand and the
acceptance suite both run them.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from math import gcd
from typing import Callable, Mapping

from .core import (ConstructionExhausted, Inapplicable, LengthMultiset, Realization,
                   RealizationError, certify, multiset, verify)
from .fauxsets import omega_or_curl
from .k1 import k1_dispatch, resolve_15_cases
from .k2 import k2_dispatch
from .oracle import cyclic_witness, search
from .paircore import forest_realization, perfect_two, perfect_two_split, standard_two
from .transforms import prepend_ones


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        tail = f" ({self.detail})" if self.detail else ""
        return f"{'PASS' if self.ok else 'FAIL'} {self.name}{tail}"


@dataclass
class SweepReport:
    name: str
    checks: list[Check] = field(default_factory=list)
    seconds: float = 0.0
    summary_only: bool = False

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append(Check(name, ok, detail))

    def lines(self) -> list[str]:
        shown = self.failures if self.summary_only else self.checks
        out = [c.line() for c in shown]
        out.append(f"{'PASS' if self.ok else 'FAIL'} {self.name}: "
                   f"{len(self.checks) - len(self.failures)}/{len(self.checks)} in {self.seconds:.2f}s")
        return out

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "ok": self.ok,
            "total": len(self.checks),
            "failed": len(self.failures),
            "seconds": round(self.seconds, 3),
            "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail}
                       for c in (self.failures if self.summary_only else self.checks)],
        }


def _timed(name: str, body: Callable[[SweepReport], None], summary_only: bool = False) -> SweepReport:
    rep = SweepReport(name, summary_only=summary_only)
    t0 = time.perf_counter()
    body(rep)
    rep.seconds = time.perf_counter() - t0
    return rep


def _attempt(rep: SweepReport, name: str, build: Callable[[], Realization],
             expected: Mapping[int, int], perfect: bool = False, standard: bool = True) -> None:
    try:
        r = build()
    except (RealizationError, ValueError) as exc:
        rep.add(name, False, f"{type(exc).__name__}: {exc}")
        return
    v = verify(r, expected)
    ok = v.ok and (v.standard or not standard) and (v.perfect or not perfect)
    rep.add(name, ok, "" if ok else "; ".join(v.problems) or "flags")


def perfect_two_sweep(limit: int = 30) -> SweepReport:
    """perfect_two(x, y) for every coprime 1 < x, y <= limit, both orders."""
    def body(rep: SweepReport) -> None:
        for x in range(2, limit + 1):
            for y in range(2, limit + 1):
                if x == y or gcd(x, y) != 1:
                    continue
                target = LengthMultiset.of((x, y - 1), (y, x + 1))
                _attempt(rep, f"perfect_two({x},{y})", lambda: perfect_two(x, y), target, perfect=True)
    return _timed("perfect-two-sweep", body, summary_only=True)


def forest_cases(ymax: int = 24, jmax: int = 3) -> list[tuple[int, int, int]]:
    out = set()
    for y in range(3, ymax + 1):
        for j in range(1, jmax + 1):
            for k in range(2, y):
                if y % k == 0 and y // k > 1:
                    out.add((k, y, j))
            for k in (2, 3, 4):
                if k + 1 < y:
                    out.add((k, y, j))
    return sorted(out)


def forest_sweep(ymax: int = 24, jmax: int = 3) -> SweepReport:
    """forest_realization for every supported (k, y, j); perfect when k is odd and divides y."""
    def body(rep: SweepReport) -> None:
        for k, y, j in forest_cases(ymax, jmax):
            target = LengthMultiset.of((1, k - 1), (y - k, j * (y - k)), (y, j * y))
            perfect = k % 2 == 1 and y % k == 0
            _attempt(rep, f"forest({k},{y},{j})", lambda: forest_realization(k, y, j),
                     target, perfect=perfect)
    return _timed("forest-sweep", body, summary_only=True)


def fifteen_cases() -> SweepReport:
    """Realize every candidate triple of the fifteen open (y, v) pairs."""
    def body(rep: SweepReport) -> None:
        for res in resolve_15_cases():
            detail = f"{len(res.triples)} triples, {len(res.realized)} realized"
            if res.failures:
                detail += f", failed {[f['triple'] for f in res.failures]}"
            ok = res.ok and len(res.realized) == len(res.triples) > 0
            for item in res.realized:
                ok = ok and verify(Realization(item["path"]), item["multiset"]).ok
            rep.add(f"(y={res.y}, v={res.v})", ok, detail)
    return _timed("fifteen-cases", body)


def dispatch_cases(odd: range = range(5, 18, 2), even: range = range(6, 17, 2)) -> list[tuple[int, int, int]]:
    return [(y, b, c) for y in sorted(list(odd) + list(even))
            for b in range(2 * y + 1) for c in range(2 * y + 1)]


def dispatch_sweep(odd: range = range(5, 18, 2), even: range = range(6, 17, 2)) -> SweepReport:
    """k2_dispatch(y, y, b, c) for all b, c <= 2y."""
    def body(rep: SweepReport) -> None:
        for y, b, c in dispatch_cases(odd, even):
            target = LengthMultiset.of((1, y), (y - 2, b), (y, c))
            _attempt(rep, f"k2_dispatch({y},{y},{b},{c})", lambda: k2_dispatch(y, y, b, c), target)
    return _timed("dispatch-sweep", body, summary_only=True)


DRIVERS: dict[str, Callable[[], SweepReport]] = {
    "perfect-two-sweep": perfect_two_sweep,
    "forest-sweep": forest_sweep,
    "fifteen-cases": fifteen_cases,
    "dispatch-sweep": dispatch_sweep,
}


# ------------------------------------------------------------ constructors


def construct(lengths: Mapping[int, int] | str) -> Realization:
    """Standard realization of ``lengths`` by the first construction whose
    shape fits. Never calls the oracle; raises Inapplicable when no
    construction covers the multiset."""
    L = multiset(lengths)
    n = L.size()
    if n == 0:
        return Realization([0])
    s = sorted(L.support())
    if s == [1]:
        return certify(list(range(n + 1)), L, standard=True, what="chain")
    if len(s) == 2 and s[0] == 1:
        return omega_or_curl(s[1], L[1], L[s[1]])
    if len(s) == 2:
        x, y = s
        if gcd(x, y) == 1:
            first, second = perfect_two_split(x, y)
            options = [first, second, standard_two(x, y, "first"), standard_two(x, y, "second")]
            for r in options:
                if r.lengths == L:
                    return r
        raise Inapplicable(f"no construction for two-length multiset {L}")
    if len(s) == 3 and s[0] == 1:
        _, x, y = s
        if y - x == 1 and y >= 3:
            return k1_dispatch(y, L[1], L[x], L[y], oracle_cap=0)
        if y - x == 2 and y >= 4:
            return k2_dispatch(y, L[1], L[x], L[y], fallback_oracle=False)
        k = y - x
        if y % k == 0 or k in (2, 3, 4):
            j, rem = divmod(L[y], y)
            if rem == 0 and j >= 1 and L[x] == j * x and L[1] >= k - 1:
                base = forest_realization(k, y, j)
                return certify(prepend_ones(base, L[1] - (k - 1)).path, L, standard=True,
                               what="forest")
    raise Inapplicable(f"no construction covers {L}")


def multisets(support: range | tuple[int, ...], v: int) -> list[LengthMultiset]:
    """Every multiset of v-1 lengths drawn from ``support`` with each length below v."""
    elems = [x for x in support if x < v]
    return [LengthMultiset(combo) for combo in combinations_with_replacement(elems, v - 1)]


def oracle_agreement(support: tuple[int, ...] = (1, 2, 3, 4, 5), vmax: int = 10) -> SweepReport:
    """Constructor claims never contradict the oracle, plus the K_5 cyclic example."""
    def body(rep: SweepReport) -> None:
        claimed = exists = 0
        for v in range(2, vmax + 1):
            for L in multisets(support, v):
                truth = search(L, "standard") is not None
                try:
                    r = construct(L)
                except (Inapplicable, ConstructionExhausted, ValueError):
                    made = False
                else:
                    made = verify(r, L).ok and r.standard
                claimed += made
                exists += truth
                if made and not truth:
                    rep.add(f"{L} in K_{v}", False, "constructed but oracle found none")
                elif made or not truth:
                    rep.add(f"{L} in K_{v}", True, "agree")
                else:
                    rep.add(f"{L} in K_{v}", True, "oracle only")
        rep.add("coverage", True, f"{claimed} constructed, {exists} exist")
        lin = search("2^4", "any")
        cyc = cyclic_witness("2^4", 5)
        rep.add("{2^4} in K_5", lin is None and cyc is not None,
                f"linear: none, cyclic witness {cyc}")
    return _timed("oracle-agreement", body, summary_only=True)
