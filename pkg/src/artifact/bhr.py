"""Modular equivalence of size-3 supports containing 1, and counterexample windows.

Multiplying every cyclic length by a unit u of Z_v maps a cyclic
realization in K_v to another one. For support {1, x, y} the units x^-1 and
y^-1 send x (respectively y) to 1, so each multiset has two equivalents
that also contain 1. Large enough 1-multiplicity in any of the three
settles realizability, which bounds where a counterexample can hide.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Sequence

SLOTS = ("a", "b", "c")


def f(x: int, y: int) -> int:
    """Number of 1-edges that guarantees {1^a, x^b, y^c} is realizable."""
    if not 1 < x < y:
        raise ValueError(f"f needs 1 < x < y, got ({x}, {y})")
    if x % 2 == 0 and y % 2 == 0:
        return y - 1
    if x == 3 or (x % 2 == 0 and y % 2 == 1):
        return x + y - 2
    return x + y - 1


def cyclic(x: int, v: int) -> int:
    x %= v
    return min(x, v - x)


@dataclass(frozen=True)
class Equivalent:
    """A support {1, x, y} with the original slot carried by each element."""

    support: tuple[int, int, int]
    slots: tuple[str, str, str]
    unit: int

    def slot_of(self, element: int) -> str:
        return self.slots[self.support.index(element)]

    def counts(self, a: int, b: int, c: int) -> dict[int, int]:
        """Multiplicities of this equivalent for an original (a, b, c)."""
        orig = dict(zip(SLOTS, (a, b, c)))
        return {e: orig[s] for e, s in zip(self.support, self.slots)}

    def to_dict(self) -> dict:
        return {"support": list(self.support), "slots": list(self.slots), "unit": self.unit}


@dataclass
class EquivalenceReport:
    v: int
    base_support: tuple[int, int, int]
    equivalents: list[Equivalent]
    f_values: dict[str, int]
    f_sum: int
    f_sequence: tuple[int, int, int] = (0, 0, 0)
    window: dict | None = None
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "v": self.v,
            "base_support": list(self.base_support),
            "equivalents": [e.to_dict() for e in self.equivalents],
            "f_values": dict(self.f_values),
            "f_sum": self.f_sum,
            "f_sequence": list(self.f_sequence),
            "window": self.window,
        }


def _check_support(support: Sequence[int], v: int) -> tuple[int, int, int]:
    s = tuple(sorted(set(support)))
    if len(s) != 3 or s[0] != 1:
        raise ValueError(f"support must be {{1, x, y}} with 1 < x < y, got {support}")
    if s[2] > v // 2:
        raise ValueError(f"support elements must be at most v/2 = {v // 2}")
    for e in s:
        if gcd(e, v) != 1:
            raise ValueError(f"{e} is not coprime to v={v}")
    return s


def transform(support: Sequence[int], v: int, unit: int) -> Equivalent:
    """Multiply by ``unit`` modulo v, reduce to cyclic lengths and sort."""
    s = _check_support(support, v)
    pairs = sorted((cyclic(e * unit, v), slot) for e, slot in zip(s, SLOTS))
    return Equivalent(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs), unit % v)


def equivalents(support: Sequence[int], v: int) -> EquivalenceReport:
    """The two supports reached through x^-1 and y^-1, in ascending order.

    The returned report carries f for the base support and both
    equivalents, keyed by the original slot whose multiplicity sits on 1,
    and also as a sequence in the order base, first, second equivalent.
    """
    s = _check_support(support, v)
    base = Equivalent(s, SLOTS, 1)
    eqs = sorted((transform(s, v, pow(e, -1, v)) for e in s[1:]), key=lambda q: q.support)
    seq = tuple(f(q.support[1], q.support[2]) for q in [base] + eqs)
    found = {q.slot_of(1): val for q, val in zip([base] + eqs, seq)}
    f_values = {slot: found[slot] for slot in SLOTS}
    return EquivalenceReport(v, s, eqs, f_values, sum(seq), seq)


def window(support: Sequence[int], v: int, small_k: Sequence[int] = ()) -> EquivalenceReport:
    """Bounds on (a, b, c) for a counterexample, or the verdict that none exists.

    For every slot the 1-multiplicity of the equivalent that puts it on 1
    must stay below f. With ``small_k`` given, an equivalent of the shape
    {1, Y-k, Y} with k in ``small_k`` also caps that slot at Y-1, since
    Y ones always suffice there. Lower bounds follow from a + b + c = v - 1.
    """
    rep = equivalents(support, v)
    uppers = {slot: val - 1 for slot, val in rep.f_values.items()}
    for q in [Equivalent(rep.base_support, SLOTS, 1)] + rep.equivalents:
        k = q.support[2] - q.support[1]
        if k in small_k:
            slot = q.slot_of(1)
            uppers[slot] = min(uppers[slot], q.support[2] - 1)
    total = v - 1
    if rep.f_sum < v + 2 and not small_k:
        rep.window = {"verdict": "conjecture-holds", "f_sum": rep.f_sum, "threshold": v + 2}
        return rep
    lowers = {s: max(0, total - sum(uppers[t] for t in SLOTS if t != s)) for s in SLOTS}
    empty = sum(uppers.values()) < total or any(lowers[s] > uppers[s] for s in SLOTS)
    rep.window = {
        "verdict": "conjecture-holds" if empty else "open",
        "upper": uppers,
        "lower": lowers,
        "f_sum": rep.f_sum,
        "threshold": v + 2,
    }
    return rep


def triples(rep: EquivalenceReport) -> list[tuple[int, int, int]]:
    """All (a, b, c) inside an open window with a + b + c = v - 1."""
    w = rep.window
    if not w or w["verdict"] != "open":
        return []
    lo, hi, total = w["lower"], w["upper"], rep.v - 1
    out = []
    for a in range(lo["a"], hi["a"] + 1):
        for b in range(lo["b"], hi["b"] + 1):
            c = total - a - b
            if lo["c"] <= c <= hi["c"]:
                out.append((a, b, c))
    return out


def large_v_holds(y: int, v: int) -> bool:
    """Whether v is past the bound beyond which support {1, y-1, y} is settled."""
    return v >= 2 * y * y + 9 * y
