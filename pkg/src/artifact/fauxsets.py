"""Residue-class paths and the omega constructions for supports {1, x}."""

from __future__ import annotations

from dataclasses import dataclass

from .core import Inapplicable, LengthMultiset, Realization, VerificationFailure, certify
from .transforms import bridge, prepend_ones


@dataclass(frozen=True)
class FauxsetPlan:
    """Blueprint for an omega-style build: residue order plus junction lengths."""

    v: int
    x: int
    residue_order: tuple[int, ...]
    bridge_lengths: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.residue_order) != list(range(self.x)):
            raise ValueError("residue_order must be a permutation of range(x)")
        if len(self.bridge_lengths) != self.x - 1:
            raise ValueError("need x-1 bridge lengths")

    def assemble(self, orient: bool = True) -> list[int]:
        paths = [traversal(self.v, self.x, i) for i in self.residue_order]
        return bridge(paths, self.bridge_lengths, orient=orient)


def fauxset(v: int, x: int, i: int) -> list[int]:
    """Labels below ``v`` congruent to ``i`` modulo ``x``, ascending."""
    if not 0 <= i < x <= v:
        raise ValueError(f"need 0 <= i < x <= v, got i={i}, x={x}, v={v}")
    return list(range(i, v, x))


def traversal(v: int, x: int, i: int) -> list[int]:
    return fauxset(v, x, i)


def qstar(v: int, x: int, i: int) -> int:
    """Largest q* with q* x + i < v."""
    q, r = divmod(v, x)
    return q if i < r else q - 1


def omega_target(x: int, b: int) -> LengthMultiset:
    return LengthMultiset({1: x - 1, x: b})


def omega_plans(v: int, x: int, b: int) -> list[FauxsetPlan]:
    """The increasing plan and the 0-then-decreasing plan, parity choice first."""
    if v != b + x:
        raise ValueError(f"omega needs v = b + x, got v={v}, x={x}, b={b}")
    ones = (1,) * (x - 1)
    up = FauxsetPlan(v, x, tuple(range(x)), ones)
    down = FauxsetPlan(v, x, (0,) + tuple(range(x - 1, 0, -1)), ones)
    return [up, down] if (b % x) % 2 == 0 else [down, up]


def omega(v: int, x: int, b: int) -> Realization:
    """Standard realization of {1^(x-1), x^b} in K_v, v = b + x."""
    if x < 1 or b < 0:
        raise ValueError("need x >= 1 and b >= 0")
    target = omega_target(x, b)
    if x == 1:
        return certify(list(range(v)), target, standard=True, what="omega")
    plan = omega_plans(v, x, b)[0]
    try:
        path = plan.assemble()
    except Inapplicable as exc:
        raise Inapplicable(f"omega({v},{x},{b}): {exc}") from None
    return certify(path, target, standard=True, what="omega")


def _curl_candidates(p: list[int], x: int) -> list[list[int]]:
    """Rotations adding a 1-edge at the tail and dropping one x-edge, tail-most first."""
    f = p[-1]
    pos = {lab: k for k, lab in enumerate(p)}
    found = []
    for g in (f - 1, f + 1):
        k = pos.get(g)
        if k is None or k >= len(p) - 1:
            continue
        if abs(p[k] - p[k + 1]) != x:
            continue
        found.append((k, p[: k + 1] + p[k + 1:][::-1]))
    found.sort(key=lambda t: -t[0])
    return [q for _, q in found]


def tail_curl(v: int, x: int, b: int) -> Realization:
    """Standard realization of {1^x, x^b} in K_v, v = b + x + 1.

    First route: an omega realization of {1^(x-1), x^(b+1)} whose final
    vertex gets a 1-edge back into the path, rotating the tail. Second
    route: one leading 1-edge in front of omega(v-1, x, b).
    """
    if v != b + x + 1:
        raise ValueError(f"tail curl needs v = b + x + 1, got v={v}, x={x}, b={b}")
    target = LengthMultiset({1: x, x: b})
    if x == 1 or b == 0:
        return certify(list(range(v)), target, standard=True, what="tail_curl")
    for plan in omega_plans(v, x, b + 1):
        try:
            donor = plan.assemble()
        except Inapplicable:
            continue
        for cand in _curl_candidates(donor, x):
            try:
                return certify(cand, target, standard=True, what="tail_curl")
            except VerificationFailure:
                continue
    try:
        return certify(prepend_ones(omega(v - 1, x, b), 1).path, target,
                       standard=True, what="tail_curl")
    except Inapplicable:
        pass
    raise Inapplicable(f"tail_curl({v},{x},{b}): no route applies")


def omega_or_curl(x: int, a: int, b: int) -> Realization:
    """Standard realization of {1^a, x^b} for any a >= x - 1 the routes reach."""
    if a < x - 1:
        raise Inapplicable(f"need at least {x - 1} ones, got {a}")
    errors = []
    for base_a, build in ((x - 1, lambda: omega(b + x, x, b)),
                          (x, lambda: tail_curl(b + x + 1, x, b))):
        if a < base_a:
            continue
        try:
            r = build()
        except Inapplicable as exc:
            errors.append(str(exc))
            continue
        return certify(prepend_ones(r, a - base_a).path, LengthMultiset.of((1, a), (x, b)),
                       standard=True, what="omega_or_curl")
    raise Inapplicable("; ".join(errors))
