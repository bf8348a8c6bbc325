"""Support {1, y-1, y}: sawtooth paths for small b and c, the dispatcher,
and the resolution of the leftover small-y cases."""

from __future__ import annotations

from dataclasses import dataclass, field

from .bhr import Equivalent, SLOTS, triples, window
from .core import (BudgetExhausted, CapExceeded, ConstructionExhausted, Inapplicable,
                   LengthMultiset, Realization, certify)
from .fauxsets import omega_or_curl, traversal
from .moves import local_search
from .oracle import DEFAULT_CAP, search
from .paircore import perfect_two
from .transforms import bridge, concat, prepend_ones

# the (y, v) pairs left open for y <= 16 before the sawtooth paths
OPEN_CASES: tuple[tuple[int, int], ...] = (
    (9, 43),
    (12, 41), (12, 53), (12, 79),
    (13, 41), (13, 67), (13, 89),
    (14, 67),
    (15, 73),
    (16, 41), (16, 43), (16, 73), (16, 103), (16, 137), (16, 167),
)


def _target(y: int, a: int, b: int, c: int) -> LengthMultiset:
    return LengthMultiset.of((1, a), (y - 1, b), (y, c))


def sawtooth_threshold(y: int, b: int, c: int) -> int:
    """Fewest 1-edges the sawtooth paths need for (b, c)."""
    if c > b - 1:
        return y - b - 1
    if c == b - 1:
        return y - c
    return y - c - 2


def _close_low(p: list[int]) -> list[int]:
    """Append vertex -1 after the last vertex, shift up by one, reverse."""
    return ([x + 1 for x in p] + [0])[::-1]


def _case1(y: int, b: int, c: int) -> list[int]:
    if (c - b) % 2:
        return _close_low(_case1(y, b, c - 1))
    v = y + c
    paths = [traversal(v, y, k) for k in range(y)]
    lengths = [1] * (c - b) + [y - 1] * b + [1] * (y - c - 1)
    return bridge(paths, lengths, orient=True)


def _case2(y: int, b: int, c: int) -> list[int]:
    v = y + c + 2
    x = y - 1
    theta = [3, 2, y + 2, y + 1, y, 1]
    paths = [traversal(v, x, 0)] + [traversal(v, x, k) for k in range(y - 2, 3, -1)]
    lengths = [1] * (y - c - 3) + [y] * (c - 1)
    if not lengths:
        raise Inapplicable("sawtooth: no junction left for the tail")
    first = y if b == y - 2 else 1
    if lengths[0] != first:
        raise Inapplicable(f"sawtooth: first junction must be {first}")
    body = bridge(paths, lengths[:-1], orient=True) if len(paths) > 1 else paths[0]
    for tail in (theta, theta[::-1]):
        if abs(body[-1] - tail[0]) == lengths[-1]:
            return body + tail
    raise Inapplicable("sawtooth: tail does not attach")


def _case3(y: int, b: int, c: int) -> list[int]:
    if (b - c) % 2:
        return _close_low(_case3(y, b - 1, c))
    v = y + b - 1
    paths = [traversal(v, y - 1, k) for k in range(y - 1)]
    lengths = [1] * (b - c - 1) + [y] * c + [1] * (y - b - 1)
    return bridge(paths, lengths, orient=True)


def sawtooth(y: int, a: int, b: int, c: int) -> Realization:
    """Standard realization of {1^a, (y-1)^b, y^c} for 0 < b, c < y-1.

    Residue classes modulo y (when c >= b) or y-1 (otherwise) are walked
    in order and joined mostly by 1-edges; the smaller of b, c is spent on
    the junctions. Surplus 1-edges go in front. One of b, c may also
    equal y-1, except for (b, c) = (y-1, y-2).
    """
    in_range = 0 < b <= y - 1 and 0 < c <= y - 1 and min(b, c) < y - 1
    if y < 4 or not in_range or (b, c) == (y - 1, y - 2):
        raise Inapplicable(f"sawtooth needs 0 < b, c < y-1 (y={y}, b={b}, c={c})")
    need = sawtooth_threshold(y, b, c)
    if a < need:
        raise Inapplicable(f"sawtooth needs a >= {need}, got {a}")
    if c > b - 1:
        path = _case1(y, b, c)
    elif c == b - 1:
        path = _case2(y, b, c)
    else:
        path = _case3(y, b, c)
    r = certify(path, _target(y, need, b, c), standard=True, what="sawtooth")
    r = prepend_ones(r, a - need)
    return certify(r.path, _target(y, a, b, c), standard=True, what="sawtooth")


def _residual(y: int, a: int, b: int, c: int, oracle_cap: int) -> Realization:
    target = _target(y, a, b, c)
    errors = []
    if b == 0 and c == 0:
        return certify(list(range(a + 1)), target, standard=True, what="chain")
    if b == 0 or c == 0:
        try:
            r = omega_or_curl(y, a, c) if b == 0 else omega_or_curl(y - 1, a, b)
            return certify(r.path, target, standard=True, what="k1 residual")
        except (Inapplicable, ValueError) as exc:
            errors.append(str(exc))
    try:
        return sawtooth(y, a, b, c)
    except Inapplicable as exc:
        errors.append(str(exc))
    starts = []
    for x, m in ((y, b + c), (y - 1, b + c)):
        try:
            starts.append(omega_or_curl(x, a, m))
        except (Inapplicable, ValueError) as exc:
            errors.append(str(exc))
    if c > b:
        starts.reverse()
    for start in starts:
        try:
            return local_search(start, target, budget=20_000)
        except BudgetExhausted as exc:
            errors.append(str(exc))
    if target.size() + 1 <= oracle_cap:
        try:
            path = search(target, "standard", limit=5_000_000, cap=oracle_cap)
        except (BudgetExhausted, CapExceeded) as exc:
            errors.append(str(exc))
        else:
            if path is not None:
                return certify(path, target, standard=True, what="k1 residual/oracle")
            errors.append("oracle: no standard realization exists")
    raise ConstructionExhausted(f"{target}: " + "; ".join(errors))


def k1_dispatch(y: int, a: int, b: int, c: int, oracle_cap: int = DEFAULT_CAP) -> Realization:
    """Standard realization of {1^a, (y-1)^b, y^c}.

    Perfect {(y-1)^(y-1), y^y} blocks are peeled off (as many as fit
    first), the residual is built by sawtooth, the omega paths, local
    search or the oracle, and the two are concatenated.
    """
    if y < 3 or min(a, b, c) < 0:
        raise ValueError(f"need y >= 3 and non-negative counts, got y={y}, a={a}, b={b}, c={c}")
    target = _target(y, a, b, c)
    block = perfect_two(y - 1, y) if y >= 3 else None
    jmax = min(b // (y - 1), c // y)
    errors = []
    for j in range(jmax, -1, -1):
        try:
            res = _residual(y, a, b - j * (y - 1), c - j * y, oracle_cap)
        except ConstructionExhausted as exc:
            errors.append(f"j={j}: {exc}")
            continue
        r = res
        for _ in range(j):
            r = concat(block, r)
        return certify(r.path, target, standard=True, what="k1_dispatch")
    raise ConstructionExhausted(f"no construction for {target}: " + " | ".join(errors[:2]))


@dataclass
class CaseResult:
    y: int
    v: int
    window: dict
    triples: list[tuple[int, int, int]]
    realized: list[dict] = field(default_factory=list)
    failures: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "y": self.y, "v": self.v, "window": self.window,
            "triples": [list(t) for t in self.triples],
            "realized": self.realized, "failures": self.failures, "ok": self.ok,
        }


def _sawtooth_equivalent(eq: Equivalent, triple: tuple[int, int, int]) -> Realization | None:
    one, lo, hi = eq.support
    if hi - lo != 1:
        return None
    counts = eq.counts(*triple)
    try:
        return sawtooth(hi, counts[one], counts[lo], counts[hi])
    except Inapplicable:
        return None


def resolve_case(y: int, v: int) -> CaseResult:
    """Enumerate the open triples for support {1, y-1, y} in K_v and realize each."""
    rep = window((1, y - 1, y), v, small_k=(1,))
    found = triples(rep)
    res = CaseResult(y, v, rep.window, found)
    base = Equivalent(rep.base_support, SLOTS, 1)
    candidates = sorted([base] + rep.equivalents, key=lambda q: -q.support[2])
    for t in found:
        for eq in candidates:
            r = _sawtooth_equivalent(eq, t)
            if r is None:
                continue
            res.realized.append({
                "triple": list(t),
                "multiset": str(LengthMultiset(eq.counts(*t))),
                "unit": eq.unit,
                "path": list(r.path),
            })
            break
        else:
            res.failures.append({"triple": list(t), "reason": "no equivalent fits the sawtooth ranges"})
    return res


def resolve_15_cases() -> list[CaseResult]:
    """Run ``resolve_case`` over every open (y, v) pair, in table order."""
    return [resolve_case(y, v) for y, v in OPEN_CASES]
