"""Domain types, length extraction and the independent verifier.

Every constructor elsewhere in the package hands its raw path to
:func:`verify` (usually through :func:`certify`); nothing is trusted
because of how it was built.
"""

from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence


class RealizationError(Exception):
    """Base class for every failure raised by this package."""


class Inapplicable(RealizationError):
    """A construction does not apply to the requested parameters."""


class VerificationFailure(RealizationError):
    """A path was built but did not pass the verifier."""


class BudgetExhausted(RealizationError):
    """A search ran out of nodes before reaching a verdict."""


class ConstructionExhausted(RealizationError):
    """Every route of a dispatcher failed."""


class CapExceeded(RealizationError):
    """An exhaustive search was asked to work above its vertex cap."""


class MultisetParseError(ValueError):
    """Text that does not follow the ``len^mult`` grammar."""


_TERM = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+)\s*)?$")


class LengthMultiset(Mapping[int, int]):
    """Immutable multiset of positive edge lengths."""

    __slots__ = ("_entries", "_hash")

    def __init__(self, entries: Mapping[int, int] | Iterable[int] | None = None):
        if entries is None:
            counts: dict[int, int] = {}
        elif isinstance(entries, Mapping):
            counts = dict(entries)
        else:
            counts = dict(Counter(entries))
        clean: dict[int, int] = {}
        for length, mult in counts.items():
            length, mult = int(length), int(mult)
            if mult < 0:
                raise ValueError(f"negative multiplicity for length {length}")
            if mult == 0:
                continue
            if length <= 0:
                raise ValueError(f"lengths must be positive, got {length}")
            clean[length] = mult
        self._entries = dict(sorted(clean.items()))
        self._hash: int | None = None

    @classmethod
    def of(cls, *pairs: tuple[int, int]) -> "LengthMultiset":
        acc: Counter[int] = Counter()
        for length, mult in pairs:
            acc[length] += mult
        return cls(acc)

    @classmethod
    def parse(cls, text: str) -> "LengthMultiset":
        text = text.strip()
        if text in ("", "{}"):
            return cls()
        if text.startswith("{") and text.endswith("}"):
            text = text[1:-1]
        acc: Counter[int] = Counter()
        for term in text.split(","):
            m = _TERM.match(term)
            if m is None:
                raise MultisetParseError(f"bad multiset term {term!r}")
            length = int(m.group(1))
            mult = int(m.group(2)) if m.group(2) is not None else 1
            if length == 0 or mult == 0:
                raise MultisetParseError(f"zero length or multiplicity in {term!r}")
            acc[length] += mult
        return cls(acc)

    def __getitem__(self, length: int) -> int:
        return self._entries[length]

    def get(self, length, default=0):
        return self._entries.get(length, default)

    def __iter__(self) -> Iterator[int]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other) -> bool:
        if isinstance(other, LengthMultiset):
            return self._entries == other._entries
        if isinstance(other, Mapping):
            return self == LengthMultiset(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._entries.items()))
        return self._hash

    def __add__(self, other: Mapping[int, int]) -> "LengthMultiset":
        acc = Counter(self._entries)
        for k, m in other.items():
            acc[k] += m
        return LengthMultiset(acc)

    def __sub__(self, other: Mapping[int, int]) -> "LengthMultiset":
        acc = Counter(self._entries)
        for k, m in other.items():
            if acc[k] < m:
                raise ValueError(f"cannot remove {k}^{m} from {self}")
            acc[k] -= m
        return LengthMultiset(acc)

    def size(self) -> int:
        return sum(self._entries.values())

    def support(self) -> frozenset[int]:
        return frozenset(self._entries)

    def elements(self) -> list[int]:
        return [k for k, m in self._entries.items() for _ in range(m)]

    def as_dict(self) -> dict[int, int]:
        return dict(self._entries)

    def __str__(self) -> str:
        return ",".join(f"{k}" if m == 1 else f"{k}^{m}" for k, m in self._entries.items())

    def __repr__(self) -> str:
        return f"LengthMultiset({str(self)!r})"


def multiset(text_or_entries) -> LengthMultiset:
    """Accept either grammar text or a mapping."""
    if isinstance(text_or_entries, LengthMultiset):
        return text_or_entries
    if isinstance(text_or_entries, str):
        return LengthMultiset.parse(text_or_entries)
    return LengthMultiset(text_or_entries)


@dataclass(frozen=True)
class Realization:
    """A vertex sequence in K_v. Flags are derived, never stored."""

    v: int
    path: tuple[int, ...]

    def __init__(self, path: Sequence[int], v: int | None = None):
        object.__setattr__(self, "path", tuple(int(x) for x in path))
        object.__setattr__(self, "v", len(self.path) if v is None else int(v))

    @property
    def lengths(self) -> LengthMultiset:
        return lengths_of(self)

    @property
    def standard(self) -> bool:
        return len(self.path) > 0 and self.path[0] == 0

    @property
    def perfect(self) -> bool:
        return self.standard and self.path[-1] == self.v - 1

    def is_complete(self) -> bool:
        return len(self.path) == self.v and sorted(self.path) == list(range(self.v))

    def __len__(self) -> int:
        return len(self.path)

    def __iter__(self):
        return iter(self.path)

    def to_dict(self) -> dict:
        return {
            "v": self.v,
            "path": list(self.path),
            "lengths": {str(k): m for k, m in self.lengths.items()},
            "standard": self.standard,
            "perfect": self.perfect,
        }

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, data: Mapping) -> "Realization":
        try:
            path = [int(x) for x in data["path"]]
            v = int(data.get("v", len(path)))
        except (KeyError, TypeError, ValueError) as exc:
            raise MultisetParseError(f"malformed realization: {exc}") from exc
        return cls(path, v)

    @classmethod
    def from_json(cls, text: str) -> "Realization":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MultisetParseError(f"malformed realization JSON: {exc}") from exc
        return cls.from_dict(data)


@dataclass(frozen=True)
class VerifyReport:
    hamiltonian: bool
    realized: LengthMultiset
    standard: bool
    perfect: bool
    cyclic_realized: LengthMultiset | None
    expected: LengthMultiset | None = None
    problems: tuple[str, ...] = field(default=())

    @property
    def matches(self) -> bool:
        return self.expected is None or self.realized == self.expected

    @property
    def ok(self) -> bool:
        return self.hamiltonian and self.matches

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "hamiltonian": self.hamiltonian,
            "realized": str(self.realized),
            "expected": None if self.expected is None else str(self.expected),
            "standard": self.standard,
            "perfect": self.perfect,
            "cyclic_realized": None if self.cyclic_realized is None else str(self.cyclic_realized),
            "problems": list(self.problems),
        }


def _as_path(r) -> tuple[int, ...]:
    return r.path if isinstance(r, Realization) else tuple(r)


def lengths_of(r) -> LengthMultiset:
    p = _as_path(r)
    return LengthMultiset(abs(b - a) for a, b in zip(p, p[1:]))


def reduce_cyclic(lengths: Mapping[int, int], v: int) -> LengthMultiset:
    acc: Counter[int] = Counter()
    for x, m in lengths.items():
        if x >= v:
            raise ValueError(f"length {x} is not below v={v}")
        acc[min(x, v - x)] += m
    return LengthMultiset(acc)


def verify(r, expected: Mapping[int, int] | str | None = None) -> VerifyReport:
    """Recompute every property of ``r`` from its raw labels."""
    if not isinstance(r, Realization):
        r = Realization(r)
    p, v = r.path, r.v
    problems = []
    ham = len(p) == v and len(set(p)) == v and all(0 <= x < v for x in p)
    if len(p) != len(set(p)):
        problems.append("repeated vertex")
    if any(not 0 <= x < v for x in p):
        problems.append(f"label outside [0, {v})")
    if len(p) != v:
        problems.append(f"path has {len(p)} vertices, expected {v}")
    diffs = [abs(b - a) for a, b in zip(p, p[1:])]
    if 0 in diffs:
        problems.append("zero-length edge")
    realized = LengthMultiset(d for d in diffs if d)
    cyc = None
    if realized.size() == 0 or max(realized) < v:
        cyc = reduce_cyclic(realized, v)
    exp = None if expected is None else multiset(expected)
    if exp is not None and exp != realized:
        problems.append(f"realizes {realized}, expected {exp}")
    std = bool(p) and p[0] == 0
    return VerifyReport(
        hamiltonian=ham,
        realized=realized,
        standard=std,
        perfect=std and p[-1] == v - 1,
        cyclic_realized=cyc,
        expected=exp,
        problems=tuple(problems),
    )


def certify(path: Sequence[int], expected: Mapping[int, int] | str, *,
            standard: bool = False, perfect: bool = False,
            what: str = "construction") -> Realization:
    """Wrap ``path`` as a Realization or raise VerificationFailure."""
    r = Realization(path)
    rep = verify(r, expected)
    if not rep.ok:
        raise VerificationFailure(f"{what}: " + "; ".join(rep.problems))
    if standard and not rep.standard:
        raise VerificationFailure(f"{what}: not standard")
    if perfect and not rep.perfect:
        raise VerificationFailure(f"{what}: not perfect")
    return r


def edge_set(path: Sequence[int]) -> set[frozenset[int]]:
    return {frozenset(e) for e in zip(path, path[1:])}


def type_cy_edges(v: int, y: int) -> list[tuple[int, int]]:
    """The 1-edges near the top that a type C_y realization must contain."""
    if y % 2 == 0:
        return [(v - i, v + 1 - i) for i in range(2, y + 1, 2)]
    return [(v - i - 1, v - i) for i in range(2, y, 2)]


def is_type_cy(r, y: int) -> bool:
    p = _as_path(r)
    v = r.v if isinstance(r, Realization) else len(p)
    edges = edge_set(p)
    if y % 2 == 1 and (not p or (p[0] != v - 1 and p[-1] != v - 1)):
        return False
    return all(frozenset(e) in edges for e in type_cy_edges(v, y))


def divisors(n: int) -> list[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d * d != n:
                out.append(n // d)
        d += 1
    return sorted(out)


def admissible(lengths: Mapping[int, int], v: int) -> bool:
    L = multiset(lengths)
    if L.size() != v - 1:
        raise ValueError(f"multiset has {L.size()} elements, v-1 = {v - 1}")
    if any(x < 1 or x > v // 2 for x in L):
        raise ValueError("support must lie in [1, v/2]")
    for d in divisors(v):
        if sum(m for x, m in L.items() if x % d == 0) > v - d:
            return False
    return True
