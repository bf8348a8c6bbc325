"""Search for y-growable base realizations that the case constructions miss.

Prints dictionary entries for ``artifact.k2.SPECIAL_BASES``. A base for
(y, step, b, c) realizes {1^a, (y-2)^b, y^c} with a <= y, starts at 0 and can be
grown by y at least twice at one anchor.
"""

import argparse
import sys

from artifact.core import Inapplicable, Realization
from artifact.transforms import grow_at


def enumerate_paths(counts: dict[int, int], v: int, limit: int):
    lengths = sorted(counts)
    left = dict(counts)
    used = [False] * v
    path = [0]
    used[0] = True
    found = 0

    def dfs():
        nonlocal found
        if len(path) == v:
            found += 1
            yield list(path)
            return
        cur = path[-1]
        for ell in lengths:
            if not left[ell]:
                continue
            for nxt in (cur - ell, cur + ell):
                if 0 <= nxt < v and not used[nxt]:
                    left[ell] -= 1
                    used[nxt] = True
                    path.append(nxt)
                    yield from dfs()
                    path.pop()
                    used[nxt] = False
                    left[ell] += 1
                    if found >= limit:
                        return

    yield from dfs()


def growable(path: list[int], step: int, times: int) -> bool:
    base = Realization(path)
    for m in range(base.v - 1, step - 1, -1):
        try:
            r = base
            for _ in range(times):
                r = grow_at(r, step, m)
            return True
        except (Inapplicable, ValueError):
            continue
    return False


def find(y: int, step: int, b: int, c: int, limit: int) -> list[int] | None:
    for a in range(y + 1):
        v = a + b + c + 1
        counts = {1: a, y - 2: b, y: c}
        counts = {k: m for k, m in counts.items() if m}
        for p in enumerate_paths(counts, v, limit):
            if growable(p, step, 2):
                return p
    return None


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("cases", nargs="+", help="y,step,b,c quadruples")
    ap.add_argument("--limit", type=int, default=20000)
    args = ap.parse_args(argv)
    for case in args.cases:
        y, step, b, c = map(int, case.split(","))
        p = find(y, step, b, c, args.limit)
        if p is None:
            print(f"# no base for {case}", file=sys.stderr)
        else:
            print(f"    ({y}, {step}, {b}, {c}): {tuple(p)},")
    return 0


if __name__ == "__main__":
    sys.exit(main())
