"""Command-line entry point.

Exit codes: 0 success, 1 no construction applies, 2 verification failure,
3 unparseable input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bhr import equivalents, window
from .core import (BudgetExhausted, CapExceeded, ConstructionExhausted, Inapplicable,
                   LengthMultiset, MultisetParseError, Realization, VerificationFailure,
                   multiset, verify)
from .drivers import DRIVERS
from .fauxsets import omega_or_curl
from .k1 import k1_dispatch, sawtooth_threshold
from .k2 import k2_dispatch
from .oracle import DEFAULT_CAP, MODES, count, search
from .render import FORMATS, STYLES, render_grid

EXIT_OK, EXIT_INAPPLICABLE, EXIT_VERIFY, EXIT_PARSE = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise MultisetParseError(f"expected comma-separated integers, got {text!r}") from exc


def _emit(data: dict, as_json: bool, lines: list[str] | None = None) -> None:
    if as_json or lines is None:
        print(json.dumps(data, indent=2))
    else:
        print("\n".join(lines))


def _load(args) -> Realization:
    if getattr(args, "path", None):
        return Realization(_ints(args.path))
    text = sys.stdin.read() if args.file in (None, "-") else Path(args.file).read_text()
    return Realization.from_json(text)


# ---------------------------------------------------------------- construct


def _build(k: int, x: int, y: int, a: int, b: int, c: int) -> Realization:
    if k == 0:
        return omega_or_curl(y, a, b + c)
    if k == 1:
        return k1_dispatch(y, a, b, c)
    return k2_dispatch(y, a, b, c)


def _min_a(k: int, x: int, y: int, b: int, c: int) -> int:
    if k == 0:
        return y - 1
    if k == 1 and 0 < b < y - 1 and 0 < c < y - 1 and y >= 5:
        return sawtooth_threshold(y, b, c)
    for a in range(0, 2 * y + 1):
        try:
            if k == 1:
                k1_dispatch(y, a, b, c, oracle_cap=0)
            else:
                k2_dispatch(y, a, b, c, fallback_oracle=False)
        except (Inapplicable, ConstructionExhausted, ValueError):
            continue
        return a
    raise Inapplicable(f"no construction with a <= {2 * y}")


def cmd_construct(args) -> int:
    support = _ints(args.support)
    counts = _ints(args.counts)
    if len(support) == 2:
        support = [support[0], support[1], support[1]]
        counts = counts + [0] if len(counts) == 2 else counts
    if len(support) != 3 or support[0] != 1 or not 1 <= support[1] <= support[2]:
        raise MultisetParseError("support must read 1,y-k,y")
    _, x, y = support
    k = y - x
    if k not in (0, 1, 2):
        raise Inapplicable(f"only k = y - x in {{0, 1, 2}} is constructed, got k={k}")
    if args.min_a:
        if len(counts) == 2:
            counts = [0] + counts
    if len(counts) != 3 or min(counts) < 0:
        raise MultisetParseError("counts must read a,b,c with non-negative entries")
    a, b, c = counts
    if args.min_a:
        a = _min_a(k, x, y, b, c)
    r = _build(k, x, y, a, b, c)
    expected = LengthMultiset.of((1, a), (x, b), (y, c))
    rep = verify(r, expected)
    if not rep.ok or not rep.standard:
        raise VerificationFailure("; ".join(rep.problems) or "not standard")
    data = r.to_dict()
    if args.min_a:
        data["min_a"] = a
    print(json.dumps(data) if not args.json else json.dumps(data, indent=2))
    return EXIT_OK


# ------------------------------------------------------------------- others


def cmd_verify(args) -> int:
    r = _load(args)
    rep = verify(r, args.expect)
    ok = rep.ok and (rep.standard or not args.standard) and (rep.perfect or not args.perfect)
    data = rep.to_dict()
    data["ok"] = ok
    lines = [f"{'OK' if ok else 'FAIL'} v={r.v} realized={rep.realized} "
             f"standard={rep.standard} perfect={rep.perfect}"]
    lines += [f"  {p}" for p in rep.problems]
    _emit(data, args.json, lines)
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_oracle(args) -> int:
    L = multiset(args.multiset)
    # the search is single-threaded, so every run is already deterministic
    try:
        if args.count:
            n = count(L, args.mode, args.limit, args.cap)
            data = {"multiset": str(L), "mode": args.mode, "count": n}
            _emit(data, args.json, [f"{n} realizations of {L} ({args.mode})"])
            return EXIT_OK
        path = search(L, args.mode, args.limit, args.cap)
    except (BudgetExhausted, CapExceeded) as exc:
        _emit({"multiset": str(L), "mode": args.mode, "verdict": "budget-exhausted",
               "reason": str(exc)}, args.json, [f"undecided: {exc}"])
        return EXIT_INAPPLICABLE
    verdict = "none" if path is None else "found"
    data = {"multiset": str(L), "mode": args.mode, "verdict": verdict, "path": path}
    line = f"no {args.mode} realization of {L}" if path is None else " ".join(map(str, path))
    _emit(data, args.json, [line])
    return EXIT_OK


def cmd_equiv(args) -> int:
    rep = equivalents(_ints(args.support), args.v)
    print(json.dumps(rep.to_dict(), indent=2))
    return EXIT_OK


def cmd_window(args) -> int:
    small_k = _ints(args.small_k) if args.small_k else ()
    rep = window(_ints(args.support), args.v, small_k=small_k)
    print(json.dumps(rep.to_dict(), indent=2))
    return EXIT_OK


def cmd_theorem(args) -> int:
    rep = DRIVERS[args.id]()
    _emit(rep.to_dict(), args.json, rep.lines())
    return EXIT_OK if rep.ok else EXIT_VERIFY


def cmd_render(args) -> int:
    r = _load(args)
    text = render_grid(r, args.x, style=args.style, fmt=args.format, y=args.y)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="artifact", description="Linear realizations of edge-length multisets.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    c = sub.add_parser("construct", help="build a standard realization of {1^a, (y-k)^b, y^c}")
    c.add_argument("--support", required=True, help="1,y-k,y with k in 0..2")
    c.add_argument("--counts", required=True, help="a,b,c (with --min-a, a may be omitted)")
    c.add_argument("--min-a", action="store_true", help="use the fewest 1-edges the constructions need")
    c.add_argument("--json", action="store_true", help="indented JSON")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="check a realization JSON file")
    v.add_argument("--file", default="-")
    v.add_argument("--path", help="comma-separated labels instead of a file")
    v.add_argument("--expect", help="expected multiset, e.g. 1^5,7^2,8^6")
    v.add_argument("--standard", action="store_true", help="also require path[0] == 0")
    v.add_argument("--perfect", action="store_true", help="also require the path to end at v-1")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle", help="exhaustive search")
    o.add_argument("multiset")
    o.add_argument("--mode", choices=MODES, default="standard")
    o.add_argument("--limit", type=int, default=None, help="node budget")
    o.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest v searched")
    o.add_argument("--count", action="store_true", help="count instead of returning the first path")
    o.add_argument("--deterministic", action="store_true", help="accepted for compatibility; always on")
    o.add_argument("--json", action="store_true")
    o.set_defaults(func=cmd_oracle)

    e = sub.add_parser("equiv", help="the two equivalent supports containing 1")
    e.add_argument("--support", required=True)
    e.add_argument("--v", type=int, required=True)
    e.add_argument("--json", action="store_true", help="accepted; output is always JSON")
    e.set_defaults(func=cmd_equiv)

    w = sub.add_parser("window", help="bounds on a counterexample for (support, v)")
    w.add_argument("--support", required=True)
    w.add_argument("--v", type=int, required=True)
    w.add_argument("--small-k", default="", help="k values whose {1, Y-k, Y} equivalents cap at Y-1")
    w.add_argument("--json", action="store_true", help="accepted; output is always JSON")
    w.set_defaults(func=cmd_window)

    t = sub.add_parser("theorem", help="run a reproduction sweep")
    t.add_argument("--id", required=True, choices=sorted(DRIVERS))
    t.add_argument("--json", action="store_true")
    t.set_defaults(func=cmd_theorem)

    r = sub.add_parser("render", help="draw a realization on the grid")
    r.add_argument("--file", default="-")
    r.add_argument("--path", help="comma-separated labels instead of a file")
    r.add_argument("--x", type=int, required=True)
    r.add_argument("--y", type=int, default=None)
    r.add_argument("--style", choices=STYLES, default="plain")
    r.add_argument("--format", choices=FORMATS, default="ascii")
    r.add_argument("-o", "--output")
    r.set_defaults(func=cmd_render)
    return p


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (MultisetParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except VerificationFailure as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (Inapplicable, ConstructionExhausted, BudgetExhausted, CapExceeded, ValueError) as exc:
        print(f"inapplicable: {exc}", file=sys.stderr)
        return EXIT_INAPPLICABLE


if __name__ == "__main__":
    sys.exit(main())
