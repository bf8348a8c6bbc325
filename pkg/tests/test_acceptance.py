"""Acceptance criteria, one test each. Every test prints a PASS/FAIL line;
``python3 tests/test_acceptance.py`` runs them without pytest."""

import subprocess
import sys
import time
from pathlib import Path

from artifact.core import LengthMultiset, verify
from artifact.drivers import (dispatch_sweep, fifteen_cases, forest_sweep, oracle_agreement,
                              perfect_two_sweep)
from artifact.bhr import equivalents, window
from artifact.fauxsets import omega, tail_curl
from artifact.k1 import resolve_case, sawtooth, sawtooth_threshold
from artifact.k2 import theta, theta_prime
from artifact.paircore import forest_realization, perfect_two_split, standard_two

RESULTS: list[str] = []
HERE = Path(__file__).resolve().parent


def report(number: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title}" + (f" ({detail})" if detail else "")
    RESULTS.append(line)
    print(line)
    assert ok, line


def test_01_perfect_two_sweep():
    rep = perfect_two_sweep(30)
    ok = rep.ok and rep.seconds < 1.0
    report(1, "perfect-two sweep", ok, f"{len(rep.checks)} pairs in {rep.seconds:.3f}s")


def test_02_reference_realizations():
    checks = []
    for v, x, b in ((25, 7, 18), (29, 8, 21), (12, 7, 5), (22, 7, 15)):
        r = omega(v, x, b)
        checks.append(verify(r, {1: x - 1, x: b}).ok and r.standard)
        c = tail_curl(v, x, b - 1)
        checks.append(verify(c, {1: x, x: b - 1}).ok and c.standard)
    r = forest_realization(3, 8, 3)
    checks.append(verify(r, "1^2,5^15,8^24").ok and r.perfect and r.v == 42)
    _, second = perfect_two_split(5, 6)
    checks.append(verify(second, "5^7,6^4").ok and second.perfect)
    r = forest_realization(2, 6, 1)
    checks.append(verify(r, "1,4^4,6^6").ok and r.standard)
    r = sawtooth(8, 5, 2, 6)
    checks.append(verify(r, "1^5,7^2,8^6").ok and r.standard)
    checks.append(omega(12, 7, 5).path == (0, 7, 6, 5, 4, 11, 10, 3, 2, 9, 8, 1))
    checks.append(tail_curl(12, 7, 4).path == (0, 7, 6, 5, 4, 11, 10, 3, 2, 1, 8, 9))
    checks.append(standard_two(2, 3).path == (0, 3, 1, 4, 2))
    report(2, "reference realizations", all(checks), f"{sum(checks)}/{len(checks)} realizations")


def test_03_forest_sweep():
    rep = forest_sweep(24, 3)
    report(3, "forest sweep", rep.ok, f"{len(rep.checks)} cases, {len(rep.failures)} failed")


def _theta_contract(s: int, t: int, b: int, c: int) -> bool:
    p = theta(s, t, b, c)
    upper = {frozenset((t + i, t + i + 1)) for i in range(0, s - 2, 2)}
    edges = {frozenset(e) for e in zip(p, p[1:])}
    ok = p[0] == 0 and p[-1] == s
    ok = ok and set(p) == set(range(s + 1)) | set(range(t, s + t - 1))
    ok = ok and upper <= edges
    ok = ok and LengthMultiset(abs(u - w) for u, w in zip(p, p[1:])) == {1: s, t - 2: b, t: c}
    for end in ("high", "low"):
        if (end == "high" and c == 0) or (end == "low" and b == 0):
            continue
        q = theta_prime(s, t, b, c, end)
        lengths = LengthMultiset(abs(u - w) for u, w in zip(q, q[1:]))
        ok = ok and lengths == {1: s - 1, t - 2: b, t: c}
        if end == "high":
            ok = ok and q[0] == 0 and s not in q
            ok = ok and set(q) == set(range(s)) | set(range(t, s + t - 1))
            q_edges = {frozenset(e) for e in zip(q, q[1:])}
            ok = ok and upper <= q_edges
        else:
            ok = ok and q[-1] == s - 1
            ok = ok and set(q) == set(range(s)) | set(range(t - 1, s + t - 2))
    return ok


def test_04_trapezoid_contracts():
    total = passed = 0
    for s in range(3, 16, 2):
        for t in range(s + 1, s + 11):
            for c in range(s):
                total += 1
                passed += _theta_contract(s, t, s - 1 - c, c)
    report(4, "trapezoid contracts", passed == total, f"{passed}/{total}")


def test_05_sawtooth_sweep():
    t0 = time.perf_counter()
    total = passed = 0
    for y in range(5, 31):
        for b in range(1, y - 1):
            for c in range(1, y - 1):
                a = sawtooth_threshold(y, b, c)
                r = sawtooth(y, a, b, c)
                total += 1
                passed += verify(r, LengthMultiset.of((1, a), (y - 1, b), (y, c))).ok and r.standard
    elapsed = time.perf_counter() - t0
    report(5, "sawtooth sweep", passed == total and elapsed < 10,
           f"{passed}/{total} in {elapsed:.2f}s")


def test_06_k2_dispatcher():
    rep = dispatch_sweep()
    report(6, "k=2 dispatcher", rep.ok and rep.seconds < 120,
           f"{len(rep.checks) - len(rep.failures)}/{len(rep.checks)} in {rep.seconds:.2f}s")


def test_07_fifteen_cases():
    rep = fifteen_cases()
    nine = resolve_case(9, 43).triples == [(8, 15, 19)]
    twelve = set(resolve_case(12, 41).triples) == {
        (8, 15, 17), (9, 14, 17), (9, 15, 16), (10, 13, 17), (10, 14, 16),
        (10, 15, 15), (11, 12, 17), (11, 13, 16), (11, 14, 15), (11, 15, 14),
    }
    sixteen = resolve_case(16, 167).triples == [(15, 78, 73)]
    ok = rep.ok and len(rep.checks) == 15 and nine and twelve and sixteen
    report(7, "fifteen cases", ok,
           f"{sum(c.ok for c in rep.checks)}/15 pairs, triple sets {'match' if nine and twelve and sixteen else 'differ'}")


def test_08_equivalence_arithmetic():
    r103 = equivalents((1, 17, 19), 103)
    r105 = equivalents((1, 17, 19), 105)
    w105 = window((1, 17, 19), 105).window
    w127 = window((1, 17, 19), 127).window
    ok = [
        r103.f_sequence == (35, 15, 37),
        r103.f_sum == 87,
        window((1, 17, 19), 103).window["verdict"] == "conjecture-holds",
        r105.f_sequence == (35, 33, 67),
        r105.f_sum == 135,
        (w105["upper"]["a"], w105["upper"]["b"], w105["upper"]["c"], w105["lower"]["a"]) == (34, 66, 32, 6),
        (w127["lower"]["a"], w127["upper"]["a"]) == (24, 34),
    ]
    report(8, "equivalence arithmetic", all(ok), f"{sum(ok)}/{len(ok)} values")


def test_09_oracle_agreement():
    rep = oracle_agreement((1, 2, 3, 4, 5), 10)
    coverage = next(c.detail for c in rep.checks if c.name == "coverage")
    report(9, "oracle agreement", rep.ok and rep.seconds < 60,
           f"{len(rep.checks) - 2} multisets, {coverage}, {rep.seconds:.2f}s")


def test_10_property_suites():
    src = (HERE / "test_properties.py").read_text()
    enough = "EXAMPLES = 1000" in src
    proc = subprocess.run([sys.executable, "-m", "pytest", "-q", "-p", "no:cacheprovider",
                           str(HERE / "test_properties.py")],
                          capture_output=True, text=True, cwd=HERE.parent)
    tail = proc.stdout.strip().splitlines()[-1] if proc.stdout.strip() else proc.stderr[-200:]
    report(10, "property suites", enough and proc.returncode == 0, tail)


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
