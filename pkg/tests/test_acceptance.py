"""Acceptance criteria AC-1 .. AC-10, one test each.

Every test runs the matching verification suite and records a one-line
PASS/FAIL verdict, printed in the pytest terminal summary (and directly when
this file is executed as a script).
"""
import sys
import time

import pytest

from orthosemi.suites import run_suite

from conftest import ACCEPTANCE_LINES

CRITERIA = [
    ("AC-1", "bicyclic-presentation", "pair arithmetic equals word rewriting, length <= 8, < 1 s"),
    ("AC-2", "weight-census", "(m+1)^2 elements and m+1 idempotents per weight; |M_k|"),
    ("AC-3", "c2-c3-bijection", "conversion formula vs word oracle, q <= 8, roundtrips"),
    ("AC-4", "rho-families", "compatibility, (l, r) values, extension agrees with quotient"),
    ("AC-5", "gamma", "least inverse congruence on orthodox semigroups of order <= 5"),
    ("AC-6", "band-lattice-closed-4", "lattice isomorphic images of bands are bands, order <= 4"),
    ("AC-7", "nongroup-dclass", "{a, b, ab, ba} is a D-class of <a, b> with ideal complement"),
    ("AC-8", "kernel-decomposition", "kernel is H x E_K and K/gamma is H"),
    ("AC-9", "torsion-evidence", "first 12 powers distinct and nonidempotent, weight <= 4"),
    ("AC-10", "enumeration-sanity", "enumeration counts vs all-tables oracle; tables validate"),
]


def check(ac, suite, cache_dir=None):
    report = run_suite(suite, cache_dir=cache_dir, threads=2)
    verdict = "PASS" if report.passed else "FAIL"
    line = f"{ac:<6} {verdict}  {suite} ({len(report.checks)} checks, {report.duration:.1f} s)"
    failing = [c for c in report.checks if c.status == "fail"]
    if failing:
        line += "  first failure: " + f"{failing[0].id}: {failing[0].detail}"
    return report, line


@pytest.mark.parametrize("ac, suite, what", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_acceptance(ac, suite, what, cache_dir):
    report, line = check(ac, suite, cache_dir)
    ACCEPTANCE_LINES.append(line)
    print(line)
    for text in report.lines():
        print("   ", text)
    assert report.checks, "suite produced no checks"
    assert all(c.status != "skipped" for c in report.checks)
    assert report.passed, line


def test_ac1_runtime_budget():
    t0 = time.perf_counter()
    report = run_suite("bicyclic-presentation")
    assert report.passed
    assert time.perf_counter() - t0 < 2.0


if __name__ == "__main__":
    ok = True
    for ac, suite, _ in CRITERIA:
        report, line = check(ac, suite)
        ok &= report.passed
        print(line, flush=True)
    sys.exit(0 if ok else 1)
