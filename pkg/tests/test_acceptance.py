"""Acceptance criteria, one test each.

Every test prints a single PASS/FAIL line; the lines are also collected
into the pytest terminal summary.  Comparisons are exact (rational
arithmetic, zero tolerance).  Run directly with ``python3 tests/test_acceptance.py``.
"""
import sys
import time
from contextlib import contextmanager
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))
from conftest import ACCEPTANCE_LINES  # noqa: E402

from wallcross.verify import VerifyConfig, run_suite  # noqa: E402

CRITERIA = {
    1: ("quintic I-function and μ^(ε=1)_1", 1.0),
    2: ("TFT cubic system solved to y^6", 1.0),
    3: ("irrationality witness, k <= 10", 1.0),
    4: ("localization = TFT for ω_{0,3}, ω_{1,1}, ω_{1,2} to y^3", 30.0),
    5: ("quantum-ring oracle ⟨H,H,H⟩_{0,1} = 1", 5.0),
    6: ("graph enumeration vs brute force", None),
    7: ("ψ/Hodge integrals vs DVV, string, dilaton", None),
    8: ("mirror-map chamber structure", None),
    9: ("edge identity for P^N, β <= 2, d <= 3", None),
    10: ("1000 randomized series-law cases", None),
}


@contextmanager
def criterion(number):
    title, limit = CRITERIA[number]
    start = time.perf_counter()
    verdict = {"ok": False, "why": "error"}
    try:
        yield verdict
    finally:
        elapsed = time.perf_counter() - start
        if verdict["ok"] and limit is not None and elapsed >= limit:
            verdict.update(ok=False, why=f"over {limit:g} s limit")
        status = "PASS" if verdict["ok"] else f"FAIL ({verdict['why']})"
        line = f"criterion {number:2d} {status}: {title} [{elapsed:.2f} s]"
        ACCEPTANCE_LINES[number] = line
        print(line)
    if limit is not None:
        assert elapsed < limit, f"criterion {number} took {elapsed:.2f} s"


def check(verdict, report):
    failed = [c.name for c in report.checks if not c.passed]
    verdict["ok"] = not failed
    verdict["why"] = f"{len(failed)} failed checks"
    assert not failed, failed


def test_criterion_01_quintic():
    with criterion(1) as v:
        rep = run_suite("quintic", VerifyConfig(qmax=2))
        names = [c.name for c in rep.checks]
        assert any("= 120" in n for n in names) and any("113400" in n for n in names)
        check(v, rep)


def test_criterion_02_tft_system():
    with criterion(2) as v:
        rep = run_suite("lemma-p1", VerifyConfig(yorder=6))
        assert sum("cubic-equation" in c.name for c in rep.checks) == 4
        check(v, rep)


def test_criterion_03_irrationality():
    with criterion(3) as v:
        rep = run_suite("irrationality", VerifyConfig(kmax=10))
        assert len(rep.checks) == 11
        check(v, rep)


def test_criterion_04_localization_vs_tft():
    with criterion(4) as v:
        rep = run_suite("localization-tft", VerifyConfig(ymax=3, yorder=3))
        assert len(rep.checks) == 20 + 4 + 10  # multisets from {1, H, e0, einf}
        check(v, rep)


def test_criterion_05_quantum_ring():
    with criterion(5) as v:
        check(v, run_suite("quantum-ring"))


def test_criterion_06_graphs():
    with criterion(6) as v:
        rep = run_suite("graphs")
        assert len(rep.checks) == 3 + 18
        check(v, rep)


def test_criterion_07_hodge():
    with criterion(7) as v:
        rep = run_suite("hodge")
        assert sum("equation case" in c.name for c in rep.checks) == 20
        check(v, rep)


def test_criterion_08_chambers():
    with criterion(8) as v:
        check(v, run_suite("chamber"))


def test_criterion_09_edge_identity():
    with criterion(9) as v:
        rep = run_suite("edge-identity")
        assert len(rep.checks) == 27 and rep.notes
        check(v, rep)


def test_criterion_10_series_laws():
    with criterion(10) as v:
        rep = run_suite("series", VerifyConfig(series_cases=1000))
        total = sum(int(c.name.split(" on ")[1].split()[0]) for c in rep.checks)
        assert total == 1000
        check(v, rep)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
