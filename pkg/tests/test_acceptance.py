"""One test per acceptance criterion, each running the matching verify suite.

Every suite checks its criterion at the stated tolerance (exact equality for
the symbolic ones).  The wall-time budget is part of the criterion.  Each case
prints a single PASS/FAIL line, repeated in the terminal summary.
"""
import pytest

from dunkl import verify

BUDGET = {
    "AC1": 60, "AC2": 60, "AC3": 60, "AC4": 120, "AC5": 120, "AC6": 30, "AC7": 60,
    "AC8": 30, "AC9": 60, "AC10": 30, "AC11": 30, "AC12": 20, "AC13": 60, "AC14": 60,
}

LINES = {}


@pytest.mark.parametrize("name", list(BUDGET))
def test_acceptance(name, capsys):
    rep = verify.run_suite(name, seed=0)
    in_time = rep.wall_time < BUDGET[name]
    ok = rep.ok and in_time
    line = f"{name} {'PASS' if ok else 'FAIL'}: {rep.title} ({rep.cases} cases, {len(rep.failures)} failures, {rep.wall_time:.1f}s of {BUDGET[name]}s)"
    LINES[name] = line
    with capsys.disabled():
        print("\n" + line)
    detail = [f.to_json() for f in rep.failures[:5]]
    assert rep.ok, detail
    assert in_time, f"{rep.wall_time:.1f}s exceeds the {BUDGET[name]}s budget"
