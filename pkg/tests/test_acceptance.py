"""Acceptance web at full level: one PASS/FAIL line per criterion.

Run directly (``python3 tests/test_acceptance.py``) for the bare report, or
through pytest, which prints the same lines and asserts each criterion.
"""

import pytest

from matorbit.acceptance import CHECKS, run_all, run_check

STATED = {
    1: "exact, < 1 s", 2: "exact, < 30 s", 3: "exact", 4: "exact, < 60 s", 5: "exact values",
    6: "exact", 7: "exact", 8: "< 120 s", 9: "exact", 10: "exact", 11: "exact", 12: "exact",
}


def line(res) -> str:
    mark = "PASS" if res.passed else "FAIL"
    extra = f"; {len(res.deviations)} documented deviation(s)" if res.deviations else ""
    return f"[{mark}] {res.index:2d}. {res.title} ({STATED[res.index]}; {res.seconds:.2f} s{extra})"


@pytest.fixture(scope="module")
def results():
    return {i: run_check(i, seed=0, level="full") for i in range(1, len(CHECKS) + 1)}


@pytest.mark.parametrize("index", range(1, len(CHECKS) + 1))
def test_criterion(index, results, capsys):
    res = results[index]
    with capsys.disabled():
        print("\n" + line(res))
    assert res.passed, res.details
    if res.limit is not None:
        assert res.seconds <= res.limit


def test_deviation_ledger_contents(results):
    assert sorted(d["id"] for d in results[5].deviations) == ["a", "b", "c", "d"]
    assert results[10].deviations[0]["printed_degree"] == 105
    assert results[10].deviations[0]["normative_degree"] == 90


def test_fast_level_is_deterministic():
    a, b = run_all(seed=11, level="fast"), run_all(seed=11, level="fast")
    assert a["passed"]
    strip = lambda doc: [{k: v for k, v in c.items() if k != "seconds"} for c in doc["checks"]]
    assert strip(a) == strip(b)


if __name__ == "__main__":
    import sys
    report = [run_check(i) for i in range(1, len(CHECKS) + 1)]
    for res in report:
        print(line(res))
    sys.exit(0 if all(r.passed for r in report) else 1)
