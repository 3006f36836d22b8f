import random

import pytest

KEY_POOL = "abcdefgh"
STRING_POOL = ["", "red", "green", "blue", "view", "View", "x", "yy"]


def random_primitive(rng: random.Random):
    kind = rng.randrange(5)
    if kind == 0:
        return None
    if kind == 1:
        return rng.random() < 0.5
    if kind == 2:
        return rng.randint(-3, 3)
    if kind == 3:
        return round(rng.uniform(-2, 2), 1)
    return rng.choice(STRING_POOL)


def random_document(rng: random.Random, max_depth: int = 6, max_fanout: int = 8, budget: int = 60):
    """Random JSON value with bounded depth, fanout, and total node count."""
    remaining = [budget]

    def build(depth: int):
        remaining[0] -= 1
        if depth >= max_depth or remaining[0] <= 0 or rng.random() < 0.35:
            return random_primitive(rng)
        fanout = min(rng.randint(0, max_fanout), max(remaining[0], 0))
        if rng.random() < 0.5:
            keys = rng.sample(KEY_POOL, min(fanout, len(KEY_POOL)))
            return {key: build(depth + 1) for key in keys}
        return [build(depth + 1) for _ in range(fanout)]

    return build(0)


@pytest.fixture
def rng():
    return random.Random(0xD1FF)


# --- acceptance criteria reporting -----------------------------------------
# collects pass/fail per test in tests/test_acceptance.py and prints one
# line per criterion in the terminal summary

_acceptance_results = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.failed):
        name = report.nodeid.split("::", 1)[1]
        _acceptance_results[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in sorted(_acceptance_results.items()):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {name}")
