import sys
from itertools import combinations
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from qcyclic import (  # noqa: E402
    CyclicCodeSpec,
    code_from_zeros,
    cyclotomic_cosets,
    make_extension_field,
)

BCH_15_6_ZEROS = frozenset({0, 1, 3, 4, 5, 10, 11, 12, 14})
GOLDEN = Path(__file__).parent / "golden"

_acceptance = []


def all_closed_zero_sets(n):
    """Every union of 4-cyclotomic cosets mod n (2^(number of cosets) sets)."""
    cosets = cyclotomic_cosets(n).cosets
    for r in range(len(cosets) + 1):
        for combo in combinations(cosets, r):
            yield frozenset(z for c in combo for z in c)


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(label): exit criterion, reported in the summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _acceptance.append((marker.args[0], report.outcome, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for label, outcome, duration in _acceptance:
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {label}  ({duration:.2f}s)")


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(scope="session")
def gf16():
    return make_extension_field(2)


@pytest.fixture(scope="session")
def bch_15_6_code():
    """The (15,6) GF(4) code with zero set {0,1,3,4,5,10,11,12,14}."""
    return code_from_zeros(CyclicCodeSpec(1, 15, BCH_15_6_ZEROS))


@pytest.fixture(scope="session")
def rs_15_4_code():
    """The 16-ary (15,4) code with nonzero set {6,7,8,9}."""
    return code_from_zeros(CyclicCodeSpec.from_nonzeros(2, 15, {6, 7, 8, 9}))
