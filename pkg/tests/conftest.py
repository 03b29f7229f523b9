import random

import pytest

from raagvc.graph import Graph, complete, cycle, discrete, path, star_graph

SUITE = {
    "F2": discrete(2),
    "F3": discrete(3),
    "F4": discrete(4),
    "P3": path(3),
    "P4": path(4),
    "C4": cycle(4),
    "C5": cycle(5),
    "K3": complete(3),
    "K4": complete(4),
    "K13": star_graph(3),
    "P3+pt": Graph.from_edges("abcd", [("a", "b"), ("b", "c")]),
}

SMALL = {k: G for k, G in SUITE.items() if G.n <= 4}


@pytest.fixture(params=sorted(SUITE))
def suite_graph(request):
    return SUITE[request.param]


@pytest.fixture(params=sorted(SMALL))
def small_graph(request):
    return SMALL[request.param]


@pytest.fixture
def rng():
    return random.Random(20261014)


def random_word(rng, G, max_len):
    return tuple(rng.randrange(2 * G.n) for _ in range(rng.randint(0, max_len)))


# -- acceptance summary ---------------------------------------------------------

_ACCEPTANCE: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    marker = getattr(report, "acceptance", None)
    if marker is None or (report.when != "call" and report.passed):
        return
    number, label = marker
    status = "PASS" if report.passed else ("SKIP" if report.skipped else "FAIL")
    if _ACCEPTANCE.get(number, (None, "PASS"))[1] == "PASS" or status == "FAIL":
        _ACCEPTANCE[number] = (label, status)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    m = item.get_closest_marker("acceptance")
    if m is not None:
        outcome.get_result().acceptance = tuple(m.args)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        label, status = _ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number} [{status}] {label}")
