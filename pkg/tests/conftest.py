import math

import numpy as np
import pytest
from hypothesis import strategies as st

from gainlap.graph import build

SQ2 = 1 / math.sqrt(2)


def k3(gain):
    return build(3, [(0, 1, gain), (0, 2, gain), (1, 2, gain)])


def cycle_graph(n, gain=1):
    return build(n, [(i, (i + 1) % n, gain) for i in range(n)])


def complete_graph(n, gain=1):
    return build(n, [(u, v, gain) for u in range(n) for v in range(u + 1, n)])


def random_hermitian(rng, n):
    x = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return (x + x.conj().T) / 2


@st.composite
def gain_graphs(draw, min_n=1, max_n=7, connected=False, no_isolated=False):
    """Random simple graphs with arbitrary unit gains."""
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    present = [p for p, c in zip(pairs, chosen) if c]
    if connected or no_isolated:
        # a random spanning path guarantees both properties
        order = draw(st.permutations(range(n)))
        for a, b in zip(order, order[1:]):
            present.append((min(a, b), max(a, b)))
        present = sorted(set(present))
    angles = draw(st.lists(st.floats(0, 2 * math.pi), min_size=len(present), max_size=len(present)))
    return build(n, [(u, v, complex(math.cos(t), math.sin(t))) for (u, v), t in zip(present, angles)])


# -- acceptance reporting ----------------------------------------------------

_ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    marker = getattr(report, "criterion", None)
    if marker is None:
        return
    if report.when == "call" or report.failed:
        detail = dict(report.user_properties).get("detail", "")
        prev = _ACCEPTANCE.get(marker[0])
        if prev is None or prev[1] == "PASS":
            _ACCEPTANCE[marker[0]] = (marker[1], "PASS" if report.passed else "FAIL", detail)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is not None:
        report.criterion = m.args


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_ACCEPTANCE):
        title, status, detail = _ACCEPTANCE[num]
        line = f"{status} criterion {num}: {title}"
        if detail:
            line += f" [{detail}]"
        terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
