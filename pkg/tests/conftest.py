from __future__ import annotations

import random
import time

import pytest

from traag.mixed_graph import Edge, MixedGraph, parse_graph

GRAPHS = {
    "GK": "vertex a\nvertex b\narrow b a\n",
    "GT": "vertex a\nvertex b\nvertex c\narrow a b\narrow b c\narrow c a\n",
    "GC4": "vertex a\nvertex b\nvertex c\nvertex d\narrow a b\narrow b c\narrow c d\narrow d a\n",
    "GP3": "vertex a\nvertex b\nvertex c\nedge a b\nedge b c\n",
    "GS": "vertex a\nvertex b\nvertex c\narrow a b\narrow b c\n",
    "E3": "vertex a\nvertex b\nvertex c\n",
    "K5": "".join(f"vertex {v}\n" for v in "abcde")
    + "".join(f"edge {u} {v}\n" for i, u in enumerate("abcde") for v in "abcde"[i + 1 :]),
}


def named(name: str) -> MixedGraph:
    return parse_graph(GRAPHS[name])


def edgeless(names: str) -> MixedGraph:
    return MixedGraph(tuple(names), ())


def random_graph(rng: random.Random, max_vertices: int = 9, p_edge: float | None = None) -> MixedGraph:
    """Random mixed graph; each pair is absent, plain, or oriented either way."""
    n = rng.randint(1, max_vertices)
    names = tuple(f"v{i}" for i in range(n))
    p = rng.uniform(0.2, 0.9) if p_edge is None else p_edge
    p_arrow = rng.uniform(0.0, 1.0)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() >= p:
                continue
            u, v = names[i], names[j]
            if rng.random() < p_arrow:
                if rng.random() < 0.5:
                    u, v = v, u
                edges.append(Edge(u, v, oriented=True))
            else:
                edges.append(Edge(u, v))
    rng.shuffle(edges)
    return MixedGraph(names, tuple(edges))


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=20261016, help="seed for randomized tests")


@pytest.fixture
def seed(request) -> int:
    return request.config.getoption("--seed")


@pytest.fixture
def rng(seed) -> random.Random:
    return random.Random(seed)


ACCEPTANCE_LINES: list[str] = []
SUITE_LIMIT_SECONDS = 60.0
FULL_RUN_MIN_TESTS = 100


def pytest_terminal_summary(terminalreporter, config):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
    elapsed = getattr(config, "_traag_elapsed", None)
    if elapsed is not None and config._traag_full_run:
        status = "PASS" if elapsed < SUITE_LIMIT_SECONDS else "FAIL"
        terminalreporter.write_line(
            f"{status} criterion 10: full suite under {SUITE_LIMIT_SECONDS:.0f}s ({elapsed:.2f}s)"
        )


def pytest_sessionstart(session):
    session.config._traag_start = time.perf_counter()


def pytest_sessionfinish(session, exitstatus):
    elapsed = time.perf_counter() - session.config._traag_start
    session.config._traag_elapsed = elapsed
    # the time budget only applies to a full run of the suite
    session.config._traag_full_run = session.testscollected >= FULL_RUN_MIN_TESTS
    if session.config._traag_full_run and elapsed >= SUITE_LIMIT_SECONDS and exitstatus == 0:
        session.exitstatus = 1
