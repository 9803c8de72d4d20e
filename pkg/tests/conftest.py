import pytest
from hypothesis import strategies as st

from bipfree.graph import Graph

ACCEPTANCE: dict[int, tuple[str, str]] = {}


@pytest.fixture
def record():
    """Record one acceptance criterion's outcome for the terminal summary."""
    def _record(number: int, ok: bool, detail: str):
        ACCEPTANCE[number] = ("PASS" if ok else "FAIL", detail)
    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        status, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:2d}: {status}  {detail}")


@st.composite
def graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph(n, frozenset(chosen))


@st.composite
def bipartite_graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    side = draw(st.lists(st.booleans(), min_size=n, max_size=n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if side[u] != side[v]]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph(n, frozenset(chosen))
