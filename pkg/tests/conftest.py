import random

import pytest
from hypothesis import strategies as st

from trapbit.diagram import TrapezoidDiagram, random_diagram

DISJOINT = TrapezoidDiagram([(1, 2, 1, 2), (3, 4, 3, 4)])
CROSSING = TrapezoidDiagram([(1, 3, 2, 4), (2, 4, 1, 3)])


def chain_diagram(n):
    """n trapezoids, each strictly left of the next (pairwise non-adjacent)."""
    return TrapezoidDiagram([(2 * i - 1, 2 * i, 2 * i - 1, 2 * i) for i in range(1, n + 1)])


def clique_diagram(n):
    """n trapezoids that all pairwise cross (every pair adjacent)."""
    return TrapezoidDiagram([(i, n + i, n + 1 - i, 2 * n + 1 - i) for i in range(1, n + 1)])


@st.composite
def diagrams(draw, min_n=0, max_n=10):
    n = draw(st.integers(min_n, max_n))
    up = draw(st.permutations(range(1, 2 * n + 1)))
    lo = draw(st.permutations(range(1, 2 * n + 1)))
    rows = []
    for i in range(n):
        a, b = sorted(up[2 * i : 2 * i + 2])
        c, d = sorted(lo[2 * i : 2 * i + 2])
        rows.append((a, b, c, d))
    return TrapezoidDiagram(rows)


def random_cases(count, max_n, seed, min_n=1):
    rng = random.Random(seed)
    for _ in range(count):
        yield random_diagram(rng.randint(min_n, max_n), rng.getrandbits(63))


@pytest.fixture
def disjoint():
    return DISJOINT


@pytest.fixture
def crossing():
    return CROSSING


ACCEPTANCE_LINES = []


def record(number, title, ok, detail=""):
    line = f"criterion {number:>2} {'PASS' if ok else 'FAIL'}  {title}"
    if detail:
        line += f"  [{detail}]"
    ACCEPTANCE_LINES.append((number, line))
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
