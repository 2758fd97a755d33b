import pytest

from cpsm import Instance, Variant
from cpsm.reduction import build_reduction
from cpsm.sat import example_formula

# Right-angle alpha-corner with its two split points; eps = 1.
CORNER_CURVE = [(0, 5), (0, 2), (2, 2), (2, 0), (5, 0)]
CORNER_POINTS = [(1, 5), (0, 1), (1, 0), (5, 1)]  # a, b, c, d

_acceptance_lines: list[str] = []


def record_acceptance(number: int, passed: bool, text: str) -> None:
    _acceptance_lines.append(f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {text}")


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_acceptance_lines, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)


@pytest.fixture
def corner_instance():
    def make(variant=Variant.NONUNIQUE_ALL):
        return Instance(CORNER_CURVE, CORNER_POINTS, 1.0, variant)
    return make


@pytest.fixture(scope="session")
def phi_reduction():
    return build_reduction(example_formula(), 1.0)
