import pytest

from domratio.enumeration import enumerate_trees

_CRITERIA: dict[int, tuple[str, bool]] = {}


@pytest.fixture
def criterion():
    """Record one acceptance criterion outcome for the terminal summary."""

    def record(number: int, text: str, ok: bool) -> bool:
        _CRITERIA[number] = (text, ok)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        text, ok = _CRITERIA[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {text}")


def trees_up_to(n_max, n_min=1):
    for n in range(n_min, n_max + 1):
        yield from enumerate_trees(n)
