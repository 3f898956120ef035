import pytest

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_log():
    """Record one summary line per acceptance criterion."""

    def record(number: int, title: str, ok: bool, elapsed: float, budget: float | None, detail: str = ""):
        status = "PASS" if ok else "FAIL"
        extra = f" ({detail})" if detail else ""
        limit = f" / {budget:.0f}s budget" if budget else ""
        _ACCEPTANCE_LINES.append(
            f"[{status}] criterion {number}: {title}: {elapsed:.2f}s{limit}{extra}"
        )

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
