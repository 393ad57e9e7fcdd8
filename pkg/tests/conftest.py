from __future__ import annotations

import _criteria_log


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _criteria_log.lines:
        terminalreporter.write_sep("-", "acceptance criteria")
        for line in _criteria_log.lines:
            terminalreporter.write_line(line)
