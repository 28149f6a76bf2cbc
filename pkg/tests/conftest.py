"""Shared pytest plumbing: the acceptance summary printed per criterion."""

ACCEPTANCE_RESULTS = []


def record_acceptance(index, name, passed, detail=""):
    ACCEPTANCE_RESULTS.append((index, name, bool(passed), detail))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for index, name, passed, detail in sorted(ACCEPTANCE_RESULTS):
        line = "criterion %2d  %-42s %s" % (index, name, "PASS" if passed else "FAIL")
        if detail:
            line += "  [%s]" % detail
        terminalreporter.write_line(line)
