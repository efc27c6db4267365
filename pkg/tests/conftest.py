import re

CRITERIA = {
    1: "counting: |triangulations| = |Dyck paths| = c_{n+1}, n <= 8",
    2: "bijection and both roundtrips, n <= 7",
    3: "initial ascent = #negatives + 1, n <= 7",
    4: "LM(B_T) = M_D(T), n <= 7, golden n=5 instance",
    5: "B_T basis of the quasi-symmetric coinvariants, n <= 5",
    6: "Dyck monomial bases (both variable orders), n <= 4",
    7: "reversal sends B_T to +-B_reflect(T), n <= 6",
    8: "per-piece factors multiply to B_T, n <= 6",
    9: "dim Q_{n+1} = 0 and deg M_D <= n, n <= 5",
}


def pytest_terminal_summary(terminalreporter):
    outcomes = {}
    for key in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(key, []):
            match = re.search(r"test_acceptance\.py::test_criterion_(\d+)", getattr(report, "nodeid", ""))
            if match and (report.when == "call" or key == "error"):
                outcomes[int(match.group(1))] = "PASS" if key == "passed" else "FAIL"
    if not outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(outcomes):
        terminalreporter.write_line(f"criterion {number}: {outcomes[number]}  {CRITERIA.get(number, '')}")
