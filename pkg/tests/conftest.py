from __future__ import annotations

from hypothesis import settings, strategies as st

from donuts.oracle import brute_configurations

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

# every donut of area <= 600, found by the naive search
SMALL_DONUTS = [c for D in range(12, 601, 2) for c in brute_configurations(D)]

donuts_st = st.sampled_from(SMALL_DONUTS)


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if not test_acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in range(1, 10):
        if criterion not in test_acceptance.RESULTS:
            terminalreporter.write_line(f"criterion {criterion}: NOT RUN")
            continue
        ok, detail = test_acceptance.RESULTS[criterion]
        terminalreporter.write_line(f"criterion {criterion}: {'PASS' if ok else 'FAIL'}  {detail}")
