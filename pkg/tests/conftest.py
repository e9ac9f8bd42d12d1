import os
import sys
import time

from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile(
    "default",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("default")

SUITE_BUDGET = 600


def pytest_configure(config):
    config._acceptance_start = time.perf_counter()


def pytest_terminal_summary(terminalreporter, config):
    elapsed = time.perf_counter() - config._acceptance_start
    verdict = "within" if elapsed <= SUITE_BUDGET else "OVER"
    terminalreporter.write_line(f"suite wall-clock {elapsed:.1f}s, {verdict} the {SUITE_BUDGET}s budget")
