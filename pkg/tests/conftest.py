import time

import pytest

from wigner_lab import boost_params, gauss_hermite_grid, sigma_x_packet


def pytest_configure(config):
    config._suite_start = time.perf_counter()


def pytest_collection_modifyitems(config, items):
    # acceptance checklist runs last so its wall-clock criterion sees the full suite
    items.sort(key=lambda item: item.fspath.basename == "test_acceptance.py")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    elapsed = time.perf_counter() - config._suite_start
    terminalreporter.write_line(f"suite wall time: {elapsed:.1f} s")


@pytest.fixture(scope="session")
def grid_005():
    return gauss_hermite_grid(0.05, 24)


@pytest.fixture(scope="session")
def packet_005(grid_005):
    return sigma_x_packet(0.05, grid_005)


@pytest.fixture(scope="session")
def boost_08():
    return boost_params(0.8)
