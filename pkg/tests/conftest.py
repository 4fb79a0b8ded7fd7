import importlib

import pytest

from zerofield import _kernels_py

KERNEL_MODULES = [_kernels_py]
try:
    KERNEL_MODULES.append(importlib.import_module("zerofield._kernels"))
except ImportError:
    pass


@pytest.fixture(params=KERNEL_MODULES, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def kernels(request):
    return request.param


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
