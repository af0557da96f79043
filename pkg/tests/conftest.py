import pytest

from symtotient import _kernels


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Touch every kernel once so JIT compilation doesn't land inside a timed test."""
    _kernels.count_sym_zeros(3, 2, [2])
    _kernels.count_sym_units(3, 2, [1, 2], joint=True)
    _kernels.count_sym_units(3, 2, [1, 2], joint=False)
    _kernels.lincong_histogram(3, 2, [1, 1], [2])
    _kernels.quadform_histogram(3, 2, [[0, 2], [2, 0]])
