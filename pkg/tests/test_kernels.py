"""Backend equivalence: numba kernels, the numpy fallback, and a pure-Python
itertools oracle must produce identical counts."""

import math
from itertools import product

import numpy as np
import pytest

from symtotient import _kernels


def esym_all(values, jmax, m):
    c = [0] * (jmax + 1)
    c[0] = 1
    for pos, v in enumerate(values, 1):
        for j in range(min(jmax, pos), 0, -1):
            c[j] = (c[j] + c[j - 1] * v) % m
    return c


def oracle_count_zeros(m, k, js):
    jmax = max(js)
    return sum(
        1
        for t in product(range(m), repeat=k)
        if all(esym_all(t, jmax, m)[j] == 0 for j in js)
    )


def oracle_count_units(m, k, js, joint):
    jmax = max(js)
    total = 0
    for t in product(range(m), repeat=k):
        e = esym_all(t, jmax, m)
        if joint:
            ok = math.gcd(*[e[j] for j in js], m) == 1
        else:
            ok = all(math.gcd(e[j], m) == 1 for j in js)
        total += ok
    return total


def oracle_lincong_hist(m, k, coeffs, js):
    jmax = max(js) if js else 0
    hist = [0] * m
    for t in product(range(m), repeat=k):
        e = esym_all(t, jmax, m)
        if all(math.gcd(e[j], m) == 1 for j in js):
            hist[sum(c * x for c, x in zip(coeffs, t)) % m] += 1
    return hist


def oracle_quadform_hist(p, k, mat):
    hist = [0] * p
    for t in product(range(p), repeat=k):
        val = sum(mat[i][j] * t[i] * t[j] for i in range(k) for j in range(k)) % p
        hist[val] += 1
    return hist


CASES = [
    (2, 3, (1,)),
    (3, 2, (2,)),
    (4, 3, (1, 2)),
    (5, 3, (2, 3)),
    (6, 2, (1, 2)),
    (7, 2, (2,)),
    (9, 3, (1, 3)),
    (12, 2, (1, 2)),
    (1, 2, (1,)),
    (17, 4, (2,)),  # 17**4 = 83521 straddles the numpy chunk size
]


@pytest.mark.parametrize("m,k,js", CASES)
def test_count_zeros_matches_oracle(m, k, js):
    assert _kernels.count_sym_zeros(m, k, js) == oracle_count_zeros(m, k, js)


@pytest.mark.parametrize("m,k,js", CASES)
@pytest.mark.parametrize("joint", [True, False])
def test_count_units_matches_oracle(m, k, js, joint):
    got = _kernels.count_sym_units(m, k, js, joint)
    assert got == oracle_count_units(m, k, js, joint)


@pytest.mark.parametrize(
    "m,k,coeffs,js",
    [
        (3, 2, (1, 1), (2,)),
        (5, 3, (1, 1, 1), (2, 3)),
        (6, 2, (1, 5), (1,)),
        (8, 3, (2, 3, 5), (1, 2)),
        (7, 1, (1,), (1,)),
        (10, 2, (0, 4), ()),
        (1, 2, (1, 1), (1,)),
    ],
)
def test_lincong_histogram_matches_oracle(m, k, coeffs, js):
    got = _kernels.lincong_histogram(m, k, coeffs, js)
    assert got.tolist() == oracle_lincong_hist(m, k, coeffs, js)
    assert int(got.sum()) <= m**k


@pytest.mark.parametrize(
    "p,k,mat",
    [
        (3, 1, ((1,),)),
        (3, 2, ((0, 2), (2, 0))),
        (5, 2, ((1, 3), (3, 4))),
        (7, 3, ((0, 4, 4), (4, 0, 4), (4, 4, 0))),
        (13, 2, ((0, 0), (0, 0))),
    ],
)
def test_quadform_histogram_matches_oracle(p, k, mat):
    got = _kernels.quadform_histogram(p, k, mat)
    assert got.tolist() == oracle_quadform_hist(p, k, mat)
    assert int(got.sum()) == p**k


@pytest.mark.skipif(not _kernels.HAVE_NUMBA, reason="numba unavailable")
class TestBackendsAgree:
    """The two backend implementations, called directly, must agree bit for bit."""

    def test_count_zeros(self):
        for m, k, js in CASES:
            arr = np.asarray(js, dtype=np.int64)
            assert _kernels._nb_count_sym_zeros(m, k, arr) == _kernels._np_count_sym_zeros(
                m, k, arr
            )

    def test_count_units(self):
        for m, k, js in CASES:
            arr = np.asarray(js, dtype=np.int64)
            for joint in (True, False):
                assert _kernels._nb_count_sym_units(
                    m, k, arr, joint
                ) == _kernels._np_count_sym_units(m, k, arr, joint)

    def test_lincong_histogram(self):
        for m, k, js in CASES:
            arr = np.asarray(js, dtype=np.int64)
            coeffs = np.asarray([(i % m) + 1 if m > 1 else 0 for i in range(k)], dtype=np.int64)
            nb = _kernels._nb_lincong_histogram(m, k, coeffs, arr)
            np_ = _kernels._np_lincong_histogram(m, k, coeffs, arr)
            assert nb.tolist() == np_.tolist()

    def test_quadform_histogram(self):
        rng = np.random.default_rng(7)
        for p in (3, 5, 11):
            for k in (1, 2, 3):
                mat = rng.integers(0, p, size=(k, k))
                mat = (mat + mat.T) % p
                nb = _kernels._nb_quadform_histogram(p, k, mat.astype(np.int64))
                np_ = _kernels._np_quadform_histogram(p, k, mat.astype(np.int64))
                assert nb.tolist() == np_.tolist()
