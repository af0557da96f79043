"""Hot enumeration loops over the tuple spaces Z_m^k.

Two interchangeable backends compute identical counts: numba-compiled
kernels (the default whenever numba imports) and a chunked pure-numpy
path.  Setting SYMTOTIENT_JIT=0 forces the numpy path; the numba
implementations stay importable for benchmarking either way.

All kernel arithmetic is int64.  Callers must keep the tuple space m**k
under the enumeration budget (<= 2**31 tuples), which also bounds every
intermediate product below 2**63: the symmetric-sum recurrence and the
linear form reduce mod m at each step, so values never exceed m**2 + m.

The numba counting kernels partition the space by the leading coordinate
and combine partial counts by addition, so parallel and sequential runs
agree exactly.  Histogram kernels run sequentially (they are only used on
small moduli).
"""

import os

import numpy as np

_flag = os.environ.get("SYMTOTIENT_JIT", "").strip().lower()
_JIT_WANTED = _flag not in {"0", "off", "false", "no"}

try:
    from numba import njit, prange

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

USING_NUMBA = HAVE_NUMBA and _JIT_WANTED


def backend() -> str:
    """Name of the active kernel backend."""
    return "numba" if USING_NUMBA else "numpy"


# ---------------------------------------------------------------------------
# pure-numpy backend: decode tuple indices in chunks, run the DP columnwise
# ---------------------------------------------------------------------------

_CHUNK = 1 << 16


def _np_scan_chunk(idx, m, k, jmax, coeffs):
    """Per tuple index: elementary symmetric values e_0..e_jmax mod m of its
    base-m digits, plus (optionally) the linear form sum(coeffs[i]*x_i) mod m."""
    c = np.zeros((jmax + 1, idx.shape[0]), dtype=np.int64)
    c[0] = 1
    lin = np.zeros(idx.shape[0], dtype=np.int64) if coeffs is not None else None
    t = idx
    for pos in range(1, k + 1):
        v = t % m
        t = t // m
        if coeffs is not None:
            lin = (lin + coeffs[pos - 1] * v) % m
        for j in range(min(jmax, pos), 0, -1):
            c[j] = (c[j] + c[j - 1] * v) % m
    return c, lin


def _np_count_sym_zeros(m, k, js):
    jmax = int(js.max())
    space = m**k
    total = 0
    for start in range(0, space, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, space), dtype=np.int64)
        c, _ = _np_scan_chunk(idx, m, k, jmax, None)
        ok = np.ones(idx.shape[0], dtype=bool)
        for j in js:
            ok &= c[j] == 0
        total += int(np.count_nonzero(ok))
    return total


def _np_count_sym_units(m, k, js, joint):
    jmax = int(js.max())
    space = m**k
    total = 0
    for start in range(0, space, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, space), dtype=np.int64)
        c, _ = _np_scan_chunk(idx, m, k, jmax, None)
        if joint:
            g = np.full(idx.shape[0], m, dtype=np.int64)
            for j in js:
                g = np.gcd(g, c[j])
            ok = g == 1
        else:
            ok = np.ones(idx.shape[0], dtype=bool)
            for j in js:
                ok &= np.gcd(c[j], m) == 1
        total += int(np.count_nonzero(ok))
    return total


def _np_lincong_histogram(m, k, coeffs, js):
    jmax = int(js.max()) if js.shape[0] else 0
    space = m**k
    hist = np.zeros(m, dtype=np.int64)
    for start in range(0, space, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, space), dtype=np.int64)
        c, lin = _np_scan_chunk(idx, m, k, jmax, coeffs)
        ok = np.ones(idx.shape[0], dtype=bool)
        for j in js:
            ok &= np.gcd(c[j], m) == 1
        hist += np.bincount(lin[ok], minlength=m)
    return hist


def _np_quadform_histogram(p, k, mat):
    space = p**k
    hist = np.zeros(p, dtype=np.int64)
    for start in range(0, space, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, space), dtype=np.int64)
        x = np.empty((idx.shape[0], k), dtype=np.int64)
        t = idx
        for pos in range(k):
            x[:, pos] = t % p
            t = t // p
        vals = np.einsum("ij,jk,ik->i", x, mat, x) % p
        hist += np.bincount(vals, minlength=p)
    return hist


# ---------------------------------------------------------------------------
# numba backend
# ---------------------------------------------------------------------------

if HAVE_NUMBA:

    @njit(cache=True)
    def _gcd64(a, b):
        while b:
            a, b = b, a % b
        return a

    @njit(parallel=True, cache=True)
    def _nb_count_sym_zeros(m, k, js):
        jmax = 0
        for j in js:
            if j > jmax:
                jmax = j
        sub = 1
        for _ in range(k - 1):
            sub *= m
        total = 0
        for lead in prange(m):
            c = np.empty(jmax + 1, np.int64)
            local = 0
            for t in range(sub):
                for j in range(jmax + 1):
                    c[j] = 0
                c[0] = 1
                if jmax >= 1:
                    c[1] = lead
                tt = t
                for pos in range(2, k + 1):
                    v = tt % m
                    tt //= m
                    hi = jmax if jmax < pos else pos
                    for j in range(hi, 0, -1):
                        c[j] = (c[j] + c[j - 1] * v) % m
                ok = True
                for j in js:
                    if c[j] != 0:
                        ok = False
                        break
                if ok:
                    local += 1
            total += local
        return total

    @njit(parallel=True, cache=True)
    def _nb_count_sym_units(m, k, js, joint):
        jmax = 0
        for j in js:
            if j > jmax:
                jmax = j
        sub = 1
        for _ in range(k - 1):
            sub *= m
        total = 0
        for lead in prange(m):
            c = np.empty(jmax + 1, np.int64)
            local = 0
            for t in range(sub):
                for j in range(jmax + 1):
                    c[j] = 0
                c[0] = 1
                if jmax >= 1:
                    c[1] = lead
                tt = t
                for pos in range(2, k + 1):
                    v = tt % m
                    tt //= m
                    hi = jmax if jmax < pos else pos
                    for j in range(hi, 0, -1):
                        c[j] = (c[j] + c[j - 1] * v) % m
                if joint:
                    g = m
                    for j in js:
                        g = _gcd64(g, c[j])
                        if g == 1:
                            break
                    ok = g == 1
                else:
                    ok = True
                    for j in js:
                        if _gcd64(c[j], m) != 1:
                            ok = False
                            break
                if ok:
                    local += 1
            total += local
        return total

    @njit(cache=True)
    def _nb_lincong_histogram(m, k, coeffs, js):
        jmax = 0
        for j in js:
            if j > jmax:
                jmax = j
        space = 1
        for _ in range(k):
            space *= m
        hist = np.zeros(m, np.int64)
        c = np.empty(jmax + 1, np.int64)
        for t in range(space):
            for j in range(jmax + 1):
                c[j] = 0
            c[0] = 1
            lin = 0
            tt = t
            for pos in range(1, k + 1):
                v = tt % m
                tt //= m
                lin = (lin + coeffs[pos - 1] * v) % m
                hi = jmax if jmax < pos else pos
                for j in range(hi, 0, -1):
                    c[j] = (c[j] + c[j - 1] * v) % m
            ok = True
            for j in js:
                if _gcd64(c[j], m) != 1:
                    ok = False
                    break
            if ok:
                hist[lin] += 1
        return hist

    @njit(cache=True)
    def _nb_quadform_histogram(p, k, mat):
        space = 1
        for _ in range(k):
            space *= p
        hist = np.zeros(p, np.int64)
        x = np.empty(k, np.int64)
        for t in range(space):
            tt = t
            for i in range(k):
                x[i] = tt % p
                tt //= p
            val = 0
            for i in range(k):
                row = 0
                for j in range(k):
                    row += mat[i, j] * x[j]
                val = (val + (row % p) * x[i]) % p
            hist[val] += 1
        return hist


# ---------------------------------------------------------------------------
# dispatch wrappers
# ---------------------------------------------------------------------------

def _as_indices(js):
    return np.asarray(sorted(js), dtype=np.int64)


def count_sym_zeros(m: int, k: int, js) -> int:
    """Tuples in Z_m^k with e_j = 0 (mod m) for every j in js (js nonempty)."""
    arr = _as_indices(js)
    if USING_NUMBA:
        return int(_nb_count_sym_zeros(m, k, arr))
    return _np_count_sym_zeros(m, k, arr)


def count_sym_units(m: int, k: int, js, joint: bool) -> int:
    """Tuples in Z_m^k whose constrained symmetric values are units mod m.

    joint=True tests gcd(e_j1, ..., e_jr, m) == 1; joint=False tests each
    gcd(e_j, m) == 1 separately.
    """
    arr = _as_indices(js)
    if USING_NUMBA:
        return int(_nb_count_sym_units(m, k, arr, joint))
    return _np_count_sym_units(m, k, arr, bool(joint))


def lincong_histogram(m: int, k: int, coeffs, js) -> np.ndarray:
    """Histogram over b of tuples with sum(coeffs[i]*x_i) = b (mod m), restricted
    to tuples where every e_j (j in js) is a unit mod m.  js may be empty."""
    arr = _as_indices(js)
    cf = np.asarray([c % m for c in coeffs], dtype=np.int64)
    if USING_NUMBA:
        return _nb_lincong_histogram(m, k, cf, arr)
    return _np_lincong_histogram(m, k, cf, arr)


def quadform_histogram(p: int, k: int, matrix) -> np.ndarray:
    """Histogram over b of tuples x in Z_p^k with x^T A x = b (mod p)."""
    mat = np.asarray(matrix, dtype=np.int64) % p
    if USING_NUMBA:
        return _nb_quadform_histogram(p, k, mat)
    return _np_quadform_histogram(p, k, mat)
