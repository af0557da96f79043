"""Elementary symmetric constraint systems over prime fields.

Counts the simultaneous zeros of {e_j : j in J} in F_p^k two independent
ways: exhaustive enumeration (the oracle, bounded by the tuple budget)
and closed forms.  The closed forms cover J = {2} and J = {1,2} through
quadratic-form solution counts (with a radical reduction for the
degenerate arities), any J at p = 2 through Lucas-sieved binomial sums,
the full set J = {1,...,k}, and any J containing k through an
inclusion-exclusion recurrence over zeroed coordinates.
"""

import math
from dataclasses import dataclass

from . import _kernels
from .arith import binom_mod2, is_prime, nu, quadratic_character
from .budget import check_budget

MODES = ("joint", "individual")


@dataclass(frozen=True)
class SymSystem:
    """Constraints on k variables through the symmetric polynomials e_j, j in J.

    The mode records how a composite constraint is read against a modulus
    (one joint gcd versus one gcd per polynomial); zero counting over F_p
    is mode-independent, since both readings coincide at a prime.
    """

    k: int
    J: frozenset[int]
    mode: str = "joint"

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"arity k must be >= 1, got {self.k}")
        J = frozenset(int(j) for j in self.J)
        object.__setattr__(self, "J", J)
        for j in J:
            if not 1 <= j <= self.k:
                raise ValueError(f"index {j} outside [1, {self.k}]")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(sorted(self.J))


@dataclass(frozen=True)
class QuadraticForm:
    """x -> x^T A x over F_p, p odd, with A symmetric and entries reduced mod p."""

    p: int
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.p == 2 or not is_prime(self.p):
            raise ValueError(f"quadratic forms are handled over odd primes, got p={self.p}")
        rows = tuple(tuple(int(v) % self.p for v in row) for row in self.matrix)
        k = len(rows)
        if k < 1 or any(len(row) != k for row in rows):
            raise ValueError("matrix must be square and nonempty")
        for i in range(k):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise ValueError("matrix must be symmetric mod p")
        object.__setattr__(self, "matrix", rows)

    @property
    def k(self) -> int:
        return len(self.matrix)


def eval_elem_sym(j: int, values, m: int) -> int:
    """e_j of the tuple, mod m, via the product recurrence on prod(1 + x_i t).

    O(k*j) multiplications; no subset enumeration.
    """
    values = tuple(values)
    if not 1 <= j <= len(values):
        raise ValueError(f"index {j} outside [1, {len(values)}]")
    c = [0] * (j + 1)
    c[0] = 1
    for pos, v in enumerate(values, 1):
        for d in range(min(j, pos), 0, -1):
            c[d] = (c[d] + c[d - 1] * v) % m
    return c[j]


def count_zeros_bruteforce(system: SymSystem, p: int, budget: int | None = None) -> int:
    """Tuples in F_p^k where every e_j (j in J) vanishes, by full enumeration.

    Always counts simultaneous zeros regardless of the system's mode.  An
    empty J imposes nothing and counts the whole space.
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    space = p**system.k
    check_budget(space, budget, f"enumerating F_{p}^{system.k}")
    if not system.J:
        return space
    return _kernels.count_sym_zeros(p, system.k, system.indices)


def count_zeros_mod2(J, k: int) -> int:
    """Zeros of {e_j : j in J} over F_2^k as an exact sieved binomial sum.

    A tuple with exactly w ones has e_j = C(w, j) mod 2, so by Lucas the
    tuple is a zero of the system iff no j in J is a submask of w.
    """
    J = frozenset(J)
    total = 0
    for w in range(k + 1):
        if all(binom_mod2(w, j) == 0 for j in J):
            total += math.comb(k, w)
    return total


def closed_count_e2(k: int, p: int) -> int:
    """Zeros of e_2 in F_p^k, closed form.

    For odd p this is the quadratic-form count for the matrix with zero
    diagonal and 1/2 elsewhere, whose determinant (-1)^(k-1) (k-1) / 2^k
    vanishes exactly when p | k-1; the eta(0) = 0 convention lets one
    expression absorb both the degenerate and non-degenerate cases.  For
    p = 2 it is the sieved sum of C(k, w) over w = 0, 1 (mod 4), kept in
    integers rather than the equivalent trigonometric value.
    """
    if k < 2:
        raise ValueError(f"e_2 needs k >= 2, got {k}")
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if p == 2:
        return count_zeros_mod2({2}, k)
    if k % 2 == 1:
        arg = (-1) ** ((k - 1) // 2) * (1 - math.gcd(k - 1, p))
        return p ** (k - 1) + (p - 1) * p ** ((k - 1) // 2) * quadratic_character(arg, p)
    arg = (-1) ** (k // 2 + 1) * (k - 1)
    return p ** (k - 1) + (p - 1) * p ** ((k - 2) // 2) * quadratic_character(arg, p)


def closed_count_e1e2(k: int, p: int) -> int:
    """Simultaneous zeros of e_1 and e_2 in F_p^k, closed form.

    Eliminating x_k by e_1 = 0 leaves the form sum(x_i^2) + e_2 on k-1
    variables with determinant k / 2^(k-1), degenerate exactly when p | k;
    eta(0) = 0 merges the cases as above.  For p = 2 the count is the
    binomial sum over w = 0 (mod 4).
    """
    if k < 2:
        raise ValueError(f"the pair (e_1, e_2) needs k >= 2, got {k}")
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if p == 2:
        return count_zeros_mod2({1, 2}, k)
    if k % 2 == 1:
        arg = (-1) ** ((k - 1) // 2) * k
        return p ** (k - 2) + (p - 1) * p ** ((k - 3) // 2) * quadratic_character(arg, p)
    arg = (-1) ** (k // 2) * (1 - math.gcd(k, p))
    return p ** (k - 2) + (p - 1) * p ** ((k - 2) // 2) * quadratic_character(arg, p)


def closed_count_el_mod2(l: int, k: int) -> int:
    """Zeros of e_l in F_2^k: the binomial sum over weights w with l not a
    submask of w."""
    if not 1 <= l <= k:
        raise ValueError(f"index {l} outside [1, {k}]")
    return count_zeros_mod2({l}, k)


def extend_with_ek(J, k: int, p: int, base_counter=None, budget: int | None = None) -> int:
    """Zeros of {e_j : j in J} + {e_k} from counts on fewer variables.

    e_k = 0 means some coordinate vanishes; inclusion-exclusion over the
    zeroed coordinate sets gives

        sum_{j=1..k} (-1)^(j+1) C(k, j) N_{k-j}(J cut to [1, k-j], p)

    where constraints whose index exceeds the remaining arity drop out
    (those polynomials vanish identically once j coordinates are zero),
    and the empty count N_0 is 1.

    base_counter(J', m) supplies N_m(J', p) for 1 <= m < k; by default the
    closed-form dispatcher with brute-force fallback.
    """
    J = frozenset(int(j) for j in J)
    if k in J:
        raise ValueError(f"k={k} must not be in J; e_k is what gets appended")
    for j in J:
        if not 1 <= j < k:
            raise ValueError(f"index {j} outside [1, {k - 1}]")
    if base_counter is None:
        def base_counter(Jm, m):
            return count_zeros(SymSystem(m, Jm), p, budget=budget)

    total = 0
    for j in range(1, k + 1):
        m = k - j
        if m == 0:
            inner = 1
        else:
            inner = base_counter(frozenset(x for x in J if x <= m), m)
        total += (-1) ** (j + 1) * math.comb(k, j) * inner
    return total


class _NoClosedForm(Exception):
    pass


def count_zeros_closed(J, k: int, p: int) -> int | None:
    """Closed-form zero count of {e_j : j in J} over F_p^k, or None.

    Dispatch: any J at p = 2 (submask sums); empty J; the full set
    {1,...,k}; {1}; {2}; {1,2}; and any J containing k whose recurrence
    bases are themselves dispatchable.
    """
    J = frozenset(int(j) for j in J)
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if p == 2:
        return count_zeros_mod2(J, k)
    if not J:
        return p**k
    if J == frozenset(range(1, k + 1)):
        return 1
    if J == frozenset({1}):
        return p ** (k - 1)
    if J == frozenset({2}):
        return closed_count_e2(k, p)
    if J == frozenset({1, 2}):
        return closed_count_e1e2(k, p)
    if k in J:
        def strict_base(Jm, m):
            inner = count_zeros_closed(Jm, m, p)
            if inner is None:
                raise _NoClosedForm
            return inner

        try:
            return extend_with_ek(J - {k}, k, p, base_counter=strict_base)
        except _NoClosedForm:
            return None
    return None


def count_zeros(system: SymSystem, p: int, budget: int | None = None) -> int:
    """Zero count of the system over F_p^k: closed form when one is known,
    budget-checked enumeration otherwise."""
    value = count_zeros_closed(system.J, system.k, p)
    if value is not None:
        return value
    return count_zeros_bruteforce(system, p, budget=budget)


def _diagonalize_symmetric(rows, p: int) -> list[int]:
    """Diagonal of a congruence-diagonalization of a symmetric matrix mod odd p.

    Zero diagonal entries correspond to radical directions; the product of
    the nonzero ones equals det of the induced non-degenerate form up to a
    square factor, which is all the quadratic character can see.
    """
    k = len(rows)
    M = [[v % p for v in row] for row in rows]
    for i in range(k):
        if M[i][i] == 0:
            swap = next((j for j in range(i + 1, k) if M[j][j] != 0), None)
            if swap is not None:
                M[i], M[swap] = M[swap], M[i]
                for row in M:
                    row[i], row[swap] = row[swap], row[i]
            else:
                off = next((j for j in range(i + 1, k) if M[i][j] != 0), None)
                if off is not None:
                    # row/col addition: the new diagonal entry is 2*M[i][off] != 0
                    for t in range(k):
                        M[i][t] = (M[i][t] + M[off][t]) % p
                    for t in range(k):
                        M[t][i] = (M[t][i] + M[t][off]) % p
        piv = M[i][i]
        if piv == 0:
            continue  # row i is zero: x_i spans a radical direction
        inv = pow(piv, -1, p)
        for r in range(i + 1, k):
            f = M[r][i] * inv % p
            if f:
                for t in range(k):
                    M[r][t] = (M[r][t] - f * M[i][t]) % p
                for t in range(k):
                    M[t][r] = (M[t][r] - f * M[t][i]) % p
    return [M[i][i] for i in range(k)]


def quad_form_count(form: QuadraticForm, b: int) -> int:
    """Solutions of x^T A x = b over F_p^k (p odd).

    Non-degenerate forms use the two-branch character formula

        k odd:  p^(k-1) + p^((k-1)/2) eta((-1)^((k-1)/2) b det)
        k even: p^(k-1) + nu(b) p^((k-2)/2) eta((-1)^(k/2) det);

    a degenerate form is split into its radical (dimension r, contributing
    a factor p^r) and the induced non-degenerate form on the quotient,
    found by diagonalizing mod p.  The zero form counts p^k at b = 0 and
    0 elsewhere.
    """
    p = form.p
    k = form.k
    b %= p
    diag = _diagonalize_symmetric(form.matrix, p)
    nonzero = [d for d in diag if d != 0]
    rank = len(nonzero)
    if rank == 0:
        return p**k if b == 0 else 0
    det = 1
    for d in nonzero:
        det = det * d % p
    if rank % 2 == 1:
        count = p ** (rank - 1) + p ** ((rank - 1) // 2) * quadratic_character(
            (-1) ** ((rank - 1) // 2) * b * det, p
        )
    else:
        count = p ** (rank - 1) + nu(b, p) * p ** ((rank - 2) // 2) * quadratic_character(
            (-1) ** (rank // 2) * det, p
        )
    return p ** (k - rank) * count


def e2_matrix(k: int, p: int) -> QuadraticForm:
    """The symmetric matrix of e_2 as a quadratic form over F_p: zero diagonal,
    1/2 off the diagonal."""
    if k < 2:
        raise ValueError(f"e_2 needs k >= 2, got {k}")
    half = pow(2, -1, p)
    rows = tuple(tuple(0 if i == j else half for j in range(k)) for i in range(k))
    return QuadraticForm(p, rows)


def quadform_value_histogram(form: QuadraticForm, budget: int | None = None):
    """Brute-force histogram of x^T A x over F_p^k, indexed by value."""
    space = form.p**form.k
    check_budget(space, budget, f"enumerating F_{form.p}^{form.k}")
    return _kernels.quadform_histogram(form.p, form.k, form.matrix)
