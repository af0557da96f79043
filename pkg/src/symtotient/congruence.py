"""Restricted linear congruences.

Counts solutions of a_1 x_1 + ... + a_k x_k = b (mod n) with the side
condition that chosen elementary symmetric values of the unknowns are
units mod n.  The count only depends on gcd(b, n) (scaling by a unit is a
constraint-preserving bijection), and for unit b it equals the
individual-mode totient of the system extended by the linear form,
divided by phi(n).  Specialized closed products cover the three- and
four-variable cases with all coefficients 1, and the closing piece is the
generalized Ramanujan sum they induce.
"""

import cmath
import math
from dataclasses import dataclass, replace

import numpy as np

from . import _kernels
from .arith import euler_phi, factorize, is_prime, ramanujan_sum
from .budget import check_budget
from .symfield import SymSystem
from .totient import IntegralityError, TotientSpec, phi


@dataclass(frozen=True)
class CongruenceProblem:
    """Linear congruence sum(coeffs[i] * x_i) = b (mod n), restricted so that
    every e_j(x) with j in the constraint set is a unit mod n."""

    coeffs: tuple[int, ...]
    b: int
    n: int
    constraint: SymSystem

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"modulus must be >= 1, got {self.n}")
        if self.constraint.mode != "individual":
            raise ValueError("congruence constraints use individual gcd conditions")
        coeffs = tuple(int(c) % self.n for c in self.coeffs)
        if len(coeffs) != self.constraint.k:
            raise ValueError(
                f"{len(coeffs)} coefficients for a constraint on {self.constraint.k} variables"
            )
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "b", int(self.b) % self.n)

    @property
    def k(self) -> int:
        return self.constraint.k


def solution_histogram(prob: CongruenceProblem, budget: int | None = None) -> np.ndarray:
    """Solution counts of the restricted congruence for every right-hand side
    at once (index = b)."""
    check_budget(prob.n**prob.k, budget, f"enumerating Z_{prob.n}^{prob.k}")
    return _kernels.lincong_histogram(prob.n, prob.k, prob.coeffs, prob.constraint.indices)


def count_bruteforce(prob: CongruenceProblem, budget: int | None = None) -> int:
    """Solution count by literal enumeration of Z_n^k."""
    return int(solution_histogram(prob, budget=budget)[prob.b])


def reduce_rhs(prob: CongruenceProblem) -> CongruenceProblem:
    """The same problem with b replaced by gcd(b, n); the count is unchanged
    because the constraints are homogeneous (coordinates scale by the unit
    b / gcd(b, n))."""
    return replace(prob, b=math.gcd(prob.b, prob.n) % prob.n)


def count_unit_rhs(prob: CongruenceProblem, budget: int | None = None) -> int:
    """Solution count for gcd(b, n) = 1: the individual totient of the system
    extended by the linear form, divided (exactly) by phi(n).

    With all coefficients 1 the linear form is e_1, so the extended system
    is J + {1} and the totient dispatcher's closed forms apply; general
    coefficients fall back to one brute-force pass over F_p^k per prime
    divisor of n.
    """
    n = prob.n
    if math.gcd(prob.b, n) != 1:
        raise ValueError(f"count_unit_rhs needs gcd(b, n) = 1, got b={prob.b}, n={n}")
    J = prob.constraint.J
    k = prob.k
    if all(c == 1 % n for c in prob.coeffs):
        numerator = phi(TotientSpec(k, J | {1}, "individual", n), budget=budget)
    else:
        numerator = 1
        for p, a in factorize(n):
            check_budget(p**k, budget, f"enumerating F_{p}^{k}")
            hist = _kernels.lincong_histogram(p, k, prob.coeffs, prob.constraint.indices)
            unit_rows = int(hist.sum() - hist[0])
            numerator *= p ** (k * (a - 1)) * unit_rows
    q, r = divmod(numerator, euler_phi(n))
    if r:
        raise IntegralityError(
            f"extended totient {numerator} not divisible by phi({n}) = {euler_phi(n)}"
        )
    return q


def psi(p: int, a: int) -> int:
    """Unit triples mod p^a with e_1 = e_2 = 0 (mod p).

    The count is p^(3(a-1)) (p-1) at p = 3, twice that for p = 1 (mod 3),
    and 0 for p = 2 (mod 3): eliminating the third variable leaves
    x^2 + x + 1, solvable mod p exactly when p is 3 or splits mod 3.
    """
    if a < 1:
        raise ValueError(f"exponent must be >= 1, got {a}")
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if p == 3:
        return p ** (3 * (a - 1)) * (p - 1)
    if p % 3 == 1:
        return 2 * p ** (3 * (a - 1)) * (p - 1)
    return 0


def g3_closed(m: int, n: int) -> int:
    """Solutions of x1 + x2 + x3 = m (mod n) with e_2 and e_3 units, for
    gcd(m, n) = 1: the product of p^(2(a-1)) (p^2 - 3p + 6 - h(p)) with
    h(p) = 3, p-1, p+1 according to p mod 3."""
    if n < 1:
        raise ValueError(f"modulus must be >= 1, got {n}")
    if math.gcd(m, n) != 1:
        raise ValueError(f"needs gcd(m, n) = 1, got m={m}, n={n}")
    out = 1
    for p, a in factorize(n):
        h = 3 if p == 3 else (p - 1 if p % 3 == 1 else p + 1)
        out *= p ** (2 * (a - 1)) * (p * p - 3 * p + 6 - h)
    return out


def g4_closed(m: int, n: int) -> int:
    """Solutions of x1 + ... + x4 = m (mod n) with e_3 and e_4 units, for
    gcd(m, n) = 1: zero for even n, else the product of
    p^(3(a-1)) (p^3 - 5p^2 + 12p - 13)."""
    if n < 1:
        raise ValueError(f"modulus must be >= 1, got {n}")
    if math.gcd(m, n) != 1:
        raise ValueError(f"needs gcd(m, n) = 1, got m={m}, n={n}")
    if n % 2 == 0:
        return 0
    out = 1
    for p, a in factorize(n):
        out *= p ** (3 * (a - 1)) * (p**3 - 5 * p * p + 12 * p - 13)
    return out


def _unit_rhs_count(n: int, k: int, J, budget: int | None = None) -> int:
    prob = CongruenceProblem((1,) * k, 1 % n, n, SymSystem(k, frozenset(J), "individual"))
    return count_unit_rhs(prob, budget=budget)


def generalized_ramanujan(m: int, n: int, k: int, J, budget: int | None = None) -> int:
    """The Ramanujan-type sum induced by the constrained solution set:
    g_k(1, n) * c(m, n), where g_k(1, n) counts unit-RHS solutions of the
    all-ones linear form under the constraints J."""
    return _unit_rhs_count(n, k, J, budget=budget) * ramanujan_sum(m, n)


def generalized_ramanujan_direct(
    m: int, n: int, k: int, J, budget: int | None = None, tol: float = 1e-6
) -> int:
    """The same sum from its definition: sum of e^(2*pi*i*m*e_1(x)/n) over the
    constrained tuples whose e_1 is itself a unit mod n, by enumeration.

    This is the one floating-point path in the library; it rounds to the
    nearest integer and refuses (IntegralityError) if the value strays by
    tol or more before rounding.
    """
    J = frozenset(J)
    check_budget(n**k, budget, f"enumerating Z_{n}^{k}")
    hist = _kernels.lincong_histogram(n, k, [1] * k, sorted(J))
    total = sum(
        int(c) * cmath.exp(2j * cmath.pi * m * a / n)
        for a, c in enumerate(hist)
        if c and math.gcd(a, n) == 1
    )
    nearest = round(total.real)
    if abs(total - nearest) >= tol:
        raise IntegralityError(
            f"exponential sum {total} is not within {tol} of an integer"
        )
    return int(nearest)
