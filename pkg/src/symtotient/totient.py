"""Generalized totient functions over symmetric constraint systems.

Two totients are attached to an index set J on k variables and a modulus n:

    joint       count of tuples with gcd(e_j1, ..., e_jr, n) = 1
    individual  count of tuples with every gcd(e_j, n) = 1

Both are multiplicative, so evaluation runs prime power by prime power
with exact integer factors p^(k(a-1)) * (p^k - N), where N is a zero count
from the closed-form dispatcher (brute force over F_p^k when no closed
form applies).  The two totients convert into each other by an
alternating sum over subsets of J; that bridge is how the individual
mode is evaluated.  Brute-force oracles over Z_n^k and the Menon-identity
sides live here as well.

Conventions: the value is 0 for empty J and 1 for n = 1.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import _kernels
from .arith import dirichlet_convolve_mu, divisors, euler_phi, factorize
from .budget import check_budget
from .symfield import SymSystem, closed_count_e1e2, closed_count_e2, count_zeros


class IntegralityError(RuntimeError):
    """A quantity that is provably an integer failed to be one (a library bug,
    not a user error)."""


@dataclass(frozen=True)
class TotientSpec:
    """A generalized-totient evaluation request: arity, index set, mode, modulus."""

    k: int
    J: frozenset[int]
    mode: str
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"modulus must be >= 1, got {self.n}")
        system = SymSystem(self.k, self.J, self.mode)  # validates k, J, mode
        object.__setattr__(self, "J", system.J)

    @property
    def system(self) -> SymSystem:
        return SymSystem(self.k, self.J, self.mode)


def _require_mode(spec: TotientSpec, mode: str) -> None:
    if spec.mode != mode:
        raise ValueError(f"expected a mode={mode!r} spec, got mode={spec.mode!r}")


def varphi(spec: TotientSpec, budget: int | None = None) -> int:
    """Joint-gcd totient by its product form.

    Per prime power p^a dividing n the factor is p^(k(a-1)) * (p^k - N_J(p)),
    with N_J(p) the simultaneous zero count in F_p^k.  No division ever
    leaves the integers.
    """
    _require_mode(spec, "joint")
    if not spec.J:
        return 0
    out = 1
    for p, a in factorize(spec.n):
        n_p = count_zeros(SymSystem(spec.k, spec.J), p, budget=budget)
        out *= p ** (spec.k * (a - 1)) * (p**spec.k - n_p)
    return out


def phi(spec: TotientSpec, budget: int | None = None) -> int:
    """Individual-gcd totient via the inclusion-exclusion bridge.

    Per prime power the value is the alternating sum of the joint factors
    over all nonempty subsets of J; multiplicativity then glues the primes.
    """
    _require_mode(spec, "individual")
    if not spec.J:
        return 0
    J = sorted(spec.J)
    out = 1
    for p, a in factorize(spec.n):
        lift = p ** (spec.k * (a - 1))
        factor = 0
        for r in range(1, len(J) + 1):
            for sub in combinations(J, r):
                n_p = count_zeros(SymSystem(spec.k, frozenset(sub)), p, budget=budget)
                factor += (-1) ** (r + 1) * lift * (p**spec.k - n_p)
        out *= factor
    return out


def varphi_bruteforce(spec: TotientSpec, budget: int | None = None) -> int:
    """Joint-gcd totient by literal enumeration of Z_n^k."""
    _require_mode(spec, "joint")
    if not spec.J:
        return 0
    check_budget(spec.n**spec.k, budget, f"enumerating Z_{spec.n}^{spec.k}")
    return _kernels.count_sym_units(spec.n, spec.k, sorted(spec.J), joint=True)


def phi_bruteforce(spec: TotientSpec, budget: int | None = None) -> int:
    """Individual-gcd totient by literal enumeration of Z_n^k."""
    _require_mode(spec, "individual")
    if not spec.J:
        return 0
    check_budget(spec.n**spec.k, budget, f"enumerating Z_{spec.n}^{spec.k}")
    return _kernels.count_sym_units(spec.n, spec.k, sorted(spec.J), joint=False)


def closed_phi_12(k: int, n: int) -> int:
    """Individual totient for J = {1, 2}, fully closed.

    Per prime the factor is p^k - p^(k-1) - N_k(e2, p) + N_k(e1 e2, p);
    at p = 2 the two sieved binomial sums make this exact without any
    trigonometric evaluation.
    """
    if k < 2:
        raise ValueError(f"J = {{1,2}} needs k >= 2, got {k}")
    if n < 1:
        raise ValueError(f"modulus must be >= 1, got {n}")
    out = 1
    for p, a in factorize(n):
        factor = p**k - p ** (k - 1) - closed_count_e2(k, p) + closed_count_e1e2(k, p)
        out *= p ** (k * (a - 1)) * factor
    return out


def closed_phi_123(n: int) -> int:
    """Individual totient for J = {1, 2, 3} at k = 3, fully closed.

    Per prime power the factor is p^(3(a-1)) (p-1) (p^2 - 3p + 6 - h(p))
    with h(p) = 3 at p = 3, p - 1 for p = 1 mod 3, p + 1 for p = 2 mod 3.
    """
    if n < 1:
        raise ValueError(f"modulus must be >= 1, got {n}")
    out = 1
    for p, a in factorize(n):
        h = 3 if p == 3 else (p - 1 if p % 3 == 1 else p + 1)
        out *= p ** (3 * (a - 1)) * (p - 1) * (p * p - 3 * p + 6 - h)
    return out


def toth_phi_1k(k: int, n: int) -> int:
    """Individual totient for J = {1, k} (Toth's product formula), exact.

    Per prime power p^a the factor is
    p^(k(a-1)) * (p-1) * ((p-1)^k - (-1)^k) / p, and the division by p is
    exact because (p-1)^k = (-1)^k mod p.  The symmetry J = {i, k} ~
    J = {k-i, k} makes this also the value for J = {k-1, k}.
    """
    if k < 2:
        raise ValueError(f"J = {{1,k}} needs k >= 2, got {k}")
    if n < 1:
        raise ValueError(f"modulus must be >= 1, got {n}")
    out = 1
    for p, a in factorize(n):
        num = (p - 1) * ((p - 1) ** k - (-1) ** k)
        q, r = divmod(num, p)
        if r:
            raise IntegralityError(f"(p-1)((p-1)^k - (-1)^k) not divisible by p={p}")
        out *= p ** (k * (a - 1)) * q
    return out


def unit_fiber_histogram(n: int, k: int, J, budget: int | None = None):
    """Histogram over a of tuples with e_1 = a (mod n) whose e_j are all units
    mod n (j in J).  One pass serves the Menon sum, fiber-uniformity checks,
    and exponential sums."""
    check_budget(n**k, budget, f"enumerating Z_{n}^{k}")
    return _kernels.lincong_histogram(n, k, [1] * k, sorted(frozenset(J)))


def menon_lhs(n: int, k: int, J, f, budget: int | None = None) -> int:
    """Left side of the Menon identity: sum of f(gcd(e_1(x) - 1, n)) over
    tuples x in Z_n^k whose e_j are units mod n for every j in J.

    Requires 1 in J (the identity's hypothesis).
    """
    J = frozenset(J)
    if 1 not in J:
        raise ValueError("the Menon identity needs 1 in J")
    hist = unit_fiber_histogram(n, k, J, budget=budget)
    return sum(int(c) * f(math.gcd((a - 1) % n, n)) for a, c in enumerate(hist) if c)


def menon_rhs(n: int, k: int, J, f, budget: int | None = None) -> int:
    """Right side of the Menon identity: phi_J(n) * sum over d | n of
    (mu * f)(d) / phi(d), evaluated in exact rationals with an integrality
    check at the end."""
    J = frozenset(J)
    if 1 not in J:
        raise ValueError("the Menon identity needs 1 in J")
    spec = TotientSpec(k, J, "individual", n)
    total = phi(spec, budget=budget) * sum(
        Fraction(dirichlet_convolve_mu(f, d), euler_phi(d)) for d in divisors(n)
    )
    return _exact_int(total, "Menon right-hand side")


def _exact_int(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise IntegralityError(f"{what} evaluated to the non-integer {value}")
    return int(value)
