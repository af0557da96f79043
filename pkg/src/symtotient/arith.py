"""Exact integer arithmetic primitives.

Factorization, multiplicative functions, the quadratic character, Lucas
parity of binomials, and Ramanujan sums.  Every value returned here is an
exact Python integer; the Ramanujan sum goes through its divisor form,
never through floating-point exponentials.
"""

import math

# Deterministic Miller-Rabin witness set, valid for all n < 3.3e24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Trial division handles everything below this; Pollard rho takes over above.
_TRIAL_LIMIT = 10**6


def is_prime(n: int) -> bool:
    """Deterministic primality test (Miller-Rabin with a fixed witness set)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """A nontrivial factor of composite odd n (Brent's cycle variant).

    The polynomial offset steps deterministically, so equal inputs always
    split the same way.
    """
    if n % 2 == 0:
        return 2
    for c in range(1, n):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise AssertionError(f"rho failed to split {n}")  # unreachable for composite n


def _factor_into(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_rho(n)
    _factor_into(d, out)
    _factor_into(n // d, out)


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 as [(p, a), ...], primes strictly increasing.

    factorize(1) == [].  Trial division up to 10**6, then Pollard rho with
    deterministic Miller-Rabin, so anything a desk machine can enumerate
    factors instantly.
    """
    if n < 1:
        raise ValueError(f"modulus must be a positive integer, got {n}")
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    # 30-wheel over residues coprime to 2*3*5
    d = 7
    wheel = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while d * d <= n and d <= _TRIAL_LIMIT:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += wheel[i]
        i = (i + 1) % 8
    if n > 1:
        if d * d > n:
            out[n] = out.get(n, 0) + 1
        else:
            _factor_into(n, out)
    return sorted(out.items())


def divisors(n: int) -> list[int]:
    """All positive divisors of n, sorted."""
    ds = [1]
    for p, a in factorize(n):
        ds = [d * p**e for d in ds for e in range(a + 1)]
    return sorted(ds)


def primes_in_range(lo: int, hi: int) -> list[int]:
    """Primes p with lo <= p <= hi."""
    return [p for p in range(max(lo, 2), hi + 1) if is_prime(p)]


def quadratic_character(a: int, p: int) -> int:
    """The quadratic character of a mod p (odd prime): 0 on multiples of p,
    +1 on nonzero squares, -1 otherwise.  Agrees with Euler's criterion
    a^((p-1)/2) mod p."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"quadratic character needs an odd prime, got {p}")
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def nu(b: int, p: int) -> int:
    """The weight appearing in quadratic-form solution counts:
    p-1 when b = 0 mod p, and -1 on units."""
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    return p - 1 if b % p == 0 else -1


def binom_mod2(j: int, l: int) -> int:
    """C(j, l) mod 2.  By Lucas, odd exactly when l is a submask of j."""
    return 1 if j & l == l else 0


def moebius(n: int) -> int:
    """Mobius function: (-1)^(number of prime factors) on squarefree n, else 0."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    fac = factorize(n)
    if any(a > 1 for _, a in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def euler_phi(n: int) -> int:
    """Euler totient, evaluated exactly from the factorization."""
    out = 1
    for p, a in factorize(n):
        out *= p ** (a - 1) * (p - 1)
    return out


def jordan_totient(k: int, n: int) -> int:
    """Jordan totient: number of k-tuples mod n whose joint gcd with n is 1.

    Per prime power p^a the factor is p^(k(a-1)) * (p^k - 1); k = 1 gives
    Euler's totient.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    out = 1
    for p, a in factorize(n):
        out *= p ** (k * (a - 1)) * (p**k - 1)
    return out


def dirichlet_convolve_mu(f, d: int) -> int:
    """(mu * f)(d) = sum over e | d of mu(d/e) f(e)."""
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    return sum(moebius(d // e) * f(e) for e in divisors(d))


def ramanujan_sum(m: int, n: int) -> int:
    """Ramanujan sum c(m, n): the sum of e^(2*pi*i*a*m/n) over a coprime to n,
    computed exactly as sum over d | gcd(m, n) of d * mu(n/d)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    g = math.gcd(m, n)
    return sum(d * moebius(n // d) for d in divisors(g))


# Named arithmetic functions used as Menon-identity weights.

def identity(n: int) -> int:
    return n


def one(n: int) -> int:
    return 1


def divisor_count(n: int) -> int:
    """Number of divisors of n."""
    out = 1
    for _, a in factorize(n):
        out *= a + 1
    return out
