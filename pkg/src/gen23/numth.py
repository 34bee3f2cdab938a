"""Exact integer number theory: primality, factorization, Euler phi.

Everything here is exact integer arithmetic; the phi lower-bound checks
compare phi(n)^3 against n^2 so no real-valued tolerance ever appears.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .reports import ClaimReport

# Composite n < 3.3e24 are detected by these Miller-Rabin bases.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

# Values where phi(n) > n^(2/3) fails.
PHI_EXCEPTIONS = frozenset({1, 2, 3, 4, 6, 8, 10, 12, 18, 24, 30, 42})
# Values where phi(n)^3 == n^2 exactly.
PHI_EQUALITY = frozenset({1, 8})


def is_prime(n: int) -> bool:
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
    for a in _MR_BASES:
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    if n % 2 == 0:
        return 2
    for c in range(1, 64):
        x, y, d = 2, 2, 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"rho failed on {n}")


def factorize(n: int) -> dict[int, int]:
    """Prime factorization as {prime: exponent}; trial division plus Pollard rho."""
    if n < 1:
        raise ValueError("factorize requires n >= 1")
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    d = 7
    # wheel over residues coprime to 30
    steps = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while d * d <= n and d < 1_000_000:
        if n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        else:
            d += steps[i]
            i = (i + 1) % 8
    if n == 1:
        return out
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        f = _pollard_rho(m)
        stack.append(f)
        stack.append(m // f)
    return out


def euler_phi(n: int) -> int:
    """Count of integers in [1, n] coprime to n."""
    if n < 1:
        raise ValueError("euler_phi requires n >= 1")
    out = n
    for p in factorize(n):
        out -= out // p
    return out


def divisors(n: int) -> list[int]:
    ds = [1]
    for p, e in factorize(n).items():
        ds = [d * p**k for d in ds for k in range(e + 1)]
    return sorted(ds)


def multiplicative_order(a: int, n: int) -> int:
    """Order of a modulo n; a must be coprime to n."""
    if n == 1:
        return 1
    a %= n
    if math.gcd(a, n) != 1:
        raise ValueError("element not invertible mod n")
    order = 1
    # order divides lambda(n); phi(n) is a safe multiple
    t = euler_phi(n)
    order = t
    for p in factorize(t):
        while order % p == 0 and pow(a, order // p, n) == 1:
            order //= p
    return order


def phi_sieve(limit: int) -> np.ndarray:
    """phi(n) for 0 <= n <= limit as an int64 array (phi[0] = 0)."""
    phi = np.arange(limit + 1, dtype=np.int64)
    for p in range(2, limit + 1):
        if phi[p] == p:  # p prime
            phi[p::p] -= phi[p::p] // p
    return phi


def primes_up_to(limit: int) -> list[int]:
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, int(math.isqrt(limit)) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return np.flatnonzero(sieve).tolist()


def prime_powers_up_to(limit: int) -> list[tuple[int, int, int]]:
    """All (p, m, q=p^m) with q <= limit, sorted by q."""
    out = []
    for p in primes_up_to(limit):
        q, m = p, 1
        while q <= limit:
            out.append((p, m, q))
            q *= p
            m += 1
    return sorted(out, key=lambda t: t[2])


def phi_exceeds_two_thirds(n: int, phi_n: int | None = None) -> bool:
    """phi(n) > n^(2/3), decided as phi(n)^3 > n^2 in exact integers."""
    if phi_n is None:
        phi_n = euler_phi(n)
    return phi_n**3 > n * n


def check_phi_bounds(lo: int, hi: int, corollary_hi: int | None = None) -> ClaimReport:
    """Scan [lo, hi] for the phi(n) > n^(2/3) exception set and equality cases,
    and check phi(n^2-1) > max(3n+21, 4n-1) for 14 <= n <= corollary_hi.
    """
    if lo < 1 or hi < lo:
        raise ValueError("bad range")
    if corollary_hi is None:
        corollary_hi = min(hi, 100_000)
    phi = phi_sieve(max(hi, corollary_hi + 1))
    n = np.arange(lo, hi + 1, dtype=np.int64)
    ph = phi[lo : hi + 1]
    fails = n[ph**3 <= n * n]
    exceptions = set(int(v) for v in fails)
    equalities = set(int(v) for v in n[ph**3 == n * n])
    expected = set(v for v in PHI_EXCEPTIONS if lo <= v <= hi)
    expected_eq = set(v for v in PHI_EQUALITY if lo <= v <= hi)

    # phi(n^2-1) from phi(n-1), phi(n+1): the factors are coprime for even n,
    # and share exactly one factor 2 for odd n.
    cor_ok = True
    cor_fail = None
    for m in range(max(14, lo), corollary_hi + 1):
        pm = int(phi[m - 1]) * int(phi[m + 1])
        if m % 2 == 1:
            pm *= 2
        if not pm > max(3 * m + 21, 4 * m - 1):
            cor_ok = False
            cor_fail = m
            break

    ok = exceptions == expected and equalities == expected_eq and cor_ok
    return ClaimReport(
        claim="phi-bounds",
        ok=ok,
        details={
            "range": [lo, hi],
            "exceptions_found": sorted(exceptions),
            "exceptions_expected": sorted(expected),
            "equality_found": sorted(equalities),
            "corollary_range": [14, corollary_hi],
            "corollary_ok": cor_ok,
            "corollary_first_failure": cor_fail,
        },
    )


@lru_cache(maxsize=None)
def smallest_subfield_degree(p: int, m: int, element_order: int) -> int:
    """Degree over GF(p) of the subfield generated by an element of the given
    multiplicative order in GF(p^m): the multiplicative order of p mod order."""
    if element_order == 1:
        return 1
    return multiplicative_order(p, element_order)
