"""Integer primitives: primality, prime-power detection, factorization.

Everything here is deterministic. The Miller-Rabin witness set is exact
for all 64-bit inputs, and the Pollard-rho fallback uses a fixed
parameter sequence so repeated runs factor identically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NotPrime, SearchExhausted

# Deterministic Miller-Rabin witnesses, sufficient for n < 3.3e24 (covers 2^64).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_TRIAL_LIMIT = 1 << 16


def _small_primes(limit: int) -> tuple[int, ...]:
    sieve = bytearray(b"\x01") * limit
    sieve[0] = sieve[1] = 0
    for p in range(2, int(limit**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = b"\x00" * len(sieve[p * p :: p])
    return tuple(i for i, v in enumerate(sieve) if v)


_SMALL_PRIMES = _small_primes(1024)


@dataclass(frozen=True)
class PrimePower:
    """A validated q = p^k with p prime and k >= 1."""

    p: int
    k: int
    q: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"base {self.p} is not prime")
        if self.k < 1 or self.p**self.k != self.q or self.q < 2:
            raise ValueError(f"{self.q} != {self.p}^{self.k}")


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as (prime, multiplicity) pairs, primes increasing."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        primes = [p for p, _ in self.pairs]
        if primes != sorted(primes) or len(set(primes)) != len(primes):
            raise ValueError("primes must be strictly increasing")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)

    def value(self) -> int:
        out = 1
        for p, e in self.pairs:
            out *= p**e
        return out

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)


def is_prime(n: int) -> bool:
    """Deterministic primality test, exact for all n < 2^64."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES[:16]:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        if a % n == 0:
            continue
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


def as_prime_power(n: int) -> PrimePower | None:
    """Return (p, k, q=n) with p^k == n, or None when n is not a prime power."""
    if n < 2:
        return None
    for k in range(n.bit_length(), 0, -1):
        root = _integer_kth_root(n, k)
        if root**k == n:
            if is_prime(root):
                return PrimePower(root, k, n)
            if k == 1:
                return None
    return None


def _integer_kth_root(n: int, k: int) -> int:
    if k == 1:
        return n
    root = int(round(n ** (1.0 / k)))
    while root > 1 and root**k > n:
        root -= 1
    while (root + 1) ** k <= n:
        root += 1
    return max(root, 1)


def factorize(n: int) -> Factorization:
    """Complete factorization of 1 <= n < 2^64. factorize(1) is the empty product."""
    if not 1 <= n < 1 << 64:
        raise ValueError(f"{n} out of supported range")
    counts: dict[int, int] = {}
    n = _trial_divide(n, counts)
    if n > 1:
        _rho_split(n, counts)
    return Factorization(tuple(sorted(counts.items())))


def _trial_divide(n: int, counts: dict[int, int]) -> int:
    for p in _SMALL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            counts[p] = counts.get(p, 0) + 1
            n //= p
    if 1 < n < _SMALL_PRIMES[-1] ** 2:
        counts[n] = counts.get(n, 0) + 1
        return 1
    return n


def _rho_split(n: int, counts: dict[int, int]) -> None:
    if is_prime(n):
        counts[n] = counts.get(n, 0) + 1
        return
    d = _pollard_rho(n)
    _rho_split(d, counts)
    _rho_split(n // d, counts)


def _pollard_rho(n: int) -> int:
    """Brent-cycle rho with a deterministic (x0, c) schedule."""
    if n % 2 == 0:
        return 2
    for c in range(1, 256):
        x = y = 2 + c
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise SearchExhausted(f"pollard rho failed on {n}")


def smallest_primitive_root(p: int) -> int:
    """Smallest positive primitive root modulo a prime p."""
    if not is_prime(p):
        raise NotPrime(p)
    if p == 2:
        return 1
    exponents = [(p - 1) // r for r in factorize(p - 1).primes]
    for g in range(2, p):
        if all(pow(g, e, p) != 1 for e in exponents):
            return g
    raise SearchExhausted(f"no primitive root below {p}")  # unreachable for prime p
