"""Integer factorization and arithmetic functions on factored integers.

Trial division up to 10^6 handles small factors; Pollard rho with Brent
cycling splits the remaining cofactors, with deterministic Miller-Rabin
(exact below 2^64) certifying primality of every reported prime.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import FactorizationOverflow
from .fields import is_prime_int

_LIMIT = 1 << 64
_TRIAL_BOUND = 10**6
_RHO_RETRY_CAP = 64


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: tuple[tuple[int, int], ...]  # (prime, multiplicity), primes ascending

    def __post_init__(self):
        prod = 1
        for p, e in self.factors:
            prod *= p**e
        if prod != self.n:
            raise ValueError(f"factor product {prod} != {self.n}")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def divisors(self) -> list[int]:
        divs = [1]
        for p, e in self.factors:
            divs = [d * p**i for d in divs for i in range(e + 1)]
        return sorted(divs)

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)


def _brent_rho(n: int, seed: int) -> int:
    """One Brent-cycle attempt at a nontrivial factor of composite odd n."""
    y, c, m = (seed * 2 + 1) % n, (seed * 2 + 3) % n, 128
    if c == 0:
        c = 1
    g = r = q = 1
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        r <<= 1
    if g == n:
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
    return g


def _split(n: int, out: dict[int, int]) -> None:
    """Recursively factor n > 1 (no prime factors below the trial bound)."""
    if is_prime_int(n):
        out[n] = out.get(n, 0) + 1
        return
    root = math.isqrt(n)
    if root * root == n:
        _split(root, out)
        _split(root, out)
        return
    for attempt in range(_RHO_RETRY_CAP):
        d = _brent_rho(n, attempt)
        if 1 < d < n:
            _split(d, out)
            _split(n // d, out)
            return
    raise FactorizationOverflow(f"Pollard rho failed to split {n}")


@lru_cache(maxsize=4096)
def factor_integer(n: int) -> Factorization:
    if n < 1:
        raise ValueError("factor_integer needs n >= 1")
    if n > _LIMIT:
        raise FactorizationOverflow(f"{n} exceeds the 2^64 factorization bound")
    out: dict[int, int] = {}
    rest = n
    for p in (2, 3, 5):
        while rest % p == 0:
            out[p] = out.get(p, 0) + 1
            rest //= p
    # 2/3/5 wheel over the trial range
    increments = (4, 2, 4, 2, 4, 6, 2, 6)
    p, idx = 7, 0
    while p <= _TRIAL_BOUND and p * p <= rest:
        while rest % p == 0:
            out[p] = out.get(p, 0) + 1
            rest //= p
        p += increments[idx]
        idx = (idx + 1) & 7
    if rest > 1:
        if rest <= _TRIAL_BOUND * _TRIAL_BOUND and p * p > rest:
            out[rest] = out.get(rest, 0) + 1
        else:
            _split(rest, out)
    return Factorization(n, tuple(sorted(out.items())))


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("euler_phi needs n >= 1")
    result = n
    for p, _ in factor_integer(n).factors:
        result -= result // p
    return result


def moebius(n: int) -> int:
    if n < 1:
        raise ValueError("moebius needs n >= 1")
    fac = factor_integer(n)
    if any(e > 1 for _, e in fac.factors):
        return 0
    return -1 if len(fac.factors) % 2 else 1


def merged_factorization(values) -> dict[int, int]:
    """Prime factorization of lcm(values), each value factored independently.

    Lets the lcm exceed 2^64 as long as every individual value stays below it.
    """
    merged: dict[int, int] = {}
    for v in values:
        for p, e in factor_integer(v).factors:
            if merged.get(p, 0) < e:
                merged[p] = e
    return merged


def multiplicative_order_from(pow_fn, identity, exponent: int, factors: dict[int, int]) -> int:
    """Order of an element given any exponent it annihilates and its factorization.

    pow_fn(e) must return the element raised to e; factors must factor `exponent`.
    """
    order = exponent
    for p in factors:
        while order % p == 0 and pow_fn(order // p) == identity:
            order //= p
    return order
