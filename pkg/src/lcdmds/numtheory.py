"""Integer number theory: primality, factorization, Euler phi, orders.

Factorization uses trial division up to ``TRIAL_LIMIT`` followed by
Pollard's rho (Brent variant) with a deterministic Miller-Rabin test.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .errors import DomainError, ResourceError

TRIAL_LIMIT = 10**6

# Deterministic Miller-Rabin witnesses, valid for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int) -> int:
    """Return a nontrivial factor of the composite odd ``n``."""
    for c in range(1, 200):
        y, r, q, g = 2, 1, 1, 1
        m = 128
        x = ys = y
        f = lambda v: (v * v + c) % n  # noqa: E731
        while g == 1:
            x = y
            for _ in range(r):
                y = f(y)
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = f(y)
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = f(ys)
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ResourceError(f"Pollard rho failed to split {n}")


def _factor_into(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_brent(n)
    _factor_into(d, out)
    _factor_into(n // d, out)


@lru_cache(maxsize=4096)
def _factorize(n: int) -> tuple[tuple[int, int], ...]:
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    # 6k +- 1 wheel
    while f <= TRIAL_LIMIT and f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        if n < TRIAL_LIMIT * TRIAL_LIMIT:
            out[n] = out.get(n, 0) + 1
        else:
            _factor_into(n, out)
    return tuple(sorted(out.items()))


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``n >= 1`` as ``{prime: exponent}``."""
    if n < 1:
        raise DomainError(f"cannot factor {n}")
    return dict(_factorize(n))


def euler_phi(n: int) -> int:
    if n < 1:
        raise DomainError(f"phi undefined for {n}")
    result = n
    for p in factorize(n):
        result = result // p * (p - 1)
    return result


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def order_from_group_size(is_identity, group_order: int) -> int:
    """Exact order of an element given ``is_identity(k)`` testing ``x^k == 1``.

    The order is found by stripping prime factors from ``group_order``
    while the power stays the identity.
    """
    order = group_order
    for p, e in factorize(group_order).items():
        for _ in range(e):
            if is_identity(order // p):
                order //= p
            else:
                break
    return order


def multiplicative_order(a: int, n: int) -> int:
    """Least ``beta > 0`` with ``a**beta == 1 (mod n)``."""
    if n < 1:
        raise DomainError(f"modulus must be positive, got {n}")
    if math.gcd(a, n) != 1:
        raise DomainError(f"gcd({a}, {n}) != 1; {a} has no order mod {n}")
    if n == 1:
        return 1
    a %= n
    return order_from_group_size(lambda k: pow(a, k, n) == 1, euler_phi(n))


def next_prime_1_mod(n: int, ceiling: int = 10**7) -> int:
    """Least prime ``q`` with ``q == 1 (mod n)``; at most ``ceiling`` candidates."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    for j in range(1, ceiling + 1):
        q = j * n + 1
        if is_prime(q):
            return q
    raise ResourceError(f"no prime 1 mod {n} among the first {ceiling} candidates")
