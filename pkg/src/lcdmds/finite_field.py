"""Exact arithmetic in GF(p) and GF(p^m).

Elements are plain integers in ``[0, q)``.  Digit ``i`` of the base-``p``
expansion is the coefficient of ``x^i`` in the polynomial representative,
so ``0`` and ``1`` are the additive and multiplicative identities and a
prime field is ordinary residue arithmetic.  :class:`FieldElement` wraps an
integer with its field for operator-style use; the hot paths (codec,
oracles) call the integer methods on :class:`FieldSpec` directly.
"""

from __future__ import annotations

import operator
import threading
from dataclasses import dataclass, field as dc_field
from functools import lru_cache

import numpy as np

from .errors import DomainError, UsageError
from .numtheory import (
    factorize,
    is_prime,
    multiplicative_order,
    next_prime_1_mod,
    order_from_group_size,
)

TABLE_LIMIT = 1 << 16


# -- polynomials over GF(p), coefficient lists with constant term first ------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], f: list[int], p: int) -> list[int]:
    a = _trim(list(a))
    df = len(f) - 1
    inv_lead = pow(f[-1], -1, p)
    while len(a) - 1 >= df:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fc) % p
        _trim(a)
    return a


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def is_irreducible(coeffs: list[int] | tuple[int, ...], p: int) -> bool:
    """Rabin's irreducibility test for a polynomial over GF(p)."""
    f = _trim(list(coeffs))
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    # x^(p^m) == x (mod f)
    xpm = [0, 1]
    for _ in range(m):
        xpm = _poly_pow_mod(xpm, p, f, p)
    if _trim(_poly_sub(xpm, [0, 1], p)):
        return False
    for r in factorize(m):
        xq = [0, 1]
        for _ in range(m // r):
            xq = _poly_pow_mod(xq, p, f, p)
        g = _poly_gcd(f, _poly_sub(xq, [0, 1], p), p)
        if len(g) > 1:
            return False
    return True


def _poly_sub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def _poly_pow_mod(a: list[int], e: int, f: list[int], p: int) -> list[int]:
    result = [1]
    base = _poly_mod(a, f, p)
    while e:
        if e & 1:
            result = _poly_mod(_poly_mul(result, base, p), f, p)
        base = _poly_mod(_poly_mul(base, base, p), f, p)
        e >>= 1
    return result


def _digits(v: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        v, d = divmod(v, p)
        out.append(d)
    return out


def _undigits(ds: list[int], p: int) -> int:
    v = 0
    for d in reversed(ds):
        v = v * p + d
    return v


@lru_cache(maxsize=None)
def find_modulus(p: int, m: int) -> tuple[int, ...]:
    """Monic irreducible of degree ``m`` over GF(p) with the smallest encoding.

    The encoding reads the coefficient vector as base-``p`` digits, so the
    scan runs over ``p**m .. 2*p**m - 1``.  For ``m == 1`` the placeholder
    ``x`` is returned.
    """
    if not is_prime(p):
        raise DomainError(f"characteristic {p} is not prime")
    if m < 1:
        raise UsageError(f"extension degree must be >= 1, got {m}")
    if m == 1:
        return (0, 1)
    for enc in range(p**m, 2 * p**m):
        coeffs = _digits(enc, p, m + 1)
        if coeffs[0] == 0:
            continue  # divisible by x
        if is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise AssertionError("unreachable: irreducibles exist in every degree")


# -- fields -------------------------------------------------------------------

@dataclass(frozen=True)
class FieldSpec:
    """The concrete field GF(p^m) defined by a monic irreducible modulus."""

    p: int
    m: int
    modulus: tuple[int, ...]
    _lock: threading.Lock = dc_field(default_factory=threading.Lock, init=False,
                                     repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "modulus", tuple(int(c) for c in self.modulus))
        if not is_prime(self.p):
            raise DomainError(f"characteristic {self.p} is not prime")
        if self.m < 1 or len(self.modulus) != self.m + 1 or self.modulus[-1] != 1:
            raise DomainError(f"modulus {list(self.modulus)} is not monic of degree {self.m}")
        if any(not 0 <= c < self.p for c in self.modulus):
            raise DomainError("modulus coefficients must lie in [0, p)")
        if self.m == 1:
            if self.modulus != (0, 1):
                raise DomainError("prime fields use the placeholder modulus x")
        elif not is_irreducible(self.modulus, self.p):
            raise DomainError(f"modulus {list(self.modulus)} is reducible over GF({self.p})")

    # constructors / views

    @classmethod
    def gf(cls, p: int, m: int = 1) -> "FieldSpec":
        return _field_cache(p, m)

    @property
    def q(self) -> int:
        q = self.__dict__.get("_q")
        if q is None:
            q = self.p**self.m
            object.__setattr__(self, "_q", q)
        return q

    def ops(self):
        """``(add, sub, mul)`` as fast closures over integer encodings."""
        cached = self.__dict__.get("_ops")
        if cached is not None:
            return cached
        p = self.p
        if self.m == 1:
            def add(a, b):
                return (a + b) % p

            def sub(a, b):
                return (a - b) % p

            def mul(a, b):
                return a * b % p
        elif self.tables() is not None:
            exp, log = self.tables()
            if p == 2:
                add = sub = operator.xor
            elif self.q <= 1024:
                q = self.q
                add_t = [self.add(a, b) for a in range(q) for b in range(q)]
                sub_t = [self.sub(a, b) for a in range(q) for b in range(q)]

                def add(a, b):
                    return add_t[a * q + b]

                def sub(a, b):
                    return sub_t[a * q + b]
            else:
                add, sub = self.add, self.sub

            def mul(a, b):
                if a and b:
                    return exp[log[a] + log[b]]
                return 0
        else:
            add, sub, mul = self.add, self.sub, self.mul
        cached = (add, sub, mul)
        object.__setattr__(self, "_ops", cached)
        return cached

    @property
    def is_prime_field(self) -> bool:
        return self.m == 1

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"

    def element(self, v: int) -> "FieldElement":
        return FieldElement(self, v)

    def check(self, v: int) -> int:
        if not isinstance(v, (int, np.integer)) or not 0 <= v < self.q:
            raise UsageError(f"{v!r} is not an element encoding of {self}")
        return int(v)

    def to_dict(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    def format_element(self, v: int) -> str:
        """Polynomial pretty-print, e.g. ``x^2 + 1``; integers for prime fields."""
        if self.m == 1:
            return str(v)
        terms = []
        for i, c in reversed(list(enumerate(_digits(v, self.p, self.m)))):
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            coef = "" if (c == 1 and i) else str(c)
            terms.append(coef + mono)
        return " + ".join(terms) or "0"

    # scalar arithmetic on integer encodings

    def add(self, a: int, b: int) -> int:
        p = self.p
        if self.m == 1:
            return (a + b) % p
        if p == 2:
            return a ^ b
        da, db = _digits(a, p, self.m), _digits(b, p, self.m)
        return _undigits([(x + y) % p for x, y in zip(da, db)], p)

    def neg(self, a: int) -> int:
        p = self.p
        if self.m == 1:
            return -a % p
        if p == 2:
            return a
        return _undigits([-x % p for x in _digits(a, p, self.m)], p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        tables = self.tables()
        if tables is not None:
            exp, log = tables
            return exp[log[a] + log[b]]
        return self._mul_slow(a, b)

    def _mul_slow(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        if p == 2:
            mod = _undigits(list(self.modulus), 2)
            acc = 0
            while b:
                if b & 1:
                    acc ^= a
                b >>= 1
                a <<= 1
                if a >> m & 1:
                    a ^= mod
            return acc
        prod = _poly_mul(_digits(a, p, m), _digits(b, p, m), p)
        red = _poly_mod(prod, list(self.modulus), p)
        return _undigits(red + [0] * (m - len(red)), p)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if self.m == 1:
            return pow(a, e, self.p)
        if a == 0:
            return 1 if e == 0 else 0
        tables = self.tables()
        if tables is not None:
            exp, log = tables
            return exp[log[a] * e % (self.q - 1)]
        return self._pow_slow(a, e)

    def _pow_slow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._mul_slow(result, a)
            a = self._mul_slow(a, a)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise DomainError("zero has no multiplicative inverse")
        if self.m == 1:
            return pow(a, -1, self.p)
        tables = self.tables()
        if tables is not None:
            exp, log = tables
            return exp[(self.q - 1 - log[a]) % (self.q - 1)]
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def from_int(self, k: int) -> int:
        """Image of the integer ``k`` under Z -> GF(q) (i.e. ``k mod p``)."""
        return k % self.p

    def element_order(self, a: int) -> int:
        if a == 0:
            raise DomainError("zero has no multiplicative order")
        return order_from_group_size(lambda k: self.pow(a, k) == 1, self.q - 1)

    def tables(self) -> tuple[list[int], list[int]] | None:
        """Antilog/log tables for extension fields with ``q <= 2**16``.

        ``exp`` has length ``2(q-1)`` so a sum of two logs indexes directly.
        Built once under a lock; ``None`` for prime or large fields.
        """
        if self.m == 1 or self.q > TABLE_LIMIT:
            return None
        cached = self.__dict__.get("_tables")
        if cached is not None:
            return cached
        with self._lock:
            cached = self.__dict__.get("_tables")
            if cached is None:
                delta = primitive_element(self)
                q1 = self.q - 1
                exp = [0] * (2 * q1)
                log = [0] * self.q
                v = 1
                for i in range(q1):
                    exp[i] = exp[i + q1] = v
                    log[v] = i
                    v = self._mul_slow(v, delta)
                cached = (exp, log)
                object.__setattr__(self, "_tables", cached)
        return cached

    # numpy helpers used by the brute-force oracles

    def add_array(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        p = self.p
        if self.m == 1:
            return (a + b) % p
        if p == 2:
            return np.bitwise_xor(a, b)
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        place = 1
        for _ in range(self.m):
            out += ((a // place % p + b // place % p) % p) * place
            place *= p
        return out

    def neg_array(self, a: np.ndarray) -> np.ndarray:
        p = self.p
        if self.m == 1:
            return -a % p
        if p == 2:
            return a
        out = np.zeros_like(a)
        place = 1
        for _ in range(self.m):
            out += (-(a // place % p) % p) * place
            place *= p
        return out

    def sub_array(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.add_array(a, self.neg_array(b))

    def mul_array(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Elementwise product with broadcasting."""
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        if self.m == 1 and self.p < 1 << 31:
            return a * b % self.p
        tables = self.tables()
        if tables is not None:
            exp, log = self._np_tables()
            out = exp[log[a] + log[b]]
            out[(a == 0) | (b == 0)] = 0
            return out
        return np.frompyfunc(self.mul, 2, 1)(a, b).astype(np.int64)

    def scale_array(self, c: int, a: np.ndarray) -> np.ndarray:
        """Multiply every entry of ``a`` by the scalar ``c``."""
        return self.mul_array(a, c)

    def matvec(self, mat: np.ndarray, vec: np.ndarray) -> np.ndarray:
        """``mat @ vec`` over the field for int64 arrays."""
        ncols = mat.shape[1]
        if self.m == 1 and ncols * (self.p - 1) ** 2 < 1 << 62:
            return mat @ vec % self.p
        prod = self.mul_array(mat, vec[None, :])
        if self.p == 2:
            return np.bitwise_xor.reduce(prod, axis=1)
        acc = prod[:, 0]
        for j in range(1, ncols):
            acc = self.add_array(acc, prod[:, j])
        return acc

    def _np_tables(self) -> tuple[np.ndarray, np.ndarray]:
        cached = self.__dict__.get("_np")
        if cached is None:
            exp, log = self.tables()
            cached = (np.array(exp, dtype=np.int64), np.array(log, dtype=np.int64))
            object.__setattr__(self, "_np", cached)
        return cached


@lru_cache(maxsize=None)
def _field_cache(p: int, m: int) -> FieldSpec:
    return FieldSpec(p, m, find_modulus(p, m))


class FieldElement:
    """An integer encoding bound to its field, with arithmetic operators."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value: int):
        self.field = field
        self.value = field.check(value)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise UsageError(f"mixed-field operands: {self.field} and {other.field}")
            return other.value
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def _wrap(self, v: int) -> "FieldElement":
        return FieldElement(self.field, v)

    def __add__(self, other):
        return self._wrap(self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return self._wrap(self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return self._wrap(self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return self._wrap(self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._wrap(self.field.div(self.value, self._other(other)))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __pow__(self, e: int):
        return self._wrap(self.field.pow(self.value, e))

    def inverse(self) -> "FieldElement":
        return self._wrap(self.field.inv(self.value))

    def order(self) -> int:
        return self.field.element_order(self.value)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.field.m, self.value))

    def __int__(self):
        return self.value

    __index__ = __int__

    def __repr__(self):
        return f"{self.field}({self.value})"


@dataclass(frozen=True)
class RootOfUnity:
    """An element of exact multiplicative order ``order``.

    ``generator``/``exponent`` record the primitive element and power it
    was derived from; both are ``None`` for a user-supplied root.
    """

    field: FieldSpec
    value: int
    order: int
    generator: int | None = None
    exponent: int | None = None

    @property
    def element(self) -> FieldElement:
        return FieldElement(self.field, self.value)


def primitive_element(field: FieldSpec) -> int:
    """Smallest encoding of order ``q - 1``."""
    q1 = field.q - 1
    if q1 == 1:
        return 1
    cofactors = [q1 // r for r in factorize(q1)]
    pw = field.pow if field.m == 1 else field._pow_slow
    for v in range(1, field.q):
        if all(pw(v, c) != 1 for c in cofactors):
            return v
    raise AssertionError("unreachable: every finite field has a primitive element")


def has_exact_order(field: FieldSpec, v: int, n: int) -> bool:
    """``v^n == 1`` and ``v^(n/r) != 1`` for every prime ``r | n``."""
    if v == 0 or field.pow(v, n) != 1:
        return False
    return all(field.pow(v, n // r) != 1 for r in factorize(n))


def element_of_order(field: FieldSpec, n: int) -> RootOfUnity:
    """``omega = delta**((q-1)/n)`` for the smallest primitive element delta."""
    q1 = field.q - 1
    if n < 1 or q1 % n:
        raise DomainError(f"{n} does not divide q - 1 = {q1} in {field}")
    delta = primitive_element(field)
    s = q1 // n
    omega = field.pow(delta, s)
    if not has_exact_order(field, omega, n):
        raise AssertionError(f"derived root {omega} does not have order {n}")
    return RootOfUnity(field, omega, n, delta, s)


def root_of_unity(field: FieldSpec, value: int, n: int) -> RootOfUnity:
    """Validate a caller-chosen root (e.g. 7 in GF(29) for n = 7)."""
    field.check(value)
    if not has_exact_order(field, value, n):
        raise DomainError(f"{value} does not have exact order {n} in {field}")
    return RootOfUnity(field, value, n)


def smallest_extension(p: int, n: int) -> int:
    """Least ``beta`` such that GF(p^beta) contains an element of order ``n``."""
    if not is_prime(p):
        raise DomainError(f"characteristic {p} is not prime")
    if n < 1:
        raise DomainError(f"order must be positive, got {n}")
    if n % p == 0:
        raise DomainError(
            f"no {n}-th root of unity exists in characteristic {p} ({p} divides {n})")
    return multiplicative_order(p, n)


def smallest_prime_field(n: int, ceiling: int = 10**7) -> int:
    """Least prime ``q`` with ``n | q - 1``."""
    return next_prime_1_mod(n, ceiling)


def field_with_root(n: int, char: int | None = None) -> tuple[FieldSpec, RootOfUnity]:
    """Default field for length ``n``: smallest prime field, or smallest
    extension when a characteristic is forced."""
    if char is None:
        field = FieldSpec.gf(smallest_prime_field(n))
    else:
        field = FieldSpec.gf(char, smallest_extension(char, n))
    return field, element_of_order(field, n)


__all__ = [
    "FieldSpec",
    "FieldElement",
    "RootOfUnity",
    "element_of_order",
    "field_with_root",
    "find_modulus",
    "has_exact_order",
    "is_irreducible",
    "multiplicative_order",
    "primitive_element",
    "root_of_unity",
    "smallest_extension",
    "smallest_prime_field",
]
