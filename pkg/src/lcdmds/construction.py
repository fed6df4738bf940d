"""Row selections of ``F_n`` that yield LCD MDS codes, and parameter planners.

A selection is an arithmetic progression of row indices ``a, a+k, ...``
(mod ``n``) with ``gcd(k, n) = 1``; any such run of rows generates an MDS
code.  When the index set is also closed under ``i -> n - i`` the dual is
spanned by the complementary rows, which meet the code trivially.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import cached_property

from .errors import DomainError, InternalError, UsageError
from .finite_field import (
    FieldSpec,
    RootOfUnity,
    smallest_extension,
    smallest_prime_field,
)
from .fourier import FourierMatrix
from .linalg import det, matmul, nullspace, rank, transpose
from .numtheory import euler_phi, is_prime

PARITY_MESSAGE = (
    "even length with even dimension is not constructible: every symmetric "
    "arithmetic run of even size has an even step, so gcd(step, n) >= 2")


@dataclass(frozen=True)
class RowSelection:
    """Rows ``start + u*step (mod n)`` for ``u = 0 .. dim-1``."""

    n: int
    start: int
    step: int
    dim: int

    def __post_init__(self) -> None:
        if not 1 <= self.dim < self.n:
            raise UsageError(f"dimension must satisfy 1 <= dim < n, got dim={self.dim}, n={self.n}")
        if math.gcd(self.step, self.n) != 1:
            raise DomainError(f"step {self.step} is not coprime to n = {self.n}")
        object.__setattr__(self, "start", self.start % self.n)
        object.__setattr__(self, "step", self.step % self.n)

    @property
    def indices(self) -> list[int]:
        return [(self.start + u * self.step) % self.n for u in range(self.dim)]

    @property
    def is_symmetric(self) -> bool:
        s = set(self.indices)
        return all((self.n - i) % self.n in s for i in s)

    def complement(self) -> "RowSelection":
        """The remaining rows, continuing the same progression."""
        return RowSelection(self.n, self.start + self.dim * self.step, self.step, self.n - self.dim)

    def to_dict(self) -> dict:
        return {"start": self.start, "step": self.step, "dim": self.dim}


def select_symmetric_odd(n: int, dim: int, k: int = 1) -> RowSelection:
    """Rows ``0, +-k, ..., +-s*k`` for ``dim = 2s + 1``, starting at ``n - s*k``."""
    if dim % 2 == 0:
        raise UsageError(f"dim = {dim} is even; use select_even_odd_n for even dimensions")
    if math.gcd(k, n) != 1:
        raise DomainError(f"step {k} is not coprime to n = {n}")
    s = (dim - 1) // 2
    return RowSelection(n, (n - s * k) % n, k, dim)


def select_even_odd_n(n: int, dim: int, k: int = 1) -> RowSelection:
    """Rows ``+-k, +-3k, ..., +-(dim-1)k`` for odd ``n``; step ``2k``.

    With ``k = 1`` this is ``{1, 3, ..., dim-1} | {n-dim+1, ..., n-1}``
    listed from ``n - dim + 1``.  Row 0 is never selected.
    """
    if n % 2 == 0:
        raise DomainError(PARITY_MESSAGE)
    if dim % 2:
        raise UsageError(f"dim = {dim} is odd; use select_symmetric_odd")
    if math.gcd(k, n) != 1:
        raise DomainError(f"step {k} is not coprime to n = {n}")
    return RowSelection(n, (n - (dim - 1) * k) % n, 2 * k, dim)


def select(n: int, dim: int, k: int = 1) -> RowSelection:
    """Pick the symmetric selection matching the parity of ``dim``."""
    if dim % 2:
        return select_symmetric_odd(n, dim, k)
    return select_even_odd_n(n, dim, k)


def enumerate_constructions(n: int, dim: int):
    """One selection per step ``k`` in ``[1, n)`` coprime to ``n``.

    Steps ``k`` and ``n - k`` list the same rows in reverse order, so the
    number of distinct row sets is half the number of steps (for n > 2).
    """
    for k in range(1, max(n, 2)):
        if math.gcd(k, n) == 1:
            yield select(n, dim, k)


def count_constructions(n: int) -> int:
    return euler_phi(n)


@dataclass(frozen=True)
class CodeSpec:
    """A code generated by selected rows of a Fourier matrix."""

    fourier: FourierMatrix
    selection: RowSelection

    @property
    def field(self) -> FieldSpec:
        return self.fourier.field

    @property
    def omega(self) -> RootOfUnity:
        return self.fourier.omega

    @property
    def n(self) -> int:
        return self.fourier.n

    @property
    def dim(self) -> int:
        return self.selection.dim

    @property
    def d(self) -> int:
        return self.n - self.dim + 1

    @property
    def t(self) -> int:
        return (self.d - 1) // 2

    @property
    def indices(self) -> list[int]:
        return self.selection.indices

    @property
    def dual_selection(self) -> RowSelection:
        return self.selection.complement()

    @property
    def dual_indices(self) -> list[int]:
        return self.dual_selection.indices

    @cached_property
    def generator(self) -> list[list[int]]:
        return self.fourier.rows(self.indices)

    @cached_property
    def dual_generator(self) -> list[list[int]]:
        return self.fourier.rows(self.dual_indices)

    def params(self) -> tuple[int, int, int]:
        return (self.n, self.dim, self.d)

    def __repr__(self) -> str:
        return f"CodeSpec({self.n},{self.dim},{self.d}) over {self.field}, rows {self.indices}"


@dataclass(frozen=True)
class LinearCode:
    """A code given only by a generator matrix (controls and ad hoc checks)."""

    field: FieldSpec
    generator: list[list[int]]

    @property
    def n(self) -> int:
        return len(self.generator[0])

    @property
    def dim(self) -> int:
        return len(self.generator)


def build_code(F: FourierMatrix, sel: RowSelection) -> CodeSpec:
    if sel.n != F.n:
        raise UsageError(f"selection is for n = {sel.n}, matrix has n = {F.n}")
    if not sel.is_symmetric:
        raise DomainError(f"rows {sel.indices} are not closed under i -> n-i: not LCD-constructible")
    code = CodeSpec(F, sel)
    ok, r = lcd_certificate(code)
    if not ok:
        raise InternalError(f"LCD certificate failed for {code} (rank {r})")
    return code


def dual_code(c: CodeSpec) -> CodeSpec:
    return build_code(c.fourier, c.dual_selection)


def _dual_basis(code) -> list[list[int]]:
    field = code.field
    if isinstance(code, CodeSpec) and code.selection.is_symmetric:
        basis = code.dual_generator
        pairing = matmul(field, code.generator, transpose(basis))
        if any(any(row) for row in pairing):
            raise InternalError("complementary rows are not orthogonal to the code")
        return basis
    return nullspace(field, code.generator, code.n)


def lcd_certificate(code) -> tuple[bool, int]:
    """``(is_lcd, rank)`` where rank is that of the stacked ``[G; G_dual]``.

    LCD holds iff the stack has full rank ``n``.  The Gram matrix ``G G^T``
    is checked independently (nonsingular iff LCD for full-rank ``G``);
    disagreement raises InternalError.
    """
    field = code.field
    G = code.generator
    H = _dual_basis(code)
    r = rank(field, G + H) if H else rank(field, G)
    by_rank = r == code.n
    gram = matmul(field, G, transpose(G))
    by_gram = det(field, gram) != 0
    if rank(field, G) == len(G) and by_rank != by_gram:
        raise InternalError(f"rank test ({by_rank}) and Gram test ({by_gram}) disagree")
    return by_rank, r


# -- planners -------------------------------------------------------------------

DEFAULT_CHARS = (2, 3)


@dataclass
class PlanResult:
    n: int
    dim: int
    d: int
    t: int
    candidate_fields: list[tuple[int, int]] = dc_field(default_factory=list)
    notes: list[str] = dc_field(default_factory=list)

    @property
    def rate_actual(self) -> Fraction:
        return Fraction(self.dim, self.n)

    def params(self) -> tuple[int, int, int]:
        return (self.n, self.dim, self.d)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "dim": self.dim,
            "d": self.d,
            "t": self.t,
            "rate_actual": f"{self.rate_actual.numerator}/{self.rate_actual.denominator}",
            "candidate_fields": [list(f) for f in self.candidate_fields],
            "notes": list(self.notes),
        }


def candidate_fields(n: int, chars=DEFAULT_CHARS) -> list[tuple[int, int]]:
    """Smallest prime field first, then the smallest extension per characteristic."""
    out = [(smallest_prime_field(n), 1)]
    for p in chars:
        if n % p == 0:
            continue
        f = (p, smallest_extension(p, n))
        if f not in out:
            out.append(f)
    return out


def _plan(n: int, dim: int, notes: list[str], chars=DEFAULT_CHARS) -> PlanResult:
    d = n - dim + 1
    plan = PlanResult(n, dim, d, (d - 1) // 2, notes=notes)
    plan.candidate_fields = candidate_fields(n, chars)
    plan.notes.append("fields: " + ", ".join(_fmt_field(p, b) for p, b in plan.candidate_fields))
    return plan


def _fmt_field(p: int, beta: int) -> str:
    return f"GF({p})" if beta == 1 else f"GF({p}^{beta})"


def plan_dim_capability(kdim: int, t: int, chars=DEFAULT_CHARS) -> PlanResult:
    """Shortest LCD MDS code with dimension ``kdim`` correcting ``t`` errors."""
    if kdim < 1 or t < 1:
        raise UsageError("dimension and error target must be positive")
    d = 2 * t + 1
    n = kdim + d - 1
    notes = [f"d = 2t + 1 = {d}", f"n = dim + d - 1 = {n}"]
    if n % 2 == 0 and kdim % 2 == 0:
        d += 1
        n = kdim + d - 1
        notes.append(f"n and dim both even: raise d to {d}, n to {n}; "
                     f"floor((d-1)/2) stays {t}")
    return _plan(n, kdim, notes, chars)


def parse_rate(rate) -> Fraction:
    try:
        r = Fraction(rate)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise UsageError(f"malformed rate {rate!r}") from exc
    if not 0 < r < 1:
        raise UsageError(f"rate must lie strictly between 0 and 1, got {r}")
    return r


def plan_rate_capability(rate, t: int, chars=DEFAULT_CHARS) -> PlanResult:
    """Least odd multiple ``i`` of the reduced rate with ``floor(i(n-r)/2) >= t``."""
    R = parse_rate(rate)
    if t < 1:
        raise UsageError("error target must be positive")
    r, n = R.numerator, R.denominator
    i = 1
    while (i * n - i * r) // 2 < t:
        i += 2
    ni, ri = i * n, i * r
    d = ni - ri + 1
    notes = [
        f"rate {r}/{n}; scanning odd multiples i",
        f"i = {i}: floor(({ni} - {ri})/2) = {(ni - ri) // 2} >= {t}",
        f"distance n - dim + 1 = {d}",
    ]
    return _plan(ni, ri, notes, chars)


def plan_family(rate, count: int, characteristic: int | None = None) -> list[PlanResult]:
    """``(i*n, i*r)`` for the first ``count`` odd ``i``."""
    R = parse_rate(rate)
    r, n = R.numerator, R.denominator
    if characteristic is not None and n % characteristic == 0:
        raise DomainError(
            f"characteristic {characteristic} needs lengths coprime to it; {n} is not")
    plans = []
    for j in range(count):
        i = 2 * j + 1
        ni, ri = i * n, i * r
        notes = [f"i = {i}", f"d/n = {ni - ri + 1}/{ni} = (1 - R) + 1/{ni}"]
        if characteristic is None:
            plans.append(_plan(ni, ri, notes))
        else:
            d = ni - ri + 1
            beta = smallest_extension(characteristic, ni)
            notes.append("fields: " + _fmt_field(characteristic, beta))
            plans.append(PlanResult(ni, ri, d, (d - 1) // 2, [(characteristic, beta)], notes))
    return plans


def plan_prime_family(rate, primes, rule: str = "paired") -> list[PlanResult]:
    """Length ``p - 1`` codes over GF(p), dimension near ``(p-1)R`` and odd.

    ``rule="paired"`` takes whichever of ``floor((p-1)R + 1)`` and
    ``floor((p-1)R)`` is odd; ``rule="floor_odd"`` takes the largest odd
    integer not above ``(p-1)R`` (for primes ``4m+1`` at rate 3/4 this is
    ``3m`` for odd ``m`` and ``3m - 1`` for even ``m``).
    """
    R = parse_rate(rate)
    if rule not in ("paired", "floor_odd"):
        raise UsageError(f"unknown rounding rule {rule!r}")
    plans = []
    for p in primes:
        if not is_prime(p):
            raise DomainError(f"{p} is not prime")
        n = p - 1
        x = n * R
        lo = math.floor(x)
        if rule == "paired":
            r = lo if lo % 2 else lo + 1
        else:
            r = lo if lo % 2 else lo - 1
        if not 1 <= r < n:
            raise DomainError(f"no odd dimension in [1, {n}) near {x} for p = {p}")
        d = n - r + 1
        notes = [f"GF({p}): n = {n}, n*R = {x}, odd dimension {r} ({rule})"]
        plans.append(PlanResult(n, r, d, (d - 1) // 2, [(p, 1)], notes))
    return plans


def primes_1_mod_4(count: int) -> list[int]:
    out, c = [], 5
    while len(out) < count:
        if is_prime(c):
            out.append(c)
        c += 4
    return out
