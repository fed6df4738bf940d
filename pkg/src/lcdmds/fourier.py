"""Fourier matrices ``F_n = (w^(ij))`` over a finite field and their transforms.

Rows are ``e_0 .. e_{n-1}``; the companion ``F_n*`` is the Fourier matrix of
``w^(n-1)`` and its columns are ``f_j = e_{n-j}^T``, so ``F_n F_n* = n I``.
"""

from __future__ import annotations

from .errors import DomainError, UsageError
from .finite_field import FieldSpec, RootOfUnity, has_exact_order

MATERIALIZE_LIMIT = 4096


def dual_row_index(i: int, n: int) -> int:
    """Row of ``F_n`` whose transpose is column ``i`` of ``F_n*``."""
    if not 0 <= i < n:
        raise UsageError(f"row index {i} outside [0, {n})")
    return (n - i) % n


class FourierMatrix:
    """The ``n x n`` matrix with entry ``(i, j) = w^(ij mod n)``.

    Only the ``n`` powers of ``w`` are stored.  Rows are cached when
    ``n <= MATERIALIZE_LIMIT`` and generated on demand otherwise.
    """

    def __init__(self, field: FieldSpec, omega: RootOfUnity):
        n = omega.order
        if n % field.p == 0:
            raise DomainError(f"characteristic {field.p} divides n = {n}")
        if omega.field != field or not has_exact_order(field, omega.value, n):
            raise DomainError(f"omega = {omega.value} does not have order {n} in {field}")
        self.field = field
        self.omega = omega
        self.n = n
        powers = [1] * n
        for k in range(1, n):
            powers[k] = field.mul(powers[k - 1], omega.value)
        self.powers = powers
        self._rows: dict[int, list[int]] | None = {} if n <= MATERIALIZE_LIMIT else None

    def __repr__(self) -> str:
        return f"FourierMatrix(n={self.n}, omega={self.omega.value}, field={self.field})"

    def entry(self, i: int, j: int) -> int:
        return self.powers[i * j % self.n]

    def row(self, i: int) -> list[int]:
        if self._rows is not None and i in self._rows:
            return self._rows[i]
        n, pw = self.n, self.powers
        i %= n
        r = [pw[i * j % n] for j in range(n)]
        if self._rows is not None:
            self._rows[i] = r
        return r

    def rows(self, indices) -> list[list[int]]:
        return [self.row(i) for i in indices]

    def matrix(self) -> list[list[int]]:
        return [self.row(i) for i in range(self.n)]

    def star(self) -> "FourierMatrix":
        """``F_n*``: the Fourier matrix of ``w^(n-1)``."""
        inv = RootOfUnity(self.field, self.powers[(self.n - 1) % self.n], self.n)
        return FourierMatrix(self.field, inv)

    def star_column(self, j: int) -> list[int]:
        """Column ``f_j`` of ``F_n*``, equal to row ``e_{n-j}``."""
        return self.row(dual_row_index(j % self.n, self.n))

    def n_in_field(self) -> int:
        return self.field.from_int(self.n)

    def _check(self, v) -> None:
        if len(v) != self.n:
            raise UsageError(f"vector length {len(v)} != n = {self.n}")

    def transform(self, v) -> list[int]:
        """Row vector product ``v F_n``: ``out_j = sum_i v_i w^(ij)``."""
        self._check(v)
        return self._apply(v, 1)

    def inverse_transform(self, v) -> list[int]:
        """``v F_n^{-1} = n^{-1} v F_n*``."""
        self._check(v)
        ninv = self.field.inv(self.n_in_field())
        return [self.field.mul(ninv, x) for x in self._apply(v, -1)]

    def _apply(self, v, sign: int) -> list[int]:
        add, _, mul = self.field.ops()
        n, pw = self.n, self.powers
        out = []
        support = [(i, x) for i, x in enumerate(v) if x]
        for j in range(n):
            acc = 0
            for i, x in support:
                acc = add(acc, mul(x, pw[sign * i * j % n]))
            out.append(acc)
        return out
