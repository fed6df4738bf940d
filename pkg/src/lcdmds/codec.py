"""Encoding and bounded-distance decoding for Fourier-row codes.

Write the selected rows as ``a + u*k`` (``u < r``) and the remaining rows
as ``j_u = a + (r + u)*k`` (``u < n - r``).  Pairing a word ``y`` with the
dual columns ``f_{j_u}`` gives

    S_u = sum_l y_l w^(-j_u l) = sum_l c_l X_l^u,
    X_l = w^(-k l),  c_l = e_l w^(-(a + r k) l),

which vanishes on codewords and is a sequence of power sums in the error
locators ``X_l``.  Berlekamp-Massey recovers the locator polynomial, an
exhaustive scan over the ``n`` positions finds its roots, and a small
Vandermonde solve gives the magnitudes.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache

import numpy as np

from .construction import CodeSpec
from .errors import DomainError, UsageError
from .finite_field import FieldSpec
from .linalg import solve

CLEAN = "clean"
CORRECTED = "corrected"
FAILURE = "failure"


@dataclass
class DecodeReport:
    status: str
    message: list[int] | None = None
    codeword: list[int] | None = None
    error_positions: list[int] = dc_field(default_factory=list)
    error_values: list[int] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.status != FAILURE

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "message": self.message,
            "codeword": self.codeword,
            "error_positions": self.error_positions,
            "error_values": self.error_values,
        }


SCALAR_LIMIT = 64  # codes at most this long decode with plain Python loops


class _Tables:
    """Per-code power tables, built once and shared."""

    def __init__(self, c: CodeSpec):
        f, n, pw = c.field, c.n, c.fourier.powers
        sel = c.selection
        a, k, r = sel.start, sel.step, sel.dim
        self.field = f
        self.n, self.r, self.t = n, r, c.t
        idx = sel.indices
        dual = c.dual_indices
        lpos = np.arange(n)
        pw_arr = np.array(pw, dtype=np.int64)
        self.enc = pw_arr[np.outer(lpos, idx) % n]                 # n x r
        self.syn = pw_arr[(-np.outer(dual, lpos)) % n]             # (n-r) x n
        self.msg = pw_arr[(-np.outer(idx, lpos)) % n]              # r x n
        self.locator = [pw[(-k * l) % n] for l in range(n)]        # X_l
        self.locator_inv = pw_arr[(k * lpos) % n]                  # X_l^-1
        self.unscale = [pw[((a + r * k) * l) % n] for l in range(n)]
        self.n_inv = f.inv(f.from_int(n))
        self.scalar = n <= SCALAR_LIMIT
        if self.scalar:
            self.enc_py = self.enc.tolist()
            self.syn_py = self.syn.tolist()
            self.msg_py = self.msg.tolist()
            self.locator_inv_py = self.locator_inv.tolist()

    def matvec(self, which: str, y) -> list[int]:
        if not self.scalar:
            return self.field.matvec(getattr(self, which), np.asarray(y, dtype=np.int64)).tolist()
        add, _, mul = self.field.ops()
        out = []
        for row in getattr(self, which + "_py"):
            acc = 0
            for w, v in zip(row, y):
                if v:
                    acc = add(acc, mul(w, v))
            out.append(acc)
        return out


@lru_cache(maxsize=64)
def _tables(c: CodeSpec) -> _Tables:
    return _Tables(c)


def _as_vector(field: FieldSpec, v, length: int, what: str) -> list[int]:
    if len(v) != length:
        raise UsageError(f"{what} has length {len(v)}, expected {length}")
    out = [int(x) for x in v]
    q = field.q
    for x in out:
        if not 0 <= x < q:
            raise UsageError(f"{what} has symbol {x} outside [0, {q})")
    return out


def encode(c: CodeSpec, message) -> list[int]:
    """``sum_u message_u * e_{indices[u]}``."""
    tb = _tables(c)
    return tb.matvec("enc", _as_vector(c.field, message, c.dim, "message"))


def syndromes(c: CodeSpec, received) -> list[int]:
    """Pairings of ``received`` with ``f_j`` for ``j`` along the complement run."""
    tb = _tables(c)
    return tb.matvec("syn", _as_vector(c.field, received, c.n, "received word"))


def extract_message(c: CodeSpec, codeword) -> list[int]:
    """Invert :func:`encode` on a codeword: ``m_u = n^-1 (codeword . f_{idx_u})``."""
    tb = _tables(c)
    raw = tb.matvec("msg", _as_vector(c.field, codeword, c.n, "codeword"))
    mul = c.field.ops()[2]
    return [mul(tb.n_inv, v) for v in raw]


def berlekamp_massey(field: FieldSpec, S: list[int]) -> list[int]:
    """Shortest connection polynomial ``[1, l_1, ..., l_L]`` generating ``S``."""
    add, sub, mul = field.ops()
    C, B = [1], [1]
    L, m, b = 0, 1, 1
    for i, s in enumerate(S):
        d = s
        for j in range(1, L + 1):
            if C[j] and S[i - j]:
                d = add(d, mul(C[j], S[i - j]))
        if d == 0:
            m += 1
            continue
        coef = field.div(d, b)
        T = C[:]
        shifted = [0] * m + [mul(coef, x) for x in B]
        size = max(len(C), len(shifted))
        C = C + [0] * (size - len(C))
        shifted += [0] * (size - len(shifted))
        C = [sub(x, z) for x, z in zip(C, shifted)]
        if 2 * L <= i:
            L, B, b, m = i + 1 - L, T, d, 1
        else:
            m += 1
    return C[: L + 1] + [0] * max(0, L + 1 - len(C))


def _locator_roots(tb: _Tables, lam: list[int]) -> list[int]:
    """Positions ``l`` with ``lam(X_l^-1) = 0``, scanning all ``n``."""
    f = tb.field
    if tb.scalar:
        add, _, mul = f.ops()
        rev = lam[::-1]
        roots = []
        for l, x in enumerate(tb.locator_inv_py):
            acc = 0
            for coef in rev:
                acc = add(mul(acc, x), coef)
            if acc == 0:
                roots.append(l)
        return roots
    acc = np.full(tb.n, lam[-1], dtype=np.int64)
    for coef in reversed(lam[:-1]):
        acc = f.add_array(f.mul_array(acc, tb.locator_inv), coef)
    return np.flatnonzero(acc == 0).tolist()


def decode(c: CodeSpec, received) -> DecodeReport:
    """Correct up to ``t`` symbol errors; report failure when no consistent
    error pattern of weight ``<= t`` explains the syndromes."""
    tb = _tables(c)
    f = c.field
    add, sub, mul = f.ops()
    y = _as_vector(f, received, c.n, "received word")
    S = tb.matvec("syn", y)
    if not any(S):
        return DecodeReport(CLEAN, extract_message(c, y), y)

    lam = berlekamp_massey(f, S)
    L = len(lam) - 1
    if L > tb.t or lam[-1] == 0:
        return DecodeReport(FAILURE)
    positions = _locator_roots(tb, lam)
    if len(positions) != L:
        return DecodeReport(FAILURE)

    X = [tb.locator[l] for l in positions]
    vander = [[f.pow(x, u) for x in X] for u in range(L)]
    try:
        mags = solve(f, vander, S[:L])
    except DomainError:
        return DecodeReport(FAILURE)
    if not all(mags):
        return DecodeReport(FAILURE)
    # the remaining power sums must agree, else no weight-L pattern fits
    terms = [mul(f.pow(x, L), v) for x, v in zip(X, mags)]
    for u in range(L, len(S)):
        total = 0
        for v in terms:
            total = add(total, v)
        if total != S[u]:
            return DecodeReport(FAILURE)
        terms = [mul(x, v) for x, v in zip(X, terms)]

    values = [mul(v, tb.unscale[l]) for l, v in zip(positions, mags)]
    corrected = list(y)
    for l, e in zip(positions, values):
        corrected[l] = sub(corrected[l], e)
    return DecodeReport(CORRECTED, extract_message(c, corrected), corrected,
                        positions, values)
