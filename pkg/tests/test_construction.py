from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lcdmds.construction import (
    LinearCode,
    RowSelection,
    build_code,
    count_constructions,
    dual_code,
    enumerate_constructions,
    lcd_certificate,
    parse_rate,
    plan_dim_capability,
    plan_family,
    plan_prime_family,
    plan_rate_capability,
    primes_1_mod_4,
    select,
    select_even_odd_n,
    select_symmetric_odd,
)
from lcdmds.errors import DomainError, UsageError
from lcdmds.finite_field import FieldSpec, element_of_order, field_with_root
from lcdmds.fourier import FourierMatrix
from lcdmds.linalg import det, rank


def fourier(p, m, n):
    f = FieldSpec.gf(p, m)
    return FourierMatrix(f, element_of_order(f, n))


def is_progression(sel):
    idx = sel.indices
    return all((b - a) % sel.n == sel.step for a, b in zip(idx, idx[1:]))


# -- selections -------------------------------------------------------------------

def test_symmetric_odd_examples():
    assert select_symmetric_odd(7, 3, 1).indices == [6, 0, 1]
    assert select_symmetric_odd(7, 5, 3).indices == [1, 4, 0, 3, 6]
    assert select_symmetric_odd(11, 9, 1).indices == [7, 8, 9, 10, 0, 1, 2, 3, 4]
    t = 20
    s = select_symmetric_odd(256, 2 * t + 1, 1)
    assert set(s.indices) == set(range(t + 1)) | set(range(256 - t, 256))


def test_even_odd_n_examples():
    assert select_even_odd_n(7, 4).indices == [4, 6, 1, 3]
    assert select_even_odd_n(11, 8).indices == [4, 6, 8, 10, 1, 3, 5, 7]
    r = 26
    s = select_even_odd_n(255, 2 * r)
    assert set(s.indices) == set(range(1, 2 * r, 2)) | set(range(255 - 2 * r + 1, 255, 2))
    assert 0 not in s.indices


def test_selection_errors():
    with pytest.raises(UsageError):
        select_symmetric_odd(7, 4)
    with pytest.raises(DomainError):
        select_symmetric_odd(12, 5, 2)
    with pytest.raises(DomainError, match="not constructible"):
        select_even_odd_n(6, 4)
    with pytest.raises(UsageError):
        RowSelection(7, 0, 1, 7)
    with pytest.raises(UsageError):
        RowSelection(7, 0, 1, 0)


@settings(max_examples=300, deadline=None)
@given(st.integers(3, 400), st.data())
def test_selections_symmetric_progressions(n, data):
    dim = data.draw(st.integers(1, n - 1))
    if n % 2 == 0 and dim % 2 == 0:
        with pytest.raises(DomainError):
            select(n, dim)
        return
    k = data.draw(st.sampled_from([k for k in range(1, n) if math.gcd(k, n) == 1]))
    sel = select(n, dim, k)
    assert sel.is_symmetric
    assert is_progression(sel)
    assert math.gcd(sel.step, n) == 1
    assert len(set(sel.indices)) == dim
    comp = sel.complement()
    assert sorted(sel.indices + comp.indices) == list(range(n))
    assert comp.step == sel.step and comp.is_symmetric


# -- codes ------------------------------------------------------------------------------

def test_length7_fixtures():
    F = fourier(2, 3, 7)
    c = build_code(F, select(7, 3))
    assert c.params() == (7, 3, 5) and c.t == 2
    assert c.dual_indices == [2, 3, 4, 5]
    c5 = build_code(F, select(7, 5))
    assert c5.dual_indices == [3, 4]
    d = dual_code(c)
    assert d.params() == (7, 4, 4) and sorted(d.indices) == [2, 3, 4, 5]
    assert sorted(dual_code(d).indices) == sorted(c.indices)


def test_length11_dual():
    F = fourier(23, 1, 11)
    c = build_code(F, select(11, 9))
    assert c.params() == (11, 9, 3)
    assert c.dual_indices == [5, 6]
    assert dual_code(c).params() == (11, 2, 10)


def test_nonsymmetric_refused():
    F = fourier(23, 1, 11)
    with pytest.raises(DomainError, match="not LCD-constructible"):
        build_code(F, RowSelection(11, 0, 1, 3))


def test_lcd_certificate_controls():
    f = FieldSpec.gf(5)
    F = FourierMatrix(f, element_of_order(f, 4))
    # e_1 . e_1 = sum w^(2j) = 0, so <e_1> sits inside its own dual
    assert sum(f.pow(F.entry(1, j), 2) for j in range(4)) % 5 == 0
    ok, r = lcd_certificate(LinearCode(f, [F.row(1)]))
    assert not ok and r == 3
    ident = [[int(i == j) for j in range(5)] for i in range(5)]
    assert rank(f, ident) == 5
    ok, r = lcd_certificate(LinearCode(f, [ident[0], ident[1]]))
    assert ok and r == 5


def test_lcd_gram_matches_rank_oracle():
    """Independent check: C cap C-perp = 0 iff G G^T is nonsingular."""
    F = fourier(2, 3, 7)
    for sel in enumerate_constructions(7, 3):
        c = build_code(F, sel)
        G = c.generator
        gram = [[0] * len(G) for _ in G]
        for i, x in enumerate(G):
            for j, y in enumerate(G):
                acc = 0
                for a, b in zip(x, y):
                    acc ^= F.field.mul(a, b)  # characteristic 2: addition is xor
                gram[i][j] = acc
        assert det(F.field, gram) != 0


def _mds_exhaustive(c):
    G, f = c.generator, c.field
    for cols in itertools.combinations(range(c.n), c.dim):
        if det(f, [[row[j] for j in cols] for row in G]) == 0:
            return False
    return True


def _all_codes(nmax):
    for n in range(3, nmax + 1):
        for char in (None, 2, 3):
            if char and n % char == 0:
                continue
            field, w = field_with_root(n, char)
            if field.q > 5000:
                continue
            F = FourierMatrix(field, w)
            for dim in range(1, n):
                if n % 2 == 0 and dim % 2 == 0:
                    continue
                yield F, dim


def test_small_codes_lcd_and_mds():
    """Every constructible (n, dim) with n <= 16 over small fields: LCD and exhaustive MDS."""
    checked = 0
    for F, dim in _all_codes(16):
        c = build_code(F, select(F.n, dim))
        ok, r = lcd_certificate(c)
        assert ok and r == F.n
        if F.n <= 12 or dim <= 3 or dim >= F.n - 3:
            assert _mds_exhaustive(c), c
            checked += 1
    assert checked > 100


@pytest.mark.parametrize("n,p", [(20, 41), (28, 29), (36, 37), (39, 79), (40, 41)])
def test_mid_codes_sampled_mds(n, p):
    f = FieldSpec.gf(p)
    F = FourierMatrix(f, element_of_order(f, n))
    rng = random.Random(n)
    for dim in (3, 5, n // 2 + (n // 2 + 1) % 2, n - 3 if (n - 3) % 2 else n - 4):
        c = build_code(F, select(n, dim))
        for _ in range(60):
            cols = sorted(rng.sample(range(n), dim))
            assert det(f, [[row[j] for j in cols] for row in c.generator]) != 0


def test_construction_counts():
    assert count_constructions(7) == 6
    assert count_constructions(256) == 128
    assert count_constructions(1) == 1
    # steps k and n - k list one row set in opposite orders
    for n in range(4, 31):
        sels = list(enumerate_constructions(n, 3))
        assert len(sels) == count_constructions(n)
        assert len({s.step for s in sels}) == len(sels)
        assert len({tuple(s.indices) for s in sels}) == len(sels)
        assert len({frozenset(s.indices) for s in sels}) == len(sels) // 2


# -- planners ---------------------------------------------------------------------------

def test_plan_dim_capability_examples():
    p = plan_dim_capability(7, 3)
    assert p.params() == (13, 7, 7)
    assert (53, 1) in p.candidate_fields and (3, 3) in p.candidate_fields
    p = plan_dim_capability(227, 14)
    assert p.params() == (255, 227, 29)
    assert (2, 8) in p.candidate_fields
    p = plan_dim_capability(4, 1)
    assert p.params() == (7, 4, 4) and p.t == 1


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 500), st.integers(1, 60))
def test_plan_dim_capability_properties(kdim, t):
    p = plan_dim_capability(kdim, t)
    assert p.t == t and p.d == p.n - p.dim + 1
    assert not (p.n % 2 == 0 and p.dim % 2 == 0)
    assert p.n - kdim + 1 in (2 * t + 1, 2 * t + 2)
    select(p.n, p.dim)  # buildable


def test_plan_rate_capability_examples():
    p = plan_rate_capability("5/7", 25)
    assert (p.n, p.dim, p.d) == (175, 125, 51)
    p = plan_rate_capability(Fraction(7, 8), 25)
    assert (p.n, p.dim, p.d) == (408, 357, 52)
    p = plan_rate_capability("1/2", 1)
    assert (p.n, p.dim) == (6, 3)


@settings(max_examples=300, deadline=None)
@given(st.fractions(min_value=Fraction(1, 50), max_value=Fraction(49, 50), max_denominator=50),
       st.integers(1, 40))
def test_plan_rate_capability_minimal(R, t):
    if not 0 < R < 1:
        return
    p = plan_rate_capability(R, t)
    assert (p.n - p.dim) // 2 >= t
    i = p.n // R.denominator
    assert i % 2 == 1 and p.dim == i * R.numerator
    if i >= 3:
        assert ((i - 2) * (R.denominator - R.numerator)) // 2 < t


def test_parse_rate_errors():
    for bad in ("3/x", "1/0", "5/4", "0", 2):
        with pytest.raises(UsageError):
            parse_rate(bad)


def test_plan_family_char2():
    plans = plan_family("5/7", 3, characteristic=2)
    assert [(p.n, p.dim) for p in plans] == [(7, 5), (21, 15), (35, 25)]
    assert [p.candidate_fields[0] for p in plans] == [(2, 3), (2, 6), (2, 12)]
    with pytest.raises(DomainError):
        plan_family("3/4", 2, characteristic=2)
    p = plan_family("5/7", 1)[0]
    assert Fraction(p.d, p.n) == 1 - Fraction(5, 7) + Fraction(1, 7)


def test_plan_family_ratio_decreasing():
    for R in (Fraction(5, 7), Fraction(3, 4), Fraction(1, 3)):
        plans = plan_family(R, 10)
        ratios = [Fraction(p.d, p.n) for p in plans]
        assert ratios == [(1 - R) + Fraction(1, p.n) for p in plans]
        assert all(a > b for a, b in zip(ratios, ratios[1:]))
        assert all(r > 1 - R for r in ratios)


def test_plan_prime_family():
    primes = primes_1_mod_4(7)
    assert primes == [5, 13, 17, 29, 37, 41, 53]
    plans = plan_prime_family("3/4", primes, rule="floor_odd")
    assert [p.params() for p in plans] == [(4, 3, 2), (12, 9, 4), (16, 11, 6), (28, 21, 8),
                                           (36, 27, 10), (40, 29, 12), (52, 39, 14)]
    for p, m in zip(plans, [(q - 1) // 4 for q in primes]):
        assert p.dim == (3 * m if m % 2 else 3 * m - 1)
    paired = plan_prime_family("3/4", [5, 13, 17])
    assert [p.dim for p in paired] == [3, 9, 13]
    with pytest.raises(DomainError):
        plan_prime_family("3/4", [15])


def test_prime_family_exact_rate_terms_decrease():
    """Where (p-1)*3/4 is already odd the dimension keeps rate 3/4 exactly,
    and along those terms d/n = 1/4 + 1/n falls strictly toward 1/4."""
    plans = plan_prime_family("3/4", primes_1_mod_4(7), rule="floor_odd")
    exact = [p for p in plans if p.rate_actual == Fraction(3, 4)]
    assert [p.n for p in exact] == [4, 12, 28, 36, 52]
    ratios = [Fraction(p.d, p.n) for p in exact]
    assert ratios == [Fraction(1, 4) + Fraction(1, p.n) for p in exact]
    assert all(a > b for a, b in zip(ratios, ratios[1:]))
    assert ratios[-1] - Fraction(1, 4) == Fraction(1, 52)
