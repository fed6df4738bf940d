from __future__ import annotations

import itertools
import random

import pytest

from lcdmds import oracle
from lcdmds.codec import encode
from lcdmds.construction import LinearCode, build_code, select
from lcdmds.errors import ResourceError, UsageError
from lcdmds.finite_field import FieldSpec, element_of_order
from lcdmds.fourier import FourierMatrix
from lcdmds.linalg import rank


def make(p, m, n, dim, k=1):
    f = FieldSpec.gf(p, m)
    return build_code(FourierMatrix(f, element_of_order(f, n)), select(n, dim, k))


def naive_min_distance(code):
    """Scalar enumeration of every message, no shared code with the oracle."""
    f = code.field
    best = code.n + 1
    for msg in itertools.product(range(f.q), repeat=code.dim):
        if not any(msg):
            continue
        word = [0] * code.n
        for c, row in zip(msg, code.generator):
            if c:
                word = [f.add(x, f.mul(c, y)) for x, y in zip(word, row)]
        best = min(best, sum(1 for x in word if x))
    return best


def test_brute_distance_7_3():
    c = make(2, 3, 7, 3)
    d, witness = oracle.brute_min_distance(c)
    assert d == 5 == naive_min_distance(c)
    assert sum(1 for x in witness if x) == 5
    assert oracle.membership(c, witness)


@pytest.mark.parametrize("dim,k,want", [(5, 1, 3), (5, 3, 3), (4, 1, 4), (4, 2, 4), (2, 1, 6)])
def test_brute_distance_length7(dim, k, want):
    assert oracle.brute_min_distance(make(2, 3, 7, dim, k))[0] == want


def test_full_space_has_distance_one():
    for p, m, n in [(5, 1, 4), (2, 2, 3), (7, 1, 6)]:
        f = FieldSpec.gf(p, m)
        F = FourierMatrix(f, element_of_order(f, n))
        assert oracle.brute_min_distance(LinearCode(f, F.matrix()))[0] == 1


def test_brute_matches_naive_small():
    for spec in [(5, 1, 4, 3), (3, 2, 8, 3), (13, 1, 6, 3), (11, 1, 5, 3), (3, 3, 13, 3)]:
        c = make(*spec)
        assert oracle.brute_min_distance(c)[0] == naive_min_distance(c) == c.d


def test_budget_refusal():
    c = make(23, 1, 11, 7)
    with pytest.raises(ResourceError, match="mds_minors"):
        oracle.brute_min_distance(c)
    assert oracle.certify_distance(make(23, 1, 11, 3)).verdict


def test_mds_minors_pass_and_controls():
    cert = oracle.mds_minors(make(23, 1, 11, 9))
    assert cert.verdict and cert.evidence["tested"] == 55 and cert.evidence["exhaustive"]
    f = FieldSpec.gf(5)
    F = FourierMatrix(f, element_of_order(f, 4))
    bad = LinearCode(f, F.rows([0, 2]))
    cert = oracle.mds_minors(bad)
    assert not cert.verdict
    cols = cert.evidence["singular_columns"]
    G = bad.generator
    assert rank(f, [[row[j] for j in cols] for row in G]) < 2
    one = make(23, 1, 11, 1)
    assert oracle.mds_minors(one).verdict
    assert oracle.brute_min_distance(one)[0] == 11


def test_mds_minors_sampled():
    c = make(257, 1, 64, 31)
    cert = oracle.mds_minors(c, sample=200)
    assert cert.verdict and not cert.evidence["exhaustive"] and cert.evidence["tested"] == 200


def test_cross_oracle_agreement():
    """mds_minors passes exactly when brute distance is n - dim + 1."""
    f = FieldSpec.gf(13)
    F = FourierMatrix(f, element_of_order(f, 6))
    rng = random.Random(1)
    for _ in range(30):
        rows = [[rng.randrange(13) for _ in range(6)] for _ in range(2)]
        if rank(f, rows) < 2:
            continue
        code = LinearCode(f, rows)
        d = oracle.brute_min_distance(code)[0]
        assert oracle.mds_minors(code).verdict == (d == 5)
    for dim in (1, 3, 5):
        c = build_code(F, select(6, dim))
        assert oracle.mds_minors(c).verdict and oracle.certify_distance(c).verdict


def test_lcd_rank_certificate():
    cert = oracle.lcd_rank(make(2, 3, 7, 3))
    assert cert.verdict and cert.evidence["rank"] == 7
    f = FieldSpec.gf(5)
    F = FourierMatrix(f, element_of_order(f, 4))
    cert = oracle.lcd_rank(LinearCode(f, [F.row(1)]))
    assert not cert.verdict
    assert cert.to_dict()["verdict"] == "fail"


def test_membership():
    c = make(23, 1, 11, 9)
    f = c.field
    for row in c.generator:
        assert oracle.membership(c, row)
        flipped = list(row)
        flipped[3] = f.add(flipped[3], 1)
        assert not oracle.membership(c, flipped)
    rng = random.Random(4)
    for _ in range(10_000):
        y = [rng.randrange(23) for _ in range(11)]
        oracle.membership(c, y)  # raises on rank/syndrome disagreement
    with pytest.raises(UsageError):
        oracle.membership(c, [0] * 10)


def test_brute_nearest():
    c = make(2, 3, 7, 3)
    cw = encode(c, [5, 0, 2])
    y = list(cw)
    y[1] ^= 3
    dist, msgs = oracle.brute_nearest(c, y)
    assert dist == 1 and msgs == [[5, 0, 2]]
    dist, msgs = oracle.brute_nearest(c, cw)
    assert dist == 0 and msgs == [[5, 0, 2]]
