import random

import pytest

from cypres.circulant import circulant_from_poly
from cypres.cpg import (
    FibParams,
    H,
    abelianization,
    exponent_sums,
    parse_cyclic_word,
    rank2_torsionfree,
    rank_via_gcd,
    representer_poly,
    res_FG,
    F_and_G,
)
from cypres.cyclo import cyclotomic
from cypres.errors import DomainError, WordSyntaxError
from cypres.exactpoly import IntPoly, poly, resultant


def test_fib_params_normalizes():
    p = FibParams(6, 8, 7)
    assert (p.m, p.k) == (2, 1)
    assert FibParams(6, -4, 1).m == 2
    with pytest.raises(DomainError):
        FibParams(0, 1, 1)


def test_parse_examples():
    assert parse_cyclic_word("x0 x1 x2^-1", 5).letters == ((0, 1), (1, 1), (2, -1))
    assert parse_cyclic_word("x0 x8 x1^-1", 6).letters == ((0, 1), (8, 1), (1, -1))


def test_parse_errors_report_offset():
    with pytest.raises(WordSyntaxError) as exc:
        parse_cyclic_word("x0 y1", 3)
    assert exc.value.offset == 3
    with pytest.raises(WordSyntaxError) as exc:
        parse_cyclic_word("x0  x1^2", 3)
    assert exc.value.offset == 4
    with pytest.raises(WordSyntaxError):
        parse_cyclic_word("   ", 3)
    with pytest.raises(IndexError):
        parse_cyclic_word("x0 x-1", 3)


def test_parse_offset_counts_bytes():
    # ideographic space: one character, three bytes in UTF-8
    with pytest.raises(WordSyntaxError) as exc:
        parse_cyclic_word("x0\u3000y1", 3)
    assert exc.value.offset == 5


def test_exponent_sums_examples():
    p = FibParams(6, 2, 1)
    assert exponent_sums(parse_cyclic_word(p.relator(), 6), 6) == (1, -1, 1, 0, 0, 0)
    assert exponent_sums(parse_cyclic_word("x0 x0^-1", 3), 3) == (0, 0, 0)
    assert exponent_sums(parse_cyclic_word("x0 x8 x1^-1", 6), 6) == (1, -1, 1, 0, 0, 0)


def test_exponent_sums_match_circulant_row():
    rng = random.Random(5)
    for _ in range(300):
        n = rng.randint(1, 40)
        p = FibParams(n, rng.randrange(n), rng.randrange(n))
        word = parse_cyclic_word(p.relator(), n)
        assert exponent_sums(word, n) == circulant_from_poly(representer_poly(p), n).first_row


def test_representer_examples():
    assert representer_poly(FibParams(6, 2, 1)) == poly(1, -1, 1)
    assert representer_poly(FibParams(5, 1, 2)) == poly(1, 1, -1)
    assert representer_poly(FibParams(7, 3, 3)) == poly(1)


def test_abelianization_examples():
    g = abelianization(H(18, 14))
    assert (g.free_rank, g.torsion) == (2, (19,))
    g = abelianization(H(18, 8))
    assert (g.free_rank, g.torsion) == (2, (19,))
    g = abelianization(H(12, 8))
    assert (g.free_rank, g.torsion) == (2, (5,))
    g = abelianization(FibParams(5, 1, 2))
    assert g.free_rank == 0
    assert g.torsion_order == 11 == resultant(poly(1, 1, -1), IntPoly.monomial(5) - 1)


def test_rank_via_gcd_examples():
    assert rank_via_gcd(FibParams(6, 2, 1)) == 2
    assert rank_via_gcd(FibParams(5, 1, 2)) == 0
    assert rank_via_gcd(FibParams(18, 8, 1)) == 2


def test_res_FG_examples():
    assert res_FG(12, 8) == 5 == abelianization(H(12, 8)).torsion_order
    assert res_FG(18, 14) == 19 == abelianization(H(18, 14)).torsion_order
    assert res_FG(6, 2) == 1
    F, _ = F_and_G(6, 2)
    assert F == poly(1)


def test_res_FG_domain():
    for n, m in [(10, 8), (12, 7), (12, 0)]:
        with pytest.raises(DomainError):
            res_FG(n, m)


def test_rank2_torsionfree_examples():
    assert rank2_torsionfree(6, 2)
    assert not rank2_torsionfree(12, 8)
    assert rank2_torsionfree(24, 2)


def test_F_G_factorization():
    F, G = F_and_G(30, 14)
    phi6 = cyclotomic(6)
    assert F * phi6 == IntPoly.monomial(14) - IntPoly.monomial(1) + 1
    assert G * phi6 == IntPoly.monomial(30) - 1


@pytest.mark.slow
def test_rank_via_gcd_equals_snf_free_rank_exhaustive():
    for n in range(1, 61):
        for m in range(n):
            for k in range(n):
                p = FibParams(n, m, k)
                assert rank_via_gcd(p) == abelianization(p).free_rank, p


def test_rank2_criterion_for_k1():
    for n in range(1, 121):
        for m in range(n):
            expected = 2 if (n % 6 == 0 and m % 6 == 2) else None
            r = rank_via_gcd(H(n, m))
            if expected is not None:
                assert r == 2, (n, m)
            else:
                assert r != 2, (n, m)
