"""Rational factorization against frozen factor lists and a mod-p oracle."""

import itertools
import random
from fractions import Fraction

from quadpencil import Poly, factor_poly, is_irreducible
from quadpencil.factor import gf_divmod, gf_factor_squarefree, gf_from_int, gf_is_squarefree, gf_mul
from quadpencil.polys import poly_from_ints

# known irreducibles over Q, constant coefficient first
POOL = [
    [1, 1],  # x + 1
    [-3, 1],  # x - 3
    [2, 1],  # x + 2
    [1, 0, 1],  # x^2 + 1
    [-2, 0, 1],  # x^2 - 2
    [1, 1, 1],  # x^2 + x + 1
    [3, 1, 0, 1],  # x^3 + x + 3
    [-2, 0, 0, 1],  # x^3 - 2
    [1, 1, 0, 1],  # x^3 + x + 1
]


def as_poly(cs):
    return poly_from_ints(cs)


def key(p):
    return tuple(p[i] for i in range(p.degree + 1))


def test_pool_members_are_irreducible():
    for cs in POOL:
        assert is_irreducible(as_poly(cs)), cs


def test_factor_recovers_known_products():
    rng = random.Random(31)
    for _ in range(40):
        picks = rng.sample(range(len(POOL)), rng.randint(1, 3))
        mults = {i: rng.randint(1, 2) for i in picks}
        lc = Fraction(rng.choice([1, 1, 2, -3]))
        p = Poly([lc])
        for i, m in mults.items():
            p = p * as_poly(POOL[i]) ** m
        got = factor_poly(p)
        expect = sorted((key(as_poly(POOL[i])), m) for i, m in mults.items())
        assert sorted((key(g), m) for g, m in got) == expect
        rebuilt = Poly([lc])
        for g, m in got:
            rebuilt = rebuilt * g**m
        assert rebuilt == p


def test_factor_pinned():
    got = factor_poly(poly_from_ints([-1, 0, 0, 0, 1]))  # x^4 - 1
    assert [(key(g), m) for g, m in got] == [
        ((Fraction(-1), Fraction(1)), 1),
        ((Fraction(1), Fraction(1)), 1),
        ((Fraction(1), Fraction(0), Fraction(1)), 1),
    ]
    got = factor_poly(as_poly([1, 0, 1]) ** 2 * as_poly([-3, 1]))
    assert [(g.degree, m) for g, m in got] == [(1, 1), (2, 2)]


def test_irreducible_pinned():
    assert is_irreducible(poly_from_ints([1, 0, 0, 0, 1]))  # x^4 + 1
    assert is_irreducible(poly_from_ints([1, 0, -10, 0, 1]))  # x^4 - 10x^2 + 1
    assert is_irreducible(poly_from_ints([1] * 7))  # 1 + x + ... + x^6
    assert not is_irreducible(poly_from_ints([-1, 0, 0, 0, 1]))
    assert not is_irreducible(poly_from_ints([1, 2, 1]))


def gf_all_monic(deg, p):
    """All monic polynomials of exact degree deg over GF(p)."""
    for tail in itertools.product(range(p), repeat=deg):
        yield list(tail) + [1]


def gf_irreducible_by_trial(f, p):
    deg = len(f) - 1
    for d in range(1, deg // 2 + 1):
        for g in gf_all_monic(d, p):
            _, r = gf_divmod(f, g, p)
            if not r:
                return False
    return True


def test_gf_factor_against_trial_division():
    rng = random.Random(32)
    for p in (3, 5, 7):
        for _ in range(12):
            deg = rng.randint(2, 5)
            f = gf_from_int([rng.randrange(p) for _ in range(deg)] + [1], p)
            if len(f) - 1 != deg or not gf_is_squarefree(f, p):
                continue
            factors = gf_factor_squarefree(f, p)
            prod = [1]
            for g in factors:
                assert g[-1] == 1
                assert gf_irreducible_by_trial(g, p)
                prod = gf_mul(prod, g, p)
            assert prod == f


def test_factor_content_handling():
    # non-monic, non-primitive input
    p = Poly([Fraction(6), Fraction(0), Fraction(-6)])  # -6(x-1)(x+1)
    got = factor_poly(p)
    assert [(key(g), m) for g, m in got] == [
        ((Fraction(-1), Fraction(1)), 1),
        ((Fraction(1), Fraction(1)), 1),
    ]
