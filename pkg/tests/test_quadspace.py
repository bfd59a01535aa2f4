"""Rational quadratic forms: diagonalization, local symbols, isotropy,
equivalence, and even Clifford classes."""

import random
from fractions import Fraction

import pytest

from quadpencil.errors import DomainError
from quadpencil.quadspace import (
    REAL_PLACE,
    BrauerClass2,
    QuadForm,
    certified_places,
    diagonalize,
    forms_equivalent,
    gram_invariant,
    hasse_invariant,
    hilbert_symbol,
    is_isotropic,
    isotropy_witness,
    quaternion_class,
    signature,
    so_orbit_target,
    spin_obstruction,
)

from quadpencil.acceptance import _local_solvable
from quadpencil.intutil import factorint

from util import random_invertible


def diag(*entries):
    n = len(entries)
    return QuadForm([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])


def rand_form(rng, n, lo=-5, hi=5):
    while True:
        G = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                G[i][j] = G[j][i] = Fraction(rng.randint(lo, hi))
        q = QuadForm(G)
        if q.is_nondegenerate:
            return q


def test_diagonalize_congruence():
    rng = random.Random(81)
    for _ in range(20):
        q = rand_form(rng, rng.randint(1, 5))
        entries, P = diagonalize(q)
        n = q.dim
        for i in range(n):
            for j in range(n):
                got = sum(P[a][i] * q.gram[a][b] * P[b][j] for a in range(n) for b in range(n))
                assert got == (entries[i] if i == j else 0)
        for d in entries:
            assert isinstance(d, int) and d != 0
            assert all(e == 1 for e in factorint(abs(d)).values())  # squarefree


def test_diagonalize_hyperbolic_pinned():
    entries, _ = diagonalize(QuadForm([[0, 1], [1, 0]]))
    assert entries == [1, -1]


def test_hilbert_symbol_pinned():
    assert hilbert_symbol(-1, -1, REAL_PLACE) == -1
    assert hilbert_symbol(-1, -1, 2) == -1
    assert hilbert_symbol(2, 3, 3) == -1
    assert hilbert_symbol(3, 5, 3) == -1
    assert hilbert_symbol(-1, 5, 5) == 1
    assert hilbert_symbol(-1, 3, 3) == -1
    assert hilbert_symbol(2, 7, 7) == 1


def test_hilbert_symbol_algebra():
    rng = random.Random(82)
    nz = [x for x in range(-10, 11) if x]
    for _ in range(40):
        a, b, c = rng.choice(nz), rng.choice(nz), rng.choice(nz)
        v = rng.choice([REAL_PLACE, 2, 3, 5, 7])
        assert hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v)
        assert hilbert_symbol(a * c * c, b, v) == hilbert_symbol(a, b, v)
        assert hilbert_symbol(a, -a, v) == 1
        if a != 1:
            assert hilbert_symbol(a, 1 - a, v) == 1
        assert (
            hilbert_symbol(a * b, c, v)
            == hilbert_symbol(a, c, v) * hilbert_symbol(b, c, v)
        )


def test_hilbert_symbol_vs_local_solvability():
    # z^2 = a x^2 + b y^2 has a nontrivial p-adic solution iff the symbol is 1
    rng = random.Random(83)
    squarefree = [1, -1, 2, -2, 3, -3, 5, 6, -7, 10]
    for p in (2, 3, 5, 7, 11, 13):
        k = 6 if p == 2 else 3
        for _ in range(4):
            a, b = rng.choice(squarefree), rng.choice(squarefree)
            expect = 1 if _local_solvable(a, b, p, k) else -1
            assert hilbert_symbol(a, b, p) == expect


def test_hilbert_reciprocity():
    rng = random.Random(84)
    nz = [x for x in range(-20, 21) if x]
    for _ in range(50):
        a, b = rng.choice(nz), rng.choice(nz)
        places = certified_places(diag(a, b))
        prod = 1
        for v in places:
            prod *= hilbert_symbol(a, b, v)
        assert prod == 1


def test_hilbert_symbol_rejections():
    with pytest.raises(DomainError):
        hilbert_symbol(0, 3, 5)
    with pytest.raises(DomainError):
        hilbert_symbol(2, 3, 4)


def test_signature_and_hasse():
    assert signature(diag(1, 1, 1)) == (3, 0)
    assert signature(diag(1, -4, 9)) == (2, 1)
    assert hasse_invariant(diag(1, 1, 1), 2) == 1
    assert hasse_invariant(diag(-1, -1), REAL_PLACE) == -1
    rng = random.Random(85)
    for _ in range(10):
        q = rand_form(rng, 3)
        P = random_invertible(rng, 3)
        moved = q.transformed(P)
        for v in certified_places(q) | certified_places(moved):
            assert hasse_invariant(q, v) == hasse_invariant(moved, v)


# (form, isotropic, witness search bound); anisotropic bounds kept small
# because the search must then scan the whole box
ISOTROPY_CASES = [
    (diag(1, -1), True, 12),
    (diag(2, -8), True, 12),
    (diag(1, 1), False, 20),
    (diag(1, -2), False, 20),
    (diag(1, 1, -2), True, 12),
    (diag(1, 1, -7), False, 12),
    (diag(1, 1, 1), False, 12),
    (diag(1, 2, -3), True, 12),
    (diag(1, 1, 1, -7), False, 6),
    (diag(1, 1, 1, -1), True, 12),
    (diag(1, 3, 5, -2), True, 12),
    (diag(1, 1, 1, 1, 1), False, 4),
    (diag(1, 1, 1, 1, -1), True, 12),
    (diag(-1, -2, -5), False, 12),
]


@pytest.mark.parametrize(
    ("q", "expect", "bound"),
    ISOTROPY_CASES,
    ids=[",".join(str(q.gram[i][i]) for i in range(q.dim)) for q, _, _ in ISOTROPY_CASES],
)
def test_isotropy(q, expect, bound):
    assert is_isotropic(q) == expect
    w = isotropy_witness(q, bound)
    if expect:
        assert w is not None
        assert q.value(w) == 0
        assert any(x != 0 for x in w)
    else:
        assert w is None


def test_isotropic_diagonal_forms_have_small_witnesses():
    rng = random.Random(86)
    nz = [x for x in range(-7, 8) if x]
    for _ in range(20):
        q = diag(*(rng.choice(nz) for _ in range(rng.randint(2, 4))))
        if is_isotropic(q):
            w = isotropy_witness(q, 30)
            assert w is not None and q.value(w) == 0


def test_forms_equivalent():
    assert forms_equivalent(diag(1, -1), diag(2, -2))
    assert not forms_equivalent(diag(3, 5), diag(1, 15))  # split at 3 differs
    assert not forms_equivalent(diag(1, 1), diag(1, -1))
    assert not forms_equivalent(diag(1, 1), diag(1, 1, 1))
    rng = random.Random(87)
    for _ in range(10):
        q = rand_form(rng, rng.randint(2, 4))
        P = random_invertible(rng, q.dim)
        assert forms_equivalent(q, q.transformed(P))


def test_gram_invariant_matches_direct_values():
    rng = random.Random(88)
    for _ in range(10):
        space = rand_form(rng, 4)
        vectors = [[Fraction(rng.randint(-3, 3)) for _ in range(4)] for _ in range(3)]
        got = gram_invariant(space, vectors)
        for i in range(3):
            for j in range(3):
                direct = sum(
                    vectors[i][a] * space.gram[a][b] * vectors[j][b]
                    for a in range(4)
                    for b in range(4)
                )
                assert got.gram[i][j] == direct


def test_so_orbit_target():
    split4 = diag(1, 1, -1, -1)
    target, lifts = so_orbit_target(diag(1, 1, -1), split4)
    assert lifts
    target, lifts = so_orbit_target(diag(1, 1, 1), split4)
    assert not lifts
    with pytest.raises(DomainError):
        so_orbit_target(diag(1, 1), split4)


def test_quaternion_class_pinned():
    assert quaternion_class(-1, -1).places == frozenset({REAL_PLACE, 2})
    assert quaternion_class(2, 3).places == frozenset({2, 3})
    assert quaternion_class(1, 7).is_trivial
    assert quaternion_class(3, -3).is_trivial


def test_quaternion_class_matches_symbols():
    rng = random.Random(89)
    nz = [x for x in range(-15, 16) if x]
    for _ in range(20):
        u, v = rng.choice(nz), rng.choice(nz)
        cls = quaternion_class(u, v)
        for w in cls.places:
            assert hilbert_symbol(u, v, w) == -1
        for w in certified_places(diag(u, v)) - cls.places:
            assert hilbert_symbol(u, v, w) == 1


def test_brauer_class_parity():
    with pytest.raises(AssertionError):
        BrauerClass2({2})
    assert BrauerClass2(set()).is_trivial
    assert BrauerClass2({2, 5}) == BrauerClass2({5, 2})


def test_spin_obstruction_pinned():
    assert spin_obstruction(diag(1, 1, 1)).places == frozenset({REAL_PLACE, 2})
    assert spin_obstruction(diag(1, 1, -1)).is_trivial
    assert spin_obstruction(diag(5)).is_trivial
    assert spin_obstruction(diag(1, 1, 1, 1, 1)).places == frozenset({REAL_PLACE, 2})
    with pytest.raises(DomainError):
        spin_obstruction(diag(1, 1))


def test_spin_matches_quaternion_in_dimension_three():
    # <a,b,c> has even Clifford algebra (-ab, -ac)
    rng = random.Random(90)
    nz = [x for x in range(-10, 11) if x]
    for _ in range(15):
        a, b, c = rng.choice(nz), rng.choice(nz), rng.choice(nz)
        assert spin_obstruction(diag(a, b, c)) == quaternion_class(-a * b, -a * c)


def test_spin_is_congruence_invariant():
    rng = random.Random(91)
    for dim in (3, 5):
        for _ in range(5):
            q = rand_form(rng, dim)
            P = random_invertible(rng, dim)
            assert spin_obstruction(q) == spin_obstruction(q.transformed(P))
