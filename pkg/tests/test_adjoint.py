"""Conjugation invariants of square matrices and the canonical representative."""

import random
from fractions import Fraction

import pytest

from quadpencil.adjoint import (
    AdjointInvariants,
    adjoint_canonical_rep,
    adjoint_conjugator,
    adjoint_invariants,
    conjugator_is_unique,
    d_determinant,
    regularity_D,
)
from quadpencil.errors import DomainError
from quadpencil.linalg import charpoly, mat_eq, mat_mul

from util import frac_det, random_invertible


def rand_mat(rng, n, lo=-4, hi=4):
    return [[Fraction(rng.randint(lo, hi)) for _ in range(n)] for _ in range(n)]


def test_invariants_pinned():
    T = [[0, 1], [1, 0]]
    inv = adjoint_invariants(T)
    assert list(inv.c) == [0, -1]
    assert list(inv.a) == [0]
    assert regularity_D(T) == 1


def test_invariants_read_off_charpoly_and_corner():
    rng = random.Random(111)
    for _ in range(15):
        n = rng.randint(2, 4)
        T = rand_mat(rng, n)
        inv = adjoint_invariants(T)
        cp = charpoly(T)  # monic, lowest degree first
        assert list(inv.c) == [(-1) ** i * cp[n - i] for i in range(1, n + 1)]
        P = T
        corners = []
        for _ in range(1, n):
            corners.append(P[n - 1][n - 1])
            P = mat_mul(P, T)
        assert list(inv.a) == corners[: n - 1]


def test_regularity_two_routes():
    # direct Hankel of corner moments vs the recurrence-extended route
    rng = random.Random(112)
    for _ in range(20):
        n = rng.randint(2, 4)
        T = rand_mat(rng, n)
        assert regularity_D(T) == d_determinant(adjoint_invariants(T))


def test_regularity_pinned_two_by_two():
    rng = random.Random(113)
    for _ in range(15):
        T = rand_mat(rng, 2)
        assert regularity_D(T) == T[0][1] * T[1][0]


def test_canonical_rep_pinned():
    T = adjoint_canonical_rep(AdjointInvariants([Fraction(0), Fraction(-1)], [Fraction(0)]))
    assert mat_eq(T, [[0, 1], [1, 0]])


def test_canonical_rep_reproduces_invariants():
    rng = random.Random(114)
    done = 0
    while done < 15:
        n = rng.randint(2, 4)
        T = rand_mat(rng, n)
        inv = adjoint_invariants(T)
        if d_determinant(inv) == 0:
            continue
        C = adjoint_canonical_rep(inv)
        got = adjoint_invariants(C)
        assert got.c == inv.c and got.a == inv.a
        done += 1


def test_canonical_rep_rejects_irregular():
    with pytest.raises(DomainError):
        adjoint_canonical_rep(adjoint_invariants([[0, 1], [0, 0]]))


def test_conjugator_pinned():
    g = adjoint_conjugator([[0, 1], [1, 0]], [[0, Fraction(1, 2)], [2, 0]])
    assert mat_eq(g, [[Fraction(1, 2), 0], [0, 1]])


def invert(M):
    n = len(M)
    aug = [[Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
           for i, row in enumerate(M)]
    for c in range(n):
        piv = next(r for r in range(c, n) if aug[r][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        scale = 1 / aug[c][c]
        aug[c] = [x * scale for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


def test_conjugator_on_matched_orbits():
    rng = random.Random(115)
    done = 0
    while done < 12:
        n = rng.randint(2, 4)
        T = rand_mat(rng, n)
        if regularity_D(T) == 0:
            continue
        # conjugate by a block transform fixing the last coordinate line
        M = random_invertible(rng, n - 1) if n > 2 else [[Fraction(rng.randint(1, 3))]]
        g0 = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n - 1):
            for j in range(n - 1):
                g0[i][j] = M[i][j]
        g0[n - 1][n - 1] = Fraction(1)
        if frac_det(g0) == 0:
            continue
        ginv = invert(g0)
        Tp = mat_mul(g0, mat_mul(T, ginv))
        got = adjoint_invariants(Tp)
        want = adjoint_invariants(T)
        assert got.c == want.c and got.a == want.a
        g = adjoint_conjugator(T, Tp)
        assert mat_eq(mat_mul(g, T), mat_mul(Tp, g))
        assert g[n - 1][n - 1] == 1
        assert all(g[n - 1][j] == 0 for j in range(n - 1))
        assert all(g[i][n - 1] == 0 for i in range(n - 1))
        assert conjugator_is_unique(T, Tp)
        done += 1


def test_conjugator_rejects_different_orbits():
    with pytest.raises(DomainError):
        adjoint_conjugator([[1, 0], [0, 1]], [[-1, 0], [0, -1]])


def test_conjugator_rejects_irregular():
    T = [[0, 1], [0, 0]]
    with pytest.raises(DomainError):
        adjoint_conjugator(T, T)
