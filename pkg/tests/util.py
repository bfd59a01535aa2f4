"""Shared generators and independent oracles for the test suite.

The oracles here deliberately avoid the package's own routines: determinants
are recomputed with a local elimination, resultants come from the Sylvester
matrix, and discriminants of low degree use the textbook closed forms.
"""

from fractions import Fraction

from quadpencil import BinaryForm, EtaleAlgebra, OrbitParam, Poly, is_squarefree


def frac_det(rows):
    """Fraction-exact determinant by Gaussian elimination, local to the tests."""
    M = [[Fraction(x) for x in row] for row in rows]
    n = len(M)
    sign = 1
    out = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            sign = -sign
        out *= M[c][c]
        inv = 1 / M[c][c]
        for r in range(c + 1, n):
            if M[r][c] == 0:
                continue
            factor = M[r][c] * inv
            for k in range(c, n):
                M[r][k] -= factor * M[c][k]
    return sign * out


def sylvester_resultant(p, q):
    """Res(p, q) as the determinant of the Sylvester matrix."""
    m, n = p.degree, q.degree
    if m < 0 or n < 0:
        return Fraction(0)
    size = m + n
    # coefficient rows, highest power first
    pc = [p[m - i] for i in range(m + 1)]
    qc = [q[n - i] for i in range(n + 1)]
    rows = []
    for shift in range(n):
        rows.append([Fraction(0)] * shift + pc + [Fraction(0)] * (size - shift - m - 1))
    for shift in range(m):
        rows.append([Fraction(0)] * shift + qc + [Fraction(0)] * (size - shift - n - 1))
    return frac_det(rows)


def quadratic_disc(a, b, c):
    return Fraction(b) ** 2 - 4 * Fraction(a) * Fraction(c)


def cubic_disc(a, b, c, d):
    a, b, c, d = (Fraction(x) for x in (a, b, c, d))
    return 18 * a * b * c * d - 4 * b**3 * d + b**2 * c**2 - 4 * a * c**3 - 27 * a**2 * d**2


def random_monic_separable(rng, n, lo=-5, hi=5):
    while True:
        g = Poly([Fraction(rng.randint(lo, hi)) for _ in range(n)] + [Fraction(1)])
        if is_squarefree(g):
            return g


def random_integral_form(rng, n, lo=-6, hi=6):
    while True:
        cs = [rng.randint(lo, hi) for _ in range(n + 1)]
        if cs[0] == 0:
            continue
        f = BinaryForm(cs)
        if f.disc() != 0:
            return f


def random_param(rng, n):
    """Valid (f, p) with t = s N(alpha), f0 = s^2 N(alpha)."""
    while True:
        g = random_monic_separable(rng, n)
        L = EtaleAlgebra(g)
        alpha = L.element([Fraction(rng.randint(-3, 3)) for _ in range(n)])
        if not alpha.is_unit:
            continue
        s = Fraction(rng.randint(1, 4), rng.randint(1, 3))
        if rng.random() < 0.5:
            s = -s
        f0 = s * s * alpha.norm()
        return BinaryForm.from_monic_part(f0, g), OrbitParam(L, alpha, s * alpha.norm())


def unimodular(rng, n, steps=6):
    U = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        c = rng.randint(-2, 2)
        for r in range(n):
            U[r][j] += c * U[r][i]
    return U


def random_skew(rng, n, lo=-5, hi=5):
    M = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            M[i][j] = Fraction(rng.randint(lo, hi))
            M[j][i] = -M[i][j]
    return M


def random_invertible(rng, n, lo=-3, hi=3):
    while True:
        M = [[Fraction(rng.randint(lo, hi)) for _ in range(n)] for _ in range(n)]
        if frac_det(M) != 0:
            return M
