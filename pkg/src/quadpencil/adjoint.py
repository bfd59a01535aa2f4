"""Conjugation invariants of n x n matrices for the block subgroup fixing e_n.

The invariants of T are the characteristic coefficients c_1..c_n (signs so
that c_1 = trace, c_n = det for n = 2) together with the moments
a_j = (T^j)_(n,n). The regularity determinant D is the Hankel determinant of
the moment sequence; when D != 0 the invariants pin down a unique orbit and
the conjugator between two matrices with equal invariants is unique.
"""

from fractions import Fraction

from .errors import DomainError
from .linalg import charpoly, det, identity, inverse, mat, mat_mul, nullspace


class AdjointInvariants:
    __slots__ = ("c", "a")

    def __init__(self, c, a):
        self.c = tuple(Fraction(x) for x in c)
        self.a = tuple(Fraction(x) for x in a)
        if len(self.a) != len(self.c) - 1:
            raise DomainError("need n charpoly coefficients and n-1 moments")

    @property
    def n(self):
        return len(self.c)

    def __eq__(self, other):
        if isinstance(other, AdjointInvariants):
            return self.c == other.c and self.a == other.a
        return NotImplemented

    def __repr__(self):
        return "AdjointInvariants(c=%r, a=%r)" % (list(self.c), list(self.a))


def adjoint_invariants(T) -> AdjointInvariants:
    T = mat(T)
    n = len(T)
    P = charpoly(T)  # monic, low-order-first coefficients
    c = [(-1) ** i * P[n - i] for i in range(1, n + 1)]
    a = []
    M = T
    for _ in range(n - 1):
        a.append(M[n - 1][n - 1])
        M = mat_mul(M, T)
    return AdjointInvariants(c, a)


def _moments(inv: AdjointInvariants, count):
    """m_0..m_(count-1), extended past n-1 by the charpoly recurrence."""
    n = inv.n
    m = [Fraction(1)] + list(inv.a)
    while len(m) < count:
        k = len(m)
        m.append(sum((-1) ** (i + 1) * inv.c[i - 1] * m[k - i] for i in range(1, n + 1)))
    return m[:count]


def regularity_D(T) -> Fraction:
    """det[(T^(i+j))_(n,n)] for 0 <= i, j <= n-1, computed from powers of T."""
    T = mat(T)
    n = len(T)
    pows = [identity(n)]
    for _ in range(2 * n - 2):
        pows.append(mat_mul(pows[-1], T))
    H = [[pows[i + j][n - 1][n - 1] for j in range(n)] for i in range(n)]
    return det(H)


def d_determinant(inv: AdjointInvariants) -> Fraction:
    """The same Hankel determinant computed from the invariants alone."""
    n = inv.n
    m = _moments(inv, 2 * n - 1)
    H = [[m[i + j] for j in range(n)] for i in range(n)]
    return det(H)


def adjoint_canonical_rep(inv: AdjointInvariants):
    """Representative with the given invariants, built on the cyclic model.

    Multiplication by x on Q[x]/(charpoly) in the basis
    (x - m_1, x^2 - m_2, ..., x^(n-1) - m_(n-1), 1) has moments exactly m_j.
    """
    if d_determinant(inv) == 0:
        raise DomainError("irregular: moment determinant vanishes")
    n = inv.n
    # companion matrix of the characteristic polynomial in the power basis
    p = [(-1) ** i * inv.c[i - 1] for i in range(1, n + 1)]  # monic tail coeffs
    C = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n):
        C[i][i - 1] = Fraction(1)
    for i in range(n):
        C[i][n - 1] = -p[n - 1 - i]
    # basis columns in power coordinates: u_k = x^k - m_k, u_n = 1
    S = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n):
        S[k][k - 1] = Fraction(1)
        S[0][k - 1] = -inv.a[k - 1]
    S[0][n - 1] = Fraction(1)
    T = mat_mul(inverse(S), mat_mul(C, S))
    assert adjoint_invariants(T) == inv
    return T


def adjoint_conjugator(T, Tprime):
    """g with g T g^-1 = T', g e_n = e_n, e_n^T g = e_n^T; unique when D != 0."""
    T = mat(T)
    Tp = mat(Tprime)
    n = len(T)
    inv1 = adjoint_invariants(T)
    if inv1 != adjoint_invariants(Tp):
        raise DomainError("invariants differ: matrices are not in the same orbit")
    if regularity_D(T) == 0:
        raise DomainError("irregular: moment determinant vanishes")

    def krylov(M):
        cols = []
        v = [Fraction(1 if i == n - 1 else 0) for i in range(n)]
        for _ in range(n):
            cols.append(v)
            v = [sum(M[i][j] * v[j] for j in range(n)) for i in range(n)]
        return [[cols[j][i] for j in range(n)] for i in range(n)]

    Q = krylov(T)
    Qp = krylov(Tp)
    g = mat_mul(Qp, inverse(Q))
    assert mat_mul(g, T) == mat_mul(Tp, g)
    assert all(g[i][n - 1] == (1 if i == n - 1 else 0) for i in range(n))
    assert all(g[n - 1][j] == (1 if j == n - 1 else 0) for j in range(n))
    return g


def conjugator_is_unique(T, Tprime) -> bool:
    """Trivial kernel of the linear system cutting out block conjugators."""
    T = mat(T)
    Tp = mat(Tprime)
    n = len(T)
    # unknowns X (n x n, row-major): X T - T' X = 0, X e_n = 0, e_n^T X = 0
    rows = []
    for i in range(n):
        for j in range(n):
            row = [Fraction(0)] * (n * n)
            for k in range(n):
                row[i * n + k] += T[k][j]
                row[k * n + j] -= Tp[i][k]
            rows.append(row)
    for i in range(n):
        row = [Fraction(0)] * (n * n)
        row[i * n + n - 1] = Fraction(1)
        rows.append(row)
    for j in range(n):
        row = [Fraction(0)] * (n * n)
        row[(n - 1) * n + j] = Fraction(1)
        rows.append(row)
    return not nullspace(rows)
