"""Pencils of symmetric bilinear forms over Q and their orbit invariants.

A pencil is a pair (A, B) of symmetric n x n rational matrices with invariant
binary form f(x,y) = (-1)^(n(n-1)/2) det(xA - yB). Stable pencils (f0 != 0,
disc f != 0) correspond to pairs (alpha, t) with alpha a unit in
L = Q[x]/(g), f(x,1) = f0 g(x), and t^2 = f0 N(alpha); two pairs give the
same orbit exactly when (alpha, t) = (c^2 alpha', N(c) t') for a unit c.
"""

from fractions import Fraction
from itertools import combinations, product
import random

from .binforms import BinaryForm
from .errors import DomainError
from .etale import EtaleAlgebra, all_square_roots, euler_trace_solve
from .intutil import divisors, factorint, is_square_rational, rational_sqrt
from .linalg import (
    charpoly,
    congruence,
    det,
    identity,
    inverse,
    is_symmetric,
    mat_mul,
    mat_vec,
    transpose,
)
from .polys import Poly, discriminant, lagrange_interpolate, real_root_count


class SymPair:
    """A pair of symmetric n x n rational matrices."""

    __slots__ = ("A", "B")

    def __init__(self, A, B):
        A = [[Fraction(x) for x in row] for row in A]
        B = [[Fraction(x) for x in row] for row in B]
        if len(A) != len(B) or not is_symmetric(A) or not is_symmetric(B):
            raise DomainError("need two symmetric matrices of equal size")
        self.A = A
        self.B = B

    @property
    def n(self):
        return len(self.A)

    def transformed(self, M):
        """(M^T A M, M^T B M), the congruence action."""
        return SymPair(congruence(M, self.A), congruence(M, self.B))

    def __eq__(self, other):
        if isinstance(other, SymPair):
            return self.A == other.A and self.B == other.B
        return NotImplemented


class OrbitParam:
    """(alpha, t) with alpha a unit of an etale algebra and t a nonzero rational."""

    __slots__ = ("algebra", "alpha", "t")

    def __init__(self, algebra, alpha, t):
        t = Fraction(t)
        if t == 0:
            raise DomainError("t must be nonzero")
        if not alpha.is_unit:
            raise DomainError("alpha must be invertible")
        self.algebra = algebra
        self.alpha = alpha
        self.t = t

    @property
    def f0(self):
        """The leading coefficient forced by t^2 = f0 N(alpha)."""
        return self.t**2 / self.alpha.norm()

    def form(self) -> BinaryForm:
        return BinaryForm.from_monic_part(self.f0, self.algebra.g)

    def __eq__(self, other):
        if isinstance(other, OrbitParam):
            return (
                self.algebra == other.algebra
                and self.alpha == other.alpha
                and self.t == other.t
            )
        return NotImplemented

    def __repr__(self):
        return "OrbitParam(alpha=%r, t=%s)" % (self.alpha, self.t)


class StabilizerGroup:
    """Finite 2-group of rational self-congruences of a stable pencil."""

    __slots__ = ("generators", "order", "geometric_order", "elements")

    def __init__(self, generators, order, geometric_order, elements):
        self.generators = generators
        self.order = order
        self.geometric_order = geometric_order
        self.elements = elements


def invariant_binary_form(pair: SymPair) -> BinaryForm:
    """f(x,y) = (-1)^(n(n-1)/2) det(xA - yB), coefficients f0..fn."""
    n = pair.n
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    xs = [Fraction(k) for k in range(n + 1)]
    ys = []
    for s in xs:
        M = [
            [s * pair.A[i][j] - pair.B[i][j] for j in range(n)]
            for i in range(n)
        ]
        ys.append(det(M))
    q = lagrange_interpolate(xs, ys)  # det(sA - B) as a polynomial in s
    return BinaryForm([sign * q[n - i] for i in range(n + 1)])


def _require_stable(f: BinaryForm):
    if f.f0 == 0:
        raise DomainError("pencil is not stable: f0 = 0")
    if f.disc() == 0:
        raise DomainError("pencil is not stable: disc(f) = 0")


def _cyclic_vector(T, seed=0):
    """m with m, Tm, ..., T^(n-1)m independent, and the matrix Q of columns."""
    n = len(T)
    rng = random.Random(seed)
    tries = [[Fraction(1 if i == k else 0) for i in range(n)] for k in range(n)]
    while True:
        for m in tries:
            cols = [m]
            for _ in range(n - 1):
                cols.append(mat_vec(T, cols[-1]))
            Q = [[cols[j][i] for j in range(n)] for i in range(n)]
            d = det(Q)
            if d != 0:
                return m, Q, d
        tries = [[Fraction(rng.randint(-5, 5)) for _ in range(n)] for _ in range(8)]


def pencil_to_param(pair: SymPair, seed=0) -> OrbitParam:
    """Orbit parameter (alpha, t) of a stable pencil.

    T = A^(-1) B is self-adjoint for A with characteristic polynomial g; for a
    cyclic vector m the moments a_i = <m, T^i m>_A determine kappa through
    Tr(kappa beta^i / g'(beta)) = a_i, and alpha = kappa^(-1),
    t = 1/det[m | Tm | ... | T^(n-1) m].
    """
    f = invariant_binary_form(pair)
    _require_stable(f)
    g = f.monic_part()
    L = EtaleAlgebra(g)
    T = mat_mul(inverse(pair.A), pair.B)
    assert charpoly(T) == g
    m, Q, dQ = _cyclic_vector(T, seed)
    moments = []
    v = m
    for i in range(pair.n):
        Av = mat_vec(pair.A, v)
        moments.append(sum(mi * x for mi, x in zip(m, Av)))
        if i < pair.n - 1:
            v = mat_vec(T, v)
    kappa = euler_trace_solve(L, moments)
    alpha = kappa.inverse()
    t = Fraction(1) / dQ
    assert t * t == f.f0 * alpha.norm()
    return OrbitParam(L, alpha, t)


def param_to_pencil(f: BinaryForm, p: OrbitParam) -> SymPair:
    """Symmetric pair with invariant form f from the parameter (alpha, t).

    Gram matrices of (mu, lambda) -> Tr(mu lambda / (alpha g'(beta))) and its
    beta-twist in the power basis, rescaled so the invariant form is exactly f.
    """
    _require_stable(f)
    g = f.monic_part()
    L = p.algebra
    if L.g != g:
        raise DomainError("parameter algebra does not match the form")
    if p.t**2 != f.f0 * p.alpha.norm():
        raise DomainError("t^2 = f0 N(alpha) violated")
    n = f.n
    w = (p.alpha * L.from_poly(g.derivative())).inverse()
    Atil = [[(L.beta_pow(i + j) * w).trace() for j in range(n)] for i in range(n)]
    Btil = [[(L.beta_pow(i + j + 1) * w).trace() for j in range(n)] for i in range(n)]
    U = identity(n)
    U[0][0] = p.t
    pair = SymPair(congruence(U, Atil), congruence(U, Btil))
    assert invariant_binary_form(pair) == f
    return pair


def g_equivalent(p1: OrbitParam, p2: OrbitParam):
    """Witness c with c^2 alpha2 = alpha1 and N(c) t2 = t1, or None."""
    if p1.algebra != p2.algebra:
        raise DomainError("parameters live in different algebras")
    if p1.f0 != p2.f0:
        return None
    ratio = p1.alpha / p2.alpha
    for c in all_square_roots(p1.algebra, ratio):
        assert c * c * p2.alpha == p1.alpha
        if c.norm() * p2.t == p1.t:
            return c
    return None


def _support_primes(f0: Fraction, disc_g: Fraction, extra):
    val = f0 * disc_g
    ps = set(extra)
    for part in (val.numerator, val.denominator):
        ps.update(factorint(part))
    return sorted(ps)


def h_equivalent(p1: OrbitParam, p2: OrbitParam, extra_primes=()):
    """Witness (c, d) with c^2 d alpha2 = alpha1, N(c) d^(n/2) t2 = t1, or None.

    Only defined for even n. d runs over squarefree integers supported on
    extra_primes, -1, and the primes of f0 * disc(f); complete relative to
    that support.
    """
    if p1.algebra != p2.algebra:
        raise DomainError("parameters live in different algebras")
    n = p1.algebra.n
    if n % 2:
        raise DomainError("skew route undefined for odd n")
    disc_g = discriminant(p1.algebra.g)
    support = _support_primes(p1.f0, p1.f0 ** (2 * n - 2) * disc_g, extra_primes)
    cands = []
    for size in range(len(support) + 1):
        for sub in combinations(support, size):
            d0 = 1
            for q in sub:
                d0 *= q
            cands.extend([d0, -d0])
    for d in cands:
        scaled = OrbitParam(p2.algebra, d * p2.alpha, Fraction(d) ** (n // 2) * p2.t)
        c = g_equivalent(p1, scaled)
        if c is not None:
            return c, d
    return None


def stabilizer_rational(pair: SymPair) -> StabilizerGroup:
    """Rational self-congruences of a stable pencil.

    These are the sign combinations sum(s_i E_i(T)) over the idempotents of
    the factors g_i with prod s_i^(deg g_i) = 1; the order is 2^(r-1) when
    some factor has odd degree and 2^r otherwise. Over the separable closure
    every factor splits linearly, giving order 2^(n-1).
    """
    f = invariant_binary_form(pair)
    _require_stable(f)
    n = pair.n
    L = EtaleAlgebra(f.monic_part())
    T = mat_mul(inverse(pair.A), pair.B)
    degs = [gi.degree for gi in L.factors]
    r = len(degs)

    def eval_at_T(elem):
        out = [[Fraction(0)] * n for _ in range(n)]
        P = identity(n)
        for c in elem.poly().coeffs:
            if c:
                out = [[out[i][j] + c * P[i][j] for j in range(n)] for i in range(n)]
            P = mat_mul(P, T)
        return out

    E_mats = [eval_at_T(e) for e in L.idempotents()]
    elements = []
    for signs in product([1, -1], repeat=r):
        parity = 1
        for s, dg in zip(signs, degs):
            parity *= s**dg
        if parity != 1:
            continue
        M = [[sum(s * E[i][j] for s, E in zip(signs, E_mats)) for j in range(n)]
             for i in range(n)]
        assert congruence(M, pair.A) == pair.A
        assert congruence(M, pair.B) == pair.B
        assert mat_mul(M, M) == identity(n)
        assert det(M) == 1
        elements.append(M)

    # generating sign flips: kernel basis of s -> sum deg_i s_i over F_2
    odd = [i for i, dg in enumerate(degs) if dg % 2]
    gens = []
    for i in range(r):
        if odd and i == odd[0]:
            continue
        bits = [0] * r
        bits[i] = 1
        if odd and degs[i] % 2:
            bits[odd[0]] = 1
        signs = [(-1) ** b for b in bits]
        M = [[sum(s * E[i2][j] for s, E in zip(signs, E_mats)) for j in range(n)]
             for i2 in range(n)]
        gens.append(M)

    order = 2 ** (r - 1) if odd else 2**r
    assert len(elements) == order
    return StabilizerGroup(gens, order, 2 ** (n - 1), elements)


def real_orbit_obstruction(f: BinaryForm) -> bool:
    """True when no real orbit exists: g has no real root and f0 < 0."""
    _require_stable(f)
    r1 = real_root_count(f.monic_part())
    return r1 == 0 and f.f0 < 0


def orbit_witness_search(f: BinaryForm, bound: int):
    """Bounded search for (alpha, t) with t^2 = f0 N(alpha); None if not found.

    Semi-decision: alpha runs over integer coordinate vectors of height up to
    bound divided by divisors of the numerator of f0, in increasing height.
    """
    _require_stable(f)
    L = EtaleAlgebra(f.monic_part())
    n = f.n
    dens = divisors(f.f0.numerator) if abs(f.f0.numerator) != 1 else [1]
    for h in range(bound + 1):
        for vec in product(range(-h, h + 1), repeat=n):
            if max((abs(v) for v in vec), default=0) != h:
                continue
            if all(v == 0 for v in vec):
                continue
            for den in dens:
                alpha = L.element([Fraction(v, den) for v in vec])
                nrm = alpha.norm()
                if nrm == 0:
                    continue
                val = f.f0 * nrm
                if is_square_rational(val):
                    return OrbitParam(L, alpha, rational_sqrt(val))
    return None
