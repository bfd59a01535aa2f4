"""Etale algebras L = Q[x]/(g) for monic squarefree g, with exact arithmetic.

Elements are coordinate vectors in the power basis 1, beta, ..., beta^(n-1)
where beta is the class of x. The trace form identity
Tr(beta^j / g'(beta)) = [j = n-1] (j <= n-1) drives the moment solver used by
the pencil module.
"""

from fractions import Fraction

from .errors import DomainError
from .factor import factor_poly
from .intutil import is_square_rational, rational_sqrt
from .linalg import charpoly as mat_charpoly
from .linalg import det as mat_det
from .linalg import solve as mat_solve
from .polys import Poly, X, is_squarefree, lagrange_interpolate, poly_gcdex, resultant


class EtaleAlgebra:
    def __init__(self, g: Poly):
        if g.degree < 1:
            raise DomainError("defining polynomial must have degree >= 1")
        if g.lc != 1:
            raise DomainError("defining polynomial must be monic")
        if not is_squarefree(g):
            raise DomainError("not etale: defining polynomial is not squarefree")
        self.g = g
        self.n = g.degree
        self._factors = None
        self._components = None
        self._idempotents = None
        # powers of beta mod g up to beta^(2n-2), for products and traces
        pows = [Poly([1])]
        for _ in range(2 * self.n - 2):
            pows.append((pows[-1] * X) % g)
        self._beta_pows = pows

    @property
    def factors(self):
        """Monic irreducible factors of g, sorted; all multiplicity 1."""
        if self._factors is None:
            facs = factor_poly(self.g)
            assert all(m == 1 for _, m in facs)
            self._factors = [f for f, _ in facs]
        return self._factors

    def element(self, coords):
        cs = [Fraction(c) for c in coords]
        if len(cs) > self.n:
            raise DomainError("coordinate vector longer than the degree")
        cs += [Fraction(0)] * (self.n - len(cs))
        return AlgElement(self, tuple(cs))

    def from_poly(self, p: Poly):
        r = p % self.g
        return self.element(list(r.coeffs))

    def from_rational(self, c):
        return self.element([Fraction(c)])

    @property
    def zero(self):
        return self.element([])

    @property
    def one(self):
        return self.element([1])

    @property
    def beta(self):
        if self.n == 1:
            return self.from_poly(X)
        return self.element([0, 1])

    def beta_pow(self, m):
        """beta^m as an element, cached for m <= 2n-2."""
        if m < len(self._beta_pows):
            return self.from_poly(self._beta_pows[m])
        return self.beta**m

    def __eq__(self, other):
        if isinstance(other, EtaleAlgebra):
            return self.g == other.g
        return NotImplemented

    def __hash__(self):
        return hash(self.g)

    def __repr__(self):
        return "EtaleAlgebra(%r)" % (self.g,)

    def components(self):
        """[(g_i, EtaleAlgebra(g_i))] for the irreducible factors g_i."""
        if self._components is None:
            self._components = [(gi, EtaleAlgebra(gi)) for gi in self.factors]
        return self._components

    def project(self, a, i):
        """Image of a in the i-th component field."""
        gi, Li = self.components()[i]
        return Li.from_poly(a.poly())

    def idempotents(self):
        """Primitive idempotents E_i, one per irreducible factor, E_i = 1 mod g_i."""
        if self._idempotents is None:
            out = []
            for gi in self.factors:
                hi = self.g // gi
                u, v, d = poly_gcdex(gi, hi)
                assert d.degree == 0 and d.lc == 1
                out.append(self.from_poly(v * hi))
            # exactness of the splitting
            total = self.zero
            for e in out:
                assert e * e == e
                total = total + e
            assert total == self.one
            for i in range(len(out)):
                for j in range(i + 1, len(out)):
                    assert (out[i] * out[j]).is_zero
            self._idempotents = out
        return self._idempotents

    def lift_components(self, comp_elems):
        """Element with prescribed image in every component, via idempotents."""
        es = self.idempotents()
        assert len(comp_elems) == len(es)
        out = self.zero
        for ci, ei in zip(comp_elems, es):
            out = out + self.from_poly(ci.poly()) * ei
        return out


class AlgElement:
    __slots__ = ("A", "coords")

    def __init__(self, algebra, coords):
        self.A = algebra
        self.coords = coords

    def poly(self) -> Poly:
        return Poly(self.coords)

    @property
    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def __eq__(self, other):
        if isinstance(other, AlgElement):
            return self.A == other.A and self.coords == other.coords
        return NotImplemented

    def __hash__(self):
        return hash((self.A.g, self.coords))

    def _coerce(self, other):
        if isinstance(other, AlgElement):
            if other.A != self.A:
                raise DomainError("elements of different algebras")
            return other
        return self.A.from_rational(other)

    def __add__(self, other):
        o = self._coerce(other)
        return AlgElement(self.A, tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self):
        return AlgElement(self.A, tuple(-a for a in self.coords))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return AlgElement(self.A, tuple(a * c for a in self.coords))
        o = self._coerce(other)
        return self.A.from_poly(self.poly() * o.poly())

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.A.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def mult_matrix(self):
        """Matrix of multiplication by self in the power basis (columns a*beta^j)."""
        n = self.A.n
        cols = []
        cur = self
        for j in range(n):
            cols.append(cur.coords)
            if j < n - 1:
                cur = cur * self.A.beta
        return [[cols[j][i] for j in range(n)] for i in range(n)]

    def trace(self) -> Fraction:
        M = self.mult_matrix()
        return sum(M[i][i] for i in range(self.A.n))

    def norm(self) -> Fraction:
        return mat_det(self.mult_matrix())

    def charpoly(self) -> Poly:
        """det(x - mult-by-self); equals Res_y(g(y), x - a(y)) for monic g."""
        return mat_charpoly(self.mult_matrix())

    @property
    def is_unit(self):
        return self.norm() != 0

    def inverse(self):
        u, v, d = poly_gcdex(self.poly(), self.A.g)
        if d.degree != 0:
            raise DomainError("element is not invertible")
        return self.A.from_poly(u * (1 / d.lc))

    def __repr__(self):
        return "AlgElement(%s)" % (tuple(str(c) for c in self.coords),)


def make_algebra(g: Poly) -> EtaleAlgebra:
    return EtaleAlgebra(g)


def euler_trace_solve(A: EtaleAlgebra, targets):
    """The unique kappa with Tr(kappa * beta^i / g'(beta)) = targets[i], all i < n.

    Since Tr(nu / g'(beta)) is the beta^(n-1) coordinate of nu, this is a
    Hankel system whose matrix has unit antidiagonal, hence is nonsingular.
    """
    n = A.n
    targets = [Fraction(t) for t in targets]
    if len(targets) != n:
        raise DomainError("need exactly n target values")
    H = [[A._beta_pows[i + j][n - 1] for j in range(n)] for i in range(n)]
    kappa = mat_solve(H, targets)
    return A.element(kappa)


def _alg_poly_divmod(f, g):
    """Division of AlgElement-coefficient polynomials; lc(g) must be a unit."""
    A = g[-1].A
    inv = g[-1].inverse()
    r = list(f)
    dg = len(g) - 1
    q = [A.zero] * max(len(r) - dg, 0)
    for k in range(len(r) - 1 - dg, -1, -1):
        c = r[k + dg] * inv
        q[k] = c
        for i, b in enumerate(g):
            r[k + i] = r[k + i] - c * b
    r = r[:dg]
    while r and r[-1].is_zero:
        r.pop()
    return q, r


def _alg_poly_gcd(f, g):
    """Monic gcd of AlgElement-coefficient polynomials over a field component."""
    a, b = list(f), list(g)
    while b:
        _, r = _alg_poly_divmod(a, b)
        a, b = b, r
    inv = a[-1].inverse()
    return [c * inv for c in a]


def _canonical_sign(c):
    """Flip so the first nonzero coordinate is positive."""
    for x in c.coords:
        if x != 0:
            return -c if x < 0 else c
    return c


def _component_sqrt(Li: EtaleAlgebra, a):
    """A root of z^2 = a in the field Li, or None.

    Norm method: for a shift s making N_s(z) = Res_x(g_i(x), (z - s x)^2 - a(x))
    squarefree, factor N_s over Q and look for a linear gcd with
    (z - s beta)^2 - a over Li.
    """
    d = Li.n
    if d == 1:
        val = a.coords[0]
        if is_square_rational(val):
            return Li.element([rational_sqrt(val)])
        return None
    gpol = Li.g
    apol = a.poly()
    shifts = [0]
    for k in range(1, 10):
        shifts += [k, -k]
    for s in shifts:
        pts = []
        vals = []
        z0 = 0
        while len(pts) < 2 * d + 1:
            q = (Poly([z0]) - s * X) ** 2 - apol
            pts.append(Fraction(z0))
            vals.append(resultant(gpol, q))
            z0 = -z0 + (1 if z0 <= 0 else 0)
        N = lagrange_interpolate(pts, vals)
        assert N.degree == 2 * d
        if is_squarefree(N):
            break
    else:
        raise AssertionError("no squarefree norm shift found")
    beta = Li.beta
    r_poly = [(s * beta) * (s * beta) - a, (-2 * s) * beta, Li.one]
    for F, _ in factor_poly(N):
        if F.degree > d:
            continue
        Fz = [Li.from_rational(c) for c in F.coeffs]
        G = _alg_poly_gcd(r_poly, Fz)
        if len(G) == 2:
            root = -G[0] - s * beta
            assert root * root == a
            return root
    return None


def sqrt_in_algebra(A: EtaleAlgebra, a):
    """A square root of the unit a in A, or None if a is not a square.

    Decided independently on every irreducible component; the returned root is
    canonicalized so each component image, then the whole element, has positive
    first nonzero coordinate.
    """
    a = A.element(a.coords) if isinstance(a, AlgElement) else A.element(a)
    if not a.is_unit:
        raise DomainError("sqrt_in_algebra needs an invertible element")
    comp_roots = []
    for i, (gi, Li) in enumerate(A.components()):
        ci = _component_sqrt(Li, A.project(a, i))
        if ci is None:
            return None
        comp_roots.append(_canonical_sign(ci))
    c = A.lift_components(comp_roots)
    c = _canonical_sign(c)
    assert c * c == a
    return c


def all_square_roots(A: EtaleAlgebra, a):
    """All 2^r square roots of a (empty list when a is not a square)."""
    c = sqrt_in_algebra(A, a)
    if c is None:
        return []
    from itertools import product

    es = A.idempotents()
    out = []
    for signs in product([1, -1], repeat=len(es)):
        u = A.zero
        for s, e in zip(signs, es):
            u = u + (e if s == 1 else -e)
        out.append(c * u)
    return out
