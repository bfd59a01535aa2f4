"""Dense univariate polynomials over the rationals.

Coefficients are stored low-degree first as a tuple of Fractions with no
trailing zeros; the zero polynomial is the empty tuple. All arithmetic is
exact.
"""

from fractions import Fraction
from math import gcd as int_gcd
from math import lcm as int_lcm

from .errors import DomainError


def _norm(coeffs):
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _norm(coeffs)

    @property
    def degree(self):
        """Degree, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    @property
    def is_zero(self):
        return not self.coeffs

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __call__(self, x):
        """Horner evaluation at a Fraction (or anything with + and *)."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[i] - other[i] for i in range(n)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        if self.is_zero or other.is_zero:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        assert k >= 0
        out = Poly([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def divmod(self, other):
        """Euclidean division; other must be nonzero."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        q = [Fraction(0)] * max(self.degree - other.degree + 1, 0)
        r = list(self.coeffs)
        d = other.degree
        inv_lc = 1 / other.lc
        for k in range(len(r) - 1 - d, -1, -1):
            c = r[k + d] * inv_lc
            if c == 0:
                continue
            q[k] = c
            for i, b in enumerate(other.coeffs):
                r[k + i] -= c * b
        return Poly(q), Poly(r[:d] if d > 0 else [])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def derivative(self):
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self):
        if self.is_zero:
            return self
        return self * (1 / self.lc)

    def shift(self, k):
        """Multiply by x^k."""
        if self.is_zero:
            return self
        return Poly((Fraction(0),) * k + self.coeffs)

    def primitive_int(self):
        """(P, c) with self = c * P, P a primitive integer-coefficient Poly.

        c is a positive Fraction; P keeps the sign of the leading coefficient.
        Zero maps to (zero, 1).
        """
        if self.is_zero:
            return self, Fraction(1)
        den = int_lcm(*[c.denominator for c in self.coeffs])
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for c in ints:
            g = int_gcd(g, c)
        return Poly([c // g for c in ints]), Fraction(g, den)

    def __repr__(self):
        if self.is_zero:
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append("%s*x^%d" % (c, i))
        return "Poly(%s)" % " + ".join(terms)


X = Poly((0, 1))


def poly_from_ints(cs):
    return Poly([Fraction(c) for c in cs])


def _prem(A, B):
    """Pseudo-remainder of integer coefficient lists, low first.

    lc(B)^(deg A - deg B + 1) * A = Q*B + R with deg R < deg B.
    """
    dA, dB = len(A) - 1, len(B) - 1
    lb = B[-1]
    R = list(A)
    for k in range(dA - dB, -1, -1):
        c = R[dB + k]
        R = [lb * t for t in R]
        for i, bi in enumerate(B):
            R[i + k] -= c * bi
    while R and R[-1] == 0:
        R.pop()
    return R


def _subresultant_int(A, B):
    """Resultant of primitive integer polynomials via the subresultant PRS.

    Both inputs have degree >= 1. Returns an int.
    """
    A = list(A)
    B = list(B)
    s = 1
    if len(A) < len(B):
        A, B = B, A
        if (len(A) - 1) * (len(B) - 1) % 2:
            s = -s
    g = h = 1
    while len(B) - 1 > 0:
        dA, dB = len(A) - 1, len(B) - 1
        d = dA - dB
        if dA % 2 and dB % 2:
            s = -s
        R = _prem(A, B)
        if not R:
            return 0  # nonconstant common factor
        div = g * h**d
        newB = [c // div for c in R]
        assert all(c * div == r for c, r in zip(newB, R))
        A, B = B, newB
        g = A[-1]
        if d == 1:
            h = g
        elif d > 1:
            num = g**d
            assert num % h ** (d - 1) == 0
            h = num // h ** (d - 1)
    # B is now the last nonzero constant of the PRS
    dA = len(A) - 1
    num = B[0] ** dA
    if dA > 1:
        assert num % h ** (dA - 1) == 0
        return s * (num // h ** (dA - 1))
    return s * num


def resultant(p: Poly, q: Poly) -> Fraction:
    """Res(p, q) with Res(p, q) = lc(p)^deg(q) * prod q(alpha) over roots of p.

    Computed through the subresultant PRS on primitive integer parts, so
    intermediate coefficient growth stays polynomial.
    """
    if p.is_zero or q.is_zero:
        return Fraction(0)
    if p.degree == 0:
        return p.lc**q.degree
    if q.degree == 0:
        return q.lc**p.degree
    P, cp = p.primitive_int()
    Q, cq = q.primitive_int()
    r = _subresultant_int([int(c) for c in P.coeffs], [int(c) for c in Q.coeffs])
    return cp**q.degree * cq**p.degree * r


def discriminant(p: Poly) -> Fraction:
    """disc(p) = (-1)^(d(d-1)/2) Res(p, p') / lc(p) for deg p = d >= 1."""
    d = p.degree
    if d < 1:
        raise DomainError("discriminant needs degree >= 1")
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * resultant(p, p.derivative()) / p.lc


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd over the rationals (zero if both are zero)."""
    a, b = p, q
    while not b.is_zero:
        a, b = b, (a % b)
        if not b.is_zero:
            b = b.monic()  # keeps coefficient size tame
    if a.is_zero:
        return a
    return a.monic()


def poly_gcdex(p: Poly, q: Poly):
    """(u, v, d): u*p + v*q = d with d the monic gcd."""
    r0, r1 = p, q
    u0, u1 = Poly([1]), Poly()
    v0, v1 = Poly(), Poly([1])
    while not r1.is_zero:
        qq, rr = r0.divmod(r1)
        r0, r1 = r1, rr
        u0, u1 = u1, u0 - qq * u1
        v0, v1 = v1, v0 - qq * v1
    if r0.is_zero:
        return Poly(), Poly(), Poly()
    c = 1 / r0.lc
    return u0 * c, v0 * c, r0 * c


def is_squarefree(p: Poly) -> bool:
    if p.degree <= 0:
        return not p.is_zero
    return poly_gcd(p, p.derivative()).degree == 0


def squarefree_decomposition(p: Poly):
    """Yun decomposition: (c, [(g_i monic squarefree, i)]) with p = c*prod g_i^i."""
    if p.is_zero:
        raise DomainError("zero polynomial")
    c = p.lc
    f = p.monic()
    if f.degree == 0:
        return c, []
    out = []
    g = poly_gcd(f, f.derivative())
    c1 = f // g
    d = f.derivative() // g - c1.derivative()
    i = 1
    while c1.degree > 0:
        step = poly_gcd(c1, d)
        c1_next = c1 // step
        d = d // step - c1_next.derivative()
        if step.degree > 0:
            out.append((step, i))
        c1 = c1_next
        i += 1
    return c, out


def sign_variations(values) -> int:
    """Sign changes in a sequence of Fractions, zeros dropped."""
    signs = [1 if v > 0 else -1 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_chain(p: Poly):
    chain = [p, p.derivative()]
    while chain[-1].degree > 0:
        r = chain[-2] % chain[-1]
        if r.is_zero:
            break
        chain.append(-r)
    return chain


def real_root_count(p: Poly) -> int:
    """Number of distinct real roots of a squarefree p, by Sturm's theorem."""
    if p.is_zero:
        raise DomainError("zero polynomial")
    if p.degree == 0:
        return 0
    if not is_squarefree(p):
        raise DomainError("real_root_count requires a squarefree polynomial")
    chain = sturm_chain(p)
    at_minus = [q.lc * (-1) ** q.degree for q in chain]
    at_plus = [q.lc for q in chain]
    return sign_variations(at_minus) - sign_variations(at_plus)


def lagrange_interpolate(xs, ys) -> Poly:
    """Unique Poly of degree < len(xs) through the given rational points."""
    assert len(xs) == len(ys) and len(set(xs)) == len(xs)
    out = Poly()
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if yi == 0:
            continue
        term = Poly([yi])
        for j, xj in enumerate(xs):
            if j == i:
                continue
            term = term * Poly([-xj, 1]) * Fraction(1, xi - xj)
        out = out + term
    return out
