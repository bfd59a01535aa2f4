"""Rings and oriented module classes attached to integral binary forms.

For an integral f of degree n with f0 != 0 and theta the class of x in
L = Q[x]/(g), g = f(x,1)/f0, the ring R_f has Z-basis
1, zeta_1, ..., zeta_(n-1) with zeta_k = f0 theta^k + f1 theta^(k-1) + ...
+ f_(k-1) theta. The modules I_f(k) with basis 1, theta, ..., theta^k,
zeta_(k+1), ..., zeta_(n-1) are R_f-stable, I_f(k) = I_f(1)^k, and the signed
norm of I_f(k) is 1/f0^k. Ideals are stored with a global denominator and an
integer HNF basis in R_f coordinates, plus an orientation sign.
"""

from fractions import Fraction
from math import gcd as int_gcd
from math import lcm as int_lcm

from .binforms import BinaryForm
from .errors import DomainError
from .etale import EtaleAlgebra
from .linalg import det, hnf, inverse, solve, transpose, vec_mat
from .pencil import SymPair, invariant_binary_form


class Order:
    """R_f with its distinguished basis and integral multiplication table."""

    def __init__(self, f: BinaryForm):
        if not f.is_integral:
            raise DomainError("form must have integer coefficients")
        if f.f0 == 0:
            raise DomainError("f0 = 0")
        if f.disc() == 0:
            raise DomainError("form is degenerate")
        self.f = f
        self.algebra = EtaleAlgebra(f.monic_part())
        n = f.n
        theta = self.algebra.beta
        basis = [self.algebra.one]
        for k in range(1, n):
            zk = self.algebra.zero
            for i in range(k):
                zk = zk + f.coeffs[i] * theta ** (k - i)
            basis.append(zk)
        self.basis = basis
        self.Z = [list(b.coords) for b in basis]  # rows: power coordinates
        self.Zinv = inverse(self.Z)
        # multiplication table in the zeta basis; integrality is a theorem
        self.table = []
        for i in range(n):
            row = []
            for j in range(n):
                cs = self.to_basis(basis[i] * basis[j])
                assert all(c.denominator == 1 for c in cs)
                row.append(tuple(int(c) for c in cs))
            self.table.append(row)

    @property
    def n(self):
        return self.f.n

    def to_basis(self, elem):
        """Coordinates of an algebra element in the zeta basis."""
        return vec_mat(list(elem.coords), self.Zinv)

    def from_basis(self, coords):
        out = self.algebra.zero
        for c, b in zip(coords, self.basis):
            out = out + Fraction(c) * b
        return out

    def __eq__(self, other):
        if isinstance(other, Order):
            return self.f == other.f
        return NotImplemented


def form_order(f: BinaryForm) -> Order:
    return Order(f)


def order_disc(order: Order) -> Fraction:
    """det of the trace form on the basis of R_f; equals disc(f)."""
    n = order.n
    M = [[(order.basis[i] * order.basis[j]).trace() for j in range(n)] for i in range(n)]
    return det(M)


class OrientedIdeal:
    """Full-rank R_f-lattice with orientation: rows/den in the zeta basis."""

    __slots__ = ("order", "den", "mat", "eps")

    def __init__(self, order, den, mat, eps):
        assert eps in (1, -1) and den > 0
        g = den
        for row in mat:
            for x in row:
                g = int_gcd(g, x)
        self.order = order
        self.den = den // g
        self.mat = [[x // g for x in row] for row in mat]
        self.eps = eps

    def norm(self) -> Fraction:
        return self.eps * Fraction(det(self.mat), Fraction(self.den) ** self.order.n)

    def basis_elements(self):
        return [
            self.order.from_basis([Fraction(x, self.den) for x in row])
            for row in self.mat
        ]

    def oriented_basis(self):
        """Basis whose wedge equals norm * (top wedge of the R_f basis)."""
        elems = self.basis_elements()
        if self.eps < 0:
            elems[0] = -elems[0]
        return elems

    def contains(self, elem) -> bool:
        x = self.order.to_basis(elem)
        y = solve(transpose(self.mat), [self.den * c for c in x])
        return all(c.denominator == 1 for c in y)

    def __eq__(self, other):
        if isinstance(other, OrientedIdeal):
            return (
                self.order == other.order
                and self.den == other.den
                and self.mat == other.mat
                and self.eps == other.eps
            )
        return NotImplemented

    def __repr__(self):
        return "OrientedIdeal(den=%d, mat=%r, eps=%d)" % (self.den, self.mat, self.eps)


def _ideal_from_elements(order, elems, eps=None):
    rows = [order.to_basis(e) for e in elems]
    if eps is None:
        assert len(rows) == order.n
        d = det(rows)
        if d == 0:
            raise DomainError("ideal basis is not full rank")
        eps = 1 if d > 0 else -1
    den = 1
    for row in rows:
        for c in row:
            den = int_lcm(den, c.denominator)
    ints = [[int(c * den) for c in row] for row in rows]
    H = hnf(ints)
    if len(H) != order.n:
        raise DomainError("ideal basis is not full rank")
    return OrientedIdeal(order, den, H, eps)


def unit_ideal(order: Order) -> OrientedIdeal:
    return _ideal_from_elements(order, list(order.basis))


def power_ideal(order: Order, k: int) -> OrientedIdeal:
    """I_f(k), 0 <= k <= n-1; signed norm 1/f0^k."""
    n = order.n
    if not 0 <= k <= n - 1:
        raise DomainError("k out of range")
    L = order.algebra
    elems = [L.beta_pow(j) for j in range(k + 1)] + [order.basis[j] for j in range(k + 1, n)]
    ideal = _ideal_from_elements(order, elems)
    assert ideal.norm() == Fraction(1) / order.f.f0**k
    return ideal


def ideal_mul(I: OrientedIdeal, J: OrientedIdeal) -> OrientedIdeal:
    if I.order != J.order:
        raise DomainError("ideals of different orders")
    elems = [bi * bj for bi in I.basis_elements() for bj in J.basis_elements()]
    return _ideal_from_elements(I.order, elems, eps=I.eps * J.eps)


def ideal_pow(I: OrientedIdeal, k: int) -> OrientedIdeal:
    if k < 0:
        raise DomainError("negative ideal power")
    out = unit_ideal(I.order)
    for _ in range(k):
        out = ideal_mul(out, I)
    return out


def scalar_ideal(c, I: OrientedIdeal) -> OrientedIdeal:
    """The ideal c*I with orientation eps(I) * sign(N(c))."""
    nc = c.norm()
    if nc == 0:
        raise DomainError("scalar must be invertible")
    elems = [c * b for b in I.basis_elements()]
    eps = I.eps * (1 if nc > 0 else -1)
    return _ideal_from_elements(I.order, elems, eps=eps)


def module_stable(I: OrientedIdeal) -> bool:
    """R_f * I = I as a lattice?"""
    return all(
        I.contains(b * v) for b in I.order.basis for v in I.basis_elements()
    )


def _expansion_basis(order, k):
    """Power coords matrix of the natural basis of I_f(k) (rows)."""
    n = order.n
    L = order.algebra
    elems = [L.beta_pow(j) for j in range(k + 1)] + [order.basis[j] for j in range(k + 1, n)]
    return [list(e.coords) for e in elems]


def ideal_pair_valid(order: Order, I: OrientedIdeal, alpha):
    """(ok, message): I^2 inside alpha*I_f(n-3) and N(I)^2 = N(alpha)/f0^(n-3)."""
    n = order.n
    if n < 3:
        raise DomainError("module route needs n >= 3")
    if not alpha.is_unit:
        raise DomainError("alpha must be invertible")
    target = scalar_ideal(alpha, power_ideal(order, n - 3))
    bs = I.basis_elements()
    for i in range(n):
        for j in range(i, n):
            if not target.contains(bs[i] * bs[j]):
                return False, "product of basis elements %d and %d escapes alpha*I_f(%d)" % (
                    i, j, n - 3)
    if I.norm() ** 2 != alpha.norm() / order.f.f0 ** (n - 3):
        return False, "norm condition N(I)^2 = N(alpha)/f0^(n-3) fails"
    return True, None


def ideal_pair_to_matrices(order: Order, I: OrientedIdeal, alpha) -> SymPair:
    """Integral symmetric pair with invariant form f from a valid (I, alpha).

    Entries are the zeta_(n-1) and zeta_(n-2) coefficients of b_i b_j / alpha
    expanded in the natural basis of I_f(n-3), for the oriented basis b of I.
    """
    ok, msg = ideal_pair_valid(order, I, alpha)
    if not ok:
        raise DomainError(msg)
    n = order.n
    W = _expansion_basis(order, n - 3)
    Winv = inverse(W)
    bs = I.oriented_basis()
    ainv = alpha.inverse()
    A = [[None] * n for _ in range(n)]
    B = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            coords = vec_mat(list((bs[i] * bs[j] * ainv).coords), Winv)
            assert all(c.denominator == 1 for c in coords)
            A[i][j] = A[j][i] = coords[n - 1]
            B[i][j] = B[j][i] = coords[n - 2]
    pair = SymPair(A, B)
    assert invariant_binary_form(pair) == order.f
    return pair


def rational_params_of_pair(order: Order, I: OrientedIdeal, alpha):
    """(gamma, t) = (f0 * alpha, f0^(n-1) * N(I)) for the orbit of the pair."""
    if order.n < 3:
        raise DomainError("module route needs n >= 3")
    f0 = order.f.f0
    return f0 * alpha, f0 ** (order.n - 1) * I.norm()


def canonical_odd_orbit(order: Order):
    """(pair, I, alpha) for the distinguished orbit when n is odd.

    I = I_f(1)^((n-3)/2), alpha = 1; the rational parameters come out as
    (f0, f0^((n+1)/2)).
    """
    n = order.n
    if n < 3 or n % 2 == 0:
        raise DomainError("canonical orbit needs odd n >= 3")
    I = ideal_pow(power_ideal(order, 1), (n - 3) // 2)
    alpha = order.algebra.one
    pair = ideal_pair_to_matrices(order, I, alpha)
    return pair, I, alpha


def inverse_different_check(order: Order):
    """(contained, index) for R_f inside (1/f'(theta)) I_f(n-2).

    Also verifies on the full basis that Tr(lambda mu / f'(theta)) equals the
    zeta_(n-1) coefficient of lambda mu in the natural basis of I_f(n-2).
    """
    n = order.n
    if n < 2:
        raise DomainError("need n >= 2")
    L = order.algebra
    fprime = L.from_poly(order.f.dehomogenized().derivative())
    fpinv = fprime.inverse()
    Ddual = scalar_ideal(fpinv, power_ideal(order, n - 2))
    contained = all(Ddual.contains(b) for b in order.basis)
    W = _expansion_basis(order, n - 2)
    Winv = inverse(W)
    for lam in order.basis:
        for mu in order.basis:
            prod = lam * mu
            coeff = vec_mat(list(prod.coords), Winv)[n - 1]
            assert (prod * fpinv).trace() == coeff
    index = Fraction(1) / abs(Ddual.norm())
    assert index.denominator == 1
    return contained, int(index)
