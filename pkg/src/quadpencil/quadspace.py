"""Rational quadratic spaces and their local-global invariants.

Forms are symmetric Gram matrices; q(w) = w^T G w. Places are encoded as
integers: 0 for the real place, otherwise a prime p. Local data (Hilbert
symbols, Hasse invariants) is computed on a squarefree-integer
diagonalization, global questions (isotropy, equivalence) by the local-global
principle over the finite certified place set {0, 2, primes of the diagonal}.
"""

from fractions import Fraction

from .errors import DomainError
from .intutil import factorint, is_prime, is_square_rational, squarefree_part, valuation
from .linalg import congruence, det, identity, is_symmetric, mat, mat_vec

REAL_PLACE = 0


class QuadForm:
    def __init__(self, gram):
        G = mat(gram)
        if not is_symmetric(G):
            raise DomainError("Gram matrix must be symmetric")
        self.gram = G
        self.dim = len(G)

    def value(self, w):
        w = [Fraction(x) for x in w]
        return sum(w[i] * self.gram[i][j] * w[j]
                   for i in range(self.dim) for j in range(self.dim))

    def det(self):
        return det(self.gram)

    @property
    def is_nondegenerate(self):
        return self.det() != 0

    def transformed(self, P):
        return QuadForm(congruence(P, self.gram))

    def __eq__(self, other):
        if isinstance(other, QuadForm):
            return self.gram == other.gram
        return NotImplemented

    def __repr__(self):
        return "QuadForm(%r)" % (self.gram,)


def _require_nondegenerate(q):
    if not q.is_nondegenerate:
        raise DomainError("degenerate quadratic form")


def diagonalize(q: QuadForm):
    """(entries, P) with P^T G P = diag(entries), entries squarefree integers."""
    _require_nondegenerate(q)
    n = q.dim
    G = [row[:] for row in q.gram]
    P = identity(n)

    def add_col(dst, src, c):
        # col_dst += c * col_src on G (both sides) and on P
        for r in range(n):
            G[r][dst] += c * G[r][src]
        for r in range(n):
            G[dst][r] += c * G[src][r]
        for r in range(n):
            P[r][dst] += c * P[r][src]

    def swap_cols(i, j):
        for r in range(n):
            G[r][i], G[r][j] = G[r][j], G[r][i]
        G[i], G[j] = G[j], G[i]
        for r in range(n):
            P[r][i], P[r][j] = P[r][j], P[r][i]

    for i in range(n):
        if G[i][i] == 0:
            j = next((k for k in range(i + 1, n) if G[k][k] != 0), None)
            if j is not None:
                swap_cols(i, j)
            else:
                j = next((k for k in range(i + 1, n) if G[i][k] != 0), None)
                if j is None:
                    raise DomainError("degenerate quadratic form")
                # both diagonals vanish here; this choice makes the entry 1
                add_col(i, j, 1 / (2 * G[i][j]))
        for j in range(i + 1, n):
            if G[i][j] != 0:
                add_col(j, i, -G[i][j] / G[i][i])
    entries = []
    for i in range(n):
        d = G[i][i]
        s = squarefree_part(d)
        # scale column so the diagonal entry becomes its squarefree part
        c2 = Fraction(s) / d
        assert is_square_rational(c2)
        from .intutil import rational_sqrt

        c = rational_sqrt(c2)
        for r in range(n):
            P[r][i] *= c
        entries.append(s)
    D = [[Fraction(entries[i] if i == j else 0) for j in range(n)] for i in range(n)]
    assert congruence(P, q.gram) == D
    return entries, P


def _legendre(u, p):
    r = pow(u % p, (p - 1) // 2, p)
    return 1 if r == 1 else -1


def hilbert_symbol(a, b, place) -> int:
    """(a, b)_v: 1 iff z^2 = a x^2 + b y^2 has a nontrivial local solution."""
    a, b = Fraction(a), Fraction(b)
    if a == 0 or b == 0:
        raise DomainError("Hilbert symbol needs nonzero arguments")
    A = squarefree_part(a)
    B = squarefree_part(b)
    if place == REAL_PLACE:
        return -1 if (A < 0 and B < 0) else 1
    p = place
    if not (isinstance(p, int) and is_prime(p)):
        raise DomainError("place must be 0 or a prime")
    al, u = valuation(A, p)
    be, w = valuation(B, p)
    u, w = int(u), int(w)
    if p == 2:
        e = ((u - 1) // 2) * ((w - 1) // 2)
        e += al * ((w * w - 1) // 8) + be * ((u * u - 1) // 8)
        return -1 if e % 2 else 1
    e = al * be * ((p - 1) // 2)
    s = -1 if e % 2 else 1
    if be % 2:
        s *= _legendre(u, p)
    if al % 2:
        s *= _legendre(w, p)
    return s


def hasse_invariant(q: QuadForm, place) -> int:
    entries, _ = diagonalize(q)
    s = 1
    for i in range(len(entries)):
        for j in range(i + 1, len(entries)):
            s *= hilbert_symbol(entries[i], entries[j], place)
    return s


def certified_places(q: QuadForm):
    """{0, 2, odd primes dividing the squarefree diagonal}: symbols are 1 elsewhere."""
    entries, _ = diagonalize(q)
    places = {REAL_PLACE, 2}
    for d in entries:
        places.update(factorint(abs(d)))
    return places


def signature(q: QuadForm):
    entries, _ = diagonalize(q)
    pos = sum(1 for d in entries if d > 0)
    return pos, len(entries) - pos


def _local_square(d, place) -> bool:
    D = squarefree_part(Fraction(d))
    if D == 1:
        return True
    if place == REAL_PLACE:
        return D > 0
    p = place
    if p == 2:
        return D % 8 == 1
    if D % p == 0:
        return False
    return _legendre(D, p) == 1


def is_isotropic(q: QuadForm) -> bool:
    """Does q represent zero nontrivially over the rationals?"""
    _require_nondegenerate(q)
    entries, _ = diagonalize(q)
    n = len(entries)
    if n <= 1:
        return False
    if n == 2:
        return is_square_rational(Fraction(-entries[0] * entries[1]))
    d = 1
    for x in entries:
        d *= x
    places = certified_places(q)
    if n == 3:
        return all(
            hilbert_symbol(-1, -d, v) == hasse_invariant(q, v) for v in places
        )
    if n == 4:
        for v in places:
            if _local_square(d, v) and hasse_invariant(q, v) != hilbert_symbol(-1, -1, v):
                return False
        return True
    pos, neg = signature(q)
    return pos > 0 and neg > 0


def isotropy_witness(q: QuadForm, bound: int):
    """Primitive integer zero vector of height <= bound, or None."""
    _require_nondegenerate(q)
    entries, P = diagonalize(q)
    n = len(entries)
    from itertools import product
    from math import gcd

    for h in range(1, bound + 1):
        for y in product(range(-h, h + 1), repeat=n):
            if max(abs(c) for c in y) != h:
                continue
            if sum(entries[i] * y[i] * y[i] for i in range(n)) != 0:
                continue
            x = mat_vec(P, [Fraction(c) for c in y])
            den = 1
            for c in x:
                den = den * c.denominator // gcd(den, c.denominator)
            ints = [int(c * den) for c in x]
            g = 0
            for c in ints:
                g = gcd(g, c)
            ints = [c // g for c in ints]
            assert q.value(ints) == 0
            return ints
    return None


def forms_equivalent(q1: QuadForm, q2: QuadForm) -> bool:
    """Rational equivalence: dim, discriminant class, signature, local Hasse data."""
    _require_nondegenerate(q1)
    _require_nondegenerate(q2)
    if q1.dim != q2.dim:
        return False
    if squarefree_part(q1.det()) != squarefree_part(q2.det()):
        return False
    if signature(q1) != signature(q2):
        return False
    places = certified_places(q1) | certified_places(q2)
    return all(hasse_invariant(q1, v) == hasse_invariant(q2, v) for v in places)


def gram_invariant(space: QuadForm, vectors) -> QuadForm:
    """Pullback form q(x_1 w_1 + ... + x_n w_n) for n = dim(space) - 1 vectors."""
    n = space.dim - 1
    if len(vectors) != n:
        raise DomainError("need dim - 1 vectors")
    ws = [[Fraction(c) for c in w] for w in vectors]
    for w in ws:
        if len(w) != space.dim:
            raise DomainError("vector of wrong length")
    G = space.gram
    out = [
        [
            sum(ws[i][r] * G[r][s] * ws[j][s] for r in range(space.dim) for s in range(space.dim))
            for j in range(n)
        ]
        for i in range(n)
    ]
    return QuadForm(out)


def so_orbit_target(f: QuadForm, space: QuadForm):
    """(W', lifts): W' = f orthogonal-plus <c> with disc(W') = disc(space).

    A tuple with pullback form f arises from a special-orthogonal orbit on
    space iff W' is equivalent to space.
    """
    _require_nondegenerate(f)
    _require_nondegenerate(space)
    if space.dim != f.dim + 1:
        raise DomainError("ambient space must have dimension dim(f) + 1")
    c = squarefree_part(space.det() * f.det())
    n = f.dim + 1
    G = [[Fraction(0)] * n for _ in range(n)]
    for i in range(f.dim):
        for j in range(f.dim):
            G[i][j] = f.gram[i][j]
    G[n - 1][n - 1] = Fraction(c)
    target = QuadForm(G)
    assert squarefree_part(target.det()) == squarefree_part(space.det())
    return target, forms_equivalent(target, space)


class BrauerClass2:
    """2-torsion Brauer class given by its ramified places (even cardinality)."""

    __slots__ = ("places",)

    def __init__(self, places):
        ps = frozenset(places)
        assert len(ps) % 2 == 0
        self.places = ps

    @property
    def is_trivial(self):
        return not self.places

    def __eq__(self, other):
        if isinstance(other, BrauerClass2):
            return self.places == other.places
        return NotImplemented

    def __hash__(self):
        return hash(self.places)

    def __repr__(self):
        body = sorted(self.places, key=lambda v: (v != REAL_PLACE, v))
        return "BrauerClass2(%r)" % (body,)


def quaternion_class(u, v) -> BrauerClass2:
    """Ramified places of the quaternion algebra (u, v)."""
    u, v = Fraction(u), Fraction(v)
    if u == 0 or v == 0:
        raise DomainError("quaternion parameters must be nonzero")
    U = squarefree_part(u)
    V = squarefree_part(v)
    places = {REAL_PLACE, 2}
    places.update(factorint(abs(U)))
    places.update(factorint(abs(V)))
    ram = {p for p in places if hilbert_symbol(U, V, p) == -1}
    return BrauerClass2(ram)


def spin_obstruction(q: QuadForm) -> BrauerClass2:
    """Brauer class of the even Clifford algebra of an odd-dimensional form.

    Dimension 3 with diagonal <a, b, c> gives the quaternion class (-ab, -ac).
    Higher odd dimensions reduce by splitting off two-dimensional pieces:
    the full Clifford class of e + <a, b> is that of <-ab> e plus (a, b),
    and the even Clifford algebra of an odd form <a_1..a_m> is the full
    Clifford algebra of <-a_m a_1, ..., -a_m a_(m-1)>.
    """
    if q.dim % 2 == 0:
        raise DomainError("even Clifford class computed only for odd dimension")
    entries, _ = diagonalize(q)
    if q.dim == 1:
        return BrauerClass2(frozenset())
    if q.dim == 3:
        a, b, c = entries
        return quaternion_class(-a * b, -a * c)
    e = [-entries[-1] * x for x in entries[:-1]]
    acc = frozenset()
    while len(e) > 2:
        a, b = e[-2], e[-1]
        acc ^= quaternion_class(a, b).places
        e = [squarefree_part(Fraction(-a * b * x)) for x in e[:-2]]
    acc ^= quaternion_class(e[0], e[1]).places
    return BrauerClass2(acc)
