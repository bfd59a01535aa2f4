"""Rational points of z^2 = f(x, 1) mapped to orbit parameters.

A point (u, v) with v != 0 determines the class of (x - beta, v): the norm of
u - beta is g(u), so v^2 = f0 N(u - beta) holds on the nose.
"""

from fractions import Fraction

from .binforms import BinaryForm
from .errors import DomainError
from .etale import EtaleAlgebra
from .pencil import OrbitParam


class CurvePoint:
    __slots__ = ("u", "v")

    def __init__(self, u, v):
        self.u = Fraction(u)
        self.v = Fraction(v)

    def __repr__(self):
        return "CurvePoint(%s, %s)" % (self.u, self.v)

    def __eq__(self, other):
        if isinstance(other, CurvePoint):
            return self.u == other.u and self.v == other.v
        return NotImplemented


def on_curve(f: BinaryForm, pt: CurvePoint) -> bool:
    return pt.v ** 2 == f(pt.u, 1)


def point_to_orbit(f: BinaryForm, pt: CurvePoint) -> OrbitParam:
    """Orbit parameter (u - beta, v) of a non-ramified rational point."""
    if not f.is_stable:
        raise DomainError("form must be stable")
    if not on_curve(f, pt):
        raise DomainError("point is not on z^2 = f(x, 1)")
    if pt.v == 0:
        raise DomainError("ramification point: v = 0 gives no invertible parameter")
    L = EtaleAlgebra(f.monic_part())
    alpha = L.from_rational(pt.u) - L.beta
    p = OrbitParam(L, alpha, pt.v)
    assert p.f0 == f.f0
    return p
