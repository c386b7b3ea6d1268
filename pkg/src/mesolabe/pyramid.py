"""Right-angled pyramids: the 3D Pythagorean identity and its corollaries.

A pyramid is stored by its three edge lengths at the right-angle vertex;
coordinate realizations (vertex at the origin, edges on the axes) are built
on demand when a check needs actual points.  All operations work unchanged
over exact Fractions or :class:`~mesolabe.scalar.DecimalScalar`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .euclid import Point3
from .scalar import DecimalScalar, Rational

Length = Rational | DecimalScalar | int


def _as_fraction(v: Length) -> Fraction:
    if isinstance(v, DecimalScalar):
        return v.as_fraction()
    return Fraction(v)


@dataclass(frozen=True)
class RightPyramid:
    """Edge lengths from the right-angle vertex, all positive."""

    da: Length
    db: Length
    dc: Length

    def __post_init__(self):
        if not (self.da > 0 and self.db > 0 and self.dc > 0):
            raise ValueError("pyramid edges must be positive")

    def vertices(self) -> tuple[Point3, Point3, Point3, Point3]:
        """Exact realization (D, A, B, C) with D at the origin."""
        zero = Fraction(0)
        da, db, dc = (_as_fraction(v) for v in (self.da, self.db, self.dc))
        return (
            Point3(zero, zero, zero),
            Point3(da, zero, zero),
            Point3(zero, db, zero),
            Point3(zero, zero, dc),
        )


@dataclass(frozen=True)
class ObliqueVertexFrame:
    """Three edges at a vertex with pairwise angle cosines, not necessarily right.

    Feasibility means the Gram matrix of the three edge directions is
    positive semidefinite, which is decided exactly from principal minors.
    """

    a: Length
    b: Length
    c: Length
    cos_ab: Rational
    cos_bc: Rational
    cos_ca: Rational

    def __post_init__(self):
        if not (self.a > 0 and self.b > 0 and self.c > 0):
            raise ValueError("frame edges must be positive")
        if not self.is_feasible():
            raise ValueError("cosine triple has no vector realization (Gram matrix not PSD)")

    def is_feasible(self) -> bool:
        p, q, r = self.cos_ab, self.cos_bc, self.cos_ca
        if any(abs(x) > 1 for x in (p, q, r)):
            return False
        det = 1 + 2 * p * q * r - p * p - q * q - r * r
        return det >= 0


def diagonal_sq(p: RightPyramid):
    """Sum of the squares of the three vertex edges.

    This is the squared diagonal of the rectangular parallelepiped that
    encloses the pyramid, hence also the squared distance from either end
    of that diagonal to the opposite corner.
    """
    return p.da * p.da + p.db * p.db + p.dc * p.dc


def circumsphere_diameter_sq(p: RightPyramid):
    """Squared diameter of the sphere through all four vertices.

    The circumscribed sphere of the enclosing box is the circumscribed
    sphere of the pyramid, so its diameter is the box diagonal.
    """
    return diagonal_sq(p)


def prism_diagonal_check(p: RightPyramid) -> bool:
    """The half-prism rectangle's diagonal equals the full solid's diagonal.

    Builds the box over the right-triangle base exactly and compares the
    squared diagonal of the rectangle AGEC with the squared diagonal GC of
    the whole solid, also confirming AGEC really is a rectangle.
    """
    _, a, b, c = p.vertices()
    g = Point3(a.x, b.y, a.z)
    e = Point3(c.x, b.y, c.z)
    ag = g - a
    ac = c - a
    ae = e - a
    is_rectangle = ag.dot(ac) == 0 and e == a + ag + ac
    return is_rectangle and ae.norm_sq() == (c - g).norm_sq()


def oblique_diagonal_sq(f: ObliqueVertexFrame):
    """Squared diagonal for a frame with arbitrary vertex angles.

    Expands |u + v + w|^2 through the pairwise cosines; with all cosines
    zero this reduces to :func:`diagonal_sq`.
    """
    a, b, c = f.a, f.b, f.c
    return (
        a * a
        + b * b
        + c * c
        + 2 * (a * b * f.cos_ab + b * c * f.cos_bc + c * a * f.cos_ca)
    )
