"""Executable checkers for the Elements propositions the construction relies on.

Every predicate here is exact over :class:`~fractions.Fraction`; a checker
returns a residual Fraction (the claim holds iff it is 0) or a bool for
incidence claims.  There are no epsilon comparisons in this module, which
is what lets the rest of the package use these checkers as its oracle layer.

Conventions: a :class:`Triangle` carries its designated vertex first, so a
"right angle at the designated vertex" means the angle at ``t.a``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .scalar import Rational


@dataclass(frozen=True)
class Point2:
    x: Rational
    y: Rational

    def __sub__(self, other: "Point2") -> "Point2":
        return Point2(self.x - other.x, self.y - other.y)

    def __add__(self, other: "Point2") -> "Point2":
        return Point2(self.x + other.x, self.y + other.y)

    def scaled(self, k: Rational) -> "Point2":
        return Point2(self.x * k, self.y * k)

    def dot(self, other: "Point2") -> Rational:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "Point2") -> Rational:
        return self.x * other.y - self.y * other.x

    def norm_sq(self) -> Rational:
        return self.dot(self)


@dataclass(frozen=True)
class Point3:
    x: Rational
    y: Rational
    z: Rational

    def __sub__(self, other: "Point3") -> "Point3":
        return Point3(self.x - other.x, self.y - other.y, self.z - other.z)

    def __add__(self, other: "Point3") -> "Point3":
        return Point3(self.x + other.x, self.y + other.y, self.z + other.z)

    def scaled(self, k: Rational) -> "Point3":
        return Point3(self.x * k, self.y * k, self.z * k)

    def dot(self, other: "Point3") -> Rational:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def cross(self, other: "Point3") -> "Point3":
        return Point3(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )

    def norm_sq(self) -> Rational:
        return self.dot(self)


@dataclass(frozen=True)
class Triangle:
    """Vertices ``a, b, c``; ``a`` is the designated angle vertex."""

    a: Point2
    b: Point2
    c: Point2

    def legs(self) -> tuple[Point2, Point2]:
        return self.b - self.a, self.c - self.a

    def is_degenerate(self) -> bool:
        u, v = self.legs()
        return u.cross(v) == 0


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ValueError(message)


# -- book I ------------------------------------------------------------------


def check_47_1(t: Triangle) -> Rational:
    """Square on the hypotenuse minus the squares on the legs; right angle at a."""
    u, v = t.legs()
    _require(u.dot(v) == 0, "no right angle at the designated vertex")
    _require(not t.is_degenerate(), "degenerate triangle")
    return (t.c - t.b).norm_sq() - u.norm_sq() - v.norm_sq()


def check_pappus(t: Triangle, offset_ab: Point2, offset_ac: Point2) -> Rational:
    """Pappus' parallelogram generalization of 47.1.

    ``offset_ab``/``offset_ac`` are the side vectors of the parallelograms
    erected outward on AB and AC.  Their outer sides are extended to meet
    at H; the parallelogram on BC with side equal and parallel to HA then
    matches the other two in combined area.  Returns
    area(on AB) + area(on AC) - area(on BC), exact, zero for the outward
    configuration the proposition describes.
    """
    _require(not t.is_degenerate(), "degenerate triangle")
    ab, ac = t.legs()
    _require(ab.cross(offset_ab) != 0, "parallelogram on AB is flat")
    _require(ac.cross(offset_ac) != 0, "parallelogram on AC is flat")
    # H solves A + offset_ab + s*AB = A + offset_ac + r*AC.
    rhs = offset_ac - offset_ab
    denom = ab.cross(ac)
    s = rhs.cross(ac) / denom
    h = t.a + offset_ab + ab.scaled(s)
    area_ab = abs(ab.cross(offset_ab))
    area_ac = abs(ac.cross(offset_ac))
    area_bc = abs((t.c - t.b).cross(t.a - h))
    return area_ab + area_ac - area_bc


# -- book II -----------------------------------------------------------------


def _angle_dot(t: Triangle) -> Rational:
    u, v = t.legs()
    return u.dot(v)


def check_12_2(t: Triangle) -> Rational:
    """Obtuse case: BC^2 - (AB^2 + AC^2 + 2 * rectangle) with the angle at a.

    The rectangle is one side about the obtuse angle times the stretch cut
    off outside by the perpendicular, which over rationals is exactly
    ``|AB . AC|`` without extracting any root.
    """
    d = _angle_dot(t)
    _require(d < 0, "angle at the designated vertex is not obtuse")
    u, v = t.legs()
    return (t.c - t.b).norm_sq() - (u.norm_sq() + v.norm_sq() + 2 * (-d))


def check_13_2(t: Triangle) -> Rational:
    """Acute case: BC^2 - (AB^2 + AC^2 - 2 * rectangle) with the angle at a."""
    d = _angle_dot(t)
    _require(d > 0, "angle at the designated vertex is not acute")
    u, v = t.legs()
    return (t.c - t.b).norm_sq() - (u.norm_sq() + v.norm_sq() - 2 * d)


# -- book III ----------------------------------------------------------------


def check_3_3(center: Point2, chord: tuple[Point2, Point2]) -> bool:
    """A diameter bisects a non-central chord iff it meets it at right angles.

    Both directions are evaluated exactly: the diameter through the chord's
    midpoint must be perpendicular to it, and the foot of the perpendicular
    from the centre must be that midpoint.
    """
    p, q = chord
    _require(p != q, "degenerate chord")
    _require((p - center).norm_sq() == (q - center).norm_sq(), "chord endpoints not equidistant from centre")
    mid = Point2((p.x + q.x) / 2, (p.y + q.y) / 2)
    _require((q - p).cross(center - p) != 0, "chord passes through the centre")
    along = q - p
    bisect_implies_perp = (mid - center).dot(along) == 0
    # foot of the perpendicular from the centre onto the chord
    s = (center - p).dot(along) / along.norm_sq()
    perp_implies_bisect = p + along.scaled(s) == mid
    return bisect_implies_perp and perp_implies_bisect


def check_clavius_31_3(p: Point2, q: Point2, r: Point2) -> bool:
    """Clavius' scholium: the arc holding a right angle is a semicircle.

    True iff the circle on ``pq`` as diameter passes through ``r``; the
    right angle at ``r`` and the incidence are verified independently and
    must agree.
    """
    _require(p != q, "degenerate diameter")
    right_angle = (r - p).dot(r - q) == 0
    mid = Point2((p.x + q.x) / 2, (p.y + q.y) / 2)
    on_circle = (r - mid).norm_sq() * 4 == (q - p).norm_sq()
    assert right_angle == on_circle  # the scholium itself
    return right_angle and on_circle


# -- book VI -----------------------------------------------------------------


def check_8_6_corollary(t: Triangle) -> Rational:
    """Altitude from the right angle squared minus the base-segment rectangle.

    Right angle at ``t.a``; the altitude foot divides BC into segments whose
    product is computed exactly from the projection parameter, so no length
    ever leaves the rationals.
    """
    u, v = t.legs()
    _require(u.dot(v) == 0, "no right angle at the designated vertex")
    _require(not t.is_degenerate(), "degenerate triangle")
    base = t.c - t.b
    s = (t.a - t.b).dot(base) / base.norm_sq()
    foot = t.b + base.scaled(s)
    altitude_sq = (t.a - foot).norm_sq()
    segments_product = s * (1 - s) * base.norm_sq()
    return altitude_sq - segments_product


def check_31_6(t: Triangle, aspect: Rational) -> Rational:
    """Similar figures on the sides of a right triangle (rectangles of one aspect).

    Similar-figure areas scale with the squares of the sides, so rectangles
    of a fixed rational aspect ratio keep the check exact: the figure on the
    hypotenuse equals the two on the legs combined.
    """
    _require(aspect > 0, "aspect ratio must be positive")
    u, v = t.legs()
    _require(u.dot(v) == 0, "no right angle at the designated vertex")
    return aspect * (t.c - t.b).norm_sq() - aspect * u.norm_sq() - aspect * v.norm_sq()


# -- book VII ----------------------------------------------------------------


def check_19_7(a: Rational, b: Rational, c: Rational, d: Rational) -> bool:
    """Four terms are proportional iff the outer product equals the inner one.

    Evaluates ``a:b = c:d`` and ``a*d = b*c`` independently, asserts the
    equivalence (the proposition), and returns the shared truth value.
    """
    _require(b != 0 and d != 0, "zero consequent in a ratio")
    ratio_equal = Fraction(a, 1) / b == Fraction(c, 1) / d
    products_equal = a * d == b * c
    assert ratio_equal == products_equal
    return products_equal


def check_20_7(a: Rational, b: Rational, c: Rational) -> bool:
    """Three terms are proportional iff the extremes' product is the mean's square."""
    _require(b != 0 and c != 0, "zero consequent in a ratio")
    ratio_equal = Fraction(a, 1) / b == Fraction(b, 1) / c
    products_equal = a * c == b * b
    assert ratio_equal == products_equal
    return products_equal


# -- book XI -----------------------------------------------------------------


def check_4_11(line_dir: Point3, u: Point3, v: Point3) -> bool:
    """A line orthogonal to two crossing lines is orthogonal to their plane.

    Returns False as soon as ``line_dir`` fails against ``u``, ``v`` or any
    sampled combination; bilinearity makes the samples conclusive.
    """
    _require(u.cross(v).norm_sq() != 0, "u and v are parallel")
    if line_dir.dot(u) != 0 or line_dir.dot(v) != 0:
        return False
    for alpha, beta in ((1, 1), (1, -1), (2, 3), (-5, 7)):
        if line_dir.dot(u.scaled(Fraction(alpha)) + v.scaled(Fraction(beta))) != 0:
            return False
    return True


# -- book XII ----------------------------------------------------------------


def _tetra_volume(p0: Point3, p1: Point3, p2: Point3, p3: Point3) -> Rational:
    return abs((p1 - p0).cross(p2 - p0).dot(p3 - p0)) / 6


def prism_split_volumes(
    base: tuple[Point3, Point3, Point3], top: tuple[Point3, Point3, Point3]
) -> tuple[Rational, Rational, Rational]:
    """Volumes of the canonical three-tetrahedron split of a (claimed) prism."""
    a, b, c = base
    a2, b2, c2 = top
    return (
        _tetra_volume(a, b, c, c2),
        _tetra_volume(a, b, b2, c2),
        _tetra_volume(a, a2, b2, c2),
    )


def check_7_12(prism_base: tuple[Point3, Point3, Point3], apex_offset: Point3) -> Rational:
    """A triangular prism splits into three equal tetrahedra.

    Returns prism volume minus three times one tetrahedron, with the equality
    of all three parts asserted; everything is a scalar triple product.
    """
    a, b, c = prism_base
    top = (a + apex_offset, b + apex_offset, c + apex_offset)
    v1, v2, v3 = prism_split_volumes(prism_base, top)
    assert v1 == v2 == v3
    prism = abs((b - a).cross(c - a).dot(apex_offset)) / 2
    return prism - 3 * v1


# -- constructive generators ---------------------------------------------------
#
# Everything below builds *exact* witnesses for the checkers: rational points
# on circles and spheres, right angles by construction, proportional tuples
# by construction.  The seeded random.Random instance keeps the CLI's
# property runs reproducible.


def unit_circle_point(t: Rational) -> Point2:
    """Rational point ((1-t^2)/(1+t^2), 2t/(1+t^2)) on the unit circle."""
    d = 1 + t * t
    return Point2((1 - t * t) / d, 2 * t / d)


def unit_sphere_point(m: Rational, n: Rational) -> Point3:
    """Rational point on the unit sphere from two stereographic parameters."""
    d = 1 + m * m + n * n
    return Point3(2 * m / d, 2 * n / d, (m * m + n * n - 1) / d)


def rand_fraction(rng: random.Random, lo: int = -8, hi: int = 8, den_max: int = 9) -> Rational:
    return Fraction(rng.randint(lo, hi), rng.randint(1, den_max))


def rand_nonzero_fraction(rng: random.Random, hi: int = 8, den_max: int = 9) -> Rational:
    f = Fraction(rng.randint(1, hi), rng.randint(1, den_max))
    return -f if rng.random() < 0.5 else f


def rand_point2(rng: random.Random) -> Point2:
    return Point2(rand_fraction(rng), rand_fraction(rng))


def rand_point3(rng: random.Random) -> Point3:
    return Point3(rand_fraction(rng), rand_fraction(rng), rand_fraction(rng))


def rand_right_triangle(rng: random.Random) -> Triangle:
    """Right angle at the designated vertex, rational by a rotated frame."""
    while True:
        t = rand_fraction(rng)
        u = unit_circle_point(t)
        v = Point2(-u.y, u.x)
        p = rand_nonzero_fraction(rng)
        q = rand_nonzero_fraction(rng)
        a = rand_point2(rng)
        tri = Triangle(a, a + u.scaled(p), a + v.scaled(q))
        if not tri.is_degenerate():
            return tri


def rand_classified_triangle(rng: random.Random) -> tuple[Triangle, int]:
    """Random non-degenerate triangle with the sign of the angle dot at ``a``."""
    while True:
        tri = Triangle(rand_point2(rng), rand_point2(rng), rand_point2(rng))
        if tri.is_degenerate():
            continue
        d = _angle_dot(tri)
        if d != 0:
            return tri, (1 if d > 0 else -1)


def rand_proportional_quad(rng: random.Random) -> tuple[Rational, Rational, Rational, Rational]:
    p = rand_nonzero_fraction(rng)
    q = rand_nonzero_fraction(rng)
    k = rand_nonzero_fraction(rng)
    return p, p * k, q, q * k


def rand_proportional_triple(rng: random.Random) -> tuple[Rational, Rational, Rational]:
    p = rand_nonzero_fraction(rng)
    k = rand_nonzero_fraction(rng)
    return p, p * k, p * k * k


def rand_prism(rng: random.Random) -> tuple[tuple[Point3, Point3, Point3], Point3]:
    while True:
        base = (rand_point3(rng), rand_point3(rng), rand_point3(rng))
        offset = rand_point3(rng)
        if (base[1] - base[0]).cross(base[2] - base[0]).dot(offset) != 0:
            return base, offset


def rand_chord_setup(rng: random.Random) -> tuple[Point2, tuple[Point2, Point2]]:
    """Centre plus a non-central chord with both ends on a rational circle."""
    while True:
        center = rand_point2(rng)
        r = abs(rand_nonzero_fraction(rng))
        p = center + unit_circle_point(rand_fraction(rng)).scaled(r)
        q = center + unit_circle_point(rand_fraction(rng)).scaled(r)
        if p != q and (q - p).cross(center - p) != 0:
            return center, (p, q)


def rand_pappus_offsets(rng: random.Random, t: Triangle) -> tuple[Point2, Point2]:
    """Outward parallelogram side vectors for :func:`check_pappus`."""
    ab, ac = t.legs()
    orientation = ab.cross(ac)
    while True:
        u = rand_point2(rng)
        v = rand_point2(rng)
        if ab.cross(u) * orientation < 0 and ac.cross(v) * orientation > 0:
            return u, v


# -- runnable proposition suite -------------------------------------------------
#
# One entry per cited proposition: a constructor of valid instances that must
# check clean, and a perturbation that must be detected (nonzero residual,
# False, or a precondition rejection; which one depends on what the checker
# guards).  The CLI's check-props subcommand and the acceptance suite both
# run this table.


def _nudge(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(1, 7), rng.randint(89, 127))


def _detects(fn) -> bool:
    try:
        result = fn()
    except ValueError:
        return True
    if result is True:
        return False
    if result is False:
        return True
    return result != 0


def _valid_47_1(rng):
    return check_47_1(rand_right_triangle(rng)) == 0


def _pert_47_1(rng):
    t = rand_right_triangle(rng)
    u, _ = t.legs()
    bad = Triangle(t.a, t.b, t.c + u.scaled(_nudge(rng)))  # breaks the right angle
    return _detects(lambda: check_47_1(bad))


def _valid_12_13_2(rng):
    t, kind = rand_classified_triangle(rng)
    residual = check_13_2(t) if kind > 0 else check_12_2(t)
    return residual == 0


def _pert_12_13_2(rng):
    t, kind = rand_classified_triangle(rng)
    wrong = check_12_2 if kind > 0 else check_13_2
    return _detects(lambda: wrong(t))


def _valid_3_3(rng):
    return check_3_3(*rand_chord_setup(rng))


def _pert_3_3(rng):
    center, (p, q) = rand_chord_setup(rng)
    off = center + (q - center).scaled(1 + _nudge(rng))  # leaves the circle radially
    return _detects(lambda: check_3_3(center, (p, off)))


def _valid_8_6(rng):
    return check_8_6_corollary(rand_right_triangle(rng)) == 0


def _pert_8_6(rng):
    t = rand_right_triangle(rng)
    u, _ = t.legs()
    bad = Triangle(t.a + u.scaled(_nudge(rng)), t.b, t.c)
    return _detects(lambda: check_8_6_corollary(bad))


def _valid_31_6(rng):
    aspect = Fraction(rng.randint(1, 9), rng.randint(1, 9))
    return check_31_6(rand_right_triangle(rng), aspect) == 0


def _pert_31_6(rng):
    t = rand_right_triangle(rng)
    _, v = t.legs()
    bad = Triangle(t.a, t.b + v.scaled(_nudge(rng)), t.c)
    return _detects(lambda: check_31_6(bad, Fraction(2, 3)))


def _valid_19_7(rng):
    return check_19_7(*rand_proportional_quad(rng))


def _pert_19_7(rng):
    a, b, c, d = rand_proportional_quad(rng)
    d = d + _nudge(rng)
    if d == 0:
        d = d + 1
    return _detects(lambda: check_19_7(a, b, c, d))


def _valid_20_7(rng):
    return check_20_7(*rand_proportional_triple(rng))


def _pert_20_7(rng):
    a, b, c = rand_proportional_triple(rng)
    c = c + _nudge(rng)  # a*c moves by a*nudge != 0
    if c == 0:
        c = c + 1
    return _detects(lambda: check_20_7(a, b, c))


def _uv_pair(rng):
    while True:
        u, v = rand_point3(rng), rand_point3(rng)
        if u.cross(v).norm_sq() != 0:
            return u, v


def _valid_4_11(rng):
    u, v = _uv_pair(rng)
    return check_4_11(u.cross(v), u, v)


def _pert_4_11(rng):
    u, v = _uv_pair(rng)
    skew = u.cross(v) + u
    return _detects(lambda: check_4_11(skew, u, v))


def _valid_7_12(rng):
    return check_7_12(*rand_prism(rng)) == 0


def _pert_7_12(rng):
    base, offset = rand_prism(rng)
    a, b, c = base
    # stretching one lateral edge turns the prism into a frustum-like solid
    top = (a + offset, b + offset, c + offset.scaled(1 + _nudge(rng)))
    v1, v2, v3 = prism_split_volumes(base, top)
    return not (v1 == v2 == v3)


def _valid_pappus(rng):
    t, _ = rand_classified_triangle(rng)
    u, v = rand_pappus_offsets(rng, t)
    return check_pappus(t, u, v) == 0


def _pert_pappus(rng):
    t, _ = rand_classified_triangle(rng)
    u, v = rand_pappus_offsets(rng, t)
    return _detects(lambda: check_pappus(t, Point2(-u.x, -u.y), v))


def _valid_clavius(rng):
    center = rand_point2(rng)
    radius = abs(rand_nonzero_fraction(rng))
    v = unit_circle_point(rand_fraction(rng)).scaled(radius)
    r = center + unit_circle_point(rand_fraction(rng)).scaled(radius)
    p, q = center + v, center - v
    if r == p or r == q:
        return _valid_clavius(rng)
    return check_clavius_31_3(p, q, r)


def _pert_clavius(rng):
    center = Point2(Fraction(0), Fraction(0))
    radius = abs(rand_nonzero_fraction(rng))
    v = unit_circle_point(rand_fraction(rng)).scaled(radius)
    r = center + unit_circle_point(rand_fraction(rng)).scaled(radius)
    bad = r.scaled(1 + _nudge(rng))  # radially off the circle
    return _detects(lambda: check_clavius_31_3(center + v, center - v, bad))


PROPOSITION_SUITE: tuple[tuple[str, object, object], ...] = (
    ("47.1", _valid_47_1, _pert_47_1),
    ("12.2/13.2", _valid_12_13_2, _pert_12_13_2),
    ("3.3", _valid_3_3, _pert_3_3),
    ("coroll. 8.6", _valid_8_6, _pert_8_6),
    ("31.6", _valid_31_6, _pert_31_6),
    ("19.7", _valid_19_7, _pert_19_7),
    ("20.7", _valid_20_7, _pert_20_7),
    ("4.11", _valid_4_11, _pert_4_11),
    ("7.12", _valid_7_12, _pert_7_12),
    ("Pappus on 47.1", _valid_pappus, _pert_pappus),
    ("Clavius on 31.3", _valid_clavius, _pert_clavius),
)


@dataclass(frozen=True)
class SuiteRow:
    name: str
    valid_ok: int
    valid_total: int
    perturbed_detected: int
    perturbed_total: int

    @property
    def passed(self) -> bool:
        return self.valid_ok == self.valid_total and self.perturbed_detected == self.perturbed_total


def run_proposition_suite(seed: int, instances: int) -> list[SuiteRow]:
    """Run every checker on seeded constructive and perturbed instances."""
    rows = []
    perturbed_total = max(1, instances // 10)
    for name, valid, perturbed in PROPOSITION_SUITE:
        rng = random.Random(f"{seed}:{name}")
        valid_ok = sum(1 for _ in range(instances) if valid(rng))
        detected = sum(1 for _ in range(perturbed_total) if perturbed(rng))
        rows.append(SuiteRow(name, valid_ok, instances, detected, perturbed_total))
    return rows
