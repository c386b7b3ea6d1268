"""Two mean proportionals between given lengths, by simulated instrument.

Both mechanisms share one geometric scene: a semicircle over AC = b, a
ruler through A and the moving arc point D, a cursor fixed at distance
AF = a along the ruler and perpendicular to it, and the perpendicular to
AC through D with foot E.  Where they differ is the coincidence that stops
the motion, so each solver drives its bisection with its own residual:

* finger-and-plumbline: the perpendicular foot E and the point where the
  cursor line crosses AC must coincide, measured along AC;
* single compass aperture: the cursor crossing of the sliding
  perpendicular must land on AC, measured along the ruler.

Both residuals vanish exactly when AF = b k^3 equals a (k the cosine of
the inscribed angle at A), which interposes AE = b k^2 and AD = b k
between a and b.  Arc positions use the rational tangent-half-angle
parameter, so every residual sign is decided in exact rational arithmetic
and a bisection bracket can never be lost to rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .euclid import Point2
from .scalar import (
    DEFAULT_CONTEXT,
    DecimalScalar,
    PrecisionContext,
    as_rational,
)


def _ceil_to(value: Fraction, digits: int) -> DecimalScalar:
    n = value.numerator * 10**digits
    return DecimalScalar(-((-n) // value.denominator), digits)


def _k_of(t: Fraction) -> Fraction:
    return (1 - t * t) / (1 + t * t)


@dataclass(frozen=True)
class InstrumentState:
    """Scene at arc parameter ``t``: target AF = a against diameter AC = b."""

    a: Fraction
    b: Fraction
    t: Fraction

    def __post_init__(self):
        if not 0 <= self.t <= 1:
            raise ValueError("arc parameter must lie in [0, 1]")

    @property
    def k(self) -> Fraction:
        return _k_of(self.t)

    @property
    def s(self) -> Fraction:
        return 2 * self.t / (1 + self.t * self.t)

    @property
    def d_point(self) -> Point2:
        return Point2(self.b * self.k**2, self.b * self.k * self.s)

    @property
    def e_foot(self) -> Point2:
        return Point2(self.b * self.k**2, Fraction(0))

    @property
    def f_foot(self) -> Point2:
        return Point2(self.b * self.k**4, self.b * self.k**3 * self.s)

    @property
    def af_current(self) -> Fraction:
        return self.b * self.k**3

    def on_semicircle(self) -> bool:
        center = Point2(self.b / 2, Fraction(0))
        return (self.d_point - center).norm_sq() == (self.b / 2) ** 2

    def residual_instrument(self) -> Fraction:
        """Foot of the plumbline minus the cursor's crossing of AC.

        The cursor line (perpendicular to the ruler at AF = a) meets AC at
        distance a/k from A; at the stopping position that is exactly the
        perpendicular foot E.  Decreasing in t, positive at t = 0 for a < b.
        """
        if self.k == 0:
            raise ZeroDivisionError("cursor line is parallel to AC at t = 1")
        return self.b * self.k**2 - self.a / self.k

    def residual_compass(self) -> Fraction:
        """Target AF minus the ruler distance cut off by the sliding square.

        Along the ruler, the perpendicular through D cuts off b k^3 from A;
        the compass stops when the cursor at a sits exactly there.
        Increasing in t, negative at t = 0 for a < b.
        """
        return self.a - self.af_current


@dataclass(frozen=True)
class MeansResult:
    """Solved means with the arc parameter and an exact residual bound."""

    m1: DecimalScalar
    m2: DecimalScalar
    theta_param: Fraction
    iterations: int
    residual: DecimalScalar
    method: str


def _validate(a: Fraction, b: Fraction) -> None:
    if not a > 0:
        raise ValueError("the smaller given length must be positive")
    if a > b:
        raise ValueError("the target AF must not exceed the diameter AC")


def _result(a: Fraction, b: Fraction, t: Fraction, iterations: int, method: str,
            ctx: PrecisionContext) -> MeansResult:
    w = ctx.work_digits
    k = _k_of(t)
    m1f = b * k * k
    m2f = b * k
    m1 = DecimalScalar.from_fraction(m1f, w)
    m2 = DecimalScalar.from_fraction(m2f, w)
    defect = max(
        abs(a * m2.as_fraction() - m1.as_fraction() ** 2),
        abs(m1.as_fraction() * b - m2.as_fraction() ** 2),
        abs(a * b - m1.as_fraction() * m2.as_fraction()),
    )
    return MeansResult(m1, m2, t, iterations, _ceil_to(defect, 3 * w), method)


def _solve(a, b, ctx: PrecisionContext, method: str) -> MeansResult:
    af, bf = as_rational(a), as_rational(b)
    _validate(af, bf)
    if af == bf:
        return _result(af, bf, Fraction(0), 0, method, ctx)

    if method == "instrument":
        def sign_at(t: Fraction) -> int:
            if t == 1:
                return -1  # cursor crossing runs off to infinity with D at A
            r = InstrumentState(af, bf, t).residual_instrument()
            return (r > 0) - (r < 0)
        want_low = 1
    else:
        def sign_at(t: Fraction) -> int:
            r = InstrumentState(af, bf, t).residual_compass()
            return (r > 0) - (r < 0)
        want_low = -1

    grid = 10**ctx.work_digits
    lo, hi = 0, grid
    assert sign_at(Fraction(0)) == want_low and sign_at(Fraction(1)) == -want_low
    iterations = 0
    while hi - lo > 1:
        mid = (lo + hi) // 2
        s = sign_at(Fraction(mid, grid))
        iterations += 1
        if s == 0:
            return _result(af, bf, Fraction(mid, grid), iterations, method, ctx)
        if s == want_low:
            lo = mid
        else:
            hi = mid
    return _result(af, bf, Fraction(lo + hi, 2 * grid), iterations, method, ctx)


def two_means_instrument(a, b, ctx: PrecisionContext = DEFAULT_CONTEXT) -> MeansResult:
    """Prop-III mechanism: slide the stylus until plumbline and cursor meet on AC."""
    return _solve(a, b, ctx, "instrument")


def two_means_compass(a, b, ctx: PrecisionContext = DEFAULT_CONTEXT) -> MeansResult:
    """Prop-IV mechanism: one compass aperture b/2 from the midpoint of AC.

    The compass only re-expresses how D is held to the arc (its distance
    from the midpoint stays b/2, which the state check confirms), while the
    stopping coincidence is measured along the ruler.
    """
    result = _solve(a, b, ctx, "compass")
    state = InstrumentState(as_rational(a), as_rational(b), result.theta_param)
    assert state.on_semicircle()
    return result


def duplicate_cube(edge, ctx: PrecisionContext = DEFAULT_CONTEXT) -> DecimalScalar:
    """Edge of the cube of doubled volume: first mean between edge and 2*edge."""
    e = as_rational(edge)
    if not e > 0:
        raise ValueError("edge must be positive")
    return two_means_instrument(e, 2 * e, ctx).m1
