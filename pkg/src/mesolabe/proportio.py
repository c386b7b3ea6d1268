"""Continued proportions in a semicircle: the numeric chord problem and the
four-proportionals construction, planar and spherical.

The chord problem places B on the diameter AD of a semicircle ACD so that
AB, BC, BD, DA run in continued proportion (BC the half-chord at B).  That
pins AB = x as the unique root of (d - x)^3 = d^2 x in (0, d).  The 1682
tables for d = 2 are reproduced digit for digit, including an annotation
channel for the original's misprints.

Positions on the semicircle are parametrized by t = tan(half the inscribed
angle at A), so every construction has an exact rational witness and no
trigonometric function is ever evaluated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .euclid import Point3, check_4_11
from .scalar import (
    DEFAULT_CONTEXT,
    DecimalScalar,
    PrecisionContext,
    Rational,
    format_grouped,
    round_to,
    sqrt,
    truncate_to,
    ulp,
)


def _to_fraction(value) -> Fraction:
    if isinstance(value, DecimalScalar):
        return value.as_fraction()
    return Fraction(value)


@dataclass(frozen=True)
class ChordConfig:
    """The four collinear/chordal lengths AB, BC, BD, AD with AB + BD = AD."""

    ab: DecimalScalar
    bc: DecimalScalar
    bd: DecimalScalar
    ad: DecimalScalar

    def terms(self) -> tuple[DecimalScalar, DecimalScalar, DecimalScalar, DecimalScalar]:
        return self.ab, self.bc, self.bd, self.ad

    def check(self, tol: DecimalScalar) -> bool:
        """Complement identity exactly, half-chord relation within ``tol``."""
        if self.ab + self.bd != self.ad:
            return False
        return abs(self.bc * self.bc - self.ab * self.bd) < tol

    def table_values(self, digits: int) -> "ChordConfig":
        """The values as the 1682 computation reported them.

        Root digits are truncated at ``digits`` (longhand extraction yields
        floor digits; the printed BC proves the original truncated, since
        round-to-nearest would end ...4638) and BD is the exact complement
        AD - AB, which reproduces the printed ...56077.
        """
        ab = truncate_to(self.ab, digits)
        ad = round_to(self.ad, digits)
        return ChordConfig(ab, truncate_to(self.bc, digits), ad - ab, ad)


@dataclass(frozen=True)
class ProportionalsQuad:
    """The four continued proportionals AF, AE, AD, AC."""

    af: DecimalScalar
    ae: DecimalScalar
    ad: DecimalScalar
    ac: DecimalScalar

    def terms(self) -> tuple[DecimalScalar, DecimalScalar, DecimalScalar, DecimalScalar]:
        return self.af, self.ae, self.ad, self.ac

    def check(self, tol: DecimalScalar) -> bool:
        return verify_continued_proportion(list(self.terms()), tol)


@dataclass(frozen=True)
class TableRow:
    label: str
    value: DecimalScalar
    grouped: str
    printed: str | None = None
    note: str | None = None

    @property
    def is_misprint(self) -> bool:
        return self.printed is not None and self.printed != self.grouped


@dataclass(frozen=True)
class PaperTable:
    title: str
    rows: tuple[TableRow, ...]


#: The printed 10-digit chord table for diameter 2.
PRINTED_CHORDS = {
    "AD": "2 00000 00000",
    "AB": "63534 43923",
    "BC": "93114 24637",
    "BD": "1 36465 56077",
}

#: The printed 20-digit product tables, verbatim, misprints included.
PRINTED_PRODUCTS = {
    "DAB": "1 17068 87846 00000 00000",
    "CBD": "1 17068 87846 55798 69049",
    "BC^2": "86702 62877 05305 81769",
    "ABD": "86702 62877 72943 70071",
    "BD^2": "1 86288 49276 27056 29929",
    "ADBC": "1 86228 49274 00000 00000",
}

_PRODUCT_NOTES = {
    "DAB": "product AD*AB",
    "CBD": "product BC*BD",
    "BC^2": "square of BC",
    "ABD": "label ABD denotes the product AB*BD",
    "BD^2": "square of BD",
    "ADBC": "product AD*BC",
}


def solve_continued_chords(
    d: DecimalScalar, ctx: PrecisionContext = DEFAULT_CONTEXT
) -> ChordConfig:
    """Chord configuration with AB : BC : BD : AD in continued proportion.

    The cubic residual (d - x)^3 - d^2 x is strictly decreasing on [0, d]
    and changes sign, so bisection on the work-precision grid cannot lose
    the root; two exact-rational Newton steps then polish far past the
    grid before the result is rounded back to work precision.
    """
    if not d > 0:
        raise ValueError("diameter must be positive")
    w = ctx.work_digits
    df = _to_fraction(d)

    def residual(x: Fraction) -> Fraction:
        return (df - x) ** 3 - df * df * x

    grid = 10**w
    lo = 0
    hi = df.numerator * grid // df.denominator + 1
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if residual(Fraction(mid, grid)) > 0:
            lo = mid
        else:
            hi = mid
    x = Fraction(lo + hi, 2 * grid)
    for _ in range(2):
        g = residual(x)
        gp = -3 * (df - x) ** 2 - df * df
        x = x - g / gp

    ab = DecimalScalar.from_fraction(x, w)
    ad = round_to(d, w) if isinstance(d, DecimalScalar) else DecimalScalar.from_fraction(df, w)
    bd = ad - ab
    root_ctx = PrecisionContext(w + ctx.guard_digits, w, ctx.guard_digits)
    bc = sqrt(ab * bd, root_ctx)
    return ChordConfig(ab, bc, bd, ad)


def chord_table(c: ChordConfig, annotate: bool = True) -> PaperTable:
    """The chord lengths as a grouped table, matched to the printed one when it applies."""
    canonical = c == _canonical_table_config()
    rows = []
    for label, value in (("AD", c.ad), ("AB", c.ab), ("BC", c.bc), ("BD", c.bd)):
        printed = PRINTED_CHORDS[label] if (annotate and canonical) else None
        rows.append(TableRow(label, value, format_grouped(value), printed))
    return PaperTable("successive lines in the semicircle", tuple(rows))


def _canonical_table_config() -> ChordConfig:
    ab = DecimalScalar.from_str("0.6353443923")
    bc = DecimalScalar.from_str("0.9311424637")
    ad = DecimalScalar.from_int(2, 10)
    return ChordConfig(ab, bc, ad - ab, ad)


def reproduce_table(c: ChordConfig) -> PaperTable:
    """Exact products of the rounded chord values, annotated against the print.

    Every product of two 10-digit inputs is carried at its exact 20-digit
    scale; where the original tables disagree with exact arithmetic (the
    leading "1 17068" of both rectangle rows, the "86288" in the BD^2 row)
    the printed string is kept alongside and flagged, never silently fixed.
    """
    if any(v.scale != 10 for v in c.terms()):
        raise ValueError("table inputs must carry exactly 10 fractional digits")
    canonical = c == _canonical_table_config()
    products = (
        ("DAB", c.ad * c.ab),
        ("CBD", c.bc * c.bd),
        ("BC^2", c.bc * c.bc),
        ("ABD", c.ab * c.bd),
        ("BD^2", c.bd * c.bd),
        ("ADBC", c.ad * c.bc),
    )
    rows = []
    for label, value in products:
        printed = PRINTED_PRODUCTS[label] if canonical else None
        grouped = format_grouped(value)
        note = _PRODUCT_NOTES[label]
        if printed is not None and printed != grouped:
            note += "; printed table is a misprint, exact arithmetic gives the value shown"
        rows.append(TableRow(label, value, grouped, printed, note))
    return PaperTable("rectangles and squares of the means", tuple(rows))


def true_product_rows(full: ChordConfig, digits: int = 20) -> PaperTable:
    """The same six products taken from the unrounded root, for contrast."""
    products = (
        ("DAB", full.ad * full.ab),
        ("CBD", full.bc * full.bd),
        ("BC^2", full.bc * full.bc),
        ("ABD", full.ab * full.bd),
        ("BD^2", full.bd * full.bd),
        ("ADBC", full.ad * full.bc),
    )
    rows = tuple(
        TableRow(label, round_to(value, digits), format_grouped(round_to(value, digits)))
        for label, value in products
    )
    return PaperTable(f"products of the unrounded root, {digits} digits", rows)


# -- four continued proportionals ---------------------------------------------


def quad_exact(ac: Fraction, t: Fraction) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Exact (AF, AE, AD, AC) for diameter ``ac`` and parameter ``t``.

    With k = cos of the inscribed angle at A, the chain is AD = AC*k,
    AE = AC*k^2, AF = AC*k^3; t = tan(angle/2) makes k = (1-t^2)/(1+t^2)
    rational, so the whole quad is rational.
    """
    if not 0 < t < 1:
        raise ValueError("parameter must lie strictly between 0 and 1 (D between A and C)")
    if not ac > 0:
        raise ValueError("diameter must be positive")
    k = (1 - t * t) / (1 + t * t)
    return ac * k**3, ac * k**2, ac * k, ac


def planar_construction(ac: Fraction, t: Fraction) -> dict[str, Point3]:
    """Exact coordinates of A, C, D, E, F in the great-circle plane z = 0."""
    if not 0 < t < 1:
        raise ValueError("parameter must lie strictly between 0 and 1 (D between A and C)")
    k = (1 - t * t) / (1 + t * t)
    s = 2 * t / (1 + t * t)
    zero = Fraction(0)
    return {
        "A": Point3(zero, zero, zero),
        "C": Point3(ac, zero, zero),
        "D": Point3(ac * k * k, ac * k * s, zero),
        "E": Point3(ac * k * k, zero, zero),
        "F": Point3(ac * k**4, ac * k**3 * s, zero),
    }


def sphere_construction(ac: Fraction, t: Fraction) -> dict[str, Point3]:
    """Planar points plus G lifted into the plane through AD perpendicular to z = 0.

    G sits on the semicircle with diameter AD in that perpendicular plane,
    above the foot F, so FG^2 = AF * FD and AG doubles AE as the second
    proportional.  The two planes are checked perpendicular exactly.
    """
    pts = planar_construction(ac, t)
    k = (1 - t * t) / (1 + t * t)
    s = 2 * t / (1 + t * t)
    f = pts["F"]
    fg = ac * k * k * s
    g = Point3(f.x, f.y, fg)
    pts["G"] = g
    a, d = pts["A"], pts["D"]
    n_base = Point3(Fraction(0), Fraction(0), Fraction(1))
    n_lift = (d - a).cross(g - a)
    if n_base.dot(n_lift) != 0:
        raise AssertionError("lifted plane is not perpendicular to the base plane")
    if not check_4_11(n_base, d - a, pts["E"] - a):
        raise AssertionError("base-plane normal fails against the in-plane lines")
    if g.norm_sq() != (ac * k * k) ** 2:
        raise AssertionError("AG does not reproduce AE")
    return pts


def four_proportionals_planar(
    ac: DecimalScalar, t, ctx: PrecisionContext = DEFAULT_CONTEXT
) -> ProportionalsQuad:
    """Decimal quad (AF, AE, AD, AC) at work precision for a position ``t``.

    ``t`` may be a Fraction (exact arc parameter) or any scalar convertible
    to one, e.g. a DecimalScalar obtained from a root extraction.
    """
    af, ae, ad, acf = quad_exact(_to_fraction(ac), _to_fraction(t))
    w = ctx.work_digits
    return ProportionalsQuad(
        DecimalScalar.from_fraction(af, w),
        DecimalScalar.from_fraction(ae, w),
        DecimalScalar.from_fraction(ad, w),
        DecimalScalar.from_fraction(acf, w),
    )


def four_proportionals_sphere(
    ac: DecimalScalar, t, ctx: PrecisionContext = DEFAULT_CONTEXT
) -> ProportionalsQuad:
    """Same quad realized through the spherical-cap construction.

    The values are plane-independent; what this adds over the planar route
    is the exact 3D construction with its perpendicularity assertions, and
    AE realized as the out-of-plane chord AG.
    """
    acf, tf = _to_fraction(ac), _to_fraction(t)
    pts = sphere_construction(acf, tf)
    w = ctx.work_digits
    af_sq = pts["F"].norm_sq()
    ag_sq = pts["G"].norm_sq()
    ad_sq = pts["D"].norm_sq()
    quad = quad_exact(acf, tf)
    if (af_sq, ag_sq, ad_sq) != (quad[0] ** 2, quad[1] ** 2, quad[2] ** 2):
        raise AssertionError("spherical construction disagrees with the planar quad")
    return ProportionalsQuad(*(DecimalScalar.from_fraction(v, w) for v in quad))


def verify_continued_proportion(terms: list, tol) -> bool:
    """Adjacent cross-products agree within ``tol``; extremes too for quads."""
    if len(terms) < 3:
        raise ValueError("need at least three terms")
    for i in range(len(terms) - 2):
        if not abs(terms[i] * terms[i + 2] - terms[i + 1] * terms[i + 1]) <= tol:
            return False
    if len(terms) == 4:
        if not abs(terms[0] * terms[3] - terms[1] * terms[2]) <= tol:
            return False
    return True


def chord_residual(c: ChordConfig) -> DecimalScalar:
    """Exact |cubic residual| of the configuration's AB against its diameter."""
    x, d = c.ab, c.ad
    r = (d - x) * (d - x) * (d - x) - d * d * x
    return abs(r)


def chords_pass(c: ChordConfig, output_digits: int) -> bool:
    """Residual and continued-proportion checks at 10^-output_digits."""
    tol = ulp(output_digits)
    return c.check(tol) and verify_continued_proportion(list(c.terms()), tol)
