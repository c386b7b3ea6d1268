"""Deterministic SVG renderings of the seven construction figures.

All geometry arrives as exact rationals from the solver modules; the only
lossy step is quantizing coordinates to hundredths of an SVG unit, with
half-even rounding, so identical inputs always produce identical bytes.
Solid projections use a fixed oblique projector with rational coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import delian, proportio
from .scalar import DEFAULT_CONTEXT, DecimalScalar, as_rational

_OBLIQUE_X = Fraction(2, 5)
_OBLIQUE_Y = Fraction(1, 5)


@dataclass(frozen=True)
class FigureSpec:
    """Which figure to draw and the model parameters that determine it."""

    figure_id: int
    params: dict = field(default_factory=dict)
    width: int = 460
    height: int = 360

    def __post_init__(self):
        if self.figure_id not in range(1, 8):
            raise ValueError("figure_id must be between 1 and 7")


def _fmt(value: Fraction) -> str:
    return str(DecimalScalar.from_fraction(value, 2))


class _Canvas:
    """Maps model-space rational points into the SVG viewport (y up)."""

    def __init__(self, width, height, xs, ys, margin=40):
        self.width, self.height = width, height
        xmin, xmax = min(xs), max(xs)
        ymin, ymax = min(ys), max(ys)
        sx = Fraction(width - 2 * margin) / (xmax - xmin) if xmax > xmin else Fraction(1)
        sy = Fraction(height - 2 * margin) / (ymax - ymin) if ymax > ymin else Fraction(1)
        self.scale = min(sx, sy)
        self.x0, self.y0 = xmin, ymin
        self.margin = Fraction(margin)
        self.elements: list[str] = []

    def map(self, p) -> tuple[Fraction, Fraction]:
        x, y = p
        return (
            self.margin + (x - self.x0) * self.scale,
            Fraction(self.height) - self.margin - (y - self.y0) * self.scale,
        )

    def line(self, p, q, dashed=False):
        (x1, y1), (x2, y2) = self.map(p), self.map(q)
        dash = ' stroke-dasharray="4 3"' if dashed else ""
        self.elements.append(
            f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}"{dash}/>'
        )

    def polyline(self, points, dashed=False):
        coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in map(self.map, points))
        dash = ' stroke-dasharray="4 3"' if dashed else ""
        self.elements.append(f'<polyline points="{coords}"{dash}/>')

    def circle(self, center, radius: Fraction, dashed=False):
        cx, cy = self.map(center)
        dash = ' stroke-dasharray="4 3"' if dashed else ""
        self.elements.append(
            f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(radius * self.scale)}"{dash}/>'
        )

    def arc_semicircle(self, left, right):
        """Upper semicircle from ``left`` to ``right`` on the segment as diameter."""
        (x1, y1), (x2, y2) = self.map(left), self.map(right)
        r = (right[0] - left[0]) * self.scale / 2
        self.elements.append(
            f'<path d="M {_fmt(x1)} {_fmt(y1)} A {_fmt(r)} {_fmt(r)} 0 0 1 {_fmt(x2)} {_fmt(y2)}"/>'
        )

    def dot(self, p):
        cx, cy = self.map(p)
        self.elements.append(f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="2" fill="black"/>')

    def label(self, p, text, dx=5, dy=-5):
        cx, cy = self.map(p)
        self.elements.append(
            f'<text x="{_fmt(cx + dx)}" y="{_fmt(cy + dy)}">{text}</text>'
        )

    def document(self) -> str:
        body = "\n".join("    " + e for e in self.elements)
        return (
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{self.width}" '
            f'height="{self.height}" viewBox="0 0 {self.width} {self.height}">\n'
            '  <g stroke="black" fill="none" font-family="serif" font-size="13">\n'
            f"{body}\n"
            "  </g>\n"
            "</svg>\n"
        )


def _project(p3) -> tuple[Fraction, Fraction]:
    return (p3.x + _OBLIQUE_X * p3.z, p3.y + _OBLIQUE_Y * p3.z)


def _box_figure(spec: FigureSpec, defaults) -> str:
    da = as_rational(spec.params.get("da", defaults[0]))
    db = as_rational(spec.params.get("db", defaults[1]))
    dc = as_rational(spec.params.get("dc", defaults[2]))
    zero = Fraction(0)
    corners = {
        "D": (zero, zero, zero),
        "A": (da, zero, zero),
        "B": (zero, db, zero),
        "C": (zero, zero, dc),
        "F": (da, zero, dc),
        "G": (da, db, zero),
        "E": (zero, db, dc),
        "_": (da, db, dc),
    }

    class _P:
        def __init__(self, t):
            self.x, self.y, self.z = t

    pts = {k: _project(_P(v)) for k, v in corners.items()}
    cv = _Canvas(spec.width, spec.height, [p[0] for p in pts.values()], [p[1] for p in pts.values()])
    box_edges = [
        ("D", "A"), ("D", "B"), ("D", "C"),
        ("A", "F"), ("A", "G"), ("C", "F"), ("C", "E"),
        ("B", "G"), ("B", "E"), ("F", "_"), ("G", "_"), ("E", "_"),
    ]
    for p, q in box_edges:
        cv.line(pts[p], pts[q])
    for p, q in [("A", "B"), ("B", "C"), ("C", "A")]:
        cv.line(pts[p], pts[q], dashed=True)
    cv.line(pts["A"], pts["E"], dashed=True)  # the diagonal the theorem is about
    for name in "DABCFGE":
        cv.dot(pts[name])
        cv.label(pts[name], name)
    return cv.document()


def _fig_chords(spec: FigureSpec) -> str:
    d = DecimalScalar.from_str(str(spec.params.get("diameter", "2")))
    ctx = spec.params.get("ctx", DEFAULT_CONTEXT)
    cfg = proportio.solve_continued_chords(d, ctx).table_values(10)
    df, ab, bc = d.as_fraction(), cfg.ab.as_fraction(), cfg.bc.as_fraction()
    a, dd, b, c = (Fraction(0), Fraction(0)), (df, Fraction(0)), (ab, Fraction(0)), (ab, bc)
    cv = _Canvas(spec.width, spec.height, [0, df], [0, df / 2])
    cv.arc_semicircle(a, dd)
    cv.line(a, dd)
    cv.line(b, c)
    cv.line(c, a, dashed=True)
    cv.line(c, dd, dashed=True)
    for p, name, dy in ((a, "A", 14), (b, "B", 14), (c, "C", -6), (dd, "D", 14)):
        cv.dot(p)
        cv.label(p, name, dy=dy)
    return cv.document()


def _fig_sphere(spec: FigureSpec) -> str:
    ac = as_rational(spec.params.get("ac", 2))
    t = as_rational(spec.params.get("t", Fraction(1, 2)))
    pts3 = proportio.sphere_construction(ac, t)
    k = (1 - t * t) / (1 + t * t)
    s = 2 * t / (1 + t * t)
    ad = ac * k
    a3, d3 = pts3["A"], pts3["D"]
    mid = ((a3.x + d3.x) / 2, (a3.y + d3.y) / 2, (a3.z + d3.z) / 2)
    u = (k, s, Fraction(0))  # unit vector along AD
    r = ad / 2

    def cap_point(c_par: Fraction, s_par: Fraction):
        return (
            mid[0] + r * (c_par * u[0]),
            mid[1] + r * (c_par * u[1]),
            mid[2] + r * s_par,
        )

    samples = []
    steps = [Fraction(i, 8) for i in range(9)]
    for v in steps:  # quarter from D end up to the apex
        den = 1 + v * v
        samples.append(cap_point((1 - v * v) / den, 2 * v / den))
    for v in reversed(steps[:-1]):  # mirrored quarter down to the A end
        den = 1 + v * v
        samples.append(cap_point(-(1 - v * v) / den, 2 * v / den))
    h3 = cap_point(Fraction(0), Fraction(1))

    class _P:
        def __init__(self, t):
            self.x, self.y, self.z = t

    flat = {name: _project(p) for name, p in pts3.items()}
    flat["H"] = _project(_P(h3))
    cap_flat = [_project(_P(p)) for p in samples]
    center = (ac / 2, Fraction(0))
    all_x = [p[0] for p in flat.values()] + [p[0] for p in cap_flat] + [Fraction(0), ac]
    all_y = [p[1] for p in flat.values()] + [p[1] for p in cap_flat] + [-ac / 2, ac / 2]
    cv = _Canvas(spec.width, spec.height, all_x, all_y)
    cv.circle(center, ac / 2)
    cv.line(flat["A"], flat["C"])
    cv.line(flat["D"], flat["E"])
    cv.line(flat["E"], flat["F"], dashed=True)
    cv.line(flat["A"], flat["D"])
    cv.line(flat["F"], flat["G"])
    cv.line(flat["A"], flat["G"], dashed=True)
    cv.line(flat["D"], flat["G"], dashed=True)
    cv.polyline(cap_flat, dashed=True)
    for name in ("A", "C", "D", "E", "F", "G", "H"):
        cv.dot(flat[name])
        cv.label(flat[name], name)
    return cv.document()


def _instrument_scene(spec: FigureSpec, method: str):
    a = as_rational(spec.params.get("a", 1))
    b = as_rational(spec.params.get("b", 2))
    ctx = spec.params.get("ctx", DEFAULT_CONTEXT)
    solve = delian.two_means_instrument if method == "instrument" else delian.two_means_compass
    result = solve(a, b, ctx)
    state = delian.InstrumentState(a, b, result.theta_param)
    return a, b, state


def _fig_plumbline(spec: FigureSpec) -> str:
    a, b, st = _instrument_scene(spec, "instrument")
    k, s = st.k, st.s
    A, C = (Fraction(0), Fraction(0)), (b, Fraction(0))
    D = (st.d_point.x, st.d_point.y)
    E = (st.e_foot.x, st.e_foot.y)
    F = (st.f_foot.x, st.f_foot.y)
    Z = (b * Fraction(11, 10) * k, b * Fraction(11, 10) * s)
    S = (D[0] + Fraction(3, 10) * (D[0] - b / 2), D[1] + Fraction(3, 10) * D[1])
    X = (E[0], -b * Fraction(3, 25))
    # cursor through F, perpendicular to the ruler; it passes through E when solved
    Y = (F[0] - b * Fraction(1, 5) * s, F[1] + b * Fraction(1, 5) * k)
    given_y = b * Fraction(13, 20)
    given_a = (-b * Fraction(3, 20), given_y)
    given_b = (-b * Fraction(3, 20) + a, given_y)
    cv = _Canvas(spec.width, spec.height, [given_a[0], b, Z[0]], [X[1], Z[1], b / 2])
    cv.arc_semicircle(A, C)
    cv.line(A, C)
    cv.line(A, Z)
    cv.line(Y, E)
    cv.line(D, X, dashed=True)
    cv.line(D, S)
    cv.line(given_a, given_b)
    cv.circle(X, Fraction(1, 50) * b)
    for p, name in ((A, "A"), (C, "C"), (D, "D"), (E, "E"), (F, "F"),
                    (S, "S"), (X, "X"), (Y, "Y"), (Z, "Z"), (given_b, "B")):
        cv.dot(p)
        cv.label(p, name)
    return cv.document()


def _fig_compass(spec: FigureSpec) -> str:
    a, b, st = _instrument_scene(spec, "compass")
    k, s = st.k, st.s
    A, C = (Fraction(0), Fraction(0)), (b, Fraction(0))
    O = (b / 2, Fraction(0))
    D = (st.d_point.x, st.d_point.y)
    E = (st.e_foot.x, st.e_foot.y)
    F = (st.f_foot.x, st.f_foot.y)
    Z = (b * Fraction(11, 10) * k, b * Fraction(11, 10) * s)
    rail_x = -b * Fraction(3, 20)
    top = b * Fraction(4, 5)
    K, L = (rail_x, Fraction(0)), (rail_x, top)
    M, N = (D[0], top), (D[0], Fraction(0))
    Y = (F[0] - b * Fraction(1, 5) * s, F[1] + b * Fraction(1, 5) * k)
    cv = _Canvas(spec.width, spec.height, [rail_x, b, Z[0]], [Fraction(0), top, Z[1]])
    cv.arc_semicircle(A, C)
    cv.line(A, C)
    cv.line(A, Z)
    cv.line(K, L)
    cv.line(L, M, dashed=True)
    cv.line(M, N)
    cv.line(O, D, dashed=True)
    cv.line(Y, E)
    for p, name in ((A, "A"), (C, "C"), (D, "D"), (E, "E"), (F, "F"), (K, "K"),
                    (L, "L"), (M, "M"), (N, "N"), (O, "O"), (Y, "Y"), (Z, "Z")):
        cv.dot(p)
        cv.label(p, name)
    return cv.document()


def render(spec: FigureSpec) -> str:
    """Byte-deterministic SVG document for the requested figure."""
    if spec.figure_id == 1:
        return _box_figure(spec, (1, 1, 1))
    if spec.figure_id == 2:
        return _box_figure(spec, (1, 2, 1))
    if spec.figure_id == 3:
        return _box_figure(spec, (2, 1, 3))
    if spec.figure_id == 4:
        return _fig_chords(spec)
    if spec.figure_id == 5:
        return _fig_sphere(spec)
    if spec.figure_id == 6:
        return _fig_plumbline(spec)
    return _fig_compass(spec)
