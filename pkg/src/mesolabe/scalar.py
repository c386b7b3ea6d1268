"""Fixed-point base-10 arithmetic with exact scales and grouped table formatting.

A :class:`DecimalScalar` is an immutable signed integer times a negative
power of ten.  Addition, subtraction and multiplication are exact (the
result scale is determined by the operands); division and integer roots
round half-even at a precision taken from a :class:`PrecisionContext`.
Everything is built on Python's arbitrary-precision ``int``, so there is
no hidden binary floating point anywhere.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

# Exact rational carrier for all algebraic-identity checks.  fractions.Fraction
# already guarantees lowest terms and a positive denominator.
Rational = Fraction

_PLAIN_RE = re.compile(r"^([+-]?)(\d+)(?:\.(\d+))?$")


def _half_even_div(n: int, d: int) -> int:
    """Round n/d (d > 0) to the nearest integer, ties to even."""
    q, r = divmod(n, d)
    twice = 2 * r
    if twice > d or (twice == d and q % 2 != 0):
        q += 1
    return q


def _trunc_div(n: int, d: int) -> int:
    """n/d (d > 0) rounded toward zero."""
    if n < 0:
        return -((-n) // d)
    return n // d


def _icbrt(n: int) -> int:
    """Floor cube root of a non-negative integer.

    Newton iteration from an upper bound; integer division makes each step
    land at or above the true root, and the final clamp loops guard the
    last step so the bracket is never lost.
    """
    if n < 0:
        raise ValueError("negative argument")
    if n == 0:
        return 0
    x = 1 << -(-n.bit_length() // 3)  # 2^ceil(bits/3) >= cbrt(n)
    while True:
        y = (2 * x + n // (x * x)) // 3
        if y >= x:
            break
        x = y
    while x * x * x > n:
        x -= 1
    while (x + 1) ** 3 <= n:
        x += 1
    return x


@dataclass(frozen=True)
class PrecisionContext:
    """Working/reported fractional-digit budget for inexact operations.

    ``work_digits`` are carried during iteration, ``output_digits`` are
    reported, and ``guard_digits`` is the mandatory cushion between the two.
    """

    work_digits: int = 30
    output_digits: int = 20
    guard_digits: int = 10

    def __post_init__(self):
        if self.guard_digits < 5:
            raise ValueError("guard_digits must be at least 5")
        if self.output_digits < 1:
            raise ValueError("output_digits must be at least 1")
        if self.work_digits < self.output_digits + self.guard_digits:
            raise ValueError("work_digits must cover output_digits + guard_digits")

    @classmethod
    def for_output(cls, output_digits: int, guard_digits: int = 10) -> "PrecisionContext":
        return cls(output_digits + guard_digits, output_digits, guard_digits)


#: Paper tables carry 20 fractional digits; 10 guard digits on top.
DEFAULT_CONTEXT = PrecisionContext(30, 20, 10)


@dataclass(frozen=True, eq=False)
class DecimalScalar:
    """Signed fixed-point decimal: ``unscaled * 10**-scale``.

    ``scale`` counts fractional digits and is never negative.  Instances
    compare by numeric value, not by representation, so ``2.0 == 2``.
    """

    unscaled: int
    scale: int = 0

    def __post_init__(self):
        if self.scale < 0:
            raise ValueError("scale must be non-negative")

    # -- construction ------------------------------------------------------

    @classmethod
    def from_int(cls, n: int, scale: int = 0) -> "DecimalScalar":
        return cls(n * 10**scale, scale)

    @classmethod
    def from_str(cls, text: str) -> "DecimalScalar":
        m = _PLAIN_RE.match(text.strip())
        if not m:
            raise ValueError(f"not a plain decimal literal: {text!r}")
        sign, int_part, frac_part = m.groups()
        frac_part = frac_part or ""
        unscaled = int(int_part + frac_part)
        if sign == "-":
            unscaled = -unscaled
        return cls(unscaled, len(frac_part))

    @classmethod
    def from_fraction(cls, value: Fraction, scale: int) -> "DecimalScalar":
        """Nearest fixed-point value at ``scale`` fractional digits, ties to even."""
        return cls(_half_even_div(value.numerator * 10**scale, value.denominator), scale)

    # -- conversions -------------------------------------------------------

    def as_fraction(self) -> Fraction:
        return Fraction(self.unscaled, 10**self.scale)

    def __str__(self) -> str:
        digits = str(abs(self.unscaled)).zfill(self.scale + 1)
        sign = "-" if self.unscaled < 0 else ""
        if self.scale == 0:
            return sign + digits
        return f"{sign}{digits[:-self.scale]}.{digits[-self.scale:]}"

    def __repr__(self) -> str:
        return f"DecimalScalar('{self}')"

    # -- exact arithmetic ----------------------------------------------------

    def _aligned(self, other: "DecimalScalar") -> tuple[int, int, int]:
        s = max(self.scale, other.scale)
        return (
            self.unscaled * 10 ** (s - self.scale),
            other.unscaled * 10 ** (s - other.scale),
            s,
        )

    @staticmethod
    def _coerce(value) -> "DecimalScalar":
        if isinstance(value, DecimalScalar):
            return value
        if isinstance(value, int):
            return DecimalScalar(value, 0)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, s = self._aligned(other)
        return DecimalScalar(a + b, s)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, s = self._aligned(other)
        return DecimalScalar(a - b, s)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return DecimalScalar(self.unscaled * other.unscaled, self.scale + other.scale)

    __rmul__ = __mul__

    def __neg__(self):
        return DecimalScalar(-self.unscaled, self.scale)

    def __pos__(self):
        return self

    def __abs__(self):
        return DecimalScalar(abs(self.unscaled), self.scale)

    # -- ordering ------------------------------------------------------------

    def _cmp(self, other) -> int:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, _ = self._aligned(other)
        return (a > b) - (a < b)

    def __eq__(self, other):
        c = self._cmp(other)
        return c == 0 if c is not NotImplemented else NotImplemented

    def __lt__(self, other):
        c = self._cmp(other)
        return c < 0 if c is not NotImplemented else NotImplemented

    def __le__(self, other):
        c = self._cmp(other)
        return c <= 0 if c is not NotImplemented else NotImplemented

    def __gt__(self, other):
        c = self._cmp(other)
        return c > 0 if c is not NotImplemented else NotImplemented

    def __ge__(self, other):
        c = self._cmp(other)
        return c >= 0 if c is not NotImplemented else NotImplemented

    def __hash__(self):
        return hash(self.as_fraction())

    def __bool__(self):
        return self.unscaled != 0

    @property
    def sign(self) -> int:
        return (self.unscaled > 0) - (self.unscaled < 0)

    def is_integer(self) -> bool:
        return self.unscaled % 10**self.scale == 0


ZERO = DecimalScalar(0, 0)
ONE = DecimalScalar(1, 0)


def ulp(digits: int) -> DecimalScalar:
    """10**-digits, the unit in the last place at ``digits`` fractional digits."""
    return DecimalScalar(1, digits)


def as_rational(value) -> Fraction:
    """Exact Fraction view of a DecimalScalar, int, or Fraction."""
    if isinstance(value, DecimalScalar):
        return value.as_fraction()
    return Fraction(value)


def mul_exact(a: DecimalScalar, b: DecimalScalar) -> DecimalScalar:
    """Exact product; the result scale is the sum of the operand scales."""
    return a * b


def round_to(a: DecimalScalar, digits: int) -> DecimalScalar:
    """Round half-even to ``digits`` fractional digits (exact when widening)."""
    if digits < 0:
        raise ValueError("digits must be non-negative")
    if digits >= a.scale:
        return DecimalScalar(a.unscaled * 10 ** (digits - a.scale), digits)
    return DecimalScalar(_half_even_div(a.unscaled, 10 ** (a.scale - digits)), digits)


def truncate_to(a: DecimalScalar, digits: int) -> DecimalScalar:
    """Drop fractional digits beyond ``digits`` (round toward zero).

    This is how the 1682 tables were produced: longhand root extraction
    yields floor digits, not round-to-nearest ones.
    """
    if digits < 0:
        raise ValueError("digits must be non-negative")
    if digits >= a.scale:
        return DecimalScalar(a.unscaled * 10 ** (digits - a.scale), digits)
    return DecimalScalar(_trunc_div(a.unscaled, 10 ** (a.scale - digits)), digits)


def div(a: DecimalScalar, b: DecimalScalar, digits: int) -> DecimalScalar:
    """Quotient rounded half-even to ``digits`` fractional digits."""
    if b.unscaled == 0:
        raise ZeroDivisionError("division by zero scalar")
    return DecimalScalar.from_fraction(a.as_fraction() / b.as_fraction(), digits)


def sqrt(a: DecimalScalar, ctx: PrecisionContext = DEFAULT_CONTEXT) -> DecimalScalar:
    """Square root, computed at work precision and rounded to output precision.

    The work-precision digits come from an exact integer square root
    (floor), so the only inexactness is the final half-even rounding.
    """
    if a.unscaled < 0:
        raise ValueError("square root of a negative scalar")
    w = ctx.work_digits
    shift = 2 * w - a.scale
    if shift >= 0:
        n = a.unscaled * 10**shift
    else:
        n = a.unscaled // 10**-shift
    return round_to(DecimalScalar(math.isqrt(n), w), ctx.output_digits)


def cbrt(a: DecimalScalar, ctx: PrecisionContext = DEFAULT_CONTEXT) -> DecimalScalar:
    """Cube root (odd root: the sign passes through), rounded like :func:`sqrt`."""
    w = ctx.work_digits
    shift = 3 * w - a.scale
    mag = abs(a.unscaled)
    if shift >= 0:
        n = mag * 10**shift
    else:
        n = mag // 10**-shift
    r = _icbrt(n)
    return round_to(DecimalScalar(a.sign * r, w), ctx.output_digits)


def format_grouped(a: DecimalScalar) -> str:
    """Paper-table typography: fractional digits in groups of five.

    ``2.0000000000`` renders as ``"2 00000 00000"`` and a zero integer part
    is elided entirely, so ``0.6353443923`` renders as ``"63534 43923"``.
    A five-digit leading token therefore always means a fractional group;
    values whose integer part has exactly five digits would be ambiguous
    and are rejected.
    """
    digits = str(abs(a.unscaled)).zfill(a.scale + 1)
    sign = "-" if a.unscaled < 0 else ""
    int_part = digits[: len(digits) - a.scale] if a.scale else digits
    frac = digits[len(digits) - a.scale:] if a.scale else ""
    if len(int_part.lstrip("0") or "0") == 5:
        raise ValueError("five-digit integer part has no unambiguous grouped form")
    groups = [frac[i: i + 5] for i in range(0, len(frac), 5)]
    int_part = int_part.lstrip("0")
    if not int_part and not groups:
        return "0"
    parts = ([int_part] if int_part else []) + groups
    return sign + " ".join(parts)


def parse_grouped(text: str) -> DecimalScalar:
    """Inverse of :func:`format_grouped` on its own output and the paper's tables."""
    text = text.strip()
    sign = 1
    if text.startswith(("-", "+")):
        sign = -1 if text[0] == "-" else 1
        text = text[1:].strip()
    tokens = text.split(" ")
    if not tokens or not all(t.isdigit() for t in tokens):
        raise ValueError(f"not a grouped decimal: {text!r}")
    if all(len(t) == 5 for t in tokens):
        int_part, frac_tokens = "0", tokens
    else:
        int_part, frac_tokens = tokens[0], tokens[1:]
        if any(len(t) != 5 for t in frac_tokens[:-1]) or (
            frac_tokens and len(frac_tokens[-1]) > 5
        ):
            raise ValueError(f"malformed fractional groups: {text!r}")
        if len(int_part) == 5:
            raise ValueError(f"ambiguous leading five-digit token: {text!r}")
    frac = "".join(frac_tokens)
    return DecimalScalar(sign * int(int_part + frac), len(frac))
