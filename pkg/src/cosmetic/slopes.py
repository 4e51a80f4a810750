"""Exact arithmetic with surgery slopes on a torus boundary.

A slope is an unoriented primitive class a*mu + b*lambda in H_1 of the
boundary torus, recorded as a coprime integer pair (a, b) up to overall
sign.  We fix the sign so that a > 0, with the rational longitude itself
written 0/1.  The meridian is 1/0.

Everything here is exact: coefficients are arbitrary-precision integers
and rational values are `fractions.Fraction`.  No floats anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

# The one exact rational type used across the package.
ExactRational = Fraction


def parse_rational(text):
    """Parse "n/d" (or a bare integer "n") into an exact rational."""
    return Fraction(text.strip())


def format_rational(x):
    """Render an exact rational as "n/d", denominator always shown."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class Slope:
    """A canonical slope a/b: gcd(a, b) = 1 and a > 0, or (a, b) = (0, 1).

    Construct through canonicalize_slope() or Slope.parse() unless the
    pair is already in canonical form; __post_init__ rejects anything
    else so canonical form is an invariant of the type.
    """

    a: int
    b: int

    def __post_init__(self):
        if self.a == 0 and self.b == 0:
            raise ValueError("0/0 is not a slope")
        if gcd(self.a, self.b) != 1:
            raise ValueError(f"slope {self.a}/{self.b} is not primitive")
        if self.a < 0 or (self.a == 0 and self.b < 0):
            raise ValueError(
                f"slope {self.a}/{self.b} is not sign-canonical; "
                "use canonicalize_slope"
            )

    def __str__(self):
        return f"{self.a}/{self.b}"

    @classmethod
    def parse(cls, text):
        """Read "a/b" (or a bare integer "a", meaning a/1), canonicalizing."""
        text = text.strip()
        if "/" in text:
            a_str, b_str = text.split("/", 1)
            return canonicalize_slope(int(a_str), int(b_str))
        return canonicalize_slope(int(text), 1)


def canonicalize_slope(a, b):
    """Reduce an integer pair to the canonical representative of its slope.

    Divides out the gcd (so non-primitive input like (6, 4) is accepted
    and becomes 3/2) and normalizes the sign to a > 0, or to (0, 1) for
    the longitude.  (0, 0) is rejected.
    """
    if a == 0 and b == 0:
        raise ValueError("0/0 is not a slope")
    g = gcd(a, b)
    a, b = a // g, b // g
    if a < 0 or (a == 0 and b < 0):
        a, b = -a, -b
    return Slope(a, b)


def slope_distance(r, s):
    """Geometric intersection number of two slopes: |a_r*b_s - b_r*a_s|.

    Symmetric, and zero exactly when the slopes coincide.  Invariant
    under any determinant +-1 change of basis of H_1 of the torus
    applied to both arguments.
    """
    return abs(r.a * s.b - r.b * s.a)


@dataclass(frozen=True)
class FramingShift:
    """An integer change of longitude: lambda -> lambda + shift * mu.

    Relates a surgery description in one framing to the same filling in
    another; the slope a*mu + b*lambda becomes (a + b*shift)*mu + b*lambda.
    """

    shift: int


def reframe_slope(s, shift):
    """Rewrite the slope s in a framing shifted by `shift` (int or FramingShift).

    Sends a/b to (a + b*shift)/b, then canonicalizes.  Applying shift f
    followed by -f is the identity.
    """
    f = shift.shift if isinstance(shift, FramingShift) else int(shift)
    return canonicalize_slope(s.a + s.b * f, s.b)
