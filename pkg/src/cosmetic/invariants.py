"""Casson invariants of lens spaces and of surgeries on knots.

The Casson invariant of a lens space is a Dedekind sum in disguise:

    lambda(L(p, q)) = -s(q, p) / 2.

For p/q surgery on a knot K in an integer homology sphere Y the surgery
formula gives

    lambda(Y_K(p/q)) = lambda(Y) + lambda(L(p, q)) + (q / 2p) * Delta''(1)

with Delta the symmetrized Alexander polynomial of K.  Two surgeries
p/q, p/q' on the same knot therefore produce equal Casson invariants iff

    s(q, p) - s(q', p) = ((q - q') / p) * Delta''(1),

and since a truly cosmetic pair also forces Delta''(1) = 0, the usable
obstruction is the clean equality s(q, p) = s(q', p).  That is
`cosmetic_dedekind_obstruction`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .dedekind import dedekind_sum_fast
from .obstructions import ObstructionVerdict
from .slopes import ExactRational, Slope, format_rational


@dataclass(frozen=True)
class LensSpace:
    """L(p, q) with p >= 1, q reduced mod p into [1, p-1]; L(1, 0) is S^3.

    The constructor reduces q mod p itself, so LensSpace(7, 8) equals
    LensSpace(7, 1).  Non-coprime pairs are rejected.
    """

    p: int
    q: int

    def __post_init__(self):
        if self.p < 1:
            raise ValueError("lens space needs p >= 1")
        q = self.q % self.p if self.p > 1 else 0
        if self.p > 1 and gcd(q, self.p) != 1:
            raise ValueError(f"L({self.p}, {self.q}) needs gcd(p, q) = 1")
        object.__setattr__(self, "q", q)

    def __str__(self):
        return f"L({self.p},{self.q})"


@dataclass(frozen=True)
class AlexanderPolynomial:
    """A symmetrized Alexander polynomial sum a_k t^k.

    Stored as a sorted tuple of (exponent, coefficient) pairs with zero
    coefficients dropped.  Valid input is symmetric (a_k = a_{-k}) and
    normalized up to the usual sign ambiguity: the value at t = 1 is +1
    or -1.  (The figure-eight polynomial t - 3 + t^{-1} has value -1;
    its negative has value +1; both describe the same knot.)
    """

    coefficients: tuple

    def __post_init__(self):
        terms = {}
        for k, a in self.coefficients:
            if a != 0:
                terms[int(k)] = terms.get(int(k), 0) + int(a)
        for k, a in terms.items():
            if terms.get(-k, 0) != a:
                raise ValueError(
                    f"Alexander polynomial must be symmetric; "
                    f"a_{k} = {a} but a_{-k} = {terms.get(-k, 0)}"
                )
        if abs(sum(terms.values())) != 1:
            raise ValueError(
                "Alexander polynomial must be normalized to value +-1 at t = 1"
            )
        object.__setattr__(
            self, "coefficients", tuple(sorted(terms.items()))
        )

    @classmethod
    def from_coefficients(cls, mapping):
        """Build from a mapping exponent -> coefficient (keys may be strings)."""
        return cls(tuple((int(k), int(a)) for k, a in mapping.items()))

    @classmethod
    def from_json(cls, text):
        """Read the JSON map form, e.g. '{"-1": 1, "0": -3, "1": 1}'."""
        return cls.from_coefficients(json.loads(text))

    def as_dict(self):
        return {k: a for k, a in self.coefficients}


@dataclass(frozen=True)
class SurgeryCassonInput:
    """The data the surgery formula consumes.

    lambda_y is the Casson invariant of the ambient homology sphere,
    delta2 the second derivative of the knot's Alexander polynomial at 1,
    and slope the surgery coefficient p/q with p >= 1.
    """

    lambda_y: ExactRational
    delta2: int
    slope: Slope

    def __post_init__(self):
        object.__setattr__(self, "lambda_y", Fraction(self.lambda_y))
        if self.slope.a < 1:
            raise ValueError("surgery slope must have p >= 1")


def casson_lens(lens):
    """lambda(L(p, q)) = -s(q, p)/2, exactly.  Zero for S^3 = L(1, 0)."""
    return -dedekind_sum_fast(lens.q, lens.p) / 2


def casson_surgery(data):
    """Casson invariant of p/q surgery via the surgery formula.

    lambda(Y) + lambda(L(p, q)) + (q / 2p) * Delta''(1), all exact.
    """
    p, q = data.slope.a, data.slope.b
    return (
        data.lambda_y
        + casson_lens(LensSpace(p, q))
        + Fraction(q, 2 * p) * data.delta2
    )


def alexander_second_derivative_at_1(alexander):
    """Delta''(1) = sum_k k(k-1) a_k; always even by symmetry.

    Symmetry pairs the k and -k terms into 2 k^2 a_k, so the result is
    2 * sum_{k>0} k^2 a_k.
    """
    return sum(k * (k - 1) * a for k, a in alexander.coefficients)


def cosmetic_dedekind_obstruction(p, q, q_prime):
    """Casson obstruction for the pair p/q, p/q': does s(q, p) = s(q', p)?

    A truly cosmetic pair has Delta''(1) = 0, so the surgery formula
    reduces the equality of Casson invariants to equality of the two
    Dedekind sums.  The witness records both values either way.
    """
    s_q = dedekind_sum_fast(q, p)
    s_q_prime = dedekind_sum_fast(q_prime, p)
    witness = {
        "s_q": format_rational(s_q),
        "s_q_prime": format_rational(s_q_prime),
    }
    if s_q != s_q_prime:
        witness["reason"] = (
            f"s({q}, {p}) = {format_rational(s_q)} but "
            f"s({q_prime}, {p}) = {format_rational(s_q_prime)}"
        )
    return ObstructionVerdict("dedekind", s_q == s_q_prime, witness)
