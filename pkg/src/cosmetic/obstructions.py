"""Residue-class obstructions to a truly cosmetic exceptional pair.

A candidate pair of surgeries p/q and p/q' (same p, q' > q) on a knot in
an integer homology sphere has to clear several independent arithmetic
filters before it can be truly cosmetic:

* parity: both slopes must actually be slopes, gcd(q, p) = gcd(q', p) = 1;
* linking congruence: the lens-type linking forms of the filled manifolds
  agree only if q = q' * u^2 (mod p) for some unit u;
* Dedekind equality: equal Casson invariants force s(q, p) = s(q', p)
  (see invariants.cosmetic_dedekind_obstruction);
* distance cap: each exceptional geometry bounds the intersection number
  p * |q - q'| of the two slopes.

Each filter reports an ObstructionVerdict carrying enough of a witness to
replay the conclusion by hand.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from math import gcd


class GeometryClass(Enum):
    """The exceptional (non-hyperbolic) geometries a filling can have."""

    REDUCIBLE = "reducible"
    SEIFERT_TOROIDAL = "seifert_toroidal"
    SMALL_SEIFERT_INFINITE = "small_seifert_infinite"
    TOROIDAL_IRREDUCIBLE_NON_SEIFERT = "toroidal_irreducible_non_seifert"
    FINITE_PI1 = "finite_pi1"
    EXCEPTIONAL_GENERIC = "exceptional_generic"


# Largest slope distance a truly cosmetic pair can realize in each class.
# Reducible and Seifert-with-essential-torus fillings force distance 1;
# a toroidal irreducible non-Seifert filling forces distance at most 3,
# as does finite fundamental group; anything exceptional is capped at 8.
_DISTANCE_CAPS = {
    GeometryClass.REDUCIBLE: 1,
    GeometryClass.SEIFERT_TOROIDAL: 1,
    GeometryClass.SMALL_SEIFERT_INFINITE: 8,
    GeometryClass.TOROIDAL_IRREDUCIBLE_NON_SEIFERT: 3,
    GeometryClass.FINITE_PI1: 3,
    GeometryClass.EXCEPTIONAL_GENERIC: 8,
}


def distance_cap(geometry):
    """Largest Delta(p/q, p/q') a truly cosmetic pair with this geometry allows."""
    return _DISTANCE_CAPS[geometry]


@dataclass(frozen=True)
class ObstructionVerdict:
    """Outcome of one filter on one candidate pair.

    `witness` explains the outcome: on failure it is always present (the
    reports replay each exclusion from it), and a passing congruence
    records the unit u with q = q' * u^2 (mod p).
    """

    filter_name: str
    passed: bool
    witness: dict | None = field(default=None)

    def __post_init__(self):
        if not self.passed and self.witness is None:
            raise ValueError("a failing verdict must carry a witness")


@lru_cache(maxsize=1024)
def _unit_squares(p):
    if p == 1:
        return frozenset({0})
    return frozenset((u * u) % p for u in range(1, p) if gcd(u, p) == 1)


def unit_squares_mod(p):
    """The set {u^2 mod p : u a unit mod p}; {0} when p = 1.

    A subgroup of the unit group, of index at most 2; for an odd prime p
    it has exactly (p - 1)/2 elements.
    """
    if p < 1:
        raise ValueError("modulus must be a positive integer")
    return set(_unit_squares(p))


def _smallest_unit_witness(p, q, q2):
    # Smallest u in [1, p-1] with gcd(u, p) = 1 and q = q2 * u^2 (mod p),
    # or None.  Exhaustive on purpose; p is small in every intended use.
    for u in range(1, p):
        if gcd(u, p) == 1 and (q - q2 * u * u) % p == 0:
            return u
    return None


def linking_congruence(p, q, q_prime):
    """Do the linking forms of p/q and p/q' surgery agree?

    The filled manifolds carry linking forms of lens type, and an
    orientation-preserving homeomorphism forces q = q' * u^2 (mod p) for
    some unit u; that unit is returned as the witness.  Swapping q and
    q' gives the inverse unit as witness.  Everything passes for p = 1
    (witness unit 0, the residue of any integer mod 1).

    Both q and q' must be coprime to p.
    """
    if p < 1:
        raise ValueError("p must be a positive integer")
    if gcd(q, p) != 1 or gcd(q_prime, p) != 1:
        raise ValueError("linking congruence needs gcd(q, p) = gcd(q', p) = 1")
    if p == 1:
        return ObstructionVerdict("congruence", True, {"unit": 0})
    # Pick the witness from a residue-ordered canonical side so that the
    # swapped call returns exactly the inverse unit.
    x, y = q % p, q_prime % p
    if x <= y:
        u = _smallest_unit_witness(p, q, q_prime)
    else:
        v = _smallest_unit_witness(p, q_prime, q)
        u = None if v is None else pow(v, -1, p)
    if u is None:
        return ObstructionVerdict(
            "congruence",
            False,
            {
                "reason": f"no unit square maps {q_prime} to {q} mod {p}",
                "unit_squares": sorted(_unit_squares(p)),
            },
        )
    return ObstructionVerdict("congruence", True, {"unit": u})


def parity_filter(p, q, q_prime):
    """Are p/q and p/q' both genuine slopes, i.e. coprime pairs?

    Fails exactly when gcd(q, p) != 1 or gcd(q', p) != 1.  This is what
    empties the moduli p = 6 and p = 8 (and half of p = 2): one of q,
    q + gap always shares a factor with p.
    """
    if p < 1:
        raise ValueError("p must be a positive integer")
    bad = {}
    g = gcd(q, p)
    if g != 1:
        bad["q"] = g
    g = gcd(q_prime, p)
    if g != 1:
        bad["q_prime"] = g
    if bad:
        parts = [f"gcd({q}, {p}) = {bad['q']}"] if "q" in bad else []
        if "q_prime" in bad:
            parts.append(f"gcd({q_prime}, {p}) = {bad['q_prime']}")
        return ObstructionVerdict(
            "parity",
            False,
            {"reason": " and ".join(parts) + ", so not a slope pair"},
        )
    return ObstructionVerdict("parity", True)
