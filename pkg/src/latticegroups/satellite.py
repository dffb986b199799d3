"""Extensions of planar grid cycles by Z^2 at an integer level k.

The level-k group is generated by x, y (the two lattice shifts) and z (the
unit plaquette cycle at the origin); its multiplication twists by k times
the monomial-section cocycle, so [x, y] = z^k. Level 1 is the free
metabelian group on two generators; level 0 is the split extension.
"""

from __future__ import annotations

from typing import Iterable

from .cocycles import canonical_cocycle
from .homology import NotACycleError, Plaquette, algebraic_area, decompose_cycle_2d, plaquette_boundary
from .lattice import EdgeFlow, Vector, vec_add, vec_neg
from .words import Letter, parse_letters

GENERATOR_NAMES = ("x", "y", "z")


def _in_level_multiples(n: int, k: int) -> bool:
    # k = 0 reads "multiple of k" as "equal to zero".
    return n == 0 if k == 0 else n % abs(k) == 0


class SatelliteElement:
    """Element of the level-k extension: (level, Z^2 vector, planar cycle)."""

    __slots__ = ("k", "vec", "cycle")

    def __init__(self, k: int, vec: Vector, cycle: EdgeFlow):
        vec = tuple(vec)
        if len(vec) != 2 or cycle.d != 2:
            raise ValueError("satellite elements live over rank 2")
        if not cycle.is_cycle():
            raise NotACycleError("satellite cycle part has nonzero boundary")
        self.k = k
        self.vec = vec
        self.cycle = cycle

    @classmethod
    def identity(cls, k: int) -> "SatelliteElement":
        return cls(k, (0, 0), EdgeFlow(2))

    def __mul__(self, other: "SatelliteElement") -> "SatelliteElement":
        if not isinstance(other, SatelliteElement):
            return NotImplemented
        if self.k != other.k:
            raise ValueError(f"level mismatch: {self.k} vs {other.k}")
        twist = canonical_cocycle(self.vec, other.vec) * self.k
        return SatelliteElement(
            self.k,
            vec_add(self.vec, other.vec),
            self.cycle + other.cycle.translate(self.vec) + twist,
        )

    def inverse(self) -> "SatelliteElement":
        back = vec_neg(self.vec)
        twist = canonical_cocycle(self.vec, back) * self.k
        return SatelliteElement(self.k, back, -((self.cycle + twist).translate(back)))

    def __pow__(self, n: int) -> "SatelliteElement":
        base = self if n >= 0 else self.inverse()
        result = SatelliteElement.identity(self.k)
        for _ in range(abs(n)):
            result = result * base
        return result

    def conjugated_by(self, g: "SatelliteElement") -> "SatelliteElement":
        return g * self * g.inverse()

    def is_identity(self) -> bool:
        return self.vec == (0, 0) and not self.cycle

    def in_N(self) -> bool:
        """Membership in the normal closure of z: trivial shift part."""
        return self.vec == (0, 0)

    def in_M(self) -> bool:
        """Membership in the normal closure of z^k: every plaquette
        coefficient of the cycle is a multiple of k."""
        return self.in_N() and all(
            _in_level_multiples(coeff, self.k)
            for _, coeff in decompose_cycle_2d(self.cycle).entries()
        )

    def in_commutant(self) -> bool:
        """Membership in the commutator subgroup: trivial shift part and
        algebraic area a multiple of k."""
        return self.in_N() and _in_level_multiples(algebraic_area(self.cycle), self.k)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SatelliteElement)
            and self.k == other.k
            and self.vec == other.vec
            and self.cycle == other.cycle
        )

    def __repr__(self) -> str:
        return f"SatelliteElement(k={self.k}, vec={self.vec}, cycle={self.cycle!r})"

    def as_json(self) -> dict:
        return {"k": self.k, "vec": list(self.vec), "cycle": self.cycle.as_json()}


def generator(name: str, k: int) -> SatelliteElement:
    if name == "x":
        return SatelliteElement(k, (1, 0), EdgeFlow(2))
    if name == "y":
        return SatelliteElement(k, (0, 1), EdgeFlow(2))
    if name == "z":
        return SatelliteElement(k, (0, 0), plaquette_boundary(Plaquette((0, 0), 1, 2)))
    raise ValueError(f"unknown generator {name!r}; expected one of {GENERATOR_NAMES}")


def element_commutator(a: SatelliteElement, b: SatelliteElement) -> SatelliteElement:
    return a * b * a.inverse() * b.inverse()


def from_word(word: str | Iterable[Letter], k: int) -> SatelliteElement:
    """Fold a word over the alphabet x, y, z into the level-k group."""
    letters = parse_letters(word, GENERATOR_NAMES) if isinstance(word, str) else word
    images = {index + 1: generator(name, k) for index, name in enumerate(GENERATOR_NAMES)}
    result = SatelliteElement.identity(k)
    for axis, sign in letters:
        image = images[axis]
        result = result * (image if sign > 0 else image.inverse())
    return result


def z_torsion_order(k: int) -> int | None:
    """Least j > 0 with z^j in the commutator subgroup; None if no such j (k = 0)."""
    if k == 0:
        return None
    z = generator("z", k)
    power = z
    for j in range(1, abs(k) + 1):
        if power.in_commutant():
            return j
        power = power * z
    raise AssertionError("z^|k| always lands in the commutator subgroup")
