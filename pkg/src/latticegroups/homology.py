"""Plaquette coordinates for grid cycles: decomposition, area, cube relations.

A plaquette is the oriented boundary of a unit square in a coordinate plane.
Plaquettes span all cycles of the grid; for d = 2 they do so freely, so a
planar cycle has unique plaquette coefficients and a well-defined total,
its algebraic area.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import Edge, EdgeFlow, Vector, _accumulate, basis_vector, vec_add


class NotACycleError(ValueError):
    """A flow with nonzero boundary was passed where a cycle is required."""


@dataclass(frozen=True, order=True)
class Plaquette:
    """Unit square at ``base`` in the (i, j) coordinate plane, 1 <= i < j <= d."""

    base: Vector
    i: int
    j: int

    def __post_init__(self):
        if not 1 <= self.i < self.j <= len(self.base):
            raise ValueError(
                f"bad plaquette axes ({self.i}, {self.j}) for rank {len(self.base)}"
            )

    @property
    def d(self) -> int:
        return len(self.base)


def plaquette_boundary(p: Plaquette) -> EdgeFlow:
    """Oriented boundary of ``p``.

    The orientation is anchored so that this equals the flow of the
    commutator loop x_i x_j x_i^-1 x_j^-1 based at ``p.base``; every other
    sign convention in the package hangs off this choice.
    """
    d = p.d
    ei = basis_vector(d, p.i)
    ej = basis_vector(d, p.j)
    return EdgeFlow(
        d,
        [
            (Edge(p.base, p.i), 1),
            (Edge(vec_add(p.base, ei), p.j), 1),
            (Edge(vec_add(p.base, ej), p.i), -1),
            (Edge(p.base, p.j), -1),
        ],
    )


class PlaquetteSum:
    """Finitely supported integer combination of plaquettes."""

    __slots__ = ("d", "_entries")

    def __init__(self, d: int, items=()):
        entries: dict[Plaquette, int] = {}
        pairs = items.items() if isinstance(items, dict) else items
        for plaquette, coeff in pairs:
            if plaquette.d != d:
                raise ValueError(f"plaquette {plaquette} does not have rank {d}")
            _accumulate(entries, plaquette, int(coeff))
        self.d = d
        self._entries = entries

    def coefficient(self, plaquette: Plaquette) -> int:
        return self._entries.get(plaquette, 0)

    def entries(self) -> list[tuple[Plaquette, int]]:
        return sorted(self._entries.items())

    def total(self) -> int:
        return sum(self._entries.values())

    def boundary_flow(self) -> EdgeFlow:
        """The edge flow spanned by the combination."""
        flow = EdgeFlow(self.d)
        for plaquette, coeff in self._entries.items():
            flow = flow + coeff * plaquette_boundary(plaquette)
        return flow

    def __add__(self, other: "PlaquetteSum") -> "PlaquetteSum":
        if not isinstance(other, PlaquetteSum):
            return NotImplemented
        if self.d != other.d:
            raise ValueError(f"plaquette sum ranks differ: {self.d} vs {other.d}")
        entries = dict(self._entries)
        for plaquette, coeff in other._entries.items():
            _accumulate(entries, plaquette, coeff)
        return PlaquetteSum(self.d, entries)

    def __neg__(self) -> "PlaquetteSum":
        return PlaquetteSum(self.d, ((p, -c) for p, c in self._entries.items()))

    def __sub__(self, other: "PlaquetteSum") -> "PlaquetteSum":
        if not isinstance(other, PlaquetteSum):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar: int) -> "PlaquetteSum":
        if not isinstance(scalar, int):
            return NotImplemented
        return PlaquetteSum(self.d, ((p, scalar * c) for p, c in self._entries.items()))

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self._entries)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, PlaquetteSum)
            and self.d == other.d
            and self._entries == other._entries
        )

    def __repr__(self) -> str:
        return f"PlaquetteSum(d={self.d}, {dict(self.entries())!r})"

    def as_json(self) -> list[dict]:
        return [
            {"base": list(p.base), "i": p.i, "j": p.j, "mult": coeff}
            for p, coeff in self.entries()
        ]


def decompose_cycle(flow: EdgeFlow) -> PlaquetteSum:
    """Peel a cycle into a plaquette combination spanning it.

    Repeatedly cancel the lexicographically least supported edge against the
    plaquette spanned by that edge's axis and the least other axis carried at
    the same base vertex. Zero boundary at the least vertex guarantees such a
    partner axis exists, every plaquette used stays inside the bounding box
    of the support, and the least edge strictly increases, so the sweep
    terminates. For d = 2 the choice of plaquette is forced and the result
    is the unique decomposition; for d >= 3 it is one valid decomposition.
    """
    if not flow.is_cycle():
        raise NotACycleError("flow has nonzero boundary")
    d = flow.d
    work = dict(flow.entries())
    coeffs: dict[Plaquette, int] = {}
    while work:
        base, axis = min(work)
        mult = work[Edge(base, axis)]
        partner = next(
            (j for j in range(axis + 1, d + 1) if Edge(base, j) in work), None
        )
        assert partner is not None, "cycle support must close at its least vertex"
        plaquette = Plaquette(base, axis, partner)
        _accumulate(coeffs, plaquette, mult)
        for edge, sign in plaquette_boundary(plaquette).entries():
            _accumulate(work, edge, -mult * sign)
    return PlaquetteSum(d, coeffs)


def decompose_cycle_2d(flow: EdgeFlow) -> PlaquetteSum:
    """Unique plaquette coefficients of a planar cycle."""
    if flow.d != 2:
        raise ValueError(f"planar decomposition needs rank 2, got {flow.d}")
    return decompose_cycle(flow)


def algebraic_area(flow: EdgeFlow) -> int:
    """Sum of the plaquette coefficients of a planar cycle."""
    return decompose_cycle_2d(flow).total()


def cube_relation(base: Vector, i: int, j: int, k: int) -> PlaquetteSum:
    """The six-face plaquette combination around a unit 3-cube that spans zero.

    Signs are fixed by the requirement that the boundary flows of the six
    faces cancel edge by edge under this package's plaquette orientation.
    """
    d = len(base)
    if d < 3:
        raise ValueError(f"cube relation needs rank >= 3, got {d}")
    if not 1 <= i < j < k <= d:
        raise ValueError(f"axes must satisfy 1 <= i < j < k <= {d}, got ({i}, {j}, {k})")
    base = tuple(base)
    ei = basis_vector(d, i)
    ej = basis_vector(d, j)
    ek = basis_vector(d, k)
    return PlaquetteSum(
        d,
        [
            (Plaquette(base, i, j), 1),
            (Plaquette(vec_add(base, ek), i, j), -1),
            (Plaquette(base, i, k), -1),
            (Plaquette(vec_add(base, ej), i, k), 1),
            (Plaquette(base, j, k), 1),
            (Plaquette(vec_add(base, ei), j, k), -1),
        ],
    )


def project_flow(flow: EdgeFlow, i: int, j: int) -> EdgeFlow:
    """Project onto the (i, j) coordinate plane as a rank-2 flow.

    Edges along other axes are dropped; surviving edges are re-keyed by their
    (i, j) coordinates, with axis i becoming 1 and axis j becoming 2, and
    colliding keys are summed.
    """
    if not 1 <= i < j <= flow.d:
        raise ValueError(f"axes must satisfy 1 <= i < j <= {flow.d}, got ({i}, {j})")
    pairs = []
    for (base, axis), coeff in flow.entries():
        if axis == i:
            pairs.append((Edge((base[i - 1], base[j - 1]), 1), coeff))
        elif axis == j:
            pairs.append((Edge((base[i - 1], base[j - 1]), 2), coeff))
    return EdgeFlow(2, pairs)


def plaquette_sum_from_json(obj, d: int) -> PlaquetteSum:
    """Decode the JSON array form: [{"base": [...], "i": i, "j": j, "mult": k}, ...]."""
    pairs = []
    for item in obj:
        pairs.append(
            (Plaquette(tuple(item["base"]), int(item["i"]), int(item["j"])), int(item["mult"]))
        )
    return PlaquetteSum(d, pairs)
