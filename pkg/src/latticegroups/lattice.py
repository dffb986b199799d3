"""Integer edge flows on the grid of unit lattice edges, and word evaluation.

The grid has one vertex per integer point of Z^d and one edge per unit step
along a coordinate axis. Every edge is keyed in its positive orientation;
traversals against the orientation contribute negative multiplicity.
"""

from __future__ import annotations

from typing import Iterable, Mapping, NamedTuple

from .words import Letter, RankMismatchError, Word, WordSyntaxError

Vector = tuple[int, ...]


def vec_add(u: Vector, v: Vector) -> Vector:
    if len(u) != len(v):
        raise RankMismatchError(f"vector ranks differ: {len(u)} vs {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def vec_neg(u: Vector) -> Vector:
    return tuple(-a for a in u)


def basis_vector(d: int, axis: int) -> Vector:
    return tuple(1 if index == axis - 1 else 0 for index in range(d))


class Edge(NamedTuple):
    """A grid edge in positive orientation: from ``base`` to ``base + e_axis``."""

    base: Vector
    axis: int


def _accumulate(entries: dict, key, coeff: int) -> None:
    # Keeps the support exact: a zero total removes the key outright.
    if coeff == 0:
        return
    total = entries.get(key, 0) + coeff
    if total:
        entries[key] = total
    else:
        del entries[key]


def _gather(items) -> Iterable[tuple[object, int]]:
    if isinstance(items, Mapping):
        return items.items()
    return items


class VertexChain:
    """Finitely supported integer weights on lattice vertices."""

    __slots__ = ("d", "_entries")

    def __init__(self, d: int, items=()):
        entries: dict[Vector, int] = {}
        for vertex, coeff in _gather(items):
            vertex = tuple(vertex)
            if len(vertex) != d:
                raise RankMismatchError(f"vertex {vertex} does not have rank {d}")
            _accumulate(entries, vertex, int(coeff))
        self.d = d
        self._entries = entries

    def value(self, vertex: Vector) -> int:
        return self._entries.get(tuple(vertex), 0)

    def entries(self) -> list[tuple[Vector, int]]:
        return sorted(self._entries.items())

    def translate(self, v: Vector) -> "VertexChain":
        if len(v) != self.d:
            raise RankMismatchError(f"vector {v} does not have rank {self.d}")
        return VertexChain(
            self.d, ((vec_add(vertex, v), coeff) for vertex, coeff in self._entries.items())
        )

    def __bool__(self) -> bool:
        return bool(self._entries)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, VertexChain)
            and self.d == other.d
            and self._entries == other._entries
        )

    def __repr__(self) -> str:
        return f"VertexChain(d={self.d}, {dict(self.entries())!r})"


class EdgeFlow:
    """Finitely supported integer multiplicities on positively oriented edges.

    Values are exact arbitrary-precision integers and zero entries are never
    stored, so equality of flows is plain map equality.
    """

    __slots__ = ("d", "_entries")

    def __init__(self, d: int, items=()):
        entries: dict[Edge, int] = {}
        for key, coeff in _gather(items):
            base, axis = key
            edge = Edge(tuple(base), int(axis))
            if len(edge.base) != d:
                raise RankMismatchError(f"edge base {edge.base} does not have rank {d}")
            if not 1 <= edge.axis <= d:
                raise ValueError(f"edge axis {edge.axis} out of range 1..{d}")
            _accumulate(entries, edge, int(coeff))
        self.d = d
        self._entries = entries

    def value(self, edge: Edge | tuple[Vector, int]) -> int:
        base, axis = edge
        return self._entries.get(Edge(tuple(base), axis), 0)

    def entries(self) -> list[tuple[Edge, int]]:
        """Entries sorted lexicographically on (base, axis)."""
        return sorted(self._entries.items())

    def support(self) -> list[Edge]:
        return sorted(self._entries)

    def translate(self, v: Vector) -> "EdgeFlow":
        if len(v) != self.d:
            raise RankMismatchError(f"vector {v} does not have rank {self.d}")
        return EdgeFlow(
            self.d,
            ((Edge(vec_add(edge.base, v), edge.axis), coeff) for edge, coeff in self._entries.items()),
        )

    def boundary(self) -> VertexChain:
        chain: dict[Vector, int] = {}
        for (base, axis), coeff in self._entries.items():
            _accumulate(chain, vec_add(base, basis_vector(self.d, axis)), coeff)
            _accumulate(chain, base, -coeff)
        return VertexChain(self.d, chain)

    def is_cycle(self) -> bool:
        return not self.boundary()

    def _check_rank(self, other: "EdgeFlow") -> None:
        if self.d != other.d:
            raise RankMismatchError(f"flow ranks differ: {self.d} vs {other.d}")

    def __add__(self, other: "EdgeFlow") -> "EdgeFlow":
        if not isinstance(other, EdgeFlow):
            return NotImplemented
        self._check_rank(other)
        entries = dict(self._entries)
        for edge, coeff in other._entries.items():
            _accumulate(entries, edge, coeff)
        return EdgeFlow(self.d, entries)

    def __sub__(self, other: "EdgeFlow") -> "EdgeFlow":
        if not isinstance(other, EdgeFlow):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "EdgeFlow":
        return EdgeFlow(self.d, ((edge, -coeff) for edge, coeff in self._entries.items()))

    def __mul__(self, scalar: int) -> "EdgeFlow":
        if not isinstance(scalar, int):
            return NotImplemented
        return EdgeFlow(self.d, ((edge, scalar * coeff) for edge, coeff in self._entries.items()))

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, EdgeFlow)
            and self.d == other.d
            and self._entries == other._entries
        )

    def __repr__(self) -> str:
        return f"EdgeFlow(d={self.d}, {dict(self.entries())!r})"

    def as_json(self) -> list[dict]:
        return [
            {"base": list(edge.base), "axis": edge.axis, "mult": coeff}
            for edge, coeff in self.entries()
        ]


class PathEvaluation(NamedTuple):
    """Endpoint and net edge flow of the lattice path read off a word."""

    endpoint: Vector
    flow: EdgeFlow

    def as_json(self) -> dict:
        return {"endpoint": list(self.endpoint), "flow": self.flow.as_json()}


def _step(position: Vector, axis: int, sign: int) -> Vector:
    return tuple(
        coord + (sign if index == axis - 1 else 0) for index, coord in enumerate(position)
    )


def evaluate_letters(letters: Iterable[Letter | tuple[int, int]], d: int) -> PathEvaluation:
    """Trace unit steps from the origin, one per letter.

    Each positive letter adds +1 to the edge it walks along; each negative
    letter subtracts 1 from the positively oriented key of the edge walked
    backwards. The result does not depend on free reduction of the input.
    """
    position: Vector = (0,) * d
    entries: dict[Edge, int] = {}
    for axis, sign in letters:
        if not 1 <= axis <= d:
            raise WordSyntaxError(f"generator index {axis} out of range 1..{d}")
        if sign > 0:
            _accumulate(entries, Edge(position, axis), 1)
            position = _step(position, axis, 1)
        else:
            position = _step(position, axis, -1)
            _accumulate(entries, Edge(position, axis), -1)
    return PathEvaluation(position, EdgeFlow(d, entries))


def evaluate_path(word: Word) -> PathEvaluation:
    return evaluate_letters(word.letters, word.d)


def is_loop(word: Word) -> bool:
    """Whether the word's path returns to the origin (kernel of abelianization)."""
    return all(coord == 0 for coord in evaluate_path(word).endpoint)
