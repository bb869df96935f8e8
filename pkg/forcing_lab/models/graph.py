"""Bitset-backed graph and vertex-set value types."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from typing import Any

from pydantic_core import core_schema

MAX_VERTICES = 64


class GraphError(ValueError):
    """Raised when a graph or vertex set would violate its invariants."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def full_mask(n: int) -> int:
    return (1 << n) - 1


class VertexSet:
    """Immutable subset of ``{0, ..., n-1}`` stored as a single integer bitset."""

    __slots__ = ("_n", "_bits")

    def __init__(self, n: int, bits: int = 0) -> None:
        if n < 0 or n > MAX_VERTICES:
            raise GraphError(f"VertexSet width must be in [0, {MAX_VERTICES}], got {n}.")
        if bits < 0 or bits >> n:
            raise GraphError(f"Bits {bits:#x} fall outside the vertex range 0..{n - 1}.")
        self._n = n
        self._bits = bits

    # ------------------------------------------------------------ Constructors
    @classmethod
    def of(cls, n: int, vertices: Iterable[int]) -> VertexSet:
        bits = 0
        for v in vertices:
            if not 0 <= v < n:
                raise GraphError(f"Vertex {v} is outside the range 0..{n - 1}.")
            bits |= 1 << v
        return cls(n, bits)

    @classmethod
    def empty(cls, n: int) -> VertexSet:
        return cls(n, 0)

    @classmethod
    def full(cls, n: int) -> VertexSet:
        return cls(n, full_mask(n))

    # -------------------------------------------------------------- Accessors
    @property
    def n(self) -> int:
        return self._n

    @property
    def bits(self) -> int:
        return self._bits

    def to_list(self) -> list[int]:
        return list(iter_bits(self._bits))

    def complement(self) -> VertexSet:
        return VertexSet(self._n, full_mask(self._n) & ~self._bits)

    def issubset(self, other: VertexSet) -> bool:
        self._check_width(other)
        return self._bits & ~other._bits == 0

    def min(self) -> int:
        if not self._bits:
            raise GraphError("min() of an empty VertexSet.")
        return (self._bits & -self._bits).bit_length() - 1

    # ---------------------------------------------------------- Set algebra
    def __or__(self, other: VertexSet) -> VertexSet:
        self._check_width(other)
        return VertexSet(self._n, self._bits | other._bits)

    def __and__(self, other: VertexSet) -> VertexSet:
        self._check_width(other)
        return VertexSet(self._n, self._bits & other._bits)

    def __sub__(self, other: VertexSet) -> VertexSet:
        self._check_width(other)
        return VertexSet(self._n, self._bits & ~other._bits)

    def with_vertex(self, v: int) -> VertexSet:
        return VertexSet(self._n, self._bits | (1 << v))

    def without_vertex(self, v: int) -> VertexSet:
        return VertexSet(self._n, self._bits & ~(1 << v))

    # ------------------------------------------------------- Python protocol
    def __len__(self) -> int:
        return self._bits.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self._bits)

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self._n and bool(self._bits >> v & 1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self._n == other._n and self._bits == other._bits

    def __hash__(self) -> int:
        return hash((self._n, self._bits))

    def __repr__(self) -> str:
        return f"VertexSet(n={self._n}, {self.to_list()})"

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """Popcount first, then lexicographic on the sorted members."""
        return (len(self), tuple(self))

    def _check_width(self, other: VertexSet) -> None:
        if self._n != other._n:
            raise GraphError(f"VertexSet width mismatch: {self._n} vs {other._n}.")

    @classmethod
    def __get_pydantic_core_schema__(cls, source: Any, handler: Any) -> core_schema.CoreSchema:
        return core_schema.is_instance_schema(
            cls,
            serialization=core_schema.plain_serializer_function_ser_schema(
                lambda value: value.to_list()
            ),
        )


@dataclass(frozen=True, slots=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``; ``adj[v]`` is the bitset N(v)."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or self.n > MAX_VERTICES:
            raise GraphError(f"Graph order must be in [0, {MAX_VERTICES}], got {self.n}.")
        if len(self.adj) != self.n:
            raise GraphError(f"Expected {self.n} adjacency rows, got {len(self.adj)}.")
        for v, row in enumerate(self.adj):
            if row < 0 or row >> self.n:
                raise GraphError(f"Row {v} has neighbours outside 0..{self.n - 1}.")
            if row >> v & 1:
                raise GraphError(f"Vertex {v} is adjacent to itself.")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"Edge {v}-{u} is not symmetric.")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"Edge {u}-{v} is outside the range 0..{n - 1}.")
            if u == v:
                raise GraphError(f"Loop at vertex {u} is not allowed.")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @property
    def full(self) -> int:
        return full_mask(self.n)

    @property
    def size(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def vertices(self) -> VertexSet:
        return VertexSet.full(self.n)

    def vertex_set(self, vertices: Iterable[int]) -> VertexSet:
        return VertexSet.of(self.n, vertices)

    def neighbors(self, v: int) -> VertexSet:
        return VertexSet(self.n, self.adj[v])

    def closed_neighborhood(self, v: int) -> VertexSet:
        return VertexSet(self.n, self.adj[v] | 1 << v)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u]) if u < v]


__all__ = ["Graph", "GraphError", "MAX_VERTICES", "VertexSet", "full_mask", "iter_bits"]
