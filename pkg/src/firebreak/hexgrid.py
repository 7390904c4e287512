"""Exact integer geometry of the hexagonal grid.

Vertices are integer pairs ``(i, j)`` mapping to the plane point
``(i * sqrt(3) / 2, j / 2)``.  Under that embedding every edge of the
hexagonal tiling has length 1 and the vertex directly above the origin
is ``(0, 2)``.  Everything in this module is exact signed-integer
arithmetic; no floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

Vertex = tuple[int, int]

# The (i mod 2, j mod 6) residue classes that are actual tiling vertices.
_VERTEX_CLASSES = frozenset({(0, 0), (0, 2), (1, 3), (1, 5)})
# Classes whose vertex has a neighbor directly above it (j + 2).
_UP_CLASSES = frozenset({(0, 0), (1, 3)})


def is_vertex(i: int, j: int) -> bool:
    """True iff ``(i, j)`` is a vertex of the hexagonal grid."""
    return (i % 2, j % 6) in _VERTEX_CLASSES


def require_vertex(v: Vertex) -> Vertex:
    i, j = v
    if not is_vertex(i, j):
        raise ValueError(f"({i}, {j}) is not a vertex of the hexagonal grid")
    return v


def neighbor_tuple(v: Vertex) -> tuple[Vertex, Vertex, Vertex]:
    """The three neighbors of ``v``, skipping validity checks (hot path)."""
    i, j = v
    if (i % 2, j % 6) in _UP_CLASSES:
        return ((i, j + 2), (i + 1, j - 1), (i - 1, j - 1))
    return ((i, j - 2), (i + 1, j + 1), (i - 1, j + 1))


def neighbors(v: Vertex) -> set[Vertex]:
    """The three grid neighbors of a valid vertex."""
    require_vertex(v)
    return set(neighbor_tuple(v))


def dist_from_origin(v: Vertex) -> int:
    """Graph distance from the origin, by the closed-form distance test.

    For a candidate distance of parity ``p`` the test reads
    ``max(|2j - p| / 3, |i| + |j + p| / 3) = d`` with ``d = p (mod 2)``;
    exactly one parity is consistent for any valid vertex.
    """
    i, j = require_vertex(v)
    candidates = []
    for p in (0, 1):
        m = max(abs(2 * j - p), 3 * abs(i) + abs(j + p))
        if m % 3 == 0 and (m // 3) % 2 == p:
            candidates.append(m // 3)
    if len(candidates) != 1:
        raise ValueError(f"closed-form distance not unique for {v}: {candidates}")
    return candidates[0]


def dist_from(center: Vertex, v: Vertex) -> int:
    """Graph distance between two vertices.

    A center congruent to the origin (even i, j divisible by 6) reduces to
    ``dist_from_origin`` by translation, which is a graph automorphism for
    exactly those offsets; any other center falls back to breadth-first
    search.
    """
    ci, cj = require_vertex(center)
    vi, vj = require_vertex(v)
    if ci % 2 == 0 and cj % 6 == 0:
        return dist_from_origin((vi - ci, vj - cj))
    return _bfs_distance(center, v)


def _bfs_distance(source: Vertex, target: Vertex) -> int:
    if source == target:
        return 0
    depth = 0
    seen = {source}
    frontier = [source]
    while frontier:
        depth += 1
        nxt = []
        for u in frontier:
            for w in neighbor_tuple(u):
                if w in seen:
                    continue
                if w == target:
                    return depth
                seen.add(w)
                nxt.append(w)
        frontier = nxt
    raise ValueError(f"{target} unreachable from {source}")  # grid is connected


@dataclass(frozen=True)
class DistanceShell:
    """All vertices at one exact graph distance from a center."""

    center: Vertex
    radius: int
    members: frozenset[Vertex]

    def __len__(self) -> int:
        return len(self.members)


def shell(center: Vertex, d: int) -> DistanceShell:
    """Vertices at graph distance exactly ``d`` from ``center`` (BFS layers)."""
    require_vertex(center)
    if d < 0:
        raise ValueError("shell radius must be non-negative")
    return DistanceShell(center, d, frozenset(_bfs_layers(center, d)[-1]))


def ball(center: Vertex, r: int) -> frozenset[Vertex]:
    """Vertices at graph distance at most ``r`` from ``center``."""
    require_vertex(center)
    if r < 0:
        raise ValueError("ball radius must be non-negative")
    out: set[Vertex] = set()
    for layer in _bfs_layers(center, r):
        out.update(layer)
    return frozenset(out)


def _bfs_layers(center: Vertex, depth: int) -> list[list[Vertex]]:
    layers = [[center]]
    seen = {center}
    for _ in range(depth):
        nxt = []
        for u in layers[-1]:
            for w in neighbor_tuple(u):
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        layers.append(nxt)
    return layers
