"""Hex geometry tests.

The oracles here are independent of the module under test: neighbors are
re-derived from the planar embedding (unit-distance pairs of valid
vertices), and distances come from breadth-first search over those
oracle neighbors.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from firebreak import hexgrid

ORIGIN = (0, 0)

# Integer offsets with squared embedded length 3*di^2 + dj^2 == 4, i.e.
# Euclidean distance exactly 1 under x = i*sqrt(3)/2, y = j/2.
UNIT_OFFSETS = [(0, 2), (0, -2), (1, 1), (1, -1), (-1, 1), (-1, -1)]


def oracle_neighbors(v):
    i, j = v
    return {
        (i + di, j + dj)
        for di, dj in UNIT_OFFSETS
        if hexgrid.is_vertex(i + di, j + dj)
    }


def oracle_bfs_layers(center, depth):
    layers = [{center}]
    seen = {center}
    for _ in range(depth):
        nxt = set()
        for u in layers[-1]:
            for w in oracle_neighbors(u):
                if w not in seen:
                    seen.add(w)
                    nxt.add(w)
        layers.append(nxt)
    return layers


def oracle_distances(center, radius):
    out = {}
    for d, layer in enumerate(oracle_bfs_layers(center, radius)):
        for v in layer:
            out[v] = d
    return out


# Walks from the origin give a cheap generator of valid vertices.
walk_steps = st.lists(st.integers(0, 2), max_size=24)


def walk_vertex(steps):
    v = ORIGIN
    for c in steps:
        v = sorted(hexgrid.neighbor_tuple(v))[c]
    return v


class TestIsVertex:
    def test_membership_examples(self):
        assert hexgrid.is_vertex(0, 0)
        assert not hexgrid.is_vertex(0, 1)
        assert hexgrid.is_vertex(-1, -7)
        assert (-1 % 2, -7 % 6) == (1, 5)

    def test_one_third_of_residues_are_vertices(self):
        hits = sum(hexgrid.is_vertex(i, j) for i in range(2) for j in range(6))
        assert hits == 4


class TestNeighbors:
    def test_examples(self):
        assert hexgrid.neighbors((0, 0)) == {(0, 2), (1, -1), (-1, -1)}
        assert hexgrid.neighbors((0, 2)) == {(0, 0), (1, 3), (-1, 3)}
        assert hexgrid.neighbors((1, 3)) == {(1, 5), (2, 2), (0, 2)}

    def test_matches_unit_distance_oracle_on_box(self):
        for i in range(-12, 13):
            for j in range(-12, 13):
                if hexgrid.is_vertex(i, j):
                    assert hexgrid.neighbors((i, j)) == oracle_neighbors((i, j))

    def test_invalid_vertex_rejected(self):
        with pytest.raises(ValueError):
            hexgrid.neighbors((0, 1))

    @given(walk_steps)
    @settings(max_examples=150)
    def test_symmetry_and_degree(self, steps):
        v = walk_vertex(steps)
        ns = hexgrid.neighbors(v)
        assert len(ns) == 3
        for w in ns:
            assert hexgrid.is_vertex(*w)
            assert v in hexgrid.neighbors(w)

    @given(walk_steps)
    @settings(max_examples=150)
    def test_edges_have_unit_embedded_length(self, steps):
        v = walk_vertex(steps)
        for w in hexgrid.neighbors(v):
            di, dj = w[0] - v[0], w[1] - v[1]
            assert 3 * di * di + dj * dj == 4


class TestDistFromOrigin:
    def test_examples(self):
        assert hexgrid.dist_from_origin((0, 2)) == 1
        assert hexgrid.dist_from_origin((1, -1)) == 1
        assert hexgrid.dist_from_origin((-3, -9)) == 6
        assert hexgrid.dist_from_origin(ORIGIN) == 0

    def test_matches_bfs_to_radius_12(self):
        for v, d in oracle_distances(ORIGIN, 12).items():
            assert hexgrid.dist_from_origin(v) == d

    @given(walk_steps)
    @settings(max_examples=150)
    def test_adjacent_vertices_differ_by_one(self, steps):
        v = walk_vertex(steps)
        dv = hexgrid.dist_from_origin(v)
        for w in hexgrid.neighbors(v):
            assert abs(hexgrid.dist_from_origin(w) - dv) == 1

    def test_invalid_vertex_rejected(self):
        with pytest.raises(ValueError):
            hexgrid.dist_from_origin((2, 1))


class TestDistFrom:
    def test_identity(self):
        assert hexgrid.dist_from((-28, 0), (-28, 0)) == 0

    def test_shifted_center_examples(self):
        # center congruent to the origin: solved by translation
        assert hexgrid.dist_from((-28, 0), (-30, 0)) == 2
        assert hexgrid.dist_from((-28, 0), (-29, -3)) == 2

    def test_translation_agrees_with_bfs(self):
        center = (-6, 0)
        for v, d in oracle_distances(center, 7).items():
            assert hexgrid.dist_from(center, v) == d

    def test_bfs_fallback_for_other_center_classes(self):
        for center in [(0, 2), (1, 3), (-1, -1)]:
            for v, d in oracle_distances(center, 6).items():
                assert hexgrid.dist_from(center, v) == d

    def test_symmetry(self):
        pairs = [((0, 0), (3, 3)), ((0, 2), (-4, 0)), ((1, 3), (2, -6))]
        for a, b in pairs:
            assert hexgrid.dist_from(a, b) == hexgrid.dist_from(b, a)


class TestShells:
    def test_small_shells(self):
        assert hexgrid.shell(ORIGIN, 0).members == {ORIGIN}
        assert hexgrid.shell(ORIGIN, 1).members == {(0, 2), (1, -1), (-1, -1)}
        assert hexgrid.shell(ORIGIN, 2).members == {
            (1, 3), (-1, 3), (1, -3), (2, 0), (-1, -3), (-2, 0)}

    def test_shell_sizes_are_3d(self):
        for d in range(1, 9):
            assert len(hexgrid.shell(ORIGIN, d)) == 3 * d

    def test_shells_match_closed_form_distance(self):
        for d in range(7):
            for v in hexgrid.shell(ORIGIN, d).members:
                assert hexgrid.dist_from_origin(v) == d

    def test_ball_size_formula(self):
        for r in range(9):
            assert len(hexgrid.ball(ORIGIN, r)) == 1 + 3 * r * (r + 1) // 2

    def test_shells_disjoint(self):
        seen = set()
        for d in range(6):
            members = hexgrid.shell(ORIGIN, d).members
            assert not (members & seen)
            seen |= members

    def test_negative_radius_rejected(self):
        with pytest.raises(ValueError):
            hexgrid.shell(ORIGIN, -1)
