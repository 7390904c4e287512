"""Containability and leaf saving for birth-sequence trees and forests.

A birth-sequence tree is a rooted tree in which every vertex at depth i
has the same number of children d_i; a forest bundles m such trees with
a shared per-turn firefighter budget k, every root on fire.  Because all
subtrees at one depth are interchangeable, only the per-tree fire counts
matter, which gives an exact integer recurrence, a closed-form
containability test for single trees, and a state-graph reachability
check deciding whether every leaf of a finite forest can be saved.

Two independent oracles (direct search over budget sequences, and a full
game-tree search on the explicit forest) are included so the abstraction
can be validated rather than trusted.
"""

from __future__ import annotations

import itertools
from collections import deque
from collections.abc import Sequence
from dataclasses import dataclass

Vec = tuple[int, ...]


def ones(m: int) -> Vec:
    return (1,) * m


def zeros(m: int) -> Vec:
    return (0,) * m


def _same_length(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise ValueError(f"vector length mismatch: {len(a)} vs {len(b)}")


def vec_mul(a: Vec, b: Vec) -> Vec:
    """Component-wise product."""
    _same_length(a, b)
    return tuple(x * y for x, y in zip(a, b))


def vec_add(a: Vec, b: Vec) -> Vec:
    _same_length(a, b)
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: Vec, b: Vec) -> Vec:
    _same_length(a, b)
    return tuple(x - y for x, y in zip(a, b))


def vec_max(a: Vec, b: Vec) -> Vec:
    """Component-wise maximum."""
    _same_length(a, b)
    return tuple(max(x, y) for x, y in zip(a, b))


def vec_leq(a: Vec, b: Vec) -> bool:
    """True iff a <= b in every component."""
    _same_length(a, b)
    return all(x <= y for x, y in zip(a, b))


def l1_norm(v: Vec) -> int:
    return sum(abs(x) for x in v)


def vec_prod(vectors, m: int) -> Vec:
    """Component-wise product of many vectors; the empty product is all ones."""
    out = ones(m)
    for v in vectors:
        out = vec_mul(out, v)
    return out


@dataclass(frozen=True)
class BirthSequence:
    """Per-depth child counts.  ``tail`` continues the sequence forever
    with a constant value, describing an infinite tree."""

    degrees: tuple[int, ...]
    tail: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(self.degrees))
        if not self.degrees:
            raise ValueError("birth sequence must list at least one degree")
        if any(d < 1 for d in self.degrees):
            raise ValueError("all degrees must be >= 1")
        if self.tail is not None and self.tail < 1:
            raise ValueError("tail degree must be >= 1")

    @property
    def is_infinite(self) -> bool:
        return self.tail is not None

    def degree(self, i: int) -> int:
        if i < 0:
            raise IndexError("negative depth")
        if i < len(self.degrees):
            return self.degrees[i]
        if self.tail is None:
            raise IndexError(f"depth {i} beyond finite birth sequence")
        return self.tail


def tree_fire_count_closed_form(seq: BirthSequence, k: int, t: int) -> int:
    """Fire count at depth t with the recurrence unrolled: the product of
    the first t degrees, minus k weighted by every suffix product."""
    if t == 0:
        return 1
    suffix = 1
    suffix_sum = 0
    for i in range(t - 1, 0, -1):
        suffix *= seq.degree(i)
        suffix_sum += suffix
    prod = 1
    for i in range(t):
        prod *= seq.degree(i)
    return max(0, prod - k * (1 + suffix_sum))


def tree_fire_counts(seq: BirthSequence, k: int, t_max: int) -> list[int]:
    """Fire counts f_0..f_{t_max} by the step recurrence
    f_t = max(0, f_{t-1} * d_{t-1} - k), cross-checked against the closed
    form at every depth."""
    if k < 1:
        raise ValueError("budget k must be >= 1")
    if t_max < 0:
        raise ValueError("t_max must be >= 0")
    counts = [1]
    for t in range(1, t_max + 1):
        counts.append(max(0, counts[-1] * seq.degree(t - 1) - k))
        closed = tree_fire_count_closed_form(seq, k, t)
        if closed != counts[-1]:
            raise AssertionError(
                f"closed form disagrees with recurrence at depth {t}: "
                f"{closed} != {counts[-1]}")
    return counts


@dataclass(frozen=True)
class Containable:
    depth: int  # first depth with no burning vertices


@dataclass(frozen=True)
class ProvablyNotContainable:
    depth: int  # depth at which the fire count stopped shrinking
    fire_count: int


@dataclass(frozen=True)
class NotContainableWithinHorizon:
    horizon: int


def tree_containable(seq: BirthSequence, k: int, horizon: int | None = None):
    """Decide k-containability of a birth-sequence tree with burning root.

    With an eventually-constant tail the answer is exact: either the fire
    count reaches zero (contained at that depth), or in the tail it stops
    shrinking while positive, which locks it in forever.  A finite-only
    sequence is scanned up to ``horizon`` (default: its length) and a
    negative answer is reported as horizon-limited, never as a proof.
    """
    if k < 1:
        raise ValueError("budget k must be >= 1")
    if horizon is None and not seq.is_infinite:
        horizon = len(seq.degrees)
    f = 1
    t = 0
    while horizon is None or t < horizon:
        if not seq.is_infinite and t >= len(seq.degrees):
            return NotContainableWithinHorizon(horizon=t)
        d = seq.degree(t)
        in_tail = seq.is_infinite and t >= len(seq.degrees)
        nxt = f * d - k
        if nxt <= 0:
            return Containable(depth=t + 1)
        if in_tail and nxt >= f:
            # constant degree from here on, so a non-shrinking count never
            # reaches zero
            return ProvablyNotContainable(depth=t + 1, fire_count=nxt)
        if in_tail and d == 1:
            # dropping by exactly k per level from here on
            steps = -(-nxt // k)
            depth = t + 1 + steps
            if horizon is not None and depth > horizon:
                return NotContainableWithinHorizon(horizon=horizon)
            return Containable(depth=depth)
        f = nxt
        t += 1
    return NotContainableWithinHorizon(horizon=horizon)


@dataclass(frozen=True)
class ForestSpec:
    """m birth-sequence trees of depth n with per-turn budget k; row i of
    ``birth_matrix`` holds each tree's child count at depth i."""

    m: int
    n: int
    k: int
    birth_matrix: tuple[Vec, ...]

    def __post_init__(self):
        if self.m < 1 or self.n < 1 or self.k < 1:
            raise ValueError("m, n, k must all be >= 1")
        rows = tuple(tuple(int(d) for d in row) for row in self.birth_matrix)
        object.__setattr__(self, "birth_matrix", rows)
        if len(rows) != self.n or any(len(r) != self.m for r in rows):
            raise ValueError(f"birth matrix must be {self.n} rows of {self.m} entries")
        if any(d < 1 for row in rows for d in row):
            raise ValueError("all child counts must be >= 1")

    @classmethod
    def from_json(cls, doc: dict) -> "ForestSpec":
        try:
            return cls(
                m=int(doc["m"]), n=int(doc["n"]), k=int(doc["k"]),
                birth_matrix=tuple(tuple(int(x) for x in row) for row in doc["d"]))
        except KeyError as err:
            raise ValueError(f"forest spec is missing field {err}") from err
        except TypeError as err:
            raise ValueError(f"malformed forest spec: {err}") from err

    def to_json(self) -> dict:
        return {"m": self.m, "n": self.n, "k": self.k,
                "d": [list(r) for r in self.birth_matrix]}


def _forest_closed_form(spec: ForestSpec, strategy: Sequence[Vec], t: int) -> Vec:
    m = spec.m
    total = vec_prod(spec.birth_matrix[:t], m)
    acc = strategy[t - 1]
    suffix = ones(m)
    for i in range(t - 1, 0, -1):
        suffix = vec_mul(suffix, spec.birth_matrix[i])
        acc = vec_add(acc, vec_mul(strategy[i - 1], suffix))
    return vec_max(zeros(m), vec_sub(total, acc))


def forest_fire_counts(spec: ForestSpec, strategy) -> list[Vec]:
    """Per-tree fire counts at each depth 0..n under the given budget
    vectors, cross-checked against the unrolled closed form."""
    strategy = [tuple(p) for p in strategy]
    if len(strategy) < spec.n:
        raise ValueError(f"strategy must supply at least {spec.n} budget vectors")
    for p in strategy:
        _same_length(p, ones(spec.m))
        if any(x < 0 for x in p):
            raise ValueError("budget vectors must be non-negative")
    counts = [ones(spec.m)]
    for t in range(1, spec.n + 1):
        stepped = vec_max(
            zeros(spec.m),
            vec_sub(vec_mul(counts[-1], spec.birth_matrix[t - 1]), strategy[t - 1]))
        closed = _forest_closed_form(spec, strategy, t)
        if closed != stepped:
            raise AssertionError(
                f"closed form disagrees with recurrence at depth {t}: "
                f"{closed} != {stepped}")
        counts.append(stepped)
    return counts


def budget_vectors(m: int, k: int, exact: bool = True) -> tuple[Vec, ...]:
    """All m-part budget vectors with L1 norm equal to k (``exact``) or at
    most k, in lexicographic order."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if k < 0:
        raise ValueError("k must be >= 0")

    def compositions(parts: int, total: int):
        if parts == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in compositions(parts - 1, total - first):
                yield (first,) + rest

    if exact:
        vecs = list(compositions(m, k))
    else:
        vecs = [v for s in range(k + 1) for v in compositions(m, s)]
    return tuple(sorted(vecs))


@dataclass(frozen=True)
class StateGraph:
    """DAG on (depth, per-tree fire counts); the leaves of the forest are
    savable iff ``goal`` is reachable from ``start``."""

    start: tuple
    goal: tuple
    nodes: tuple
    edges: dict
    pruned: bool

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    @property
    def edge_count(self) -> int:
        return sum(len(v) for v in self.edges.values())


def build_state_graph(spec: ForestSpec, prune: bool = True) -> StateGraph:
    """Enumerate viable (depth, fire-vector) states and their transitions.

    A state (t, f) is viable only if ||f||_1 <= k*(n - t): with n - t
    protection rounds left, any larger fire already dooms some leaf.  When
    the whole next generation fits under the budget, a single collapsed
    edge to (t+1, 0) stands in for every covering placement.  With
    ``prune`` off, states are instead grown forward from the start, which
    keeps the graph finite without the viability bound.
    """
    m, n, k = spec.m, spec.n, spec.k
    start = (0, ones(m))
    goal = (n, zeros(m))
    pvecs = budget_vectors(m, k, exact=True)

    def successors(t: int, f: Vec):
        hot = vec_mul(f, spec.birth_matrix[t])
        if l1_norm(hot) <= k:
            return [(t + 1, zeros(m))]
        out = []
        for p in pvecs:
            g = vec_sub(hot, p)
            if any(x < 0 for x in g):
                continue
            if prune and l1_norm(g) > k * (n - t - 1):
                continue
            out.append((t + 1, g))
        return sorted(out)

    edges: dict = {}
    if prune:
        nodes = {start}
        for t in range(1, n + 1):
            for f in budget_vectors(m, k * (n - t), exact=False):
                nodes.add((t, f))
        for t, f in nodes:
            if t < n:
                edges[(t, f)] = tuple(successors(t, f))
    else:
        seen = {start}
        queue = deque([start])
        while queue:
            t, f = queue.popleft()
            if t >= n:
                continue
            succ = tuple(successors(t, f))
            edges[(t, f)] = succ
            for node in succ:
                if node not in seen:
                    seen.add(node)
                    queue.append(node)
        nodes = seen
    return StateGraph(start=start, goal=goal, nodes=tuple(sorted(nodes)),
                      edges=edges, pruned=prune)


@dataclass(frozen=True)
class SavableResult:
    savable: bool
    witness: tuple[Vec, ...] | None
    node_count: int
    edge_count: int
    early_reject: bool = False


def leaves_savable(spec: ForestSpec, prune: bool = True,
                   want_witness: bool = True) -> SavableResult:
    """Decide whether every leaf of the forest can be saved.

    Answers by reachability in the state graph.  When savable and
    ``want_witness`` is set, one strategy sequence is reconstructed from a
    shortest path; ties break toward the lexicographically smallest
    successor state, and a collapsed edge (which does not pin its budget
    vector down) is expanded to the smallest covering vector.
    """
    if spec.m > spec.n * spec.k:
        # more burning roots than total placements before the fire reaches
        # the leaves, so some tree is lost even if every tree is a path
        return SavableResult(False, None, 0, 0, early_reject=True)
    graph = build_state_graph(spec, prune=prune)
    parent: dict = {graph.start: None}
    queue = deque([graph.start])
    while queue:
        node = queue.popleft()
        if node == graph.goal:
            break
        for nxt in graph.edges.get(node, ()):
            if nxt not in parent:
                parent[nxt] = node
                queue.append(nxt)
    if graph.goal not in parent:
        return SavableResult(False, None, graph.node_count, graph.edge_count)
    witness = _reconstruct_witness(spec, parent, graph.goal) if want_witness else None
    return SavableResult(True, witness, graph.node_count, graph.edge_count)


def _reconstruct_witness(spec: ForestSpec, parent: dict, goal) -> tuple[Vec, ...]:
    path = [goal]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    path.reverse()
    vectors = []
    for (t, f), (_, g) in zip(path, path[1:]):
        hot = vec_mul(f, spec.birth_matrix[t])
        if l1_norm(hot) <= spec.k:
            # collapsed edge: protect every fire, pad the surplus onto the
            # last tree for the lexicographically smallest exact-k vector
            surplus = spec.k - l1_norm(hot)
            vectors.append(hot[:-1] + (hot[-1] + surplus,))
        else:
            vectors.append(vec_sub(hot, g))
    return tuple(vectors)


def brute_force_hot_oracle(spec: ForestSpec) -> bool:
    """Ground truth by direct search over per-level budget vectors with
    L1 norm at most k.

    Independent of the state graph: no viability bound, budgets may go
    under-used, and levels are explored depth-first with only a cache of
    states already shown hopeless to keep the search finite.
    """
    if spec.m * spec.n > 12:
        raise ValueError(
            f"instance too large for the exhaustive oracle: m*n = {spec.m * spec.n}")
    options = budget_vectors(spec.m, spec.k, exact=False)
    z = zeros(spec.m)
    hopeless: set = set()

    def explore(t: int, f: Vec) -> bool:
        if f == z:
            return True
        if t == spec.n:
            return False
        if (t, f) in hopeless:
            return False
        hot = vec_mul(f, spec.birth_matrix[t])
        for p in options:
            g = tuple(max(0, x - y) for x, y in zip(hot, p))
            if explore(t + 1, g):
                return True
        hopeless.add((t, f))
        return False

    return explore(0, ones(spec.m))


@dataclass(frozen=True)
class ExplicitForest:
    """A concrete rooted forest: vertex ids 0..size-1, undirected edges."""

    adjacency: tuple[tuple[int, ...], ...]
    roots: tuple[int, ...]
    leaves: frozenset[int]
    tree_of: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.adjacency)


def explicit_forest(spec: ForestSpec) -> ExplicitForest:
    """Materialize the birth-sequence forest vertex by vertex."""
    adj: list[list[int]] = []
    tree_of: list[int] = []
    roots: list[int] = []
    leaves: list[int] = []

    def new_vertex(tree: int) -> int:
        adj.append([])
        tree_of.append(tree)
        return len(adj) - 1

    for tree in range(spec.m):
        level = [new_vertex(tree)]
        roots.append(level[0])
        for depth in range(spec.n):
            nxt = []
            for parent in level:
                for _ in range(spec.birth_matrix[depth][tree]):
                    child = new_vertex(tree)
                    adj[parent].append(child)
                    adj[child].append(parent)
                    nxt.append(child)
            level = nxt
        leaves.extend(level)
    return ExplicitForest(
        adjacency=tuple(tuple(ns) for ns in adj),
        roots=tuple(roots),
        leaves=frozenset(leaves),
        tree_of=tuple(tree_of),
    )


def game_tree_oracle(forest: ExplicitForest, k: int) -> bool:
    """Can k placements per round save every leaf?  Full game search over
    arbitrary placements, not just vertices next to the fire.

    Protecting fewer vertices than possible never helps, nor does
    protecting inside a tree the fire can no longer spread through, so
    those branches are skipped; every other placement combination is
    searched.  Guarded to small forests.
    """
    if k < 1:
        raise ValueError("budget k must be >= 1")
    if forest.size > 40:
        raise ValueError(f"forest too large for game search: {forest.size} vertices")
    leaves = forest.leaves
    memo: dict = {}

    def winnable(burning: frozenset, protected: frozenset) -> bool:
        vul = set()
        for u in burning:
            for w in forest.adjacency[u]:
                if w not in burning and w not in protected:
                    vul.add(w)
        if not vul:
            return True  # fire sealed; no leaf burned on the way here
        key = (burning, protected)
        if key in memo:
            return memo[key]
        live_trees = {forest.tree_of[v] for v in vul}
        candidates = [
            v for v in range(forest.size)
            if v not in burning and v not in protected
            and forest.tree_of[v] in live_trees
        ]
        result = False
        for placement in itertools.combinations(candidates, min(k, len(candidates))):
            new_protected = protected | frozenset(placement)
            spread_to = {w for w in vul if w not in new_protected}
            new_burning = burning | spread_to
            if new_burning & leaves:
                continue
            if winnable(new_burning, new_protected):
                result = True
                break
        memo[key] = result
        return result

    start = frozenset(forest.roots)
    if start & leaves:
        return False
    return winnable(start, frozenset())
