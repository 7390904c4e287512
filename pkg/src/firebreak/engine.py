"""The firefighter process: alternating protect and spread turns.

Turn 1 holds the initial fire.  A protection move advances an odd turn to
the next even turn, and a spread advances an even turn to the next odd
one, replacing the burning set with its closed neighborhood minus the
protected set.  States are immutable snapshots, so full traces can be
kept and replayed.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field, replace
from typing import IO

from . import hexgrid


class IllegalMoveError(Exception):
    """A protection move that the process rules forbid."""

    def __init__(self, turn: int, vertex, reason: str):
        super().__init__(f"turn {turn}: cannot protect {vertex}: {reason}")
        self.turn = turn
        self.vertex = vertex
        self.reason = reason


class HexGraph:
    """The infinite hexagonal grid."""

    def neighbors(self, v):
        return hexgrid.neighbor_tuple(v)

    def __contains__(self, v):
        return isinstance(v, tuple) and len(v) == 2 and hexgrid.is_vertex(*v)

    def __repr__(self):
        return "HexGraph()"


class ExplicitGraph:
    """A finite graph given by an adjacency mapping (symmetrized on input)."""

    def __init__(self, adjacency: Mapping):
        adj: dict = {v: set(ns) for v, ns in adjacency.items()}
        for v, ns in list(adj.items()):
            for w in ns:
                adj.setdefault(w, set()).add(v)
        self._adj = {v: tuple(sorted(ns)) for v, ns in adj.items()}

    def neighbors(self, v):
        return self._adj[v]

    def __contains__(self, v):
        return v in self._adj

    def __repr__(self):
        return f"ExplicitGraph({len(self._adj)} vertices)"


INFINITE_HEX = HexGraph()


def _as_graph(graph):
    if graph == "infinite-hex" or isinstance(graph, HexGraph):
        return INFINITE_HEX
    if isinstance(graph, ExplicitGraph):
        return graph
    if isinstance(graph, Mapping):
        return ExplicitGraph(graph)
    raise TypeError(f"not a graph handle: {graph!r}")


@dataclass(frozen=True)
class SimState:
    """One configuration of the process.

    ``frontier`` is a superset of the actively burning vertices: right
    after a spread only the newly burned vertices can still pass fire on,
    so each step costs time proportional to the fire's perimeter, not its
    area.
    """

    turn: int
    burning: frozenset
    protected: frozenset
    graph: object = field(repr=False, compare=False)
    frontier: frozenset = field(repr=False, compare=False)


def initial_state(fire_at: Iterable, graph) -> SimState:
    """Turn-1 configuration: ``fire_at`` burning, nothing protected."""
    g = _as_graph(graph)
    fire = frozenset(fire_at)
    if not fire:
        raise ValueError("initial fire set must be non-empty")
    for v in fire:
        if v not in g:
            raise ValueError(f"initial fire vertex {v!r} is not in the graph")
    return SimState(turn=1, burning=fire, protected=frozenset(), graph=g, frontier=fire)


def protect(state: SimState, vertices: Sequence) -> SimState:
    """Advance an odd turn to the next even turn by protecting ``vertices``.

    The list may be empty (firefighters may idle).  Protecting a burning,
    already-protected, repeated, or non-grid vertex raises
    IllegalMoveError: a schedule that tries is buggy, and surfacing that
    beats silently ignoring the move.
    """
    if state.turn % 2 == 0:
        raise ValueError(f"protect called on even turn {state.turn}")
    move_turn = state.turn + 1
    placed: set = set()
    for v in vertices:
        if v in placed:
            raise IllegalMoveError(move_turn, v, "duplicate vertex in move")
        if v not in state.graph:
            raise IllegalMoveError(move_turn, v, "not a vertex of the graph")
        if v in state.burning:
            raise IllegalMoveError(move_turn, v, "vertex is on fire")
        if v in state.protected:
            raise IllegalMoveError(move_turn, v, "vertex already protected")
        placed.add(v)
    return replace(state, turn=move_turn, protected=state.protected | placed)


def spread(state: SimState) -> SimState:
    """Advance an even turn to the next odd turn by spreading the fire."""
    if state.turn % 2 == 1:
        raise ValueError(f"spread called on odd turn {state.turn}")
    newly = set()
    for u in state.frontier:
        for w in state.graph.neighbors(u):
            if w not in state.burning and w not in state.protected:
                newly.add(w)
    return replace(
        state,
        turn=state.turn + 1,
        burning=state.burning | newly,
        frontier=frozenset(newly),
    )


def vulnerable(state: SimState) -> frozenset:
    """Unprotected, unburned vertices adjacent to the fire."""
    out = set()
    for u in state.frontier:
        for w in state.graph.neighbors(u):
            if w not in state.burning and w not in state.protected:
                out.add(w)
    return frozenset(out)


def actively_burning(state: SimState) -> frozenset:
    """Burning vertices that can still pass the fire on."""
    out = set()
    for u in state.frontier:
        for w in state.graph.neighbors(u):
            if w not in state.burning and w not in state.protected:
                out.add(u)
                break
    return frozenset(out)


@dataclass(frozen=True)
class ProtectionSchedule:
    """Ordered protection moves plus the per-turn budget.

    ``bonus_turn``, when set, is the single even turn on which one extra
    placement beyond ``budget`` is allowed.  Structural problems (odd or
    unsorted turns) fail construction; budget compliance is checked while
    running, so an over-budget schedule yields an inspectable outcome.
    """

    moves: tuple
    budget: int = 1
    bonus_turn: int | None = None

    def __post_init__(self):
        if self.budget < 1:
            raise ValueError("budget must be positive")
        norm = tuple((t, tuple(vs)) for t, vs in self.moves)
        object.__setattr__(self, "moves", norm)
        last = 0
        for t, vs in norm:
            if t <= 0 or t % 2:
                raise ValueError(f"move turns must be positive and even, got {t}")
            if t <= last:
                raise ValueError("moves must be sorted strictly by turn")
            if not vs:
                raise ValueError(f"empty vertex list at turn {t}")
            last = t
        if self.bonus_turn is not None and self.bonus_turn % 2:
            raise ValueError("bonus turn must be even")

    def by_turn(self) -> dict:
        return dict(self.moves)

    @property
    def final_turn(self) -> int:
        return self.moves[-1][0] if self.moves else 0

    @property
    def placement_count(self) -> int:
        return sum(len(vs) for _, vs in self.moves)


@dataclass(frozen=True)
class Contained:
    turn: int
    burned_count: int


@dataclass(frozen=True)
class NotContainedByMaxTurn:
    max_turn: int


@dataclass(frozen=True)
class IllegalMove:
    turn: int
    vertex: object
    reason: str


def run_schedule(initial: SimState, schedule: ProtectionSchedule, max_turn: int):
    """Alternate protections and spreads until containment, an illegal
    move, or ``max_turn``.

    Containment is the vulnerable-set-empty fixpoint: once no unprotected
    vertex touches the fire, nothing can ever burn again.  Returns
    ``(trace, outcome)`` with one state per turn, so a bad schedule can be
    replayed and inspected instead of blowing up mid-run.
    """
    if initial.turn != 1:
        raise ValueError("run_schedule starts from a turn-1 state")
    pending = schedule.by_turn()
    state = initial
    trace = [state]
    while True:
        if state.turn % 2 == 1:
            if not vulnerable(state):
                return trace, Contained(turn=state.turn, burned_count=len(state.burning))
            if state.turn >= max_turn:
                return trace, NotContainedByMaxTurn(max_turn=max_turn)
            move_turn = state.turn + 1
            placement = pending.pop(move_turn, ())
            limit = schedule.budget + (1 if move_turn == schedule.bonus_turn else 0)
            if len(placement) > limit:
                return trace, IllegalMove(
                    move_turn, placement[limit],
                    f"{len(placement)} placements exceed budget {limit}")
            try:
                state = protect(state, placement)
            except IllegalMoveError as err:
                return trace, IllegalMove(err.turn, err.vertex, err.reason)
        else:
            if state.turn >= max_turn:
                return trace, NotContainedByMaxTurn(max_turn=max_turn)
            state = spread(state)
        trace.append(state)


def _json_vertex(v):
    return list(v) if isinstance(v, tuple) else v


def write_trace_jsonl(trace: Sequence[SimState], fp: IO[str]) -> None:
    """One JSON object per line: turn plus sorted burning/protected lists."""
    for state in trace:
        fp.write(json.dumps(
            {
                "turn": state.turn,
                "burning": [_json_vertex(v) for v in sorted(state.burning)],
                "protected": [_json_vertex(v) for v in sorted(state.protected)],
            },
            sort_keys=True,
        ))
        fp.write("\n")
