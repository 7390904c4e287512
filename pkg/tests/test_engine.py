"""Process-semantics tests for the burn/protect engine."""

import io
import json

import pytest

from firebreak import engine, hexgrid
from firebreak.engine import (
    Contained,
    IllegalMove,
    IllegalMoveError,
    NotContainedByMaxTurn,
    ProtectionSchedule,
)

F = (0, 0)


def hex_start(fire={F}):
    return engine.initial_state(fire, "infinite-hex")


def path_graph(length):
    labels = [f"v{i}" for i in range(length)]
    adj = {a: {b} for a, b in zip(labels, labels[1:])}
    adj[labels[-1]] = set()
    return labels, adj


class TestInitialState:
    def test_hex(self):
        s = hex_start()
        assert (s.turn, s.burning, s.protected) == (1, {F}, frozenset())

    def test_explicit(self):
        labels, adj = path_graph(4)
        s = engine.initial_state({labels[0]}, adj)
        assert s.turn == 1 and s.burning == {labels[0]}

    def test_empty_fire_rejected(self):
        with pytest.raises(ValueError):
            engine.initial_state(set(), "infinite-hex")

    def test_fire_off_grid_rejected(self):
        with pytest.raises(ValueError):
            engine.initial_state({(0, 1)}, "infinite-hex")


class TestProtect:
    def test_advances_to_even_turn(self):
        s = engine.protect(hex_start(), [(1, -1)])
        assert s.turn == 2
        assert s.protected == {(1, -1)}
        assert s.burning == {F}

    def test_burning_vertex_rejected(self):
        with pytest.raises(IllegalMoveError):
            engine.protect(hex_start(), [F])

    def test_reprotection_rejected(self):
        s = engine.spread(engine.protect(hex_start(), [(1, -1)]))
        with pytest.raises(IllegalMoveError):
            engine.protect(s, [(1, -1)])

    def test_duplicate_rejected(self):
        with pytest.raises(IllegalMoveError):
            engine.protect(hex_start(), [(1, -1), (1, -1)])

    def test_empty_placement_allowed(self):
        s = engine.protect(hex_start(), [])
        assert s.turn == 2 and not s.protected

    def test_even_turn_rejected(self):
        s = engine.protect(hex_start(), [])
        with pytest.raises(ValueError):
            engine.protect(s, [])


class TestSpread:
    def test_respects_protection(self):
        s = engine.spread(engine.protect(hex_start(), [(1, -1)]))
        assert s.burning == {F, (0, 2), (-1, -1)}

    def test_unprotected_spread_is_ball(self):
        s = engine.spread(engine.protect(hex_start(), []))
        assert s.burning == hexgrid.ball(F, 1)
        assert len(s.burning) == 4

    def test_fully_blocked_fire_is_fixpoint(self):
        s = engine.protect(hex_start(), list(hexgrid.neighbors(F)))
        s = engine.spread(s)
        assert s.burning == {F}
        assert engine.vulnerable(s) == frozenset()
        again = engine.spread(engine.protect(s, []))
        assert again.burning == {F}

    def test_odd_turn_rejected(self):
        with pytest.raises(ValueError):
            engine.spread(hex_start())


class TestVulnerableAndActive:
    def test_open_fire(self):
        s = hex_start()
        assert engine.vulnerable(s) == {(0, 2), (1, -1), (-1, -1)}
        assert engine.actively_burning(s) == {F}

    def test_sealed_fire(self):
        s = engine.spread(engine.protect(hex_start(), list(hexgrid.neighbors(F))))
        assert engine.vulnerable(s) == frozenset()
        assert engine.actively_burning(s) == frozenset()

    def test_interior_is_not_active(self):
        # two free spreads: the origin is surrounded by fire and inert
        s = hex_start()
        for _ in range(2):
            s = engine.spread(engine.protect(s, []))
        assert F not in engine.actively_burning(s)
        assert engine.actively_burning(s) == frozenset(hexgrid.shell(F, 2).members)


class TestRunSchedule:
    def test_free_burn_hits_max_turn(self):
        trace, outcome = engine.run_schedule(
            hex_start(), ProtectionSchedule(()), max_turn=9)
        assert outcome == NotContainedByMaxTurn(max_turn=9)
        assert trace[-1].turn == 9
        assert trace[-1].burning == hexgrid.ball(F, 4)
        assert len(trace[-1].burning) == 31

    def test_free_burn_is_ball_at_every_spread_up_to_20(self):
        trace, _ = engine.run_schedule(
            hex_start(), ProtectionSchedule(()), max_turn=41)
        for state in trace[::2]:
            assert state.burning == hexgrid.ball(F, state.turn // 2)

    def test_path_contained(self):
        labels, adj = path_graph(3)
        start = engine.initial_state({labels[0]}, adj)
        sched = ProtectionSchedule(((2, (labels[1],)),))
        trace, outcome = engine.run_schedule(start, sched, max_turn=50)
        assert outcome == Contained(turn=3, burned_count=1)

    def test_budget_violation_reported(self):
        sched = ProtectionSchedule(((2, ((1, -1), (1, 3))),), budget=1)
        trace, outcome = engine.run_schedule(hex_start(), sched, max_turn=10)
        assert isinstance(outcome, IllegalMove)
        assert outcome.turn == 2

    def test_bonus_turn_allows_one_extra(self):
        sched = ProtectionSchedule(
            ((2, ((1, -1), (1, 3))),), budget=1, bonus_turn=2)
        trace, outcome = engine.run_schedule(hex_start(), sched, max_turn=4)
        assert not isinstance(outcome, IllegalMove)
        assert trace[1].protected == {(1, -1), (1, 3)}

    def test_illegal_vertex_reported_not_raised(self):
        sched = ProtectionSchedule(((2, (F,)),))
        trace, outcome = engine.run_schedule(hex_start(), sched, max_turn=6)
        assert isinstance(outcome, IllegalMove)
        assert outcome.vertex == F
        assert trace[-1].turn == 1

    def test_monotone_growth(self):
        sched = ProtectionSchedule(((2, ((1, -1),)), (6, ((2, 0),))))
        trace, _ = engine.run_schedule(hex_start(), sched, max_turn=11)
        for a, b in zip(trace, trace[1:]):
            assert a.burning <= b.burning
            assert a.protected <= b.protected
            assert b.turn == a.turn + 1

    def test_burning_within_spread_radius(self):
        trace, _ = engine.run_schedule(hex_start(), ProtectionSchedule(()), max_turn=13)
        for state in trace:
            spreads = state.turn // 2
            assert all(hexgrid.dist_from_origin(v) <= spreads for v in state.burning)


class TestFrontierEquivalence:
    """The engine only expands the frontier; a naive full-scan of the
    burning set must agree with it state for state."""

    @staticmethod
    def naive_next_burning(state):
        out = set(state.burning)
        for u in state.burning:
            for w in state.graph.neighbors(u):
                if w not in state.protected:
                    out.add(w)
        return out

    @staticmethod
    def naive_vulnerable(state):
        out = set()
        for u in state.burning:
            for w in state.graph.neighbors(u):
                if w not in state.burning and w not in state.protected:
                    out.add(w)
        return out

    def test_hex_run_matches_naive(self):
        import random

        rng = random.Random(8128)
        state = hex_start()
        for _ in range(14):
            assert engine.vulnerable(state) == self.naive_vulnerable(state)
            # protect a couple of random legal vertices, then spread
            candidates = sorted(self.naive_vulnerable(state))
            picks = rng.sample(candidates, min(2, len(candidates)))
            protected = engine.protect(state, picks)
            expected = self.naive_next_burning(protected)
            state = engine.spread(protected)
            assert state.burning == expected

    def test_random_explicit_graphs_match_naive(self):
        import random

        rng = random.Random(4950)
        for _ in range(25):
            n = rng.randint(2, 10)
            adj = {v: set() for v in range(n)}
            for _ in range(rng.randint(1, 2 * n)):
                a, b = rng.randrange(n), rng.randrange(n)
                if a != b:
                    adj[a].add(b)
            state = engine.initial_state({rng.randrange(n)}, adj)
            for _ in range(6):
                assert engine.vulnerable(state) == self.naive_vulnerable(state)
                free = sorted(set(range(n)) - state.burning - state.protected)
                picks = rng.sample(free, min(1, len(free)))
                protected = engine.protect(state, picks)
                expected = self.naive_next_burning(protected)
                state = engine.spread(protected)
                assert state.burning == expected


class TestScheduleValidation:
    def test_odd_turn_rejected(self):
        with pytest.raises(ValueError):
            ProtectionSchedule(((3, ((1, -1),)),))

    def test_unsorted_rejected(self):
        with pytest.raises(ValueError):
            ProtectionSchedule(((4, ((1, -1),)), (2, ((1, 3),))))

    def test_empty_move_rejected(self):
        with pytest.raises(ValueError):
            ProtectionSchedule(((2, ()),))

    def test_zero_budget_rejected(self):
        with pytest.raises(ValueError):
            ProtectionSchedule((), budget=0)


class TestTraceExport:
    def test_jsonl_round_trip(self):
        sched = ProtectionSchedule(((2, ((1, -1),)),))
        trace, _ = engine.run_schedule(hex_start(), sched, max_turn=5)
        buf = io.StringIO()
        engine.write_trace_jsonl(trace, buf)
        lines = [json.loads(line) for line in buf.getvalue().splitlines()]
        assert [d["turn"] for d in lines] == [1, 2, 3, 4, 5]
        assert lines[1]["protected"] == [[1, -1]]
        for d in lines:
            assert d["burning"] == sorted(d["burning"])

    def test_deterministic(self):
        sched = ProtectionSchedule(((2, ((1, -1),)),))
        outs = []
        for _ in range(2):
            trace, _ = engine.run_schedule(hex_start(), sched, max_turn=7)
            buf = io.StringIO()
            engine.write_trace_jsonl(trace, buf)
            outs.append(buf.getvalue())
        assert outs[0] == outs[1]
