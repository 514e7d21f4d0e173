"""Quiver structure, paths, cycle enumeration, and contraction."""

from __future__ import annotations

import random

import pytest

from quiverline import (
    Arrow,
    InvalidCycle,
    InvalidInput,
    InvalidPath,
    Path,
    Quiver,
    acyclic_paths,
    compose,
    contract_cycle,
    enumerate_simple_cycles,
    has_transverse_cycles,
    make_simple_cycle,
    path_source,
    path_target,
    rotate_cycle_to,
    validate_path,
)
from quiverline.random_quivers import random_reduced_transverse
from helpers import ay
from oracles import count_acyclic_paths


def quiver(vertices, arrows) -> Quiver:
    return Quiver(tuple(vertices), tuple(Arrow(*a) for a in arrows))


TWO_CYCLE = quiver("vw", [("a", "v", "w"), ("b", "w", "v")])
TRIANGLE_CHORD = quiver(
    [0, 1, 2],
    [("r", 0, 1), ("s", 1, 2), ("t", 2, 0), ("chord", 0, 2)],
)


class TestConstruction:
    def test_rejects_duplicate_ids(self):
        with pytest.raises(InvalidInput):
            quiver("v", [("a", "v", "v"), ("a", "v", "v")])

    def test_rejects_dangling_endpoints(self):
        with pytest.raises(InvalidInput):
            quiver("v", [("a", "v", "w")])

    def test_json_round_trip(self):
        q = TRIANGLE_CHORD
        assert Quiver.from_json(q.to_json()) == q


class TestPaths:
    def test_trivial_path(self):
        p = Path.trivial("v")
        assert p.is_trivial()
        assert path_source(TWO_CYCLE, p) == "v"
        assert path_target(TWO_CYCLE, p) == "v"

    def test_validate_rejects_noncomposable(self):
        with pytest.raises(InvalidPath):
            validate_path(TWO_CYCLE, Path("v", ("a", "a")))

    def test_compose_in_application_order(self):
        p = compose(TWO_CYCLE, Path("v", ("a",)), Path("w", ("b",)))
        assert p.arrows == ("a", "b")
        assert path_target(TWO_CYCLE, p) == "v"


class TestSimpleCycles:
    def test_two_vertex_cycle(self):
        cycles = enumerate_simple_cycles(TWO_CYCLE)
        assert len(cycles) == 1

    def test_acyclic_quiver_has_none(self):
        q = quiver("vw", [("a", "v", "w")])
        assert enumerate_simple_cycles(q) == ()

    def test_three_petals_give_three_cycles(self):
        glued = ay((2, 2, 2), ["inf", "0", "1"])
        assert len(enumerate_simple_cycles(glued.quiver)) == 3

    def test_rotation_classes_are_collapsed(self):
        # The triangle has three rotations but one class.
        q = quiver([0, 1, 2], [("r", 0, 1), ("s", 1, 2), ("t", 2, 0)])
        assert len(enumerate_simple_cycles(q)) == 1

    def test_loop_counts(self):
        q = quiver("v", [("l", "v", "v")])
        cycles = enumerate_simple_cycles(q)
        assert len(cycles) == 1
        assert has_transverse_cycles(q)

    def test_rotate_cycle_to(self):
        q = quiver([0, 1, 2], [("r", 0, 1), ("s", 1, 2), ("t", 2, 0)])
        (cycle,) = enumerate_simple_cycles(q)
        rotated = rotate_cycle_to(q, cycle, 1)
        assert path_source(q, rotated) == 1
        assert path_target(q, rotated) == 1
        assert rotated.arrows[0] == "s"

    def test_make_simple_cycle_rejects_non_cycles(self):
        with pytest.raises(InvalidCycle):
            make_simple_cycle(TRIANGLE_CHORD, ("r", "s"))


class TestTransversality:
    def test_petals_are_transverse(self):
        for weights, points in [((2,), ["0"]), ((2, 3), ["inf", "0"]),
                                ((2, 2, 2), ["inf", "0", "1"])]:
            assert has_transverse_cycles(ay(weights, points).quiver)

    def test_shared_edge_breaks_it(self):
        q = quiver("vw", [("a", "v", "w"), ("b", "w", "v"), ("b2", "w", "v")])
        assert not has_transverse_cycles(q)

    def test_single_loop_is_transverse(self):
        q = quiver("v", [("l", "v", "v")])
        assert has_transverse_cycles(q)


class TestAcyclicPaths:
    def test_isolated_vertex(self):
        q = quiver("v", [])
        paths = acyclic_paths(q)
        assert paths == (Path.trivial("v"),)

    def test_single_petal(self):
        glued = ay((2,), ["0"])
        assert len(acyclic_paths(glued.quiver)) == 4

    def test_two_petals(self):
        glued = ay((2, 2), ["inf", "0"])
        assert len(acyclic_paths(glued.quiver)) == 9

    def test_matches_recursive_count(self):
        rng = random.Random(200)
        for _ in range(40):
            lq = random_reduced_transverse(rng, max_vertices=5)
            assert len(acyclic_paths(lq.quiver)) == count_acyclic_paths(lq.quiver)

    def test_no_repeated_vertices_and_bounded_length(self):
        rng = random.Random(201)
        for _ in range(25):
            q = random_reduced_transverse(rng, max_vertices=6).quiver
            for p in acyclic_paths(q):
                visited = [path_source(q, p)]
                for aid in p.arrows:
                    visited.append(q.arrow(aid).tgt)
                assert len(set(visited)) == len(visited)
                assert len(p.arrows) <= len(q.vertices) - 1

    def test_deterministic_order(self):
        q = ay((2, 2), ["inf", "0"]).quiver
        paths = acyclic_paths(q)
        lengths = [len(p.arrows) for p in paths]
        assert lengths == sorted(lengths)
        assert paths == acyclic_paths(quiver(q.vertices, [
            (a.id, a.src, a.tgt) for a in q.arrows]))


class TestContraction:
    def test_two_vertex_cycle_to_point(self):
        (cycle,) = enumerate_simple_cycles(TWO_CYCLE)
        contracted, vmap = contract_cycle(TWO_CYCLE, cycle)
        assert len(contracted.vertices) == 1
        assert contracted.arrows == ()
        assert set(vmap.values()) == set(contracted.vertices)

    def test_contract_one_of_two_petals(self):
        glued = ay((2, 2), ["inf", "0"]).quiver
        cycles = enumerate_simple_cycles(glued)
        contracted, _ = contract_cycle(glued, cycles[0])
        assert len(contracted.vertices) == 2
        assert len(contracted.arrows) == 2

    def test_triangle_with_chord_leaves_a_loop(self):
        cycles = enumerate_simple_cycles(TRIANGLE_CHORD)
        triangle = next(c for c in cycles if len(c.arrows) == 3)
        contracted, vmap = contract_cycle(TRIANGLE_CHORD, triangle)
        assert len(contracted.vertices) == 1
        assert len(contracted.arrows) == 1
        (loop,) = contracted.arrows
        assert loop.src == loop.tgt

    def test_rejects_foreign_cycle(self):
        (cycle,) = enumerate_simple_cycles(TWO_CYCLE)
        with pytest.raises(InvalidCycle):
            contract_cycle(TRIANGLE_CHORD, cycle)

    def test_size_bookkeeping(self):
        rng = random.Random(202)
        for _ in range(30):
            q = random_reduced_transverse(rng, max_vertices=6).quiver
            for cycle in enumerate_simple_cycles(q):
                contracted, _ = contract_cycle(q, cycle)
                assert len(contracted.vertices) == \
                    len(q.vertices) - (len(cycle.arrows) - 1)
                assert len(contracted.arrows) == \
                    len(q.arrows) - len(cycle.arrows)

    def test_contraction_preserves_transversality(self):
        rng = random.Random(203)
        checked = 0
        for _ in range(40):
            q = random_reduced_transverse(rng, max_vertices=6).quiver
            assert has_transverse_cycles(q)
            for cycle in enumerate_simple_cycles(q):
                contracted, _ = contract_cycle(q, cycle)
                assert has_transverse_cycles(contracted)
                checked += 1
        assert checked > 20
