"""Planar diagram codes, orientation, moves, and planarity."""

import random

import pytest

from kh.corpus import random_diagrams, reidemeister_pairs
from kh.diagrams import (
    PlanarDiagram,
    braid_pd,
    parse_pd,
    r1_add,
    r1_remove,
    r2_add,
    r2_remove,
    r3,
)

TREFOIL = "X[1,4,2,5]; X[3,6,4,1]; X[5,2,6,3]"
HOPF = "X[1,4,2,3]; X[3,2,4,1]"


def test_parse_and_render():
    d = parse_pd("X[1,1,2,2]")
    assert d.n_crossings == 1 and d.free_loops == 0
    assert parse_pd("O").render() == "O"
    assert parse_pd("X[1,2,2,1]; O; O").free_loops == 2
    again = parse_pd(parse_pd(TREFOIL).render())
    assert again == parse_pd(TREFOIL)


def test_parse_rejects_bad_text():
    for bad in ["", "X[1,2,3]", "Y[1,2,2,1]", "X[1,2,2,0]", "X[1,2,3,4]"]:
        with pytest.raises(ValueError):
            parse_pd(bad)


def test_arc_labels_must_pair_up():
    with pytest.raises(ValueError):
        PlanarDiagram([(1, 2, 3, 3), (1, 2, 4, 5)])


def test_canonical_is_relabel_invariant():
    d = parse_pd(TREFOIL)
    shuffled = parse_pd("X[5,2,6,3]; X[1,4,2,5]; X[3,6,4,1]")
    relabeled = parse_pd("X[11,14,12,15]; X[13,16,14,11]; X[15,12,16,13]")
    assert d == shuffled == relabeled


def test_orientation_signs_anchors():
    pos_curl = parse_pd("X[1,1,2,2]")
    neg_curl = parse_pd("X[1,2,2,1]")
    assert (pos_curl.n_plus, pos_curl.n_minus) == (1, 0)
    assert (neg_curl.n_plus, neg_curl.n_minus) == (0, 1)
    tre = parse_pd(TREFOIL)
    assert (tre.n_plus, tre.n_minus) == (0, 3)
    assert tre.writhe == -3
    assert tre.mirror().writhe == 3


def test_component_counts():
    assert parse_pd("O").n_components() == 1
    assert parse_pd(TREFOIL).n_components() == 1
    assert parse_pd(HOPF).n_components() == 2
    # the three-crossing string that pairs each under-strand with itself
    # traces three components, not a knot
    assert parse_pd("X[1,4,2,3]; X[3,6,4,5]; X[5,2,6,1]").n_components() == 3


def test_braid_closures():
    tre = braid_pd([1, 1, 1], 2)
    assert tre.n_crossings == 3 and tre.writhe == 3
    assert tre.n_components() == 1
    assert braid_pd([1, -2, 1, -2], 3).n_components() == 1
    assert braid_pd([], 2).free_loops == 2
    with pytest.raises(ValueError):
        braid_pd([3], 2)


def test_genus_zero_for_planar_codes():
    for text in ["X[1,1,2,2]", TREFOIL, HOPF]:
        assert parse_pd(text).genus() == 0
    assert braid_pd([1, -2, 1, -2], 3).genus() == 0


def test_genus_detects_nonplanar_codes():
    # gluing two strands of the trefoil by an R2 slide across the diagram
    # gives a valid code whose rotation system does not embed in the plane
    base = braid_pd([1, 1, 1], 2)
    rng = random.Random(3)
    found = 0
    arcs = base.arcs()
    for over in arcs:
        for under in arcs:
            if over == under:
                continue
            after = r2_add(base, over, under)
            if after.genus() > 0:
                found += 1
    assert found > 0
    del rng


def test_r1_add_and_remove_are_inverse():
    d = parse_pd(HOPF)
    up = r1_add(d, arc=1, positive=True)
    assert up.n_crossings == d.n_crossings + 1
    assert up.writhe == d.writhe + 1
    back = r1_remove(up, up.n_crossings - 1)
    assert back.canonical() == d.canonical()
    down = r1_add(d, arc=2, positive=False)
    assert down.writhe == d.writhe - 1


def test_r2_add_and_remove_are_inverse():
    d = braid_pd([1, 1, 1], 2)
    up = r2_add(d, 1, 4)
    assert up.n_crossings == 5
    assert up.writhe == d.writhe
    back = r2_remove(up, 3, 4)
    assert back.canonical() == d.canonical()


def test_r2_remove_rejects_non_bigon():
    d = braid_pd([1, 1, 1], 2)
    with pytest.raises(ValueError):
        r2_remove(d, 0, 1)


def test_r3_slides_the_braid_triangle():
    d = braid_pd([1, 2, 1], 3)
    moved = r3(d, 0, 1, 2)
    assert moved.n_crossings == 3
    assert moved.writhe == d.writhe
    assert moved.canonical() != d.canonical()
    with pytest.raises(ValueError):
        r3(braid_pd([1, 1, 1], 2), 0, 1, 2)


def test_disjoint_union_shifts_labels():
    d = parse_pd(HOPF).disjoint_union(parse_pd("X[1,1,2,2]"))
    assert d.n_crossings == 3
    assert d.n_components() == 3


def test_move_corpus_is_planar_and_typed():
    pairs = reidemeister_pairs(9, seed=7)
    kinds = [kind for _, _, kind in pairs]
    assert kinds == ["r1", "r2", "r3"] * 3
    for before, after, _ in pairs:
        assert before.genus() == 0
        assert after.genus() == 0


def test_diagram_corpus_is_deterministic():
    a = random_diagrams(12, seed=5)
    b = random_diagrams(12, seed=5)
    assert [d.render() for d in a] == [d.render() for d in b]
    assert any(d.n_crossings > 0 for d in a)
    assert all(d.n_crossings <= 8 for d in a)
