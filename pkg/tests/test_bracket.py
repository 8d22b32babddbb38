"""Kauffman bracket state sums and the Jones polynomial."""

import pytest

from kh.bracket import bracket_A, bracket_q, jones_J, jones_V, normalized_f
from kh.corpus import random_diagrams
from kh.diagrams import PlanarDiagram, braid_pd, parse_pd
from kh.laurent import LaurentPoly

TREFOIL = "X[1,4,2,5]; X[3,6,4,1]; X[5,2,6,3]"


def test_circle_anchors():
    circle = parse_pd("O")
    assert bracket_A(circle) == LaurentPoly("A", {-2: -1, 2: -1})
    assert bracket_q(circle) == LaurentPoly("q", {-1: 1, 1: 1})
    assert bracket_q(circle).render() == "q^-1 + q"


def test_curl_ratios_against_the_circle():
    circle_q = bracket_q(parse_pd("O"))
    pos = bracket_q(parse_pd("X[1,1,2,2]"))
    neg = bracket_q(parse_pd("X[1,2,2,1]"))
    assert pos.divexact(circle_q) == LaurentPoly("q", {-1: 1})
    assert neg.divexact(circle_q) == LaurentPoly("q", {2: -1})


def test_curls_normalize_to_the_unknot_jones():
    unknot_J = LaurentPoly("q", {-1: 1, 1: 1})
    assert jones_J(parse_pd("X[1,1,2,2]")) == unknot_J
    assert jones_J(parse_pd("X[1,2,2,1]")) == unknot_J
    assert jones_V(parse_pd("X[1,1,2,2]")).render() == "1"


def test_trefoil_frozen_values():
    tre = parse_pd(TREFOIL)
    assert bracket_A(tre).render() == "A^-7 + A^-3 + A - A^9"
    assert jones_J(tre).render() == "-q^-9 + q^-5 + q^-3 + q^-1"
    # left-handed trefoil, the knot-table V with quarter exponents
    assert jones_V(tre).render() == "-t^-4 + t^-3 + t^-1"
    mirror_J = jones_J(tre.mirror())
    assert mirror_J == LaurentPoly("q", {1: 1, 3: 1, 5: 1, 9: -1})


def test_figure_eight_is_amphichiral():
    f8 = braid_pd([1, -2, 1, -2], 3)
    assert jones_J(f8).render() == "q^-5 + q^5"
    assert jones_J(f8) == jones_J(f8.mirror())


def test_mirror_inverts_the_bracket_variable():
    for d in random_diagrams(15, seed=9, max_crossings=6):
        b = bracket_A(d)
        m = bracket_A(d.mirror())
        flipped = LaurentPoly("A", {-e: c for e, c in b.coeffs.items()})
        assert m == flipped


def test_disjoint_circle_multiplies_by_delta():
    delta = LaurentPoly("q", {-1: 1, 1: 1})
    for d in random_diagrams(10, seed=4, max_crossings=5):
        with_circle = PlanarDiagram(d.crossings, d.free_loops + 1)
        assert bracket_q(with_circle) == bracket_q(d) * delta


def test_jones_at_one_counts_components():
    for d in random_diagrams(20, seed=12, max_crossings=6):
        assert jones_J(d).evaluate_at_one() == 2 ** d.n_components()


def test_normalized_f_of_unknot_is_one():
    assert normalized_f(parse_pd("O")) == LaurentPoly("A", {0: 1})


def test_empty_diagram_is_rejected():
    with pytest.raises(ValueError):
        parse_pd("")
