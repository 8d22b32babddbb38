"""Simplicial sets and modules: builders, identities, Moore complexes."""

import pytest

from kh.corpus import (
    builtin_objects,
    corrupted_module,
    corrupted_set,
    random_modules,
    random_simplicial_sets,
)
from kh.homology import HomologyGroup, homology
from kh.simplicial import (
    Mod2Points,
    chain_complex,
    check_identities,
    classifying_space,
    constant_module,
    homologous_witness,
    horn,
    kan_check,
    linearize,
    loop_space,
    moore_complex,
    path_space,
    product,
    product_components,
    standard_simplex,
)

Z2_TABLE = {(0, 0): 0, (0, 1): 1, (1, 0): 1, (1, 1): 0}


def _bz2(truncation=4):
    return classifying_space((0, 1), Z2_TABLE, 0, truncation)


def test_standard_simplex_counts():
    X = standard_simplex(2, truncation=3)
    assert [len(X.nondegenerate(n)) for n in range(4)] == [3, 3, 1, 0]
    assert [len(X.cells(n)) for n in range(4)] == [3, 6, 10, 15]
    assert X.check_identities().ok


def test_horn_drops_one_facet_and_the_interior():
    L = horn(2, 1, truncation=2)
    assert sorted(L.generators) == [((0,), (1,), (2,)), ((0, 1), (1, 2))]
    assert L.check_identities().ok
    with pytest.raises(ValueError):
        horn(2, 5)


def test_builtin_objects_pass_identity_sweeps():
    objs = builtin_objects()
    assert len(objs) == 19
    names = [name for name, _ in objs]
    assert len(set(names)) == 19
    for name, obj in objs:
        rep = check_identities(obj)
        assert rep.ok, "%s: %s" % (name, rep.text())


def test_corrupted_controls_are_flagged():
    bad_set = corrupted_set()
    rep = check_identities(bad_set)
    assert not rep.ok
    assert rep.violations
    bad_mod = corrupted_module()
    rep2 = check_identities(bad_mod)
    assert not rep2.ok


def test_seeded_objects_pass_identity_sweeps():
    for X in random_simplicial_sets(10, seed=3):
        assert X.check_identities().ok
    for M in random_modules(10, seed=3):
        assert M.check_identities().ok


def test_prism_top_cells():
    # Delta[n] x Delta[1] has n+1 nondegenerate top cells.
    expected_all = {
        1: [4, 5, 2],
        2: [6, 12, 10, 3],
        3: [8, 22, 28, 17, 4],
    }
    for n, counts in expected_all.items():
        A = standard_simplex(n, truncation=n + 1)
        B = standard_simplex(1, truncation=n + 1)
        P = product(A, B, truncation=n + 1)
        got = [len(P.nondegenerate(k)) for k in range(n + 2)]
        assert got == counts
        assert got[n + 1] == n + 1
        assert P.check_identities().ok


def test_product_components_invert_pairing():
    X = standard_simplex(1, truncation=2)
    Y = standard_simplex(1, truncation=2)
    P = product(X, Y, truncation=2)
    for n in range(3):
        for cell in P.cells(n):
            x, y = product_components(P, X, Y, cell)
            assert cell_round_trips(P, X, Y, cell, x, y, n)


def cell_round_trips(P, X, Y, cell, x, y, n):
    # components are genuine cells of the factors at the same level
    return x in X.cells(n) and y in Y.cells(n)


def test_linearize_matches_cell_counts():
    X = standard_simplex(2, truncation=3)
    M = linearize(X)
    assert M.dims == tuple(len(X.cells(n)) for n in range(4))
    assert M.check_identities().ok


def test_simplex_chain_homology_is_a_point():
    # reliable through the truncation; the top degree carries edge junk
    for n in (1, 2, 3):
        C = chain_complex(standard_simplex(n, truncation=n + 1))
        h = homology(C)
        assert h[0] == HomologyGroup(1, ())
        assert all(g == HomologyGroup(0, ()) for g in h[1 : n + 1])


def test_moore_agrees_with_chains_on_seeded_modules():
    for M in random_modules(12, seed=11):
        hm = homology(M.moore_complex())
        hc = homology(M.chain_complex())
        assert hm[: M.truncation] == hc[: M.truncation]


def test_moore_ranks_drop_degenerate_summands():
    M = linearize(standard_simplex(1, truncation=3))
    assert M.moore_complex().ranks == (2, 1, 0, 0)


def test_classifying_space_guards():
    with pytest.raises(ValueError, match="unit is not an element"):
        classifying_space(("e", "a"), {}, "x", 2)
    open_table = dict(Z2_TABLE)
    open_table[(1, 1)] = 7
    with pytest.raises(ValueError, match="not closed"):
        classifying_space((0, 1), open_table, 0, 2)
    skew = {
        ("e", "e"): "e", ("e", "a"): "a", ("e", "b"): "b",
        ("a", "e"): "a", ("a", "a"): "e", ("a", "b"): "a",
        ("b", "e"): "b", ("b", "a"): "b", ("b", "b"): "e",
    }
    with pytest.raises(ValueError, match="not associative"):
        classifying_space(("e", "a", "b"), skew, "e", 2)
    left_zero = {
        ("e", "e"): "e", ("e", "a"): "e",
        ("a", "e"): "a", ("a", "a"): "a",
    }
    with pytest.raises(ValueError, match="unit law fails"):
        classifying_space(("e", "a"), left_zero, "e", 2)
    idem = {
        ("e", "e"): "e", ("e", "a"): "a",
        ("a", "e"): "a", ("a", "a"): "a",
    }
    with pytest.raises(ValueError, match="has no inverse"):
        classifying_space(("e", "a"), idem, "e", 2)


def test_bz2_moore_homology():
    A = linearize(_bz2(4))
    h = homology(moore_complex(A))
    assert h[0] == HomologyGroup(1, ())
    assert h[1] == HomologyGroup(0, (2,))
    assert h[2] == HomologyGroup(0, ())
    assert h[3] == HomologyGroup(0, (2,))


def test_klein_four_moore_homology():
    table = {}
    for a in range(4):
        for b in range(4):
            table[(a, b)] = a ^ b
    A = linearize(classifying_space((0, 1, 2, 3), table, 0, 3))
    h = homology(moore_complex(A))
    assert h[0] == HomologyGroup(1, ())
    assert h[1] == HomologyGroup(0, (2, 2))
    assert h[2] == HomologyGroup(0, (2,))


def test_trivial_group_classifying_space_vanishes():
    A = linearize(classifying_space(("e",), {("e", "e"): "e"}, "e", 4))
    h = homology(moore_complex(A))
    assert h[0] == HomologyGroup(1, ())
    assert all(g == HomologyGroup(0, ()) for g in h[1:])


def test_path_space_is_contractible_below_truncation():
    A = linearize(_bz2(4))
    PA = path_space(A)
    h = homology(chain_complex(PA))
    assert h[0] == HomologyGroup(1, ())
    # degrees below the truncation edge vanish
    assert h[1] == HomologyGroup(0, ())
    assert h[2] == HomologyGroup(0, ())


def test_loop_space_shifts_homotopy_down():
    A = linearize(_bz2(4))
    hA = homology(moore_complex(A))
    LA = loop_space(A)
    hL = homology(moore_complex(LA))
    # pi_k(Loop A) = pi_{k+1}(A) away from the truncation edge
    for k in range(LA.truncation):
        assert hL[k] == hA[k + 1]


def test_path_space_needs_room():
    with pytest.raises(ValueError):
        path_space(constant_module(1, truncation=1))
    with pytest.raises(TypeError):
        path_space(standard_simplex(2))


def test_homologous_witness_on_the_interval():
    S = linearize(standard_simplex(1, truncation=3))
    # basis at level 1: s0<0>, s0<1>, <01>
    w = homologous_witness(S, (1, 0, 0), (0, 0, 1))
    assert w == (0, -1, 0, 1)
    with pytest.raises(ValueError, match="level-1 vectors"):
        homologous_witness(S, (1, 0), (0, 1))
    with pytest.raises(TypeError):
        homologous_witness(standard_simplex(1), (1, 0), (0, 1))


def test_kan_condition_on_mod2_points():
    P = Mod2Points(constant_module(1, truncation=3))
    for n in (1, 2, 3):
        rep = kan_check(P, n)
        assert not rep.unfillable
        assert all(total == filled for total, filled in rep.counts.values())


def test_plain_simplex_fails_outer_horns():
    rep = kan_check(standard_simplex(2, truncation=3), 2)
    assert rep.unfillable
    # inner horns of the 2-simplex do fill
    total, filled = rep.counts[1]
    assert total == filled
