"""Small categories, nerves, functor homology, and the subdivision check."""

import pytest
from sympy import Matrix as SymMatrix
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from kh.categories import ModuleFunctor, monoid_category, poset_category
from kh.corpus import random_functors
from kh.homology import HomologyGroup, homology
from kh.nerve import (
    barycentric_subdivision,
    embed_cube,
    functor_homology,
    nerve,
    simplex_category,
    subdivision_theorem_check,
)
from kh.simplicial import classifying_space, linearize, moore_complex
from kh.snf import IntMatrix


def _constant_functor(C, rank=1):
    matrix = {f: IntMatrix.identity(rank) for f in C.morphisms}
    F = ModuleFunctor(C, {obj: rank for obj in C.objects}, matrix)
    F.validate()
    return F


def test_poset_category_shape():
    C = poset_category((0, 1, 2), lambda x, y: x <= y)
    C.validate()
    assert len(C.morphisms) == 6
    assert C.identity[1] == (1, 1)
    assert C.compose[((1, 2), (0, 1))] == (0, 2)
    pairs = C.composable_pairs()
    assert all(C.src(g) == C.dst(f) for g, f in pairs)


def test_monoid_category_is_one_object():
    C = monoid_category((0, 1), lambda a, b: a ^ b, 0)
    C.validate()
    assert C.objects == ("*",)
    assert C.compose[(1, 1)] == 0
    assert C.is_identity(0) and not C.is_identity(1)


def test_functor_validation_catches_shape_and_identity():
    C = poset_category((0, 1), lambda x, y: x <= y)
    bad_shape = ModuleFunctor(
        C,
        {0: 1, 1: 2},
        {
            (0, 0): IntMatrix.identity(1),
            (1, 1): IntMatrix.identity(2),
            (0, 1): IntMatrix.identity(1),
        },
    )
    with pytest.raises(ValueError, match="wrong shape"):
        bad_shape.validate()
    bad_identity = ModuleFunctor(
        C,
        {0: 1, 1: 1},
        {
            (0, 0): IntMatrix.from_rows([[2]]),
            (1, 1): IntMatrix.identity(1),
            (0, 1): IntMatrix.identity(1),
        },
    )
    with pytest.raises(ValueError, match="identity"):
        bad_identity.validate()


def test_nerve_counts():
    walking = poset_category((0, 1), lambda x, y: x <= y)
    N = nerve(walking, 2)
    assert [len(N.nondegenerate(k)) for k in range(3)] == [2, 1, 0]
    assert [len(N.cells(k)) for k in range(3)] == [2, 3, 4]
    assert N.check_identities().ok

    N1 = nerve(simplex_category(1), 3)
    assert [len(N1.nondegenerate(k)) for k in range(4)] == [3, 2, 0, 0]

    N2 = nerve(simplex_category(2), 3)
    assert [len(N2.nondegenerate(k)) for k in range(4)] == [7, 12, 6, 0]
    assert N2.check_identities().ok


def test_nerve_of_simplex_category_is_contractible():
    for n in (1, 2):
        N = nerve(simplex_category(n), 3)
        h = homology(moore_complex(linearize(N)))
        assert h[0] == HomologyGroup(1, ())
        assert h[1] == HomologyGroup(0, ())
        assert h[2] == HomologyGroup(0, ())


def test_functor_homology_of_a_point():
    C = poset_category(("x",), lambda a, b: True)
    h = functor_homology(C, _constant_functor(C), 3)
    assert h[0] == HomologyGroup(1, ())
    assert all(g == HomologyGroup(0, ()) for g in h[1:3])


def test_barycentric_counts_and_face_identities():
    import math

    for n in range(5):
        B = barycentric_subdivision(n)
        assert len(B.cells(n)) == math.factorial(n + 1)
        rep = B.check_face_identities()
        assert rep.ok
    B2 = barycentric_subdivision(2)
    assert [len(B2.cells(k)) for k in range(3)] == [7, 12, 6]
    with pytest.raises(ValueError):
        barycentric_subdivision(6)


def test_barycentric_homology_is_a_point():
    for n in (1, 2, 3):
        h = homology(barycentric_subdivision(n).chain_complex())
        assert h[0] == HomologyGroup(1, ())
        assert all(g == HomologyGroup(0, ()) for g in h[1:])


def test_subdivision_theorem_constant_coefficients():
    for n in (1, 2, 3):
        C = simplex_category(n)
        rep = subdivision_theorem_check(n, _constant_functor(C))
        assert rep.ok, rep.text()
        assert rep.category[0] == HomologyGroup(1, ())
        assert all(g == HomologyGroup(0, ()) for g in rep.category[1:])
    with pytest.raises(ValueError):
        subdivision_theorem_check(4, _constant_functor(simplex_category(3)))


def test_subdivision_theorem_seeded_functors():
    for n in (1, 2, 3):
        for F in random_functors(n, 8, seed=n):
            rep = subdivision_theorem_check(n, F)
            assert rep.ok, rep.text()


def test_subdivision_report_text():
    C = simplex_category(1)
    rep = subdivision_theorem_check(1, _constant_functor(C))
    text = rep.text()
    assert text.startswith("subdivision check n=1: ok")
    assert "degree 0:" in text and "degree 1:" in text


def test_cube_embedding_is_functorial():
    for n in (0, 1, 2, 3):
        E = embed_cube(n)
        assert len(E.object_map) == 2 ** n
        assert len(set(E.object_map.values())) == 2 ** n
        # vertex 0 is kept by every image face
        assert all(face[0] == 0 for face in E.object_map.values())
    assert embed_cube(0).object_map == {(): (0,)}
    with pytest.raises(ValueError):
        embed_cube(-1)


def _bar_complex_homology(elements, multiply, unit, top):
    """Group homology straight from the bar complex, via sympy."""
    order = len(elements)
    index = {g: k for k, g in enumerate(elements)}

    def basis(k):
        words = [()]
        for _ in range(k):
            words = [w + (g,) for w in words for g in elements]
        return words

    def boundary(k):
        from_words = basis(k)
        to_words = basis(k - 1)
        to_index = {w: r for r, w in enumerate(to_words)}
        M = [[0] * len(from_words) for _ in to_words]
        for c, w in enumerate(from_words):
            for i in range(k + 1):
                if i == 0:
                    img = w[1:]
                elif i == k:
                    img = w[:-1]
                else:
                    img = w[: i - 1] + (multiply(w[i - 1], w[i]),) + w[i + 1 :]
                M[to_index[img]][c] += (-1) ** i
        return SymMatrix(M)

    groups = []
    for k in range(1, top):
        d_out = boundary(k)
        d_in = boundary(k + 1)
        rank_out = d_out.rank()
        S = sympy_snf(d_in)
        diag = [abs(int(S[i, i])) for i in range(min(S.shape))]
        divisors = [d for d in diag if d]
        free = order ** k - rank_out - len(divisors)
        torsion = tuple(d for d in divisors if d > 1)
        groups.append(HomologyGroup(free, torsion))
    return groups


def test_group_homology_of_z2_three_ways():
    xor = lambda a, b: a ^ b
    oracle = _bar_complex_homology((0, 1), xor, 0, top=3)
    assert oracle == [HomologyGroup(0, (2,)), HomologyGroup(0, ())]

    A = linearize(classifying_space((0, 1), {(0, 0): 0, (0, 1): 1, (1, 0): 1, (1, 1): 0}, 0, 4))
    via_space = homology(moore_complex(A))
    assert via_space[1] == oracle[0]
    assert via_space[2] == oracle[1]

    C = monoid_category((0, 1), xor, 0)
    via_functor = functor_homology(C, _constant_functor(C), 4)
    assert via_functor[1] == oracle[0]
    assert via_functor[2] == oracle[1]
