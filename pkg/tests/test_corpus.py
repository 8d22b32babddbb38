"""The seeded fuzz corpora: deterministic, valid by construction."""

from kh.corpus import (
    builtin_objects,
    corrupted_module,
    corrupted_set,
    random_complexes,
    random_diagrams,
    random_functors,
    random_modules,
    random_simplicial_sets,
    reidemeister_pairs,
)
from kh.simplicial import check_identities


def test_diagrams_are_deterministic_and_bounded():
    a = random_diagrams(15, seed=42)
    b = random_diagrams(15, seed=42)
    assert [d.render() for d in a] == [d.render() for d in b]
    assert all(d.n_crossings <= 8 for d in a)
    c = random_diagrams(15, seed=43)
    assert [d.render() for d in a] != [d.render() for d in c]


def test_diagrams_are_planar():
    for d in random_diagrams(25, seed=9):
        assert d.genus() == 0


def test_move_pairs_cycle_kinds_and_stay_planar():
    pairs = reidemeister_pairs(9, seed=5)
    assert [kind for _, _, kind in pairs] == ["r1", "r2", "r3"] * 3
    for before, after, _ in pairs:
        assert before.genus() == 0
        assert after.genus() == 0
    again = reidemeister_pairs(9, seed=5)
    assert [
        (x.render(), y.render(), k) for x, y, k in pairs
    ] == [(x.render(), y.render(), k) for x, y, k in again]


def test_sets_and_modules_pass_identities():
    for X in random_simplicial_sets(8, seed=21):
        assert X.check_identities().ok
    for M in random_modules(8, seed=21):
        assert M.check_identities().ok


def test_complexes_are_deterministic():
    a = random_complexes(6, seed=2)
    b = random_complexes(6, seed=2)
    assert [(C.ranks, {k: C.boundary(k).to_rows() for k in range(1, C.top + 1)}) for C in a] == [
        (C.ranks, {k: C.boundary(k).to_rows() for k in range(1, C.top + 1)}) for C in b
    ]
    assert all(C.top <= 3 for C in a)
    assert all(max(C.ranks) <= 3 for C in a)


def test_functors_validate():
    for n in (1, 2):
        for F in random_functors(n, 5, seed=n):
            F.validate()


def test_builtins_are_unique_and_sound():
    objs = builtin_objects()
    names = [name for name, _ in objs]
    assert len(names) == len(set(names)) == 19
    for _, obj in objs:
        assert check_identities(obj).ok


def test_corrupted_controls_fail_identities():
    assert not check_identities(corrupted_set()).ok
    assert not check_identities(corrupted_module()).ok
