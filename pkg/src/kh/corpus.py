"""Seeded corpora for the fuzz checks.

Everything here is valid by construction: diagrams come from closed braids,
move pairs from applying a Reidemeister rewrite at a generated site,
simplicial objects from builders that satisfy the identities structurally
(simplices, horns, products, nerves, classifying spaces, Gamma of chain
complexes, path and loop spaces), functors from functorial recipes
(dimension pullbacks, corner supports, constants) mixed by direct sum and
unimodular change of basis. Random raw tables would essentially never
satisfy the relations, so corruption for negative controls is explicit.

Each generator derives its own random.Random from (seed, name), so corpora
are reproducible independently of call order.
"""

import random

from .categories import ModuleFunctor
from .diagrams import PlanarDiagram, braid_pd, r1_add, r2_add, r3
from .doldkan import gamma
from .homology import ChainComplex
from .nerve import nerve, simplex_category
from .simplicial import (
    FinSimplicialModule,
    FinSimplicialSet,
    classifying_space,
    constant_module,
    horn,
    linearize,
    loop_space,
    path_space,
    product,
    standard_simplex,
)
from .snf import IntMatrix


def _rng(seed, name):
    return random.Random("%s:%s" % (seed, name))


def random_diagrams(count, seed, max_crossings=8):
    """Closed braid diagrams, 2..4 strands, at most max_crossings crossings."""
    rng = _rng(seed, "diagrams")
    out = []
    for _ in range(count):
        strands = rng.randrange(2, 5)
        length = rng.randrange(1, max_crossings + 1)
        word = [rng.choice((1, -1)) * rng.randrange(1, strands) for _ in range(length)]
        d = braid_pd(word, strands)
        if rng.random() < 0.15:
            d = PlanarDiagram(d.crossings, d.free_loops + 1)
        out.append(d)
    return out


def _small_braid(rng, max_len):
    strands = rng.randrange(2, 4)
    length = rng.randrange(1, max_len + 1)
    word = [rng.choice((1, -1)) * rng.randrange(1, strands) for _ in range(length)]
    return braid_pd(word, strands)


def reidemeister_pairs(count, seed):
    """(before, after, kind) triples, kinds cycling r1, r2, r3."""
    rng = _rng(seed, "moves")
    pairs = []
    for turn in range(count):
        kind = ("r1", "r2", "r3")[turn % 3]
        while True:
            if kind == "r1":
                base = _small_braid(rng, 5)
                arc = rng.choice(sorted(base.arcs()))
                after = r1_add(base, arc, positive=rng.random() < 0.5)
            elif kind == "r2":
                base = _small_braid(rng, 5)
                over, under = rng.sample(sorted(base.arcs()), 2)
                after = r2_add(base, over, under)
                if after.genus() != 0:
                    # sliding over a far-away arc can leave the plane
                    continue
            else:
                strands = rng.randrange(3, 5)
                sgn = rng.choice((1, -1))
                i = rng.randrange(1, strands - 1)
                pre = [
                    rng.choice((1, -1)) * rng.randrange(1, strands)
                    for _ in range(rng.randrange(0, 3))
                ]
                post = [
                    rng.choice((1, -1)) * rng.randrange(1, strands)
                    for _ in range(rng.randrange(0, 3))
                ]
                word = pre + [sgn * i, sgn * (i + 1), sgn * i] + post
                base = braid_pd(word, strands)
                site = (len(pre), len(pre) + 1, len(pre) + 2)
                try:
                    after = r3(base, *site)
                except ValueError:
                    # closure identified a triangle arc with a boundary arc
                    continue
            pairs.append((base, after, kind))
            break
    return pairs


_KLEIN = {"e": (0, 0), "a": (0, 1), "b": (1, 0), "c": (1, 1)}


def _group_table(name):
    if name.startswith("z"):
        m = int(name[1:])
        elements = tuple(range(m))
        table = {(g, h): (g + h) % m for g in elements for h in elements}
        return elements, table, 0
    elements = tuple(_KLEIN)
    table = {}
    for g in elements:
        for h in elements:
            x = tuple((_KLEIN[g][k] + _KLEIN[h][k]) % 2 for k in range(2))
            table[(g, h)] = next(n for n, v in _KLEIN.items() if v == x)
    return elements, table, "e"


def _poset(rng):
    kind = rng.choice(("chain", "subsets", "divisors"))
    if kind == "chain":
        m = rng.randrange(1, 4)
        return tuple(range(m + 1)), lambda x, y: x <= y
    if kind == "subsets":
        elems = ((), (0,), (1,), (0, 1))
        return elems, lambda x, y: set(x) <= set(y)
    return (1, 2, 3, 4, 6, 12), lambda x, y: y % x == 0


def random_simplicial_sets(count, seed):
    """Simplices, horns, products, nerves, classifying spaces."""
    rng = _rng(seed, "sets")
    out = []
    for _ in range(count):
        kind = rng.choice(("simplex", "horn", "product", "nerve", "bg"))
        if kind == "simplex":
            n = rng.randrange(0, 4)
            out.append(standard_simplex(n, truncation=n + rng.randrange(0, 2)))
        elif kind == "horn":
            n = rng.randrange(1, 4)
            out.append(horn(n, rng.randrange(0, n + 1)))
        elif kind == "product":
            a = standard_simplex(rng.randrange(1, 3))
            if rng.random() < 0.5:
                b = standard_simplex(rng.randrange(1, 3))
            else:
                b = horn(2, rng.randrange(0, 3))
            out.append(product(a, b))
        elif kind == "nerve":
            from .categories import poset_category

            elements, leq = _poset(rng)
            out.append(nerve(poset_category(elements, leq), rng.randrange(2, 4)))
        else:
            name = rng.choice(("z2", "z3", "z4", "klein"))
            elements, table, unit = _group_table(name)
            out.append(classifying_space(elements, table, unit, rng.randrange(2, 4)))
    return out


def random_modules(count, seed):
    """Simplicial modules: linearizations, constants, Gamma, path, loop."""
    rng = _rng(seed, "modules")
    sets = random_simplicial_sets(count, "%s:inner" % seed)
    out = []
    for k in range(count):
        kind = rng.choice(("linearized", "constant", "gamma", "loop", "path"))
        if kind == "linearized":
            out.append(linearize(sets[k]))
        elif kind == "constant":
            out.append(constant_module(rng.randrange(1, 4), rng.randrange(2, 5)))
        elif kind == "gamma":
            C = random_complexes(1, "%s:g%d" % (seed, k), max_rank=2, max_length=2)[0]
            out.append(gamma(C, rng.randrange(1, 4)).module)
        elif kind == "loop":
            elements, table, unit = _group_table(rng.choice(("z2", "z3")))
            out.append(loop_space(linearize(classifying_space(elements, table, unit, 3))))
        else:
            out.append(path_space(linearize(standard_simplex(2, truncation=3))))
    return out


def corrupted_module():
    """One degeneracy entry bumped; the identity checker must flag it."""
    M = linearize(standard_simplex(2))
    face = {(n, i): M.face_matrix(n, i) for n in range(1, 3) for i in range(n + 1)}
    degen = {(n, i): M.degeneracy_matrix(n, i) for n in range(2) for i in range(n + 1)}
    bad = degen[(1, 0)]
    degen[(1, 0)] = bad + IntMatrix(bad.nrows, bad.ncols, {(0, 0): 1})
    return FinSimplicialModule(M.truncation, M.dims, face, degen)


def corrupted_set():
    """One generator face rewired; the identity checker must flag it."""
    S = standard_simplex(2)
    gen_face = dict(S.gen_face)
    gen_face[(2, 0, 1)] = gen_face[(2, 0, 2)]
    return FinSimplicialSet(S.truncation, S.generators, gen_face)


def _unimodular(rng, n):
    """(U, U^-1) as a short product of elementary integer matrices."""
    U = IntMatrix.identity(n)
    V = IntMatrix.identity(n)
    if n == 0:
        return U, V
    for _ in range(rng.randrange(0, n + 3)):
        op = rng.randrange(3)
        i = rng.randrange(n)
        j = rng.randrange(n)
        if op == 0 and i != j:
            c = rng.choice((-1, 1))
            E = IntMatrix.identity(n) + IntMatrix(n, n, {(i, j): c})
            Ei = IntMatrix.identity(n) + IntMatrix(n, n, {(i, j): -c})
            U = E @ U
            V = V @ Ei
        elif op == 1 and i != j:
            P = IntMatrix.identity(n) + IntMatrix(
                n, n, {(i, i): -1, (j, j): -1, (i, j): 1, (j, i): 1}
            )
            U = P @ U
            V = V @ P
        else:
            S = IntMatrix.identity(n) + IntMatrix(n, n, {(i, i): -2})
            U = S @ U
            V = V @ S
    return U, V


def random_complexes(count, seed, max_rank=3, max_length=3):
    """Free chain complexes: sums of elementary pieces in a mixed basis.

    Pieces are Z summands and two-term maps Z -(m)-> Z; boundaries are then
    conjugated degreewise by unimodular matrices, which preserves d^2 = 0
    and the Smith data while mixing entries.
    """
    rng = _rng(seed, "complexes")
    out = []
    for _ in range(count):
        top = rng.randrange(1, max_length + 1)
        ranks = [0] * (top + 1)
        entries = {k: {} for k in range(1, top + 1)}
        for _ in range(rng.randrange(1, 2 * max_rank + 1)):
            if rng.random() < 0.4:
                k = rng.randrange(0, top + 1)
                if ranks[k] < max_rank:
                    ranks[k] += 1
            else:
                k = rng.randrange(1, top + 1)
                if ranks[k] < max_rank and ranks[k - 1] < max_rank:
                    entries[k][(ranks[k - 1], ranks[k])] = rng.choice((1, 2, 3))
                    ranks[k] += 1
                    ranks[k - 1] += 1
        if sum(ranks) == 0:
            ranks[0] = 1
        bits = {}
        U = [_unimodular(rng, r) for r in ranks]
        for k in range(1, top + 1):
            M = IntMatrix(ranks[k - 1], ranks[k], entries[k])
            bits[k] = U[k - 1][0] @ M @ U[k][1]
        out.append(ChainComplex(tuple(ranks), bits))
    return out


def _chain_piece(rng, n):
    """Functor through the dimension grading: F(s) depends on |s| only."""
    r = [rng.randrange(1, 3) for _ in range(n + 1)]
    A = {
        d: IntMatrix(
            r[d - 1],
            r[d],
            {
                (a, b): rng.choice((-2, -1, 0, 1, 2))
                for a in range(r[d - 1])
                for b in range(r[d])
            },
        )
        for d in range(1, n + 1)
    }

    def rank(obj):
        return r[len(obj) - 1]

    def matrix(s, t):
        M = IntMatrix.identity(r[len(s) - 1])
        for d in range(len(s) - 1, len(t) - 1, -1):
            M = A[d] @ M
        return M

    return rank, matrix


def _corner_piece(rng, n):
    """Rank 1 on faces containing a fixed corner, zero elsewhere."""
    size = rng.randrange(1, n + 2)
    X = frozenset(rng.sample(range(n + 1), size))
    c = rng.choice((-2, -1, 1, 2))

    def rank(obj):
        return 1 if X <= set(obj) else 0

    def matrix(s, t):
        if X <= set(t):
            return IntMatrix(1, 1, {(0, 0): c ** (len(s) - len(t))})
        return IntMatrix.zero(rank(t), rank(s))

    return rank, matrix


def _constant_piece(rng, n):
    r = rng.randrange(1, 3)

    def rank(obj):
        return r

    def matrix(s, t):
        return IntMatrix.identity(r)

    return rank, matrix


def random_functors(n, count, seed):
    """Module functors on the face poset of the n-simplex.

    Direct sums of functorial pieces, conjugated by a unimodular change of
    basis at every object; single-step entries stay in -2..2.
    """
    C = simplex_category(n)
    rng = _rng(seed, "functors:%d" % n)
    makers = (_chain_piece, _corner_piece, _constant_piece)
    out = []
    for _ in range(count):
        pieces = [rng.choice(makers)(rng, n) for _ in range(rng.randrange(1, 3))]
        rank = {obj: sum(p[0](obj) for p in pieces) for obj in C.objects}
        basis = {obj: _unimodular(rng, rank[obj]) for obj in C.objects}
        matrix = {}
        for f, (s, t) in C.morphisms.items():
            blocks = [p[1](s, t) for p in pieces]
            entries = {}
            ro = 0
            co = 0
            for B in blocks:
                for (a, b), v in B.entries.items():
                    entries[(ro + a, co + b)] = v
                ro += B.nrows
                co += B.ncols
            M = IntMatrix(rank[t], rank[s], entries)
            matrix[f] = basis[t][0] @ M @ basis[s][1]
        F = ModuleFunctor(C, rank, matrix)
        F.validate()
        out.append(F)
    return out


def builtin_objects():
    """Named deterministic simplicial objects for the identity sweep."""
    z2, t2, u2 = _group_table("z2")
    z3, t3, u3 = _group_table("z3")
    items = [
        ("simplex-0", standard_simplex(0, truncation=2)),
        ("simplex-1", standard_simplex(1, truncation=2)),
        ("simplex-2", standard_simplex(2)),
        ("simplex-3", standard_simplex(3)),
        ("horn-2-1", horn(2, 1)),
        ("horn-3-0", horn(3, 0)),
        ("horn-3-3", horn(3, 3)),
        ("prism", product(standard_simplex(1), standard_simplex(1))),
        ("prism-21", product(standard_simplex(2), standard_simplex(1))),
        ("nerve-cat-1", nerve(simplex_category(1), 3)),
        ("nerve-cat-2", nerve(simplex_category(2), 3)),
        ("bz2", classifying_space(z2, t2, u2, 4)),
        ("bz3", classifying_space(z3, t3, u3, 3)),
        ("linear-simplex-2", linearize(standard_simplex(2))),
        ("constant-2", constant_module(2, 3)),
        ("gamma-z", gamma(ChainComplex((1,)), 3).module),
        (
            "gamma-torsion",
            gamma(ChainComplex((1, 1), {1: IntMatrix.from_rows([[2]])}), 3).module,
        ),
        ("path-simplex-2", path_space(linearize(standard_simplex(2, truncation=3)))),
        ("loop-bz2", loop_space(linearize(classifying_space(z2, t2, u2, 3)))),
    ]
    return items
