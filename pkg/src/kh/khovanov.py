"""The bigraded integer complex of enhanced states of a link diagram.

An enhanced state is a smoothing word plus a label (1 or x) on every loop
of the resolved diagram. Gradings: i = number of B-smoothings, lambda =
(#1-loops) - (#x-loops), j = i + lambda. The differential flips one A to a
B; the two loops touching that crossing merge by

    m(1,1) = 1,  m(1,x) = m(x,1) = x,  m(x,x) = 0

or one loop splits by

    delta(1) = (1,x) + (x,1),  delta(x) = (x,x),

all other labels carried along unchanged. Both rules lower lambda by
exactly 1, so j is preserved while i rises by 1. The edge flipping
crossing c carries the sign (-1)^(number of B letters before position c);
with that rule every square face anticommutes and the differential
squares to zero over the integers.

Loops are ordered by their minimal arc label, with crossing-free circles
as trailing factors; labels are the strings "1" and "x" in that loop
order. This fixes all bases, so matrices are reproducible run to run.

The same cube of modules is packaged as a ModuleFunctor on the category
of smoothing words (objects {A,B}^n, one morphism u -> v when u has A
wherever it differs from v), which is the input the nerve-based homology
route consumes. Materializing the full functor is meant for small
diagrams; the complex itself only ever builds the edge maps.
"""

from __future__ import annotations

from itertools import product

from .categories import ModuleFunctor, SmallCategory
from .snf import IntMatrix

__all__ = [
    "FROBENIUS_M",
    "FROBENIUS_DELTA",
    "BigradedComplex",
    "enumerate_enhanced",
    "differential",
    "cube_category",
    "state_functor",
]

# multiplication and comultiplication of Z[x]/(x^2), basis ("1", "x")
FROBENIUS_M = {
    ("1", "1"): {"1": 1},
    ("1", "x"): {"x": 1},
    ("x", "1"): {"x": 1},
    ("x", "x"): {},
}
FROBENIUS_DELTA = {
    "1": {("1", "x"): 1, ("x", "1"): 1},
    "x": {("x", "x"): 1},
}


def _loops_of(diagram, word):
    """Loop frozensets of a smoothing word, ordered by minimal arc label,
    then one sentinel per crossing-free circle."""
    parent = {a: a for a in diagram.arcs()}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for (a, b, c, d), choice in zip(diagram.crossings, word):
        if choice == "A":
            parent[find(a)] = find(b)
            parent[find(c)] = find(d)
        else:
            parent[find(a)] = find(d)
            parent[find(b)] = find(c)
    classes = {}
    for a in parent:
        classes.setdefault(find(a), []).append(a)
    loops = sorted((frozenset(v) for v in classes.values()), key=min)
    loops.extend(("circle", k) for k in range(diagram.free_loops))
    return tuple(loops)


class BigradedComplex:
    """Bases of enhanced states per (i, j) and the maps C^{i,j} -> C^{i+1,j}."""

    __slots__ = ("basis", "boundary", "n_plus", "n_minus")

    def __init__(self, basis, boundary, n_plus, n_minus):
        self.basis = basis
        self.boundary = boundary
        self.n_plus = n_plus
        self.n_minus = n_minus

    def dims(self):
        return {ij: len(states) for ij, states in self.basis.items()}

    def block(self, i, j):
        """The boundary matrix out of (i, j); zero-shaped when absent."""
        if (i, j) in self.boundary:
            return self.boundary[(i, j)]
        rows = len(self.basis.get((i + 1, j), ()))
        cols = len(self.basis.get((i, j), ()))
        return IntMatrix.zero(rows, cols)

    def check_d_squared(self):
        for (i, j) in self.basis:
            second = self.block(i + 1, j) @ self.block(i, j)
            if not second.is_zero():
                raise AssertionError("d^2 != 0 at block (%d, %d)" % (i, j))
        return True


def enumerate_enhanced(diagram):
    """Bases of enhanced states grouped by (i, j), deterministically ordered."""
    n = diagram.n_crossings
    grouped = {}
    for word in product("AB", repeat=n):
        i = sum(1 for ch in word if ch == "B")
        loops = _loops_of(diagram, word)
        for labels in product("1x", repeat=len(loops)):
            lam = sum(1 if v == "1" else -1 for v in labels)
            grouped.setdefault((i, i + lam), []).append((word, labels))
    return {ij: tuple(sorted(states)) for ij, states in grouped.items()}


def _edge_targets(diagram, word, labels, loops, crossing, loops_cache):
    """Images of one enhanced state under the flip at `crossing`,
    as (target word, target labels, coefficient) triples, unsigned."""
    new_word = word[:crossing] + ("B",) + word[crossing + 1 :]
    new_loops = loops_cache[new_word]
    if len(new_loops) == len(loops) - 1:
        # two loops merge: find them by set inclusion
        merged = [k for k, lp in enumerate(loops) if lp not in new_loops]
        (p, q) = merged
        target_pos = new_loops.index(loops[p] | loops[q])
        keep = {lp: labels[k] for k, lp in enumerate(loops) if k not in merged}
        for out_label, coeff in FROBENIUS_M[(labels[p], labels[q])].items():
            out = tuple(
                out_label if k == target_pos else keep[lp]
                for k, lp in enumerate(new_loops)
            )
            yield new_word, out, coeff
    elif len(new_loops) == len(loops) + 1:
        # one loop splits in two
        split = [k for k, lp in enumerate(new_loops) if lp not in loops]
        (r1, r2) = split
        source_pos = loops.index(new_loops[r1] | new_loops[r2])
        keep = {lp: labels[k] for k, lp in enumerate(loops) if k != source_pos}
        for (l1, l2), coeff in FROBENIUS_DELTA[labels[source_pos]].items():
            out = tuple(
                l1 if k == r1 else l2 if k == r2 else keep[lp]
                for k, lp in enumerate(new_loops)
            )
            yield new_word, out, coeff
    else:
        # a flip that neither merges nor splits only happens off the plane
        raise ValueError(
            "flip at crossing %d is neither a merge nor a split; "
            "the diagram has positive genus" % crossing
        )


def differential(diagram):
    """Build the full bigraded complex of a diagram; d^2 = 0 is asserted."""
    n = diagram.n_crossings
    basis = enumerate_enhanced(diagram)
    index = {
        ij: {state: k for k, state in enumerate(states)}
        for ij, states in basis.items()
    }
    loops_cache = {
        word: _loops_of(diagram, word) for word in product("AB", repeat=n)
    }
    boundary = {}
    for (i, j), states in sorted(basis.items()):
        entries = {}
        target = index.get((i + 1, j), {})
        for col, (word, labels) in enumerate(states):
            loops = loops_cache[word]
            for c in range(n):
                if word[c] != "A":
                    continue
                sign = -1 if sum(1 for ch in word[:c] if ch == "B") % 2 else 1
                for new_word, new_labels, coeff in _edge_targets(
                    diagram, word, labels, loops, c, loops_cache
                ):
                    row = target[(new_word, new_labels)]
                    v = entries.get((row, col), 0) + sign * coeff
                    if v:
                        entries[(row, col)] = v
                    else:
                        entries.pop((row, col), None)
        boundary[(i, j)] = IntMatrix(len(target), len(states), entries)
    complex_ = BigradedComplex(basis, boundary, diagram.n_plus, diagram.n_minus)
    complex_.check_d_squared()
    return complex_


def cube_category(n):
    """Objects {A,B}^n; one morphism u -> v whenever u is A at every
    position where u and v differ. 3^n morphisms in total."""
    objects = list(product("AB", repeat=n))
    morphisms = {}
    for u in objects:
        for v in objects:
            if all(a == b or a == "A" for a, b in zip(u, v)):
                morphisms[(u, v)] = (u, v)
    identity = {u: (u, u) for u in objects}
    compose = {}
    for (v2, w) in morphisms:
        for (u, v1) in morphisms:
            if v1 == v2:
                compose[((v2, w), (u, v1))] = (u, w)
    return SmallCategory(objects, morphisms, identity, compose)


def _label_basis(loops):
    return list(product("1x", repeat=len(loops)))


def _edge_matrix(diagram, word, crossing, loops_cache):
    """Unsigned matrix of the flip at `crossing` out of smoothing `word`."""
    loops = loops_cache[word]
    src = _label_basis(loops)
    new_word = word[:crossing] + ("B",) + word[crossing + 1 :]
    tgt = {labels: k for k, labels in enumerate(_label_basis(loops_cache[new_word]))}
    entries = {}
    for col, labels in enumerate(src):
        for _, new_labels, coeff in _edge_targets(
            diagram, word, labels, loops, crossing, loops_cache
        ):
            entries[(tgt[new_labels], col)] = coeff
    return IntMatrix(len(tgt), len(src), entries)


def state_functor(diagram):
    """The cube of modules of a diagram as a ModuleFunctor (unsigned maps).

    F(word) is free on the labelings of the word's loops; a generating
    morphism gets the merge or split map, and a general morphism the
    composite along lowest-position-first flips (square commutativity
    makes the path irrelevant). Materializes all 3^n morphisms."""
    n = diagram.n_crossings
    cube = cube_category(n)
    loops_cache = {
        word: _loops_of(diagram, word) for word in product("AB", repeat=n)
    }
    rank = {word: 2 ** len(loops_cache[word]) for word in cube.objects}
    matrix = {}
    for (u, v) in sorted(cube.morphisms):
        M = IntMatrix.identity(rank[u])
        cur = u
        for pos in range(n):
            if cur[pos] == "A" and v[pos] == "B":
                M = _edge_matrix(diagram, cur, pos, loops_cache) @ M
                cur = cur[:pos] + ("B",) + cur[pos + 1 :]
        matrix[(u, v)] = M
    return ModuleFunctor(cube, rank, matrix)
