"""Small categories with explicit composition tables, and module functors.

A SmallCategory stores every morphism by an identifier with its source and
target, the identity of each object, and the full composition table. That
makes composable-sequence enumeration, nerves, and functor validation plain
dictionary work. Intended for small categories (poset categories, cubes,
finite monoids); everything is materialized.

A ModuleFunctor assigns a free-module rank to each object and an integer
matrix to each morphism (acting on column vectors), with F(g after f) given by
matrix product F(g) @ F(f).
"""

from __future__ import annotations

from .snf import IntMatrix

__all__ = ["SmallCategory", "ModuleFunctor", "poset_category", "monoid_category"]


class SmallCategory:
    """objects: tuple of hashables; morphisms: id -> (src, dst);
    identity: object -> morphism id; compose: (g, f) -> id of g after f."""

    __slots__ = ("objects", "morphisms", "identity", "compose")

    def __init__(self, objects, morphisms, identity, compose):
        self.objects = tuple(objects)
        self.morphisms = dict(morphisms)
        self.identity = dict(identity)
        self.compose = dict(compose)

    def src(self, f):
        return self.morphisms[f][0]

    def dst(self, f):
        return self.morphisms[f][1]

    def is_identity(self, f):
        return self.identity[self.src(f)] == f

    def composable_pairs(self):
        by_src = {}
        for f, (s, d) in self.morphisms.items():
            by_src.setdefault(s, []).append(f)
        for f, (s, d) in self.morphisms.items():
            for g in by_src.get(d, ()):
                yield g, f

    def validate(self):
        """Identity, closure and associativity checks; O(morphisms^3)."""
        for obj in self.objects:
            e = self.identity[obj]
            if self.morphisms[e] != (obj, obj):
                raise ValueError("identity of %r has wrong endpoints" % (obj,))
        for g, f in self.composable_pairs():
            key = (g, f)
            if key not in self.compose:
                raise ValueError("missing composite %r after %r" % (g, f))
            h = self.compose[key]
            if self.morphisms[h] != (self.src(f), self.dst(g)):
                raise ValueError("composite %r has wrong endpoints" % (h,))
        for f, (s, d) in self.morphisms.items():
            if self.compose[(self.identity[d], f)] != f:
                raise ValueError("left identity fails at %r" % (f,))
            if self.compose[(f, self.identity[s])] != f:
                raise ValueError("right identity fails at %r" % (f,))
        for g, f in self.composable_pairs():
            gf = self.compose[(g, f)]
            for h, (s, d) in self.morphisms.items():
                if self.src(h) == self.dst(g):
                    if self.compose[(self.compose[(h, g)], f)] != self.compose[(h, gf)]:
                        raise ValueError(
                            "associativity fails on (%r, %r, %r)" % (h, g, f)
                        )
        return True

    def sequences(self, k, include_identities=True):
        """All length-k composable sequences (f_1, ..., f_k) with
        dst(f_i) = src(f_{i+1}), listed in deterministic sorted order."""
        morphs = sorted(
            f
            for f in self.morphisms
            if include_identities or not self.is_identity(f)
        )
        if k == 0:
            return [()]
        out = [(f,) for f in morphs]
        for _ in range(k - 1):
            out = [
                seq + (g,) for seq in out for g in morphs if self.src(g) == self.dst(seq[-1])
            ]
        return out


def poset_category(elements, leq):
    """Category of a finite poset: one morphism x -> y whenever leq(x, y)."""
    elements = tuple(elements)
    morphisms = {}
    for x in elements:
        for y in elements:
            if leq(x, y):
                morphisms[(x, y)] = (x, y)
    identity = {x: (x, x) for x in elements}
    compose = {}
    for (y2, z) in morphisms:
        for (x, y1) in morphisms:
            if y1 == y2:
                compose[((y2, z), (x, y1))] = (x, z)
    return SmallCategory(elements, morphisms, identity, compose)


def monoid_category(elements, multiply, unit):
    """One-object category whose morphisms are the monoid elements."""
    star = "*"
    morphisms = {m: (star, star) for m in elements}
    compose = {(g, f): multiply(g, f) for g in elements for f in elements}
    return SmallCategory((star,), morphisms, {star: unit}, compose)


class ModuleFunctor:
    """Free-module ranks per object, integer matrices per morphism."""

    __slots__ = ("category", "rank", "matrix")

    def __init__(self, category, rank, matrix):
        self.category = category
        self.rank = dict(rank)
        self.matrix = dict(matrix)

    def validate(self):
        cat = self.category
        for f, (s, d) in cat.morphisms.items():
            M = self.matrix[f]
            if (M.nrows, M.ncols) != (self.rank[d], self.rank[s]):
                raise ValueError("matrix of %r has wrong shape" % (f,))
        for obj in cat.objects:
            if self.matrix[cat.identity[obj]] != IntMatrix.identity(self.rank[obj]):
                raise ValueError("identity of %r is not the identity matrix" % (obj,))
        for g, f in cat.composable_pairs():
            left = self.matrix[cat.compose[(g, f)]]
            if left != self.matrix[g] @ self.matrix[f]:
                raise ValueError("functoriality fails on (%r, %r)" % (g, f))
        return True
