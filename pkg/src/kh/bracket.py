"""Kauffman bracket state sum and the Jones invariants built from it.

A state chooses one smoothing per crossing: "A" joins slot 0 to slot 1 and
slot 2 to slot 3, "B" joins slot 0 to slot 3 and slot 1 to slot 2. The
bracket is the sum over all 2^n states of A^(#A - #B) * delta^||S||, with
delta = -A^2 - A^-2 and the whole-diagram convention that a lone circle
evaluates to delta.

The q-form substitutes A^2 -> -q^-1 into A^(-c) * bracket (every exponent
of that product is even, so the substitution is polynomial); a circle
becomes q + q^-1. J is the q-form times (-1)^n_minus * q^(n_plus - 2 n_minus);
f divides the A-form by delta and unkinks by (-A^3)^(-writhe); V substitutes
A -> t^(-1/4), so its exponents live in quarter units of t.
"""

from __future__ import annotations

from collections import namedtuple
from itertools import product

from .laurent import LaurentPoly

__all__ = [
    "BracketState",
    "resolve_state",
    "bracket_A",
    "bracket_q",
    "jones_J",
    "normalized_f",
    "jones_V",
]

BracketState = namedtuple("BracketState", ["word", "loops", "count"])

DELTA = LaurentPoly("A", {2: -1, -2: -1})


def _loop_classes(diagram, word):
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
    return [frozenset(v) for v in classes.values()]


def resolve_state(diagram, word):
    """Apply a smoothing word; the loop count includes crossing-free circles."""
    word = tuple(word)
    if len(word) != diagram.n_crossings:
        raise ValueError("smoothing word length must equal the crossing count")
    if any(ch not in ("A", "B") for ch in word):
        raise ValueError("smoothing letters must be A or B")
    loops = _loop_classes(diagram, word)
    return BracketState(word, tuple(sorted(loops, key=min)), len(loops) + diagram.free_loops)


def bracket_A(diagram):
    """Kauffman bracket, exact sum over all 2^n smoothing words."""
    total = LaurentPoly.zero("A")
    n = diagram.n_crossings
    for word in product("AB", repeat=n):
        state = resolve_state(diagram, word)
        a_count = sum(1 for ch in word if ch == "A")
        term = LaurentPoly.monomial("A", 2 * a_count - n) * (DELTA ** state.count)
        total = total + term
    return total


def bracket_q(diagram):
    """Bracket in the q variable: A^(-c) * bracket_A under A^2 -> -q^-1."""
    br = bracket_A(diagram).shift(-diagram.n_crossings)
    out = {}
    for e, c in br.coeffs.items():
        if e % 2:
            raise AssertionError("odd exponent in shifted bracket")
        k = e // 2
        # A^(2k) -> (-1)^k q^(-k)
        out[-k] = out.get(-k, 0) + c * (1 if k % 2 == 0 else -1)
    return LaurentPoly("q", out)


def jones_J(diagram):
    """The unnormalized Jones polynomial; q + q^-1 on an unknotted circle."""
    sign = 1 if diagram.n_minus % 2 == 0 else -1
    return bracket_q(diagram).shift(diagram.n_plus - 2 * diagram.n_minus) * sign


def normalized_f(diagram):
    """Bracket normalized to 1 on the circle: (-A^3)^(-wr) * bracket / delta."""
    wr = diagram.writhe
    sign = 1 if wr % 2 == 0 else -1
    return (bracket_A(diagram) * sign).shift(-3 * wr).divexact(DELTA)


def jones_V(diagram):
    """Jones polynomial V(t) via A -> t^(-1/4); exponents in quarter units."""
    f = normalized_f(diagram)
    return LaurentPoly("t", {-e: c for e, c in f.coeffs.items()}, unit=4)
