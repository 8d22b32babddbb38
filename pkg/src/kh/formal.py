"""Formal face/degeneracy words on generic symbols, with exact rewriting.

A term is s_{j_t} ... s_{j_1} d_{i_1} ... d_{i_u} x in Eilenberg-Zilber
normal form: degeneracy indices strictly decreasing, face indices strictly
increasing, every operator applied outermost first. The five simplicial
identities are the rewrite rules that restore the form after applying a
new face or degeneracy, so two expressions are equal exactly when their
normalized term dictionaries coincide. Sums are homogeneous: every term
lives at one level.
"""

from collections import namedtuple

Term = namedtuple("Term", ["degens", "faces", "symbol"])


def _term_level(t):
    name, level = t.symbol
    return level - len(t.faces) + len(t.degens)


def _insert_face(i, faces):
    # d_i d_j = d_j d_{i+1} for i >= j pushes the new index inward
    if not faces or i < faces[0]:
        return (i,) + faces
    return (faces[0],) + _insert_face(i + 1, faces[1:])


def _insert_degen(i, degens):
    # s_i s_j = s_{j+1} s_i for i <= j pulls the larger index outward
    if not degens or i > degens[0]:
        return (i,) + degens
    return (degens[0] + 1,) + _insert_degen(i, degens[1:])


def _face_term(i, t):
    if t.degens:
        j = t.degens[0]
        rest = Term(t.degens[1:], t.faces, t.symbol)
        if i < j:
            return _degen_term(j - 1, _face_term(i, rest))
        if i in (j, j + 1):
            return rest
        return _degen_term(j, _face_term(i - 1, rest))
    return Term((), _insert_face(i, t.faces), t.symbol)


def _degen_term(i, t):
    return Term(_insert_degen(i, t.degens), t.faces, t.symbol)


class FormalSum:
    """Integer combination of normalized terms at a single level."""

    __slots__ = ("terms", "level")

    def __init__(self, terms=None, level=None):
        self.terms = {}
        self.level = level
        for t, c in (terms or {}).items():
            if not c:
                continue
            lvl = _term_level(t)
            if self.level is None:
                self.level = lvl
            elif lvl != self.level:
                raise ValueError("terms at levels %d and %d mixed" % (self.level, lvl))
            self.terms[t] = c

    def is_zero(self):
        return not self.terms

    def _join(self, other, flip):
        if not isinstance(other, FormalSum):
            return NotImplemented
        if self.level is not None and other.level is not None and self.level != other.level:
            raise ValueError("levels %d and %d mixed" % (self.level, other.level))
        out = dict(self.terms)
        for t, c in other.terms.items():
            out[t] = out.get(t, 0) + flip * c
        return FormalSum(out, self.level if self.level is not None else other.level)

    def __add__(self, other):
        return self._join(other, 1)

    def __sub__(self, other):
        return self._join(other, -1)

    def __neg__(self):
        return FormalSum({t: -c for t, c in self.terms.items()}, self.level)

    def scale(self, a):
        return FormalSum({t: a * c for t, c in self.terms.items()}, self.level)

    def __eq__(self, other):
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def face(self, i):
        if self.level is not None and not 0 <= i <= self.level:
            raise ValueError("face index %d out of range at level %s" % (i, self.level))
        out = {}
        for t, c in self.terms.items():
            nt = _face_term(i, t)
            out[nt] = out.get(nt, 0) + c
        lvl = None if self.level is None else self.level - 1
        return FormalSum(out, lvl)

    def degeneracy(self, i):
        if self.level is not None and not 0 <= i <= self.level:
            raise ValueError("degeneracy index %d out of range at level %s" % (i, self.level))
        out = {}
        for t, c in self.terms.items():
            nt = _degen_term(i, t)
            out[nt] = out.get(nt, 0) + c
        lvl = None if self.level is None else self.level + 1
        return FormalSum(out, lvl)

    def boundary(self):
        """Alternating sum of all faces."""
        if self.level is None or self.level < 1:
            raise ValueError("boundary needs level >= 1")
        total = FormalSum({}, self.level - 1)
        for i in range(self.level + 1):
            piece = self.face(i)
            total = total + (piece if i % 2 == 0 else -piece)
        return total

    def render(self):
        if not self.terms:
            return "0"
        parts = []
        for t in sorted(self.terms, key=lambda t: (t.symbol, t.degens, t.faces)):
            c = self.terms[t]
            ops = ["s%d" % j for j in t.degens] + ["d%d" % i for i in t.faces]
            word = " ".join(ops + [t.symbol[0]])
            if c == 1:
                parts.append("+ " + word)
            elif c == -1:
                parts.append("- " + word)
            else:
                parts.append("%+d %s" % (c, word))
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else text

    def __repr__(self):
        return "FormalSum(%s)" % self.render()


def generator(name, level):
    """A generic symbol at the given level."""
    if level < 0:
        raise ValueError("level must be nonnegative")
    return FormalSum({Term((), (), (name, level)): 1})


def homologous_witness_formal():
    """The witness identity on generic level-1 symbols a and b.

    gamma = s0 a + s1 b has faces a + s0 d0 b, a + b, and s0 d1 a + b; the
    element [a+b] is the middle face. The returned dict carries gamma, the
    corrected witness w, its alternating boundary, and [a+b]; the boundary
    equals (a + b) - [a+b], which is zero here, and that is checked.
    """
    a = generator("a", 1)
    b = generator("b", 1)
    gamma = a.degeneracy(0) + b.degeneracy(1)
    expected = {
        0: a + b.face(0).degeneracy(0),
        1: a + b,
        2: a.face(1).degeneracy(0) + b,
    }
    for i in range(3):
        if gamma.face(i) != expected[i]:
            raise ValueError("face d%d of gamma has the wrong closed form" % i)
    w = (
        gamma
        - b.face(0).degeneracy(0).degeneracy(0)
        - a.face(1).degeneracy(0).degeneracy(0)
    )
    bracket = gamma.face(1)
    boundary = w.boundary()
    if boundary != (a + b) - bracket:
        raise ValueError("boundary of w is not (a + b) - [a+b]")
    return {"gamma": gamma, "w": w, "boundary": boundary, "bracket": bracket}
