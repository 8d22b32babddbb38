"""Finitely presented simplicial sets and simplicial modules.

Every object carries a finite truncation level N; cells and matrices are
available for levels 0..N and homology read off such an object is reliable
through degree N-1.

A simplicial set is presented by its nondegenerate generators together with
the faces of those generators.  Every cell has a unique normal form

    s_{i_t} ... s_{i_1} g      with  i_t > ... > i_1  and g nondegenerate,

so a cell is stored as ``Cell(word, gen_level, gen_index)`` where ``word``
is the strictly decreasing tuple (i_t, ..., i_1), applied outermost first.
Faces and degeneracies of arbitrary cells are computed by rewriting with
the five simplicial identities; only faces of generators are stored.

Simplicial modules are matrix-backed: integer face and degeneracy matrices
on the full (degenerate-inclusive) basis of each level.  ``linearize``
produces the free module on a simplicial set; kernel-type constructions
(loop spaces) restrict the matrices to integer kernel lattices.
"""

import itertools
from collections import namedtuple

from .homology import ChainComplex
from .snf import IntMatrix, kernel_basis, solve

Cell = namedtuple("Cell", ["word", "gen_level", "gen_index"])

KanReport = namedtuple("KanReport", ["n", "counts", "unfillable"])


def cell_level(cell):
    return cell.gen_level + len(cell.word)


def _fmt_label(label):
    if isinstance(label, tuple) and label and all(isinstance(v, int) for v in label):
        return "<" + "".join(str(v) for v in label) + ">"
    return str(label)


class IdentityReport:
    """Outcome of a simplicial identity sweep."""

    __slots__ = ("checked", "violations")

    def __init__(self, checked, violations):
        self.checked = checked
        self.violations = list(violations)

    @property
    def ok(self):
        return not self.violations

    def text(self):
        if self.ok:
            return "all %d identity instances hold" % self.checked
        lines = ["%d violations in %d instances:" % (len(self.violations), self.checked)]
        lines.extend("  " + v for v in self.violations)
        return "\n".join(lines)

    def __repr__(self):
        return "IdentityReport(checked=%d, violations=%d)" % (
            self.checked,
            len(self.violations),
        )


class FinSimplicialSet:
    """Simplicial set presented by nondegenerate generators and their faces.

    generators: per level, a tuple of printable labels.
    gen_face: dict (level, gen_index, i) -> Cell one level down.
    """

    __slots__ = ("truncation", "generators", "gen_face")

    def __init__(self, truncation, generators, gen_face):
        if truncation < 0:
            raise ValueError("truncation must be nonnegative")
        self.truncation = int(truncation)
        self.generators = tuple(tuple(level) for level in generators)
        self.gen_face = dict(gen_face)
        if len(self.generators) > self.truncation + 1:
            raise ValueError("generators above the truncation level")
        for m, level in enumerate(self.generators):
            if m == 0:
                continue
            for k in range(len(level)):
                for i in range(m + 1):
                    key = (m, k, i)
                    if key not in self.gen_face:
                        raise ValueError("missing face d%d of generator %d at level %d" % (i, k, m))
                    self._check_cell(self.gen_face[key], m - 1)

    def _check_cell(self, cell, level):
        word, m, k = cell
        if m + len(word) != level:
            raise ValueError("cell %r does not live at level %d" % (cell, level))
        if m >= len(self.generators) or not 0 <= k < len(self.generators[m]):
            raise ValueError("cell %r references a missing generator" % (cell,))
        if any(word[t] <= word[t + 1] for t in range(len(word) - 1)):
            raise ValueError("degeneracy word of %r is not strictly decreasing" % (cell,))
        if word and (word[0] > level - 1 or word[-1] < 0):
            raise ValueError("degeneracy word of %r is out of range" % (cell,))

    def cells(self, n):
        """All cells at level n, in a fixed deterministic order."""
        if not 0 <= n <= self.truncation:
            raise ValueError("level %d outside truncation %d" % (n, self.truncation))
        out = []
        top = min(n, len(self.generators) - 1)
        for m in range(top + 1):
            for k in range(len(self.generators[m])):
                for comb in itertools.combinations(range(n), n - m):
                    out.append(Cell(tuple(reversed(comb)), m, k))
        return tuple(out)

    def nondegenerate(self, n):
        if n >= len(self.generators):
            return ()
        return tuple(Cell((), n, k) for k in range(len(self.generators[n])))

    def is_degenerate(self, cell):
        return bool(cell.word)

    def label(self, cell):
        return self.generators[cell.gen_level][cell.gen_index]

    def face(self, i, cell):
        """d_i, computed by pushing d_i through the degeneracy word."""
        word, m, k = cell
        level = m + len(word)
        if not 0 <= i <= level:
            raise ValueError("face index %d out of range at level %d" % (i, level))
        if not word:
            if m == 0:
                raise ValueError("level-0 cells have no faces")
            return self.gen_face[(m, k, i)]
        w = word[0]
        rest = Cell(word[1:], m, k)
        if i < w:
            return self.degeneracy(w - 1, self.face(i, rest))
        if i in (w, w + 1):
            return rest
        return self.degeneracy(w, self.face(i - 1, rest))

    def degeneracy(self, i, cell):
        """s_i, by inserting i into the decreasing degeneracy word."""
        word, m, k = cell
        level = m + len(word)
        if not 0 <= i <= level:
            raise ValueError("degeneracy index %d out of range at level %d" % (i, level))
        new = []
        rest = list(word)
        while rest and i <= rest[0]:
            new.append(rest.pop(0) + 1)
        new.append(i)
        new.extend(rest)
        return Cell(tuple(new), m, k)

    def render_cell(self, cell):
        base = _fmt_label(self.label(cell))
        if not cell.word:
            return base
        return " ".join("s%d" % i for i in cell.word) + " " + base

    def check_identities(self, max_level=None):
        return _identity_sweep_set(self, max_level)

    def dump(self):
        """Text form of the presentation, for golden-file comparison."""
        lines = ["truncation %d" % self.truncation]
        for m, level in enumerate(self.generators):
            lines.append("level %d: %d generators" % (m, len(level)))
            for k in range(len(level)):
                cell = Cell((), m, k)
                parts = []
                if m > 0:
                    parts.extend(
                        "d%d -> %s" % (i, self.render_cell(self.face(i, cell)))
                        for i in range(m + 1)
                    )
                parts.extend(
                    "s%d -> %s" % (i, self.render_cell(self.degeneracy(i, cell)))
                    for i in range(m + 1)
                )
                lines.append("  %s: %s" % (_fmt_label(self.label(cell)), "; ".join(parts)))
        return "\n".join(lines)


def _identity_sweep_set(X, max_level=None):
    N = X.truncation if max_level is None else min(max_level, X.truncation)
    checked = 0
    violations = []

    def record(tag, n, cell):
        violations.append("%s fails at level %d on %s" % (tag, n, X.render_cell(cell)))

    for n in range(N + 1):
        for x in X.cells(n):
            if n >= 2:
                for j in range(n + 1):
                    for i in range(j):
                        checked += 1
                        if X.face(i, X.face(j, x)) != X.face(j - 1, X.face(i, x)):
                            record("d%d d%d = d%d d%d" % (i, j, j - 1, i), n, x)
            for j in range(n + 1):
                sj = X.degeneracy(j, x)
                for i in range(j + 1):
                    checked += 1
                    if X.degeneracy(i, sj) != X.degeneracy(j + 1, X.degeneracy(i, x)):
                        record("s%d s%d = s%d s%d" % (i, j, j + 1, i), n, x)
                for i in (j, j + 1):
                    checked += 1
                    if X.face(i, sj) != x:
                        record("d%d s%d = id" % (i, j), n, x)
                if n >= 1:
                    for i in range(j):
                        checked += 1
                        if X.face(i, sj) != X.degeneracy(j - 1, X.face(i, x)):
                            record("d%d s%d = s%d d%d" % (i, j, j - 1, i), n, x)
                    for i in range(j + 2, n + 2):
                        checked += 1
                        if X.face(i, sj) != X.degeneracy(j, X.face(i - 1, x)):
                            record("d%d s%d = s%d d%d" % (i, j, j, i - 1), n, x)
    return IdentityReport(checked, violations)


class PreSimplicialSet:
    """Levelwise cells with face maps only; no degeneracies adjoined."""

    __slots__ = ("truncation", "cells_by_level", "face_table")

    def __init__(self, truncation, cells_by_level, face_table):
        self.truncation = int(truncation)
        self.cells_by_level = tuple(tuple(level) for level in cells_by_level)
        self.face_table = dict(face_table)
        if len(self.cells_by_level) != self.truncation + 1:
            raise ValueError("need one cell list per level 0..N")
        for n in range(1, self.truncation + 1):
            known = set(self.cells_by_level[n - 1])
            for c in self.cells_by_level[n]:
                for i in range(n + 1):
                    if (n, c, i) not in self.face_table:
                        raise ValueError("missing face d%d of %r" % (i, c))
                    if self.face_table[(n, c, i)] not in known:
                        raise ValueError("face of %r leaves the cell set" % (c,))

    def cells(self, n):
        return self.cells_by_level[n]

    def face(self, n, i, cell):
        return self.face_table[(n, cell, i)]

    def check_face_identities(self):
        checked = 0
        violations = []
        for n in range(2, self.truncation + 1):
            for c in self.cells_by_level[n]:
                for j in range(n + 1):
                    for i in range(j):
                        checked += 1
                        lhs = self.face(n - 1, i, self.face(n, j, c))
                        rhs = self.face(n - 1, j - 1, self.face(n, i, c))
                        if lhs != rhs:
                            violations.append(
                                "d%d d%d fails on %s at level %d" % (i, j, _fmt_label(c), n)
                            )
        return IdentityReport(checked, violations)

    def chain_complex(self):
        ranks = tuple(len(level) for level in self.cells_by_level)
        boundaries = {}
        for n in range(1, self.truncation + 1):
            idx = {c: p for p, c in enumerate(self.cells_by_level[n - 1])}
            entries = {}
            for col, c in enumerate(self.cells_by_level[n]):
                for i in range(n + 1):
                    row = idx[self.face(n, i, c)]
                    key = (row, col)
                    val = entries.get(key, 0) + (1 if i % 2 == 0 else -1)
                    if val:
                        entries[key] = val
                    else:
                        entries.pop(key, None)
            boundaries[n] = IntMatrix(ranks[n - 1], ranks[n], entries)
        return ChainComplex(ranks, boundaries)


class FinSimplicialModule:
    """Levelwise free Z-modules with integer face/degeneracy matrices."""

    __slots__ = ("truncation", "dims", "labels", "_face", "_degen")

    def __init__(self, truncation, dims, face, degen, labels=None):
        self.truncation = int(truncation)
        self.dims = tuple(int(d) for d in dims)
        if len(self.dims) != self.truncation + 1:
            raise ValueError("need one rank per level 0..N")
        if any(d < 0 for d in self.dims):
            raise ValueError("negative rank")
        self._face = dict(face)
        self._degen = dict(degen)
        self.labels = None if labels is None else tuple(tuple(l) for l in labels)
        for n in range(1, self.truncation + 1):
            for i in range(n + 1):
                M = self._face.get((n, i))
                if M is None:
                    raise ValueError("missing face matrix d%d at level %d" % (i, n))
                if (M.nrows, M.ncols) != (self.dims[n - 1], self.dims[n]):
                    raise ValueError("face matrix d%d at level %d has wrong shape" % (i, n))
        for n in range(self.truncation):
            for i in range(n + 1):
                M = self._degen.get((n, i))
                if M is None:
                    raise ValueError("missing degeneracy matrix s%d at level %d" % (i, n))
                if (M.nrows, M.ncols) != (self.dims[n + 1], self.dims[n]):
                    raise ValueError("degeneracy matrix s%d at level %d has wrong shape" % (i, n))

    def dim(self, n):
        return self.dims[n]

    def face_matrix(self, n, i):
        return self._face[(n, i)]

    def degeneracy_matrix(self, n, i):
        return self._degen[(n, i)]

    def check_identities(self, max_level=None):
        return _identity_sweep_module(self, max_level)

    def chain_complex(self):
        boundaries = {}
        for n in range(1, self.truncation + 1):
            total = IntMatrix.zero(self.dims[n - 1], self.dims[n])
            for i in range(n + 1):
                M = self._face[(n, i)]
                total = total + (M if i % 2 == 0 else -M)
            boundaries[n] = total
        return ChainComplex(self.dims, boundaries)

    def moore_complex(self):
        """Intersection-of-kernels subcomplex, boundary the last face map."""
        bases = [IntMatrix.identity(self.dims[0])]
        for n in range(1, self.truncation + 1):
            if self.dims[n] == 0:
                bases.append(IntMatrix.zero(0, 0))
                continue
            stacked = self._face[(n, 0)]
            for i in range(1, n):
                stacked = stacked.vstack(self._face[(n, i)])
            cols = kernel_basis(stacked)
            entries = {}
            for c, vec in enumerate(cols):
                for r, v in enumerate(vec):
                    if v:
                        entries[(r, c)] = v
            bases.append(IntMatrix(self.dims[n], len(cols), entries))
        ranks = tuple(B.ncols for B in bases)
        boundaries = {}
        for n in range(1, self.truncation + 1):
            boundaries[n] = induced_matrix(bases[n - 1], self._face[(n, n)], bases[n])
        return ChainComplex(ranks, boundaries)


def induced_matrix(target_basis, M, source_basis):
    """X with target_basis @ X = M @ source_basis.

    Requires the image of M restricted to the source lattice to lie in the
    target lattice; raises if any column fails to resolve.
    """
    image = M @ source_basis
    cols = []
    for c in range(image.ncols):
        if target_basis.ncols == 0:
            if any(image.get(r, c) for r in range(image.nrows)):
                raise ValueError("image leaves the target lattice")
            cols.append(())
            continue
        x = solve(target_basis, image.column(c))
        if x is None:
            raise ValueError("image leaves the target lattice")
        cols.append(x)
    out = IntMatrix.zero(target_basis.ncols, image.ncols)
    entries = {}
    for c, x in enumerate(cols):
        for r, v in enumerate(x):
            if v:
                entries[(r, c)] = v
    return IntMatrix(target_basis.ncols, image.ncols, entries)


def _identity_sweep_module(S, max_level=None):
    N = S.truncation if max_level is None else min(max_level, S.truncation)
    checked = 0
    violations = []
    face = S.face_matrix
    degen = S.degeneracy_matrix

    def record(tag, n):
        violations.append("%s fails at level %d" % (tag, n))

    for n in range(2, N + 1):
        for j in range(n + 1):
            for i in range(j):
                checked += 1
                if face(n - 1, i) @ face(n, j) != face(n - 1, j - 1) @ face(n, i):
                    record("d%d d%d = d%d d%d" % (i, j, j - 1, i), n)
    for n in range(N - 1):
        for j in range(n + 1):
            for i in range(j + 1):
                checked += 1
                if degen(n + 1, i) @ degen(n, j) != degen(n + 1, j + 1) @ degen(n, i):
                    record("s%d s%d = s%d s%d" % (i, j, j + 1, i), n)
    for n in range(N):
        ident = IntMatrix.identity(S.dim(n))
        for j in range(n + 1):
            sj = degen(n, j)
            for i in (j, j + 1):
                checked += 1
                if face(n + 1, i) @ sj != ident:
                    record("d%d s%d = id" % (i, j), n)
            if n >= 1:
                for i in range(j):
                    checked += 1
                    if face(n + 1, i) @ sj != degen(n - 1, j - 1) @ face(n, i):
                        record("d%d s%d = s%d d%d" % (i, j, j - 1, i), n)
                for i in range(j + 2, n + 2):
                    checked += 1
                    if face(n + 1, i) @ sj != degen(n - 1, j) @ face(n, i - 1):
                        record("d%d s%d = s%d d%d" % (i, j, j, i - 1), n)
    return IdentityReport(checked, violations)


def check_identities(X, max_level=None):
    if isinstance(X, PreSimplicialSet):
        return X.check_face_identities()
    return X.check_identities(max_level)


def standard_simplex(n, truncation=None):
    """Delta[n]: generators are the strictly increasing vertex words."""
    if n < 0:
        raise ValueError("simplex dimension must be nonnegative")
    N = n if truncation is None else truncation
    if N < n:
        raise ValueError("truncation below the top generator")
    gens = [tuple(itertools.combinations(range(n + 1), m + 1)) for m in range(n + 1)]
    index = [{w: k for k, w in enumerate(level)} for level in gens]
    gen_face = {}
    for m in range(1, n + 1):
        for k, w in enumerate(gens[m]):
            for i in range(m + 1):
                sub = w[:i] + w[i + 1 :]
                gen_face[(m, k, i)] = Cell((), m - 1, index[m - 1][sub])
    return FinSimplicialSet(N, gens, gen_face)


def presimplex(n):
    """nabla[n]: the n-simplex with faces only, no degeneracies."""
    if n < 0:
        raise ValueError("simplex dimension must be nonnegative")
    cells = [tuple(itertools.combinations(range(n + 1), m + 1)) for m in range(n + 1)]
    face_table = {}
    for m in range(1, n + 1):
        for w in cells[m]:
            for i in range(m + 1):
                face_table[(m, w, i)] = w[:i] + w[i + 1 :]
    return PreSimplicialSet(n, cells, face_table)


def horn(n, k, truncation=None):
    """Lambda^k[n]: the simplex boundary minus the k-th face and top cell."""
    if n < 1:
        raise ValueError("horns need n >= 1")
    if not 0 <= k <= n:
        raise ValueError("horn index out of range")
    N = n if truncation is None else truncation
    omitted = tuple(v for v in range(n + 1) if v != k)
    gens = []
    for m in range(n):
        level = tuple(
            w for w in itertools.combinations(range(n + 1), m + 1) if w != omitted
        )
        gens.append(level)
    index = [{w: p for p, w in enumerate(level)} for level in gens]
    gen_face = {}
    for m in range(1, n):
        for p, w in enumerate(gens[m]):
            for i in range(m + 1):
                sub = w[:i] + w[i + 1 :]
                gen_face[(m, p, i)] = Cell((), m - 1, index[m - 1][sub])
    return FinSimplicialSet(N, gens, gen_face)


def product(X, Y, truncation=None):
    """Levelwise product with diagonal face and degeneracy action.

    A pair is degenerate exactly when both components are images of the
    same s_i, which in normal form means the degeneracy words share an
    index; generators are therefore the pairs with disjoint words.
    """
    N = min(X.truncation, Y.truncation)
    if truncation is not None:
        N = min(N, truncation)
    gens = []
    index = []
    for level in range(N + 1):
        pairs = tuple(
            (cx, cy)
            for cx in X.cells(level)
            for cy in Y.cells(level)
            if not set(cx.word) & set(cy.word)
        )
        gens.append(pairs)
        index.append({pair: p for p, pair in enumerate(pairs)})
    gen_face = {}
    for level in range(1, N + 1):
        for p, (cx, cy) in enumerate(gens[level]):
            for i in range(level + 1):
                fx = X.face(i, cx)
                fy = Y.face(i, cy)
                word = []
                common = set(fx.word) & set(fy.word)
                while common:
                    t = max(common)
                    fx = X.face(t, fx)
                    fy = Y.face(t, fy)
                    word.append(t)
                    common = set(fx.word) & set(fy.word)
                base_level = level - 1 - len(word)
                gen_face[(level, p, i)] = Cell(
                    tuple(word), base_level, index[base_level][(fx, fy)]
                )
    return FinSimplicialSet(N, gens, gen_face)


def product_components(P, X, Y, cell):
    """Factor a product cell into its X and Y components."""
    cx, cy = P.label(cell)
    for i in reversed(cell.word):
        cx = X.degeneracy(i, cx)
        cy = Y.degeneracy(i, cy)
    return cx, cy


def linearize(X, truncation=None):
    """Free simplicial Z-module on a simplicial set."""
    N = X.truncation if truncation is None else min(truncation, X.truncation)
    basis = [X.cells(n) for n in range(N + 1)]
    index = [{c: p for p, c in enumerate(level)} for level in basis]
    dims = tuple(len(level) for level in basis)
    face = {}
    degen = {}
    for n in range(1, N + 1):
        for i in range(n + 1):
            entries = {}
            for col, c in enumerate(basis[n]):
                entries[(index[n - 1][X.face(i, c)], col)] = 1
            face[(n, i)] = IntMatrix(dims[n - 1], dims[n], entries)
    for n in range(N):
        for i in range(n + 1):
            entries = {}
            for col, c in enumerate(basis[n]):
                entries[(index[n + 1][X.degeneracy(i, c)], col)] = 1
            degen[(n, i)] = IntMatrix(dims[n + 1], dims[n], entries)
    labels = tuple(tuple(X.render_cell(c) for c in level) for level in basis)
    return FinSimplicialModule(N, dims, face, degen, labels)


def constant_module(rank, truncation):
    """The constant simplicial module: every level M, every map identity."""
    ident = IntMatrix.identity(rank)
    dims = (rank,) * (truncation + 1)
    face = {(n, i): ident for n in range(1, truncation + 1) for i in range(n + 1)}
    degen = {(n, i): ident for n in range(truncation) for i in range(n + 1)}
    return FinSimplicialModule(truncation, dims, face, degen)


def chain_complex(X):
    """Alternating-sum boundary complex of a simplicial object."""
    if isinstance(X, FinSimplicialModule):
        return X.chain_complex()
    if isinstance(X, (FinSimplicialSet,)):
        return linearize(X).chain_complex()
    if isinstance(X, PreSimplicialSet):
        return X.chain_complex()
    raise TypeError("no chain complex for %r" % type(X).__name__)


def moore_complex(S):
    if not isinstance(S, FinSimplicialModule):
        raise TypeError("Moore complex needs a simplicial module")
    return S.moore_complex()


def classifying_space(elements, multiply, unit, truncation):
    """BG for a finite group given by its multiplication table.

    Level n is G^n; the normal form strips unit entries into degeneracies.
    Rejects tables that are not associative unital group tables.
    """
    elements = tuple(elements)
    table = dict(multiply)
    if unit not in elements:
        raise ValueError("unit is not an element")
    for g in elements:
        for h in elements:
            if table.get((g, h)) not in elements:
                raise ValueError("multiplication table is not closed")
    for g in elements:
        for h in elements:
            for k in elements:
                if table[(table[(g, h)], k)] != table[(g, table[(h, k)])]:
                    raise ValueError("multiplication table is not associative")
    for g in elements:
        if table[(unit, g)] != g or table[(g, unit)] != g:
            raise ValueError("unit law fails")
    for g in elements:
        if not any(table[(g, h)] == unit and table[(h, g)] == unit for h in elements):
            raise ValueError("element %r has no inverse" % (g,))
    others = tuple(sorted(g for g in elements if g != unit))
    gens = [((),)]
    for m in range(1, truncation + 1):
        gens.append(tuple(itertools.product(others, repeat=m)))
    index = [{t: p for p, t in enumerate(level)} for level in gens]

    def normalize(raw):
        base = tuple(g for g in raw if g != unit)
        word = tuple(p for p in range(len(raw) - 1, -1, -1) if raw[p] == unit)
        return Cell(word, len(base), index[len(base)][base])

    gen_face = {}
    for m in range(1, truncation + 1):
        for p, t in enumerate(gens[m]):
            for i in range(m + 1):
                if i == 0:
                    raw = t[1:]
                elif i == m:
                    raw = t[:-1]
                else:
                    raw = t[: i - 1] + (table[(t[i - 1], t[i])],) + t[i + 1 :]
                gen_face[(m, p, i)] = normalize(raw)
    return FinSimplicialSet(truncation, gens, gen_face)


def path_space(A):
    """PA with (PA)_n = A_{n+1}, faces and degeneracies shifted by one."""
    if not isinstance(A, FinSimplicialModule):
        raise TypeError("path space needs a simplicial module")
    if A.truncation < 2:
        raise ValueError("need truncation >= 2")
    N = A.truncation - 1
    face = {
        (n, i): A.face_matrix(n + 1, i + 1)
        for n in range(1, N + 1)
        for i in range(n + 1)
    }
    degen = {
        (n, i): A.degeneracy_matrix(n + 1, i + 1)
        for n in range(N)
        for i in range(n + 1)
    }
    return FinSimplicialModule(N, A.dims[1:], face, degen)


def loop_space(A):
    """Levelwise kernel of d_0: PA -> A, with restricted structure maps."""
    PA = path_space(A)
    N = PA.truncation
    bases = []
    for n in range(N + 1):
        cols = kernel_basis(A.face_matrix(n + 1, 0))
        entries = {}
        for c, vec in enumerate(cols):
            for r, v in enumerate(vec):
                if v:
                    entries[(r, c)] = v
        bases.append(IntMatrix(A.dims[n + 1], len(cols), entries))
    dims = tuple(B.ncols for B in bases)
    face = {}
    degen = {}
    for n in range(1, N + 1):
        for i in range(n + 1):
            face[(n, i)] = induced_matrix(bases[n - 1], PA.face_matrix(n, i), bases[n])
    for n in range(N):
        for i in range(n + 1):
            degen[(n, i)] = induced_matrix(
                bases[n + 1], PA.degeneracy_matrix(n, i), bases[n]
            )
    return FinSimplicialModule(N, dims, face, degen)


def _vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def _vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def homologous_witness(S, a, b):
    """The 2-chain whose boundary exhibits a + b homologous to [a+b].

    With gamma = s0 a + s1 b, returns w = gamma - s0 s0 d0 b - s0 s0 d1 a
    and checks boundary(w) = a + b - [a+b], which in a module is the zero
    vector since [a+b] is the element a+b itself.  The three face images
    of gamma are checked against their closed forms along the way.
    """
    if not isinstance(S, FinSimplicialModule):
        raise TypeError("witness needs a simplicial module")
    if S.truncation < 2:
        raise ValueError("need truncation >= 2")
    a = tuple(a)
    b = tuple(b)
    if len(a) != S.dims[1] or len(b) != S.dims[1]:
        raise ValueError("a and b must be level-1 vectors")
    s0_0 = S.degeneracy_matrix(0, 0)
    s0_1 = S.degeneracy_matrix(1, 0)
    s1_1 = S.degeneracy_matrix(1, 1)
    d0 = S.face_matrix(1, 0)
    d1 = S.face_matrix(1, 1)
    gamma = _vadd(s0_1.apply(a), s1_1.apply(b))
    expected = {
        0: _vadd(a, s0_0.apply(d0.apply(b))),
        1: _vadd(a, b),
        2: _vadd(s0_0.apply(d1.apply(a)), b),
    }
    for i in range(3):
        if S.face_matrix(2, i).apply(gamma) != expected[i]:
            raise ValueError("face d%d of gamma does not match its closed form" % i)
    w = _vsub(
        _vsub(gamma, s0_1.apply(s0_0.apply(d0.apply(b)))),
        s0_1.apply(s0_0.apply(d1.apply(a))),
    )
    boundary = tuple(
        x - y + z
        for x, y, z in zip(
            S.face_matrix(2, 0).apply(w),
            S.face_matrix(2, 1).apply(w),
            S.face_matrix(2, 2).apply(w),
        )
    )
    residue = _vsub(_vadd(a, b), _vadd(a, b))
    if boundary != residue:
        raise ValueError("boundary of the witness is not a + b - [a+b]")
    return w


class Mod2Points:
    """The set of mod-2 points of a simplicial module, as cells and maps."""

    __slots__ = ("module", "truncation")

    def __init__(self, module):
        self.module = module
        self.truncation = module.truncation

    def cells(self, n):
        return tuple(
            (n, bits) for bits in itertools.product((0, 1), repeat=self.module.dims[n])
        )

    def face(self, i, cell):
        n, bits = cell
        return (n - 1, tuple(v % 2 for v in self.module.face_matrix(n, i).apply(bits)))

    def degeneracy(self, i, cell):
        n, bits = cell
        return (
            n + 1,
            tuple(v % 2 for v in self.module.degeneracy_matrix(n, i).apply(bits)),
        )


def kan_check(X, n, max_maps=250000):
    """Enumerate all horn maps at dimension n and count how many fill.

    Works on any object with cells/face/degeneracy; refuses face-only
    presentations, and refuses when the enumeration would exceed max_maps.
    """
    for attr in ("cells", "face", "degeneracy"):
        if not hasattr(X, attr):
            raise TypeError("kan_check needs a simplicial set with degeneracies")
    if not 1 <= n <= X.truncation:
        raise ValueError("dimension out of range")
    lower = X.cells(n - 1)
    upper = X.cells(n)
    faces_of = [tuple(X.face(i, y) for i in range(n + 1)) for y in upper]
    counts = {}
    unfillable = []
    for k in range(n + 1):
        positions = [i for i in range(n + 1) if i != k]
        if len(lower) ** len(positions) > max_maps:
            raise ValueError("horn enumeration exceeds %d maps" % max_maps)
        total = 0
        filled = 0

        def extend(assigned):
            nonlocal total, filled
            if len(assigned) == len(positions):
                total += 1
                want = dict(zip(positions, assigned))
                for fy in faces_of:
                    if all(fy[i] == want[i] for i in positions):
                        filled += 1
                        return
                if len(unfillable) < 3:
                    unfillable.append((k, tuple(assigned)))
                return
            q = positions[len(assigned)]
            for x in lower:
                ok = True
                for t, p in enumerate(positions[: len(assigned)]):
                    xp = assigned[t]
                    if X.face(p, x) != X.face(q - 1, xp):
                        ok = False
                        break
                if ok:
                    extend(assigned + (x,))

        extend(())
        counts[k] = (total, filled)
    return KanReport(n, counts, unfillable)
