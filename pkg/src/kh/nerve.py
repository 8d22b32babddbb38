"""Nerves of small categories, functor homology, and the subdivision cross-checks.

The nerve of a category C has level-n cells the composable sequences
<f_0, ..., f_{n-1}>; faces drop an outer morphism or compose an adjacent
pair, degeneracies insert identities.  Homology of C with coefficients in
a module functor F is computed from the bar-type complex whose level-n
basis is (lambda, sequence) with lambda a basis element of F at the source
object: the inner faces compose, the last face drops, and d_0 acts
linearly through the matrix of the first morphism.

The simplex category Cat[n] is realized as the poset of nonempty faces of
the n-simplex under reverse inclusion (one morphism S -> T exactly when
T is a subset of S); its nondegenerate nerve cells are the strict face
chains, i.e. the cells of the barycentric subdivision.  The cube category
embeds by sending a word in {A,B}^n to the face retaining the asterisk
vertex 0 and the A positions.  Together these give two independent
recomputations of a functor's homology (over the subdivision and over the
bare simplex), and a third route to Khovanov homology.
"""

import itertools
from collections import namedtuple

from .categories import ModuleFunctor, SmallCategory, poset_category
from .homology import ChainComplex, homology, shifted_homology
from .khovanov import _label_basis, _loops_of, cube_category, state_functor
from .simplicial import Cell, FinSimplicialSet, PreSimplicialSet
from .snf import IntMatrix


def nerve(C, truncation):
    """The nerve of C as a finitely presented simplicial set.

    Nondegenerate n-cells are the composable sequences with no identity
    entries; a face image is brought to normal form by stripping the
    identities it creates into degeneracy indices.
    """
    if truncation < 1:
        raise ValueError("need truncation >= 1")
    objects = tuple(C.objects)
    obj_index = {a: k for k, a in enumerate(objects)}
    gens = [objects]
    index = [obj_index]
    for k in range(1, truncation + 1):
        level = tuple(C.sequences(k, include_identities=False))
        gens.append(level)
        index.append({seq: p for p, seq in enumerate(level)})

    def normalize(raw):
        base = tuple(f for f in raw if not C.is_identity(f))
        word = tuple(p for p in range(len(raw) - 1, -1, -1) if C.is_identity(raw[p]))
        if base:
            return Cell(word, len(base), index[len(base)][base])
        anchor = C.src(raw[0]) if raw else None
        return Cell(word, 0, obj_index[anchor])

    gen_face = {}
    for k in range(1, truncation + 1):
        for p, seq in enumerate(gens[k]):
            for i in range(k + 1):
                if i == 0:
                    if k == 1:
                        gen_face[(k, p, i)] = Cell((), 0, obj_index[C.dst(seq[0])])
                        continue
                    raw = seq[1:]
                elif i == k:
                    if k == 1:
                        gen_face[(k, p, i)] = Cell((), 0, obj_index[C.src(seq[0])])
                        continue
                    raw = seq[:-1]
                else:
                    raw = seq[: i - 1] + (C.compose[(seq[i], seq[i - 1])],) + seq[i + 1 :]
                gen_face[(k, p, i)] = normalize(raw)
    return FinSimplicialSet(truncation, gens, gen_face)


def functor_homology(C, F, truncation):
    """H_*(C, F) in degrees 0..truncation-1, from the bar-type complex."""
    F.validate()
    levels = [tuple((a, l) for a in C.objects for l in range(F.rank[a]))]
    index = [{cell: p for p, cell in enumerate(levels[0])}]
    for k in range(1, truncation + 1):
        level = tuple(
            (seq, l)
            for seq in C.sequences(k, include_identities=True)
            for l in range(F.rank[C.src(seq[0])])
        )
        levels.append(level)
        index.append({cell: p for p, cell in enumerate(level)})
    ranks = tuple(len(level) for level in levels)
    boundaries = {}
    for k in range(1, truncation + 1):
        entries = {}

        def add(row, col, val):
            if not val:
                return
            cur = entries.get((row, col), 0) + val
            if cur:
                entries[(row, col)] = cur
            else:
                entries.pop((row, col), None)

        for col, (seq, l) in enumerate(levels[k]):
            first = seq[0]
            M = F.matrix[first]
            tail = seq[1:]
            for b in range(M.nrows):
                v = M.get(b, l)
                if v:
                    target = (tail, b) if k > 1 else (C.dst(first), b)
                    add(index[k - 1][target], col, v)
            for i in range(1, k):
                sign = -1 if i % 2 else 1
                merged = seq[: i - 1] + (C.compose[(seq[i], seq[i - 1])],) + seq[i + 1 :]
                add(index[k - 1][(merged, l)], col, sign)
            sign = -1 if k % 2 else 1
            last = (seq[:-1], l) if k > 1 else (C.src(first), l)
            add(index[k - 1][last], col, sign)
        boundaries[k] = IntMatrix(ranks[k - 1], ranks[k], entries)
    return homology(ChainComplex(ranks, boundaries))[:truncation]


def simplex_category(n):
    """Cat[n]: nonempty faces of the n-simplex, one morphism S -> T iff T ⊆ S."""
    if n < 0:
        raise ValueError("need n >= 0")
    faces = []
    for size in range(1, n + 2):
        faces.extend(itertools.combinations(range(n + 1), size))
    return poset_category(faces, lambda s, t: set(t) <= set(s))


def barycentric_subdivision(n):
    """Subdiv(nabla[n]): k-cells are strict chains of k+1 nested faces.

    Chains are stored largest face first; the i-th face map deletes the
    i-th entry.  Pre-simplicial: no degeneracies exist here.
    """
    if not 0 <= n <= 5:
        raise ValueError("need 0 <= n <= 5")
    faces = []
    for size in range(1, n + 2):
        faces.extend(itertools.combinations(range(n + 1), size))
    chains = [tuple((f,) for f in faces)]
    for k in range(1, n + 1):
        level = tuple(
            chain + (f,)
            for chain in chains[k - 1]
            for f in faces
            if set(f) < set(chain[-1])
        )
        chains.append(level)
    face_table = {}
    for k in range(1, n + 1):
        for chain in chains[k]:
            for i in range(k + 1):
                face_table[(k, chain, i)] = chain[:i] + chain[i + 1 :]
    return PreSimplicialSet(n, chains, face_table)


def _functor_complex(F, levels, face_cell, face_morphism):
    """Chain complex of a face-indexed diagram of F-values.

    levels[k] lists the k-cells; each cell carries the module of F at its
    carrier object, and the i-th face contributes (-1)^i times the matrix
    of face_morphism(k, cell, i) into the cell face_cell(k, cell, i).
    """
    basis = []
    index = []
    for k, cells in enumerate(levels):
        level = tuple((c, l) for c in cells for l in range(F.rank[_carrier(c)]))
        basis.append(level)
        index.append({cell: p for p, cell in enumerate(level)})
    ranks = tuple(len(level) for level in basis)
    boundaries = {}
    for k in range(1, len(levels)):
        entries = {}
        for col, (c, l) in enumerate(basis[k]):
            for i in range(k + 1):
                target = face_cell(k, c, i)
                M = F.matrix[face_morphism(k, c, i)]
                sign = -1 if i % 2 else 1
                for b in range(M.nrows):
                    v = M.get(b, l)
                    if v:
                        key = (index[k - 1][(target, b)], col)
                        cur = entries.get(key, 0) + sign * v
                        if cur:
                            entries[key] = cur
                        else:
                            entries.pop(key, None)
        boundaries[k] = IntMatrix(ranks[k - 1], ranks[k], entries)
    return ChainComplex(ranks, boundaries)


def _carrier(cell):
    """Carrier object of a face or chain cell."""
    if cell and isinstance(cell[0], tuple):
        return cell[0]
    return cell


def simplex_functor_complex(F, n):
    """F(nabla[n]): one summand per face, faces mapped by F's matrices."""
    levels = [tuple(itertools.combinations(range(n + 1), k + 1)) for k in range(n + 1)]

    def face_cell(k, c, i):
        return c[:i] + c[i + 1 :]

    def face_morphism(k, c, i):
        return (c, c[:i] + c[i + 1 :])

    return _functor_complex(F, levels, face_cell, face_morphism)


def subdivision_functor_complex(F, n):
    """F(Subdiv(nabla[n])): strict chains weighted by F at the largest face."""
    sub = barycentric_subdivision(n)
    levels = [sub.cells(k) for k in range(n + 1)]
    C = F.category

    def face_cell(k, chain, i):
        return chain[:i] + chain[i + 1 :]

    def face_morphism(k, chain, i):
        if i == 0:
            return (chain[0], chain[1])
        return C.identity[chain[0]]

    return _functor_complex(F, levels, face_cell, face_morphism)


class SubdivisionReport(
    namedtuple("SubdivisionReport", ["n", "category", "subdivision", "simplex", "mismatches"])
):
    """Three computations of H_*(Cat[n], F) and their pairwise comparison."""

    @property
    def ok(self):
        return not self.mismatches

    def text(self):
        lines = ["subdivision check n=%d: %s" % (self.n, "ok" if self.ok else "MISMATCH")]
        for k in range(self.n + 1):
            lines.append(
                "  degree %d: category %s  subdivision %s  simplex %s"
                % (k, self.category[k], self.subdivision[k], self.simplex[k])
            )
        lines.extend("  " + m for m in self.mismatches)
        return "\n".join(lines)


def subdivision_theorem_check(n, F):
    """Compare H_*(Cat[n], F), H_*(F(Subdiv)), H_*(F(nabla)) in degrees 0..n."""
    if not 0 <= n <= 3:
        raise ValueError("need 0 <= n <= 3")
    h_cat = functor_homology(F.category, F, n + 1)[: n + 1]
    h_sub = homology(subdivision_functor_complex(F, n))[: n + 1]
    h_simp = homology(simplex_functor_complex(F, n))[: n + 1]
    mismatches = []
    for k in range(n + 1):
        seen = {
            "category": h_cat[k],
            "subdivision": h_sub[k],
            "simplex": h_simp[k],
        }
        if len(set(seen.values())) != 1:
            mismatches.append(
                "degree %d: %s"
                % (k, ", ".join("%s=%s" % kv for kv in sorted(seen.items())))
            )
    return SubdivisionReport(n, h_cat, h_sub, h_simp, mismatches)


CubeEmbedding = namedtuple("CubeEmbedding", ["cube", "simplex", "object_map", "morphism_map"])


def embed_cube(n):
    """The cube category inside Cat[n]: a word maps to the face keeping
    vertex 0 and the positions still marked A; every cube morphism maps to
    the unique face inclusion between the images.  Functoriality is checked
    on all composable pairs before returning.
    """
    if n < 0:
        raise ValueError("need n >= 0")
    cube = cube_category(n)
    cat = simplex_category(n)
    object_map = {}
    for u in cube.objects:
        face = (0,) + tuple(k + 1 for k, ch in enumerate(u) if ch == "A")
        object_map[u] = face
    if len(set(object_map.values())) != len(object_map):
        raise ValueError("object map is not injective")
    morphism_map = {}
    for f, (u, v) in cube.morphisms.items():
        mf = (object_map[u], object_map[v])
        if mf not in cat.morphisms:
            raise ValueError("image of %r is not a face inclusion" % (f,))
        morphism_map[f] = mf
    for g, f in cube.composable_pairs():
        lhs = morphism_map[cube.compose[(g, f)]]
        rhs = cat.compose[(morphism_map[g], morphism_map[f])]
        if lhs != rhs:
            raise ValueError("embedding fails functoriality on (%r, %r)" % (g, f))
    return CubeEmbedding(cube, cat, object_map, morphism_map)


def _internal_degrees(diagram):
    """All internal j = #B + (#1 - #x) values over all enhanced states."""
    degrees = set()
    for word in itertools.product("AB", repeat=len(diagram.crossings)):
        loops = _loops_of(diagram, word)
        b = word.count("B")
        for k in range(len(loops) + 1):
            degrees.add(b + (len(loops) - k) - k)
    return sorted(degrees)


def khovanov_simplex_functor(diagram, j):
    """The j-graded state functor pushed to Cat[n] along the cube embedding.

    Faces that do not contain vertex 0 carry the zero module; this is the
    extension making d_0 of the simplex complex the trivial map.
    """
    n = len(diagram.crossings)
    emb = embed_cube(n)
    F = state_functor(diagram)
    grade_index = {}
    for u in emb.cube.objects:
        loops = _loops_of(diagram, u)
        b = u.count("B")
        picks = []
        for p, labels in enumerate(_label_basis(loops)):
            lam = sum(1 if x == "1" else -1 for x in labels)
            if b + lam == j:
                picks.append(p)
        grade_index[u] = picks
    face_of = emb.object_map
    cube_of = {face: u for u, face in face_of.items()}
    rank = {}
    for face in emb.simplex.objects:
        u = cube_of.get(face)
        rank[face] = len(grade_index[u]) if u is not None else 0
    matrix = {}
    for mf, (s, t) in emb.simplex.morphisms.items():
        if rank[t] == 0 or rank[s] == 0:
            matrix[mf] = IntMatrix.zero(rank[t], rank[s])
            continue
        us, ut = cube_of[s], cube_of[t]
        M = F.matrix[(us, ut)]
        rows, cols = grade_index[ut], grade_index[us]
        entries = {}
        for r, br in enumerate(rows):
            for c, bc in enumerate(cols):
                v = M.get(br, bc)
                if v:
                    entries[(r, c)] = v
        matrix[mf] = IntMatrix(rank[t], rank[s], entries)
    return ModuleFunctor(emb.simplex, rank, matrix)


def khovanov_homology_via_nerve(diagram):
    """Khovanov homology through H_*(F(nabla[n])), shifted gradings.

    Homological degree k of the simplex complex counts the A-smoothings,
    so it corresponds to the cube grading i = n - k; the internal degree j
    is carried unchanged.  Zero groups are dropped from the result.
    """
    n = len(diagram.crossings)
    if n > 6:
        raise ValueError("nerve route limited to 6 crossings")
    raw = {}
    for j in _internal_degrees(diagram):
        F = khovanov_simplex_functor(diagram, j)
        groups = homology(simplex_functor_complex(F, n))
        for k, group in enumerate(groups):
            if group.free_rank or group.torsion:
                raw[(n - k, j)] = group
    return shifted_homology(raw, diagram.n_plus, diagram.n_minus)
