"""Chain complexes as simplicial modules and back.

Gamma sends a finite free chain complex C to the simplicial module with
level n the module of chain maps from the reduced simplex complex into C:

    Gamma(C)_n = [ Dbar[n] -> C ],   Dbar[n] = N(Z Delta[n]),

computed by solving the integer linear system "commute with boundaries".
Faces and degeneracies act by precomposition with the chain maps that the
simplex vertex maps delta_i: [n-1] -> [n] and sigma_i: [n+1] -> [n] induce
on the Moore complexes.  The Moore complex N applied back to Gamma(C)
recovers C up to isomorphism; roundtrip_check exhibits the rank equality
and the per-degree Smith form equality of the boundaries.

An unnormalized variant uses the full simplicial chain complex of Delta[n]
as the source; its levels are larger but its homotopy groups agree.
"""

import itertools
from collections import namedtuple

from .homology import ChainComplex, HomologyGroup, homology
from .simplicial import FinSimplicialModule, induced_matrix
from .snf import IntMatrix, kernel_basis, smith_normal_form, solve


def _cells(n, k):
    """Monotone vertex words of length k+1 over 0..n: the full basis."""
    return tuple(itertools.combinations_with_replacement(range(n + 1), k + 1))


def _full_face(n, k, i):
    """d_i on the full basis: delete the i-th letter."""
    src = _cells(n, k)
    dst = {w: p for p, w in enumerate(_cells(n, k - 1))}
    entries = {}
    for col, w in enumerate(src):
        entries[(dst[w[:i] + w[i + 1 :]], col)] = 1
    return IntMatrix(len(dst), len(src), entries)


def _vertex_map_matrix(phi, m, n, k):
    """Z[Delta[m]_k] -> Z[Delta[n]_k] induced by a monotone vertex map."""
    src = _cells(m, k)
    dst = {w: p for p, w in enumerate(_cells(n, k))}
    entries = {}
    for col, w in enumerate(src):
        entries[(dst[tuple(phi(v) for v in w)], col)] = 1
    return IntMatrix(len(dst), len(src), entries)


def _moore_data(n, kmax):
    """(bases, ranks, boundaries) of Dbar[n] through degree kmax.

    bases[k] holds the kernel lattice of the first k face maps inside the
    full level; boundaries follow the last face map through the bases.
    """
    kmax = min(kmax, n)
    bases = [IntMatrix.identity(n + 1)]
    for k in range(1, kmax + 1):
        stacked = _full_face(n, k, 0)
        for i in range(1, k):
            stacked = stacked.vstack(_full_face(n, k, i))
        cols = kernel_basis(stacked)
        entries = {}
        for c, vec in enumerate(cols):
            for r, v in enumerate(vec):
                if v:
                    entries[(r, c)] = v
        bases.append(IntMatrix(len(_cells(n, k)), len(cols), entries))
    ranks = tuple(B.ncols for B in bases)
    boundaries = {}
    for k in range(1, kmax + 1):
        boundaries[k] = induced_matrix(bases[k - 1], _full_face(n, k, k), bases[k])
    return bases, ranks, boundaries


def moore_of_simplex(n):
    """Dbar[n] as a chain complex; rank C(n+1, k+1) in degree k."""
    if not 0 <= n <= 5:
        raise ValueError("need 0 <= n <= 5")
    _, ranks, boundaries = _moore_data(n, n)
    return ChainComplex(ranks, boundaries)


def _unnormalized_data(n, kmax):
    """Full simplicial chain complex of Delta[n] through degree kmax."""
    ranks = tuple(len(_cells(n, k)) for k in range(kmax + 1))
    boundaries = {}
    for k in range(1, kmax + 1):
        total = IntMatrix.zero(ranks[k - 1], ranks[k])
        for i in range(k + 1):
            M = _full_face(n, k, i)
            total = total + (M if i % 2 == 0 else -M)
        boundaries[k] = total
    return ranks, boundaries


def _chain_map_basis(src_ranks, src_boundaries, C):
    """Lattice basis of chain maps from the source data into C.

    Unknowns are the entries of X_k for k up to min(top degrees); the
    system imposes boundary(C) X_k = X_{k-1} boundary(src) wherever either
    side can be nonzero, including the one-past constraint when the source
    extends above C.
    """
    S = len(src_ranks) - 1
    L = C.top
    K = min(S, L)
    sizes = [C.ranks[k] * src_ranks[k] for k in range(K + 1)]
    offsets = [0]
    for s in sizes:
        offsets.append(offsets[-1] + s)
    total = offsets[-1]

    entries = {}
    row_base = 0
    for k in range(1, min(K + 1, S) + 1):
        block_rows = C.ranks[k - 1] * src_ranks[k]
        dC = C.boundary(k) if k <= K else None
        dS = src_boundaries[k]
        for r in range(C.ranks[k - 1]):
            for c in range(src_ranks[k]):
                row = row_base + r * src_ranks[k] + c
                if dC is not None:
                    for m in range(C.ranks[k]):
                        v = dC.get(r, m)
                        if v:
                            var = offsets[k] + m * src_ranks[k] + c
                            entries[(row, var)] = entries.get((row, var), 0) + v
                for m in range(src_ranks[k - 1]):
                    v = dS.get(m, c)
                    if v:
                        var = offsets[k - 1] + r * src_ranks[k - 1] + m
                        cur = entries.get((row, var), 0) - v
                        if cur:
                            entries[(row, var)] = cur
                        else:
                            entries.pop((row, var), None)
        row_base += block_rows

    system = IntMatrix(row_base, total, entries)
    flat = kernel_basis(system)
    maps = []
    for vec in flat:
        per_level = {}
        for k in range(K + 1):
            block = {}
            for m in range(C.ranks[k]):
                for c in range(src_ranks[k]):
                    v = vec[offsets[k] + m * src_ranks[k] + c]
                    if v:
                        block[(m, c)] = v
            per_level[k] = IntMatrix(C.ranks[k], src_ranks[k], block)
        maps.append(per_level)
    return maps, offsets, total


TruncatedGamma = namedtuple("TruncatedGamma", ["module", "basis", "source", "normalized"])


def gamma(C, truncation, normalized=True):
    """Gamma(C) as a simplicial module, levels 0..truncation."""
    if not isinstance(C, ChainComplex):
        raise TypeError("gamma needs a finite free chain complex")
    if not 0 <= truncation <= 4:
        raise ValueError("need 0 <= truncation <= 4")
    L = C.top
    N = truncation
    sources = {}
    moore_bases = {}
    for n in range(N + 1):
        kmax = min(n, L + 1) if normalized else L + 1
        if normalized:
            bases, ranks, boundaries = _moore_data(n, kmax)
            moore_bases[n] = bases
        else:
            ranks, boundaries = _unnormalized_data(n, kmax)
        sources[n] = (ranks, boundaries)

    level_basis = {}
    level_offsets = {}
    level_total = {}
    for n in range(N + 1):
        ranks, boundaries = sources[n]
        maps, offsets, total = _chain_map_basis(ranks, boundaries, C)
        level_basis[n] = maps
        level_offsets[n] = offsets
        level_total[n] = total

    flat_matrix = {}
    for n in range(N + 1):
        offsets = level_offsets[n]
        K = len(offsets) - 2
        cols = {}
        for j, phi in enumerate(level_basis[n]):
            for k in range(K + 1):
                M = phi[k]
                for (r, c), v in M.entries.items():
                    cols[(offsets[k] + r * M.ncols + c, j)] = v
        flat_matrix[n] = IntMatrix(level_total[n], len(level_basis[n]), cols)

    def induced(phi_vertex, m_src, n_tgt, kcap):
        """Chain-map matrices Dbar[m_src] -> Dbar[n_tgt] per degree."""
        out = {}
        for k in range(kcap + 1):
            M = _vertex_map_matrix(phi_vertex, m_src, n_tgt, k)
            if normalized:
                out[k] = induced_matrix(moore_bases[n_tgt][k], M, moore_bases[m_src][k])
            else:
                out[k] = M
        return out

    def express(n_target, psi):
        """Coordinates of a chain map in the level basis."""
        offsets = level_offsets[n_target]
        vec = [0] * level_total[n_target]
        for k, M in psi.items():
            for (r, c), v in M.entries.items():
                vec[offsets[k] + r * M.ncols + c] = v
        x = solve(flat_matrix[n_target], tuple(vec))
        if x is None:
            raise RuntimeError("precomposition left the chain-map lattice")
        return x

    # Components of phi above its source's top are zero maps, so a
    # precomposed psi only needs the degrees both sides carry; express()
    # treats the omitted blocks as zero and the solve enforces them.
    face = {}
    degen = {}
    dims = tuple(len(level_basis[n]) for n in range(N + 1))
    for n in range(1, N + 1):
        K_src = len(level_offsets[n]) - 2
        need = min(len(sources[n - 1][0]) - 1, K_src)
        for i in range(n + 1):
            delta = lambda v, i=i: v if v < i else v + 1
            I = induced(delta, n - 1, n, need)
            cols = []
            for phi in level_basis[n]:
                psi = {k: phi[k] @ I[k] for k in range(need + 1)}
                cols.append(express(n - 1, psi))
            entries = {}
            for c, x in enumerate(cols):
                for r, v in enumerate(x):
                    if v:
                        entries[(r, c)] = v
            face[(n, i)] = IntMatrix(dims[n - 1], dims[n], entries)
    for n in range(N):
        K_src = len(level_offsets[n]) - 2
        need = min(len(sources[n + 1][0]) - 1, K_src)
        for i in range(n + 1):
            sigma = lambda v, i=i: v if v <= i else v - 1
            I = induced(sigma, n + 1, n, need)
            cols = []
            for phi in level_basis[n]:
                psi = {k: phi[k] @ I[k] for k in range(need + 1)}
                cols.append(express(n + 1, psi))
            entries = {}
            for c, x in enumerate(cols):
                for r, v in enumerate(x):
                    if v:
                        entries[(r, c)] = v
            degen[(n, i)] = IntMatrix(dims[n + 1], dims[n], entries)

    module = FinSimplicialModule(N, dims, face, degen)
    basis = tuple(tuple(level_basis[n]) for n in range(N + 1))
    return TruncatedGamma(module, basis, C, normalized)


class RoundtripReport(
    namedtuple("RoundtripReport", ["truncation", "ranks", "source_ranks", "divisors", "source_divisors", "mismatches"])
):
    """N(Gamma(C)) against C: ranks and boundary Smith forms per degree."""

    @property
    def ok(self):
        return not self.mismatches

    def text(self):
        lines = [
            "roundtrip N(Gamma(C)) through level %d: %s"
            % (self.truncation, "ok" if self.ok else "MISMATCH")
        ]
        lines.append("  ranks %s vs source %s" % (self.ranks, self.source_ranks))
        lines.append("  boundary divisors %s vs source %s" % (self.divisors, self.source_divisors))
        lines.extend("  " + m for m in self.mismatches)
        return "\n".join(lines)


def roundtrip_check(C, truncation):
    """Verify N(Gamma(C)) is isomorphic to C through the truncation."""
    G = gamma(C, truncation)
    NG = G.module.moore_complex()
    mismatches = []
    ranks = NG.ranks
    source_ranks = tuple(
        C.ranks[n] if n <= C.top else 0 for n in range(truncation + 1)
    )
    if ranks != source_ranks:
        mismatches.append("rank mismatch: %s vs %s" % (ranks, source_ranks))
    divisors = []
    source_divisors = []
    for n in range(1, truncation + 1):
        d_round = smith_normal_form(NG.boundary(n))[0]
        d_src = smith_normal_form(C.boundary(n))[0]
        divisors.append(d_round)
        source_divisors.append(d_src)
        if d_round != d_src:
            mismatches.append("degree-%d boundary Smith forms differ: %s vs %s" % (n, d_round, d_src))
    h_round = homology(NG)
    h_src = homology(C)
    for k in range(truncation):
        a = h_round[k]
        b = h_src[k] if k <= C.top else HomologyGroup(0, ())
        if a != b:
            mismatches.append("homology mismatch in degree %d: %s vs %s" % (k, a, b))
    return RoundtripReport(
        truncation, ranks, source_ranks, tuple(divisors), tuple(source_divisors), mismatches
    )
