"""Sparse exact integer linear algebra: Smith normal form, kernels, solving.

All homology in this package reduces to three primitives over the integers:

* smith_normal_form: elementary divisors and rank of an integer matrix,
* kernel_basis: a lattice basis of the integer nullspace,
* solve: one exact solution of M x = b over the integers (or None).

Matrices are sparse dicts of big ints, so nothing overflows and zero rows
or columns cost nothing. Pivoting always prefers entries of absolute value
one (the overwhelmingly common case for the boundary matrices produced
here), which keeps fill-in and coefficient growth under control; otherwise
the minimal absolute value entry is chosen, with (row, col) as a
deterministic tie-break.
"""

from __future__ import annotations

__all__ = ["IntMatrix", "smith_normal_form", "kernel_basis", "solve"]


class IntMatrix:
    """Immutable sparse integer matrix. entries maps (row, col) to nonzero."""

    __slots__ = ("nrows", "ncols", "entries")

    def __init__(self, nrows, ncols, entries=None):
        self.nrows = nrows
        self.ncols = ncols
        self.entries = {}
        if entries:
            for (r, c), v in entries.items():
                if v:
                    if not (0 <= r < nrows and 0 <= c < ncols):
                        raise IndexError("entry (%d, %d) outside %dx%d" % (r, c, nrows, ncols))
                    self.entries[(r, c)] = v

    @classmethod
    def from_rows(cls, rows):
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        entries = {}
        for r, row in enumerate(rows):
            if len(row) != ncols:
                raise ValueError("ragged rows")
            for c, v in enumerate(row):
                if v:
                    entries[(r, c)] = v
        return cls(nrows, ncols, entries)

    @classmethod
    def zero(cls, nrows, ncols):
        return cls(nrows, ncols)

    @classmethod
    def identity(cls, n):
        return cls(n, n, {(i, i): 1 for i in range(n)})

    def get(self, r, c):
        return self.entries.get((r, c), 0)

    def is_zero(self):
        return not self.entries

    def to_rows(self):
        rows = [[0] * self.ncols for _ in range(self.nrows)]
        for (r, c), v in self.entries.items():
            rows[r][c] = v
        return rows

    def transpose(self):
        return IntMatrix(
            self.ncols, self.nrows, {(c, r): v for (r, c), v in self.entries.items()}
        )

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return (
            self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.nrows, self.ncols, tuple(sorted(self.entries.items()))))

    def __add__(self, other):
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch in addition")
        out = dict(self.entries)
        for k, v in other.entries.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return IntMatrix(self.nrows, self.ncols, out)

    def __neg__(self):
        return IntMatrix(
            self.nrows, self.ncols, {k: -v for k, v in self.entries.items()}
        )

    def __sub__(self, other):
        return self + (-other)

    def scale(self, a):
        return IntMatrix(
            self.nrows, self.ncols, {k: a * v for k, v in self.entries.items()}
        )

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in product")
        # index other by row so the product only walks nonzero pairs
        other_rows = {}
        for (r, c), v in other.entries.items():
            other_rows.setdefault(r, []).append((c, v))
        out = {}
        for (r, k), v in self.entries.items():
            for c, w in other_rows.get(k, ()):
                key = (r, c)
                s = out.get(key, 0) + v * w
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return IntMatrix(self.nrows, other.ncols, out)

    def apply(self, vec):
        """Matrix times column vector (a sequence of length ncols)."""
        if len(vec) != self.ncols:
            raise ValueError("vector length mismatch")
        out = [0] * self.nrows
        for (r, c), v in self.entries.items():
            if vec[c]:
                out[r] += v * vec[c]
        return tuple(out)

    def vstack(self, other):
        if self.ncols != other.ncols:
            raise ValueError("column mismatch in vstack")
        out = dict(self.entries)
        for (r, c), v in other.entries.items():
            out[(r + self.nrows, c)] = v
        return IntMatrix(self.nrows + other.nrows, self.ncols, out)

    def column(self, c):
        return tuple(self.entries.get((r, c), 0) for r in range(self.nrows))

    def with_columns(self, cols):
        """New matrix from a list of column vectors (each of length nrows)."""
        entries = {}
        for c, col in enumerate(cols):
            for r, v in enumerate(col):
                if v:
                    entries[(r, c)] = v
        return IntMatrix(self.nrows, len(cols), entries)

    def __repr__(self):
        return "IntMatrix(%dx%d, %d nonzero)" % (self.nrows, self.ncols, len(self.entries))


def _load(matrix):
    # rows: r -> {c: v}, cols: c -> set of rows. Mutated in place by SNF.
    rows = {}
    cols = {}
    for (r, c), v in matrix.entries.items():
        rows.setdefault(r, {})[c] = v
        cols.setdefault(c, set()).add(r)
    return rows, cols


def _row_sub(rows, cols, r2, r1, q):
    # rows[r2] -= q * rows[r1]
    target = rows.setdefault(r2, {})
    for c, v in list(rows.get(r1, {}).items()):
        s = target.get(c, 0) - q * v
        if s:
            if c not in target:
                cols.setdefault(c, set()).add(r2)
            target[c] = s
        elif c in target:
            del target[c]
            cols[c].discard(r2)
            if not cols[c]:
                del cols[c]
    if not target:
        rows.pop(r2, None)


def _col_sub(rows, cols, c2, c1, q):
    # column c2 -= q * column c1
    for r in list(cols.get(c1, ())):
        v = rows[r][c1]
        s = rows[r].get(c2, 0) - q * v
        if s:
            if c2 not in rows[r]:
                cols.setdefault(c2, set()).add(r)
            rows[r][c2] = s
        elif c2 in rows[r]:
            del rows[r][c2]
            cols[c2].discard(r)
            if not cols[c2]:
                del cols[c2]
            if not rows[r]:
                del rows[r]


def _pick_pivot(rows):
    # smallest absolute value, ties broken by (row, col) for determinism
    best = None
    for r in rows:
        for c, v in rows[r].items():
            key = (abs(v), r, c)
            if best is None or key < best:
                best = key
    return (best[1], best[2]) if best else None


def smith_normal_form(matrix):
    """Elementary divisors of an integer matrix.

    Returns (divisors, rank) where divisors is the tuple (d_1, ..., d_k) of
    positive invariant factors with d_1 | d_2 | ... | d_k and rank = k.
    Unimodular row and column operations only, all exact.
    """
    rows, cols = _load(matrix)
    divisors = []
    while rows:
        r, c = _pick_pivot(rows)
        # Alternate clearing the pivot column and row. Whenever a division
        # leaves a nonzero remainder the remainder is strictly smaller than
        # the pivot, so it becomes the new pivot and the loop terminates.
        while True:
            v = rows[r][c]
            moved = False
            for r2 in sorted(cols.get(c, ())):
                if r2 == r:
                    continue
                q = rows[r2][c] // v
                if q:
                    _row_sub(rows, cols, r2, r, q)
                if rows.get(r2, {}).get(c):
                    r, v = r2, rows[r2][c]
                    moved = True
                    break
            if moved:
                continue
            for c2 in sorted(rows.get(r, {})):
                if c2 == c:
                    continue
                q = rows[r][c2] // v
                if q:
                    _col_sub(rows, cols, c2, c, q)
                if rows.get(r, {}).get(c2):
                    c, v = c2, rows[r][c2]
                    moved = True
                    break
            if not moved:
                break
        v = rows[r][c]
        if abs(v) != 1:
            # the pivot must divide every remaining entry for the divisor
            # chain; when it does not, absorbing the offending row creates a
            # smaller entry and we redo elimination from there
            offender = None
            for r2 in sorted(rows):
                if r2 == r:
                    continue
                for c2, v2 in sorted(rows[r2].items()):
                    if v2 % v:
                        offender = r2
                        break
                if offender is not None:
                    break
            if offender is not None:
                _row_sub(rows, cols, r, offender, -1)
                continue
        divisors.append(abs(v))
        del rows[r][c]
        if not rows[r]:
            del rows[r]
        cols[c].discard(r)
        if not cols[c]:
            del cols[c]
    divisors.sort()
    return tuple(divisors), len(divisors)


def _column_echelon(matrix):
    """Integer column echelon form via unimodular column operations.

    Returns (work, transform, pivots): work is the echelon matrix as a list
    of column dicts {row: value}, transform the corresponding columns of the
    unimodular transform U (so matrix @ U = work), and pivots the list of
    (row, col) pivot positions with strictly increasing rows and cols
    0, 1, 2, ...
    """
    ncols = matrix.ncols
    work = [dict() for _ in range(ncols)]
    for (r, c), v in matrix.entries.items():
        work[c][r] = v
    transform = [{c: 1} for c in range(ncols)]
    pivots = []
    next_col = 0
    for r in range(matrix.nrows):
        while True:
            cands = [j for j in range(next_col, ncols) if work[j].get(r)]
            if not cands:
                break
            if len(cands) == 1:
                j = cands[0]
            else:
                j = min(cands, key=lambda k: (abs(work[k][r]), k))
                v = work[j][r]
                for k in cands:
                    if k == j:
                        continue
                    q = work[k][r] // v
                    if q:
                        for rr, vv in list(work[j].items()):
                            s = work[k].get(rr, 0) - q * vv
                            if s:
                                work[k][rr] = s
                            else:
                                work[k].pop(rr, None)
                        for rr, vv in list(transform[j].items()):
                            s = transform[k].get(rr, 0) - q * vv
                            if s:
                                transform[k][rr] = s
                            else:
                                transform[k].pop(rr, None)
                continue
            work[next_col], work[j] = work[j], work[next_col]
            transform[next_col], transform[j] = transform[j], transform[next_col]
            pivots.append((r, next_col))
            next_col += 1
            break
    return work, transform, pivots


def kernel_basis(matrix):
    """Basis of the integer nullspace, as a list of length-ncols tuples.

    The returned vectors span ker(matrix) as a full lattice (the kernel of
    an integer matrix is a pure sublattice, so a column-Hermite transform
    gives an exact basis, not just a finite-index one).
    """
    work, transform, pivots = _column_echelon(matrix)
    npiv = len(pivots)
    basis = []
    for j in range(npiv, matrix.ncols):
        col = transform[j]
        basis.append(tuple(col.get(i, 0) for i in range(matrix.ncols)))
    return basis


def solve(matrix, vec):
    """One integer solution of matrix @ x = vec, or None.

    vec is a sequence of length nrows; the result is a tuple of length
    ncols. Uses the column echelon form: pivot rows are strictly
    increasing, and every column to the right of a pivot column vanishes on
    that pivot row, so forward substitution over pivot rows is exact.
    """
    if len(vec) != matrix.nrows:
        raise ValueError("vector length mismatch")
    work, transform, pivots = _column_echelon(matrix)
    residual = {r: v for r, v in enumerate(vec) if v}
    y = {}
    for r, c in pivots:
        rv = residual.get(r, 0)
        pv = work[c][r]
        if rv % pv:
            return None
        q = rv // pv
        if q:
            y[c] = q
            for rr, vv in work[c].items():
                s = residual.get(rr, 0) - q * vv
                if s:
                    residual[rr] = s
                else:
                    residual.pop(rr, None)
    if residual:
        return None
    x = [0] * matrix.ncols
    for c, q in y.items():
        for rr, vv in transform[c].items():
            x[rr] += q * vv
    return tuple(x)
