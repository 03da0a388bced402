"""Exact dense matrices over a Field, plus a sparse eliminator.

Matrices are stored as lists of rows of scalars.  Everything the rest of
the package needs reduces to reduced row echelon form computed exactly:
rank, kernels, images, solving, subspace membership and complements.
Zero-by-n and n-by-zero matrices are legal and behave as maps between
zero spaces.

Large sparse systems (naturality equations, tensor relations) go through
``sparse_rref``, which keeps rows as {column: scalar} dicts; dense rref
is used below the 64-column threshold where it is faster.
"""

from __future__ import annotations

from .errors import DimensionMismatch
from .field import Field

SPARSE_THRESHOLD = 64


class Matrix:
    """A rows x cols matrix of exact scalars over a fixed field."""

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field: Field, rows: int, cols: int, data=None):
        self.field = field
        self.rows = rows
        self.cols = cols
        if data is None:
            z = field.zero()
            self.data = [[z] * cols for _ in range(rows)]
        else:
            if len(data) != rows or any(len(r) != cols for r in data):
                raise DimensionMismatch("data does not match declared shape")
            self.data = [list(r) for r in data]

    # -- constructors ------------------------------------------------

    @staticmethod
    def identity(field, n):
        m = Matrix(field, n, n)
        one = field.one()
        for i in range(n):
            m.data[i][i] = one
        return m

    @staticmethod
    def zeros(field, rows, cols):
        return Matrix(field, rows, cols)

    @staticmethod
    def from_rows(field, rows):
        rows = [list(r) for r in rows]
        cols = len(rows[0]) if rows else 0
        return Matrix(field, len(rows), cols, rows)

    @staticmethod
    def from_cols(field, cols_list, nrows=None):
        if not cols_list:
            return Matrix(field, nrows or 0, 0)
        nrows = len(cols_list[0])
        m = Matrix(field, nrows, len(cols_list))
        for j, c in enumerate(cols_list):
            if len(c) != nrows:
                raise DimensionMismatch("ragged columns")
            for i in range(nrows):
                m.data[i][j] = c[i]
        return m

    # -- basics ------------------------------------------------------

    def copy(self):
        return Matrix(self.field, self.rows, self.cols, self.data)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols} over {self.field})"

    def is_zero(self):
        f = self.field
        return all(f.is_zero(x) for row in self.data for x in row)

    def col(self, j):
        return [row[j] for row in self.data]

    def columns(self):
        return [self.col(j) for j in range(self.cols)]

    def transpose(self):
        t = Matrix(self.field, self.cols, self.rows)
        for i in range(self.rows):
            for j in range(self.cols):
                t.data[j][i] = self.data[i][j]
        return t

    def __add__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch("matrix addition shape mismatch")
        f = self.field
        out = Matrix(f, self.rows, self.cols)
        for i in range(self.rows):
            a, b, o = self.data[i], other.data[i], out.data[i]
            for j in range(self.cols):
                o[j] = f.add(a[j], b[j])
        return out

    def __sub__(self, other):
        return self + other.scale(self.field.neg(self.field.one()))

    def scale(self, c):
        f = self.field
        out = Matrix(f, self.rows, self.cols)
        for i in range(self.rows):
            row = self.data[i]
            out.data[i] = [f.mul(c, x) for x in row]
        return out

    def __mul__(self, other):
        """Matrix product self * other (maps acting on column vectors)."""
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        f = self.field
        out = Matrix(f, self.rows, other.cols)
        bdata = other.data
        for i in range(self.rows):
            arow = self.data[i]
            orow = out.data[i]
            for k in range(self.cols):
                a = arow[k]
                if f.is_zero(a):
                    continue
                brow = bdata[k]
                for j in range(other.cols):
                    b = brow[j]
                    if not f.is_zero(b):
                        orow[j] = f.add(orow[j], f.mul(a, b))
        return out

    def apply(self, vec):
        """Apply to a column vector (list of scalars)."""
        if len(vec) != self.cols:
            raise DimensionMismatch("vector length mismatch")
        f = self.field
        out = [f.zero()] * self.rows
        for i in range(self.rows):
            row = self.data[i]
            acc = f.zero()
            for j, v in enumerate(vec):
                if not f.is_zero(v) and not f.is_zero(row[j]):
                    acc = f.add(acc, f.mul(row[j], v))
            out[i] = acc
        return out

    def hstack(self, other):
        if self.rows != other.rows:
            raise DimensionMismatch("hstack row mismatch")
        return Matrix.from_rows(
            self.field, [self.data[i] + other.data[i] for i in range(self.rows)]
        ) if self.rows else Matrix(self.field, 0, self.cols + other.cols)

    def vstack(self, other):
        if self.cols != other.cols:
            raise DimensionMismatch("vstack col mismatch")
        return Matrix(self.field, self.rows + other.rows, self.cols,
                      self.data + other.data)

    # -- elimination -------------------------------------------------

    def rref(self):
        """Reduced row echelon form; returns (rref_matrix, pivot_columns)."""
        f = self.field
        m = [list(r) for r in self.data]
        nrows, ncols = self.rows, self.cols
        pivots = []
        r = 0
        for c in range(ncols):
            if r >= nrows:
                break
            pr = None
            for i in range(r, nrows):
                if not f.is_zero(m[i][c]):
                    pr = i
                    break
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            pv = m[r][c]
            if pv != f.one():
                inv = f.inv(pv)
                m[r] = [f.mul(inv, x) for x in m[r]]
            for i in range(nrows):
                if i != r and not f.is_zero(m[i][c]):
                    factor = m[i][c]
                    mi, mr = m[i], m[r]
                    for j in range(c, ncols):
                        if not f.is_zero(mr[j]):
                            mi[j] = f.sub(mi[j], f.mul(factor, mr[j]))
            pivots.append(c)
            r += 1
        return Matrix(f, nrows, ncols, m), pivots

    def rank(self):
        if min(self.rows, self.cols) == 0:
            return 0
        if self.cols > SPARSE_THRESHOLD and self.rows > SPARSE_THRESHOLD:
            sparse = [
                {j: x for j, x in enumerate(row) if not self.field.is_zero(x)}
                for row in self.data
            ]
            _, pivots = sparse_rref(self.field, sparse, self.cols)
            return len(pivots)
        return len(self.rref()[1])

    def kernel_basis(self):
        """Matrix whose columns span the kernel of self."""
        f = self.field
        if self.cols == 0:
            return Matrix(f, 0, 0)
        if self.rows == 0:
            return Matrix.identity(f, self.cols)
        R, pivots = self.rref()
        free = [j for j in range(self.cols) if j not in pivots]
        cols = []
        one = f.one()
        for fc in free:
            v = [f.zero()] * self.cols
            v[fc] = one
            for i, pc in enumerate(pivots):
                v[pc] = f.neg(R.data[i][fc])
            cols.append(v)
        return Matrix.from_cols(f, cols, self.cols)

    def image_basis(self):
        """Matrix whose columns are a basis of the column space."""
        if self.cols == 0 or self.rows == 0:
            return Matrix(self.field, self.rows, 0)
        _, pivots = self.rref()
        return Matrix.from_cols(self.field, [self.col(j) for j in pivots], self.rows)

    def inverse(self):
        """Inverse of a square invertible matrix, or None."""
        if self.rows != self.cols:
            return None
        f = self.field
        aug = self.hstack(Matrix.identity(f, self.rows))
        R, pivots = aug.rref()
        if pivots != list(range(self.rows)):
            return None
        inv = Matrix(f, self.rows, self.rows)
        for i in range(self.rows):
            inv.data[i] = R.data[i][self.rows:]
        return inv

    def solve(self, b):
        """One solution x of self * x = b, or None if b is not in the image."""
        if len(b) != self.rows:
            raise DimensionMismatch("rhs length mismatch")
        f = self.field
        aug = Matrix(f, self.rows, self.cols + 1)
        for i in range(self.rows):
            aug.data[i][: self.cols] = self.data[i]
            aug.data[i][self.cols] = b[i]
        R, pivots = aug.rref()
        if self.cols in pivots:
            return None
        x = [f.zero()] * self.cols
        for i, pc in enumerate(pivots):
            x[pc] = R.data[i][self.cols]
        return x


def row_space_basis(field, vectors, width):
    """Independent spanning subset of row vectors, in rref form."""
    if not vectors:
        return []
    m = Matrix.from_rows(field, vectors) if vectors else Matrix(field, 0, width)
    R, pivots = m.rref()
    return [R.data[i] for i in range(len(pivots))]


def span_contains(field, basis_rows, vec):
    """Is vec in the row span of basis_rows (all of equal width)?"""
    width = len(vec)
    before = len(row_space_basis(field, list(basis_rows), width))
    after = len(row_space_basis(field, list(basis_rows) + [list(vec)], width))
    return before == after


def spans_equal(field, rows_a, rows_b, width):
    ra = row_space_basis(field, list(rows_a), width)
    rb = row_space_basis(field, list(rows_b), width)
    return ra == rb


def complement_pivots(field, span_rows, width):
    """Split 0..width-1 into (pivot, free) indices for the given row span.

    The free coordinates descend to a basis of the quotient by the span;
    returns (pivots, free, reduced_rows).
    """
    red = row_space_basis(field, list(span_rows), width)
    pivots = []
    for row in red:
        for j, x in enumerate(row):
            if not field.is_zero(x):
                pivots.append(j)
                break
    free = [j for j in range(width) if j not in pivots]
    return pivots, free, red


def quotient_projection(field, span_rows, width):
    """Projection matrix K^width -> K^f killing the span, f = codim.

    Free coordinates are the representatives; a pivot coordinate e_p maps
    to minus the free part of its reducing row.
    """
    pivots, free, red = complement_pivots(field, span_rows, width)
    proj = Matrix(field, len(free), width)
    one = field.one()
    for k, j in enumerate(free):
        proj.data[k][j] = one
    for i, p in enumerate(pivots):
        row = red[i]
        for k, j in enumerate(free):
            proj.data[k][p] = field.neg(row[j])
    return proj, free, pivots


def sparse_rref(field, rows, width):
    """Row reduce rows given as {col: scalar} dicts; returns (rows, pivots).

    Destructive on the input list.  Pivot selection scans columns in
    order, preferring the sparsest available row, which keeps fill-in
    low on naturality systems.
    """
    pivots = []
    pivot_rows = []
    remaining = [r for r in rows if r]
    for c in range(width):
        best = None
        for idx, r in enumerate(remaining):
            if c in r:
                if best is None or len(r) < len(remaining[best]):
                    best = idx
        if best is None:
            continue
        prow = remaining.pop(best)
        inv = field.inv(prow[c])
        prow = {j: field.mul(inv, v) for j, v in prow.items()}
        for i in range(len(remaining)):
            r = remaining[i]
            if c in r:
                factor = r[c]
                for j, v in prow.items():
                    nv = field.sub(r.get(j, field.zero()), field.mul(factor, v))
                    if field.is_zero(nv):
                        r.pop(j, None)
                    else:
                        r[j] = nv
        # back-substitute into already found pivot rows
        for i in range(len(pivot_rows)):
            r = pivot_rows[i]
            if c in r:
                factor = r[c]
                for j, v in prow.items():
                    nv = field.sub(r.get(j, field.zero()), field.mul(factor, v))
                    if field.is_zero(nv):
                        r.pop(j, None)
                    else:
                        r[j] = nv
        pivots.append(c)
        pivot_rows.append(prow)
        remaining = [r for r in remaining if r]
        if not remaining:
            break
    return pivot_rows, pivots


def sparse_kernel_basis(field, rows, width):
    """Kernel basis (list of dense columns) of a sparse row system."""
    pivot_rows, pivots = sparse_rref(field, [dict(r) for r in rows], width)
    pivset = set(pivots)
    free = [j for j in range(width) if j not in pivset]
    basis = []
    one = field.one()
    for fc in free:
        v = [field.zero()] * width
        v[fc] = one
        for pc, prow in zip(pivots, pivot_rows):
            if fc in prow:
                v[pc] = field.neg(prow[fc])
        basis.append(v)
    return basis
