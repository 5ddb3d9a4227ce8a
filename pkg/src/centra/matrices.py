"""Dense exact matrices over the supported fields.

Row-major storage of Scalars, immutable after construction.  Elimination
uses first-nonzero pivoting (deterministic, no magnitude concerns in exact
arithmetic).  Kernel bases follow the free-variable identity convention:
each basis vector carries 1 in its own free coordinate and 0 in the other
free coordinates, so outputs are reproducible byte for byte.

A fast path runs elimination on raw residue ints when the field is GF(p);
it mirrors the generic control flow exactly and returns identical results.

Text format: first line ``rows cols field``, then one line per row of
whitespace-separated entries in the field's scalar syntax.  The JSON form
is ``{"rows": r, "cols": c, "field": "gf:3", "entries": [[...], ...]}``
with integer entries for GF(p) and scalar-syntax strings otherwise.
"""

from .algebra import PrimeField, Scalar, field_from_name
from .errors import (
    BadPermutationError,
    FieldMismatchError,
    NotSquareError,
    ParseError,
    ShapeMismatchError,
    SingularMatrixError,
)


class Matrix:
    __slots__ = ("field", "rows", "cols", "_rows")

    def __init__(self, field, rows):
        data = []
        width = None
        for row in rows:
            entries = tuple(e if isinstance(e, Scalar) and e.field == field
                            else field.scalar(e) for e in row)
            if width is None:
                width = len(entries)
            elif len(entries) != width:
                raise ShapeMismatchError("ragged rows")
            data.append(entries)
        if not data or width == 0:
            raise ShapeMismatchError("empty matrix")
        self.field = field
        self.rows = len(data)
        self.cols = width
        self._rows = tuple(data)

    @classmethod
    def zeros(cls, field, rows, cols):
        z = field.zero
        return cls(field, [[z] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        return cls(field, [[o if i == j else z for j in range(n)]
                           for i in range(n)])

    @classmethod
    def from_flat(cls, field, rows, cols, entries):
        entries = list(entries)
        if len(entries) != rows * cols:
            raise ShapeMismatchError(
                f"{len(entries)} entries for a {rows}x{cols} matrix")
        return cls(field, [entries[i * cols:(i + 1) * cols]
                           for i in range(rows)])

    @classmethod
    def column(cls, field, entries):
        return cls(field, [[e] for e in entries])

    def __getitem__(self, key):
        i, j = key
        return self._rows[i][j]

    def row(self, i):
        return self._rows[i]

    def column_values(self, j):
        return tuple(r[j] for r in self._rows)

    def flat(self):
        return tuple(e for r in self._rows for e in r)

    def is_square(self):
        return self.rows == self.cols

    def is_zero(self):
        return all(not e for r in self._rows for e in r)

    def _same_field(self, other):
        if self.field != other.field:
            raise FieldMismatchError(
                f"mixed fields {self.field.name} and {other.field.name}")

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._same_field(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeMismatchError(
                f"add {self.rows}x{self.cols} with {other.rows}x{other.cols}")
        return Matrix(self.field,
                      [[a + b for a, b in zip(ra, rb)]
                       for ra, rb in zip(self._rows, other._rows)])

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._same_field(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeMismatchError(
                f"sub {self.rows}x{self.cols} with {other.rows}x{other.cols}")
        return Matrix(self.field,
                      [[a - b for a, b in zip(ra, rb)]
                       for ra, rb in zip(self._rows, other._rows)])

    def __neg__(self):
        return Matrix(self.field, [[-e for e in r] for r in self._rows])

    def __mul__(self, other):
        if isinstance(other, (Scalar, int)):
            c = self.field.scalar(other)
            return Matrix(self.field, [[c * e for e in r] for r in self._rows])
        if not isinstance(other, Matrix):
            return NotImplemented
        self._same_field(other)
        if self.cols != other.rows:
            raise ShapeMismatchError(
                f"mul {self.rows}x{self.cols} with {other.rows}x{other.cols}")
        zero = self.field.zero
        brows = other._rows
        out = []
        for arow in self._rows:
            acc = [zero] * other.cols
            for k, a in enumerate(arow):
                if not a:
                    continue
                brow = brows[k]
                acc = [s + a * b for s, b in zip(acc, brow)]
            out.append(acc)
        return Matrix(self.field, out)

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int)):
            return self * other
        return NotImplemented

    def __pow__(self, e):
        if not self.is_square():
            raise NotSquareError("matrix power of a nonsquare matrix")
        if e < 0:
            raise ShapeMismatchError("negative matrix power")
        result = Matrix.identity(self.field, self.rows)
        base = self
        while e > 0:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.field == other.field and self.rows == other.rows
                and self.cols == other.cols and self._rows == other._rows)

    def __hash__(self):
        return hash((self.field.name, self._rows))

    def transpose(self):
        return Matrix(self.field, list(zip(*self._rows)))

    # -- elimination ----------------------------------------------------

    def _scalar_grid(self):
        return [list(r) for r in self._rows]

    def rank(self):
        if isinstance(self.field, PrimeField):
            pivots, _, _ = _forward_mod(
                [[e.value for e in r] for r in self._rows], self.field.p)
        else:
            pivots, _, _ = _forward(self._scalar_grid(), self.field)
        return len(pivots)

    def determinant(self):
        if not self.is_square():
            raise NotSquareError("determinant of a nonsquare matrix")
        field = self.field
        if isinstance(field, PrimeField):
            p = field.p
            pivots, parity, prod = _forward_mod(
                [[e.value for e in r] for r in self._rows], p)
            if len(pivots) < self.rows:
                return field.zero
            return Scalar(field, (parity * prod) % p)
        pivots, parity, prod = _forward(self._scalar_grid(), field)
        if len(pivots) < self.rows:
            return field.zero
        return -prod if parity < 0 else prod

    def kernel_basis(self):
        """Basis of the right null space as n x 1 column matrices."""
        field = self.field
        if isinstance(field, PrimeField):
            p = field.p
            grid = [[e.value for e in r] for r in self._rows]
            pivots, _, _ = _forward_mod(grid, p)
            vecs = _kernel_vectors_mod(grid, pivots, self.cols, p)
            return [Matrix.column(field, [Scalar(field, v) for v in vec])
                    for vec in vecs]
        grid = self._scalar_grid()
        pivots, _, _ = _forward(grid, field)
        vecs = _kernel_vectors(grid, pivots, self.cols, field)
        return [Matrix.column(field, vec) for vec in vecs]

    def inverse(self):
        if not self.is_square():
            raise NotSquareError("inverse of a nonsquare matrix")
        field = self.field
        n = self.rows
        ident = Matrix.identity(field, n)
        grid = [list(r) + list(ident._rows[i])
                for i, r in enumerate(self._rows)]
        pivots, _, _ = _forward(grid, field)
        # [A|I] always has row rank n; A is singular exactly when a pivot
        # falls in the augmented half.
        if len(pivots) < n or any(c >= n for c in pivots):
            raise SingularMatrixError("matrix is singular")
        for k in range(len(pivots) - 1, -1, -1):
            c = pivots[k]
            prow = grid[k]
            for i in range(k):
                f = grid[i][c]
                if f:
                    grid[i] = [a - f * b for a, b in zip(grid[i], prow)]
        return Matrix(field, [row[n:] for row in grid])

    def __repr__(self):
        return f"<{self.rows}x{self.cols} over {self.field.name}>"

    def __str__(self):
        return matrix_to_text(self)


def _forward(grid, field):
    """In-place forward elimination with normalized pivot rows.

    Returns (pivot columns, swap parity, product of pivot values).
    """
    nrows = len(grid)
    ncols = len(grid[0])
    pivots = []
    parity = 1
    prod = field.one
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if grid[i][c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            grid[r], grid[piv] = grid[piv], grid[r]
            parity = -parity
        v = grid[r][c]
        prod = prod * v
        inv = v.inverse()
        grid[r] = [inv * a for a in grid[r]]
        prow = grid[r]
        for i in range(r + 1, nrows):
            f = grid[i][c]
            if f:
                grid[i] = [a - f * b for a, b in zip(grid[i], prow)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots, parity, prod


def _forward_mod(grid, p):
    """Residue-int twin of _forward for GF(p)."""
    nrows = len(grid)
    ncols = len(grid[0])
    pivots = []
    parity = 1
    prod = 1
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if grid[i][c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            grid[r], grid[piv] = grid[piv], grid[r]
            parity = -parity
        v = grid[r][c]
        prod = (prod * v) % p
        inv = pow(v, p - 2, p)
        grid[r] = [(inv * a) % p for a in grid[r]]
        prow = grid[r]
        for i in range(r + 1, nrows):
            f = grid[i][c]
            if f:
                grid[i] = [(a - f * b) % p for a, b in zip(grid[i], prow)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots, parity, prod


def _kernel_vectors(grid, pivots, ncols, field):
    """Back-substitute one kernel vector per free column."""
    zero = field.zero
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    out = []
    for f in free:
        vec = [zero] * ncols
        vec[f] = field.one
        for k in range(len(pivots) - 1, -1, -1):
            c = pivots[k]
            row = grid[k]
            acc = zero
            for j in range(c + 1, ncols):
                rj = row[j]
                if rj and vec[j]:
                    acc = acc + rj * vec[j]
            vec[c] = -acc
        out.append(vec)
    return out


def _kernel_vectors_mod(grid, pivots, ncols, p):
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    out = []
    for f in free:
        vec = [0] * ncols
        vec[f] = 1
        for k in range(len(pivots) - 1, -1, -1):
            c = pivots[k]
            row = grid[k]
            acc = 0
            for j in range(c + 1, ncols):
                rj = row[j]
                if rj:
                    vj = vec[j]
                    if vj:
                        acc += rj * vj
            vec[c] = (-acc) % p
        out.append(vec)
    return out


def poly_at_matrix(p, a):
    """Evaluate the polynomial at a square matrix by Horner's rule."""
    if not a.is_square():
        raise NotSquareError("polynomial of a nonsquare matrix")
    field = a.field
    n = a.rows
    result = Matrix.zeros(field, n, n)
    ident = Matrix.identity(field, n)
    for c in reversed(p.coeffs):
        result = result * a + ident * c
    return result


class BlockLayout:
    """Cut positions naming a block grid: 0 = start, last = full size."""

    __slots__ = ("row_cuts", "col_cuts")

    def __init__(self, row_cuts, col_cuts):
        for cuts in (row_cuts, col_cuts):
            if len(cuts) < 2 or cuts[0] != 0:
                raise ShapeMismatchError(f"bad cuts {cuts}")
            if any(a >= b for a, b in zip(cuts, cuts[1:])):
                raise ShapeMismatchError(f"cuts not increasing: {cuts}")
        self.row_cuts = tuple(row_cuts)
        self.col_cuts = tuple(col_cuts)

    @classmethod
    def from_sizes(cls, row_sizes, col_sizes):
        rc = [0]
        for s in row_sizes:
            rc.append(rc[-1] + s)
        cc = [0]
        for s in col_sizes:
            cc.append(cc[-1] + s)
        return cls(rc, cc)

    @classmethod
    def uniform(cls, s, nrow_blocks, ncol_blocks):
        return cls.from_sizes([s] * nrow_blocks, [s] * ncol_blocks)

    @property
    def nrow_blocks(self):
        return len(self.row_cuts) - 1

    @property
    def ncol_blocks(self):
        return len(self.col_cuts) - 1


def assemble_blocks(grid, layout=None):
    """Concatenate a rectangular grid of matrices into one matrix."""
    if not grid or not grid[0]:
        raise ShapeMismatchError("empty block grid")
    field = grid[0][0].field
    row_sizes = [row[0].rows for row in grid]
    col_sizes = [b.cols for b in grid[0]]
    for bi, row in enumerate(grid):
        if len(row) != len(col_sizes):
            raise ShapeMismatchError("ragged block grid")
        for bj, block in enumerate(row):
            if block.rows != row_sizes[bi] or block.cols != col_sizes[bj]:
                raise ShapeMismatchError(
                    f"block ({bi},{bj}) is {block.rows}x{block.cols}, "
                    f"expected {row_sizes[bi]}x{col_sizes[bj]}")
            if block.field != field:
                raise ShapeMismatchError("mixed fields in block grid")
    if layout is not None:
        expect = BlockLayout.from_sizes(row_sizes, col_sizes)
        if (layout.row_cuts, layout.col_cuts) != (expect.row_cuts,
                                                  expect.col_cuts):
            raise ShapeMismatchError("grid does not match the given layout")
    rows = []
    for brow in grid:
        for i in range(brow[0].rows):
            line = []
            for block in brow:
                line.extend(block.row(i))
            rows.append(line)
    return Matrix(field, rows)


def extract_blocks(m, layout):
    """Inverse of assemble_blocks for a given layout."""
    if layout.row_cuts[-1] != m.rows or layout.col_cuts[-1] != m.cols:
        raise ShapeMismatchError("layout does not cover the matrix")
    grid = []
    rc, cc = layout.row_cuts, layout.col_cuts
    for bi in range(layout.nrow_blocks):
        row = []
        for bj in range(layout.ncol_blocks):
            row.append(Matrix(m.field,
                              [m.row(i)[cc[bj]:cc[bj + 1]]
                               for i in range(rc[bi], rc[bi + 1])]))
        grid.append(row)
    return grid


def _check_block_perm(n, perm, s):
    if n % s != 0:
        raise ShapeMismatchError(f"size {n} not divisible by block size {s}")
    nblocks = n // s
    if sorted(perm) != list(range(nblocks)):
        raise BadPermutationError(
            f"not a bijection on {nblocks} block indices: {perm}")


def conjugate_by_block_permutation(a, perm, s):
    """P^-1 * a * P by index remapping over s-sized index groups.

    perm lists, for each new block position, the old block index that
    lands there; entry (i, j) of the result is a[perm(i), perm(j)] at
    block granularity.
    """
    if not a.is_square():
        raise NotSquareError("conjugation of a nonsquare matrix")
    _check_block_perm(a.rows, perm, s)
    src = [perm[i // s] * s + i % s for i in range(a.rows)]
    return Matrix(a.field,
                  [[a._rows[si][sj] for sj in src] for si in src])


def block_permutation_matrix(field, perm, s):
    """The matrix P whose conjugation equals the index remapping above."""
    n = len(perm) * s
    _check_block_perm(n, perm, s)
    z, o = field.zero, field.one
    rows = [[z] * n for _ in range(n)]
    for b, src in enumerate(perm):
        for k in range(s):
            rows[src * s + k][b * s + k] = o
    return Matrix(field, rows)


def matrix_to_text(m):
    lines = [f"{m.rows} {m.cols} {m.field.name}"]
    for r in m._rows:
        lines.append(" ".join(str(e) for e in r))
    return "\n".join(lines)


def matrix_from_text(text):
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty matrix text")
    header = lines[0].split()
    if len(header) != 3:
        raise ParseError(f"bad matrix header {lines[0]!r}")
    try:
        rows, cols = int(header[0]), int(header[1])
    except ValueError:
        raise ParseError(f"bad matrix header {lines[0]!r}") from None
    field = field_from_name(header[2])
    if len(lines) != rows + 1:
        raise ParseError(f"expected {rows} rows, got {len(lines) - 1}")
    data = []
    for ln in lines[1:]:
        entries = ln.split()
        if len(entries) != cols:
            raise ParseError(f"expected {cols} entries in row {ln!r}")
        data.append([field.scalar(tok) for tok in entries])
    return Matrix(field, data)


def matrix_to_json_obj(m):
    if isinstance(m.field, PrimeField):
        entries = [[e.value for e in r] for r in m._rows]
    else:
        entries = [[str(e) for e in r] for r in m._rows]
    return {"rows": m.rows, "cols": m.cols, "field": m.field.name,
            "entries": entries}


def matrix_from_json_obj(obj):
    try:
        rows, cols = obj["rows"], obj["cols"]
        field = field_from_name(obj["field"])
        entries = obj["entries"]
    except (KeyError, TypeError):
        raise ParseError(f"bad matrix object {obj!r}") from None
    if len(entries) != rows or any(len(r) != cols for r in entries):
        raise ParseError("entry grid does not match rows/cols")
    return Matrix(field, [[field.scalar(e) for e in r] for r in entries])
