"""Exact dense linear algebra over Q and GF(p).

Everything is naive Gaussian elimination on Python lists of exact
scalars: pivots are the leftmost nonzero column, and within a pivot column
the first row (from the top) holding a nonzero entry is used.  Sizes in
this package are desk-scale, so determinism wins over speed.

Subspaces are stored by a basis matrix whose columns are in reduced
column echelon form, which makes ``==`` a structural comparison.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .field import Field, FieldMismatchError, Scalar

Vector = tuple


def _check_field(a: Field, b: Field) -> None:
    if a != b:
        raise FieldMismatchError(f"field mismatch: {a} vs {b}")


class Matrix:
    """An immutable ``rows x cols`` matrix with row-major entries."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: Field, rows: int, cols: int, entries: Iterable):
        entries = tuple(field(x) for x in entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence], cols: Optional[int] = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("cols must be given for a matrix with no rows")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(field, len(rows), cols, [x for r in rows for x in r])

    @classmethod
    def from_columns(cls, field: Field, columns: Sequence[Sequence], rows: int) -> "Matrix":
        columns = [list(c) for c in columns]
        for c in columns:
            if len(c) != rows:
                raise ValueError("column length mismatch")
        return cls(field, rows, len(columns), [columns[j][i] for i in range(rows) for j in range(len(columns))])

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Matrix":
        return cls(field, rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        return cls(field, n, n, [int(i == j) for i in range(n) for j in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self) -> list:
        return [self.column(j) for j in range(self.cols)]

    @property
    def shape(self):
        return (self.rows, self.cols)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self.cols, self.rows,
                      [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            _check_field(self.field, other.field)
            if self.cols != other.rows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            ocols = other.columns()
            zero = self.field.zero
            out = []
            for i in range(self.rows):
                r = self.row(i)
                for c in ocols:
                    s = zero
                    for a, b in zip(r, c):
                        if a and b:
                            s = s + a * b
                    out.append(s)
            return Matrix(self.field, self.rows, other.cols, out)
        return self.apply(other)

    def apply(self, v: Sequence) -> Vector:
        """Matrix-vector product."""
        if len(v) != self.cols:
            raise ValueError(f"vector of length {len(v)} for {self.shape} matrix")
        v = [self.field(x) for x in v]
        zero = self.field.zero
        out = []
        for i in range(self.rows):
            s = zero
            for a, b in zip(self.row(i), v):
                if a and b:
                    s = s + a * b
            out.append(s)
        return tuple(out)

    def __add__(self, other: "Matrix") -> "Matrix":
        _check_field(self.field, other.field)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix(self.field, self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        _check_field(self.field, other.field)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix(self.field, self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "Matrix":
        return Matrix(self.field, self.rows, self.cols, [-a for a in self.entries])

    def scale(self, c) -> "Matrix":
        c = self.field(c)
        return Matrix(self.field, self.rows, self.cols, [c * a for a in self.entries])

    def hstack(self, other: "Matrix") -> "Matrix":
        _check_field(self.field, other.field)
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        return Matrix.from_rows(self.field, [self.row(i) + other.row(i) for i in range(self.rows)],
                                cols=self.cols + other.cols)

    def vstack(self, other: "Matrix") -> "Matrix":
        _check_field(self.field, other.field)
        if self.cols != other.cols:
            raise ValueError("column count mismatch")
        return Matrix(self.field, self.rows + other.rows, self.cols, self.entries + other.entries)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix(self.field, len(rows), len(cols), [self[i, j] for i in rows for j in cols])

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"Matrix<{self.field} {self.rows}x{self.cols}>[{body}]"


def rref(field: Field, rows: Sequence[Sequence], ncols: int) -> tuple:
    """Reduced row echelon form of a list of rows.

    Returns ``(reduced_rows, pivot_columns)``; zero rows are dropped.
    """
    a = [[field(x) for x in r] for r in rows]
    pivots = []
    r = 0
    nrows = len(a)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        pr = a[r]
        inv = 1 / pr[c]
        if pr[c] != 1:
            pr = a[r] = [x * inv for x in pr]
        for i in range(nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], pr)]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(m: Matrix) -> int:
    return len(rref(m.field, m.to_rows(), m.cols)[1])


class Subspace:
    """A subspace of ``field^ambient_dim`` with a canonical basis.

    ``basis`` is an ``ambient_dim x dim`` matrix whose columns are the
    nonzero rows of the RREF of any spanning set (i.e. reduced column
    echelon form).
    """

    __slots__ = ("field", "ambient_dim", "basis", "_vectors", "_pivots")

    def __init__(self, field: Field, ambient_dim: int, vectors: Iterable[Sequence] = ()):
        vectors = [tuple(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise ValueError(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
        reduced, pivots = rref(field, vectors, ambient_dim)
        self.field = field
        self.ambient_dim = ambient_dim
        self._vectors = tuple(tuple(r) for r in reduced)
        self._pivots = tuple(pivots)
        self.basis = Matrix.from_columns(field, self._vectors, ambient_dim)

    @classmethod
    def zero(cls, field: Field, n: int) -> "Subspace":
        return cls(field, n)

    @classmethod
    def full(cls, field: Field, n: int) -> "Subspace":
        return cls(field, n, Matrix.identity(field, n).to_rows())

    @property
    def dim(self) -> int:
        return len(self._vectors)

    @property
    def vectors(self) -> tuple:
        """Canonical basis vectors (the columns of ``basis``)."""
        return self._vectors

    @property
    def pivots(self) -> tuple:
        return self._pivots

    def coordinates(self, v: Sequence) -> Optional[Vector]:
        """Coefficients of ``v`` in the canonical basis, or ``None`` if ``v`` is not in the subspace."""
        v = tuple(self.field(x) for x in v)
        if len(v) != self.ambient_dim:
            raise ValueError("ambient-dimension mismatch")
        coeffs = tuple(v[p] for p in self._pivots)
        recon = [self.field.zero] * self.ambient_dim
        for c, b in zip(coeffs, self._vectors):
            if c:
                for k, x in enumerate(b):
                    if x:
                        recon[k] = recon[k] + c * x
        if tuple(recon) != v:
            return None
        return coeffs

    def __contains__(self, v) -> bool:
        return self.coordinates(v) is not None

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.field == other.field and self.ambient_dim == other.ambient_dim
                and self._vectors == other._vectors)

    def __hash__(self):
        return hash((self.field, self.ambient_dim, self._vectors))

    def __add__(self, other: "Subspace") -> "Subspace":
        return span_sum(self, other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return intersect(self, other)

    def __le__(self, other: "Subspace") -> bool:
        _check_compatible(self, other)
        return all(v in other for v in self._vectors)

    def __repr__(self):
        return f"Subspace<{self.field}, dim {self.dim} in {self.ambient_dim}>{list(map(list, self._vectors))}"


def _check_compatible(a: Subspace, b: Subspace) -> None:
    _check_field(a.field, b.field)
    if a.ambient_dim != b.ambient_dim:
        raise ValueError(f"ambient-dimension mismatch: {a.ambient_dim} vs {b.ambient_dim}")


def kernel_basis(m: Matrix) -> Subspace:
    """Null space ``{v : m v = 0}``."""
    reduced, pivots = rref(m.field, m.to_rows(), m.cols)
    free = [c for c in range(m.cols) if c not in pivots]
    vecs = []
    for f in free:
        v = [m.field.zero] * m.cols
        v[f] = m.field.one
        for r, p in zip(reduced, pivots):
            v[p] = -r[f]
        vecs.append(v)
    return Subspace(m.field, m.cols, vecs)


def image_basis(m: Matrix) -> Subspace:
    """Column space of ``m``."""
    return Subspace(m.field, m.rows, m.columns())


def solve(m: Matrix, b: Sequence) -> Optional[Vector]:
    """Some ``x`` with ``m x = b``, or ``None`` when ``b`` is not in the image.

    Free variables are set to zero.
    """
    if len(b) != m.rows:
        raise ValueError(f"right-hand side of length {len(b)} for {m.rows} rows")
    F = m.field
    aug = [list(m.row(i)) + [F(b[i])] for i in range(m.rows)]
    reduced, pivots = rref(F, aug, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [F.zero] * m.cols
    for r, p in zip(reduced, pivots):
        x[p] = r[m.cols]
    return tuple(x)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    _check_compatible(a, b)
    if a.dim == 0 or b.dim == 0:
        return Subspace.zero(a.field, a.ambient_dim)
    # a_coeffs . A = b_coeffs . B  <=>  [A | -B] (x, y) = 0
    stacked = a.basis.hstack(-b.basis)
    ker = kernel_basis(stacked)
    vecs = [a.basis.apply(k[:a.dim]) for k in ker.vectors]
    return Subspace(a.field, a.ambient_dim, vecs)


def span_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_compatible(a, b)
    return Subspace(a.field, a.ambient_dim, a.vectors + b.vectors)


def contains(a: Subspace, v: Sequence) -> bool:
    return v in a


def equal(a: Subspace, b: Subspace) -> bool:
    _check_compatible(a, b)
    return a == b


def extend_basis(sub: Subspace, candidates: Iterable[Sequence]) -> list:
    """Greedily pick candidates (in order) that extend ``sub``; returns their indices."""
    chosen = []
    current = sub
    for k, v in enumerate(candidates):
        if v not in current:
            chosen.append(k)
            current = Subspace(sub.field, sub.ambient_dim, current.vectors + (tuple(v),))
    return chosen


def unit_vector(field: Field, n: int, i: int) -> Vector:
    return tuple(field.one if k == i else field.zero for k in range(n))


def zero_vector(field: Field, n: int) -> Vector:
    return (field.zero,) * n


def add_scaled(acc: list, c: Scalar, v: Sequence) -> None:
    """In-place ``acc += c * v``."""
    if not c:
        return
    for k, x in enumerate(v):
        if x:
            acc[k] = acc[k] + c * x
