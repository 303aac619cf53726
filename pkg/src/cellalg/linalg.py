"""Dense exact linear algebra over a cellalg field.

Everything downstream (identity elements, dual bases, centers, ideal
lattices) reduces to reduced row-echelon forms, exact solves and a canonical
subspace representation.  Pivoting is deterministic -- leftmost pivot column,
first nonzero row from the top -- so canonical forms are reproducible across
runs.  Elimination skips rows with a zero entry in the pivot column, which
keeps the cost near-linear for the sparse systems produced by structure
constants.
"""

from __future__ import annotations

from .errors import NoSolution, Singular
from .fields import Field


class Matrix:
    """Dense row-major matrix with entries in one field."""

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field: Field, data: list[list]):
        self.field = field
        self.data = data
        self.rows = len(data)
        self.cols = len(data[0]) if data else 0

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Matrix":
        z = field.zero
        return cls(field, [[z] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        m = cls.zeros(field, n, n)
        for i in range(n):
            m.data[i][i] = field.one
        return m

    @classmethod
    def from_int_rows(cls, field: Field, rows: list[list[int]]) -> "Matrix":
        conv = field.from_int
        return cls(field, [[conv(x) for x in row] for row in rows])

    def copy(self) -> "Matrix":
        return Matrix(self.field, [row[:] for row in self.data])

    def transpose(self) -> "Matrix":
        return Matrix(self.field, [list(col) for col in zip(*self.data)]) \
            if self.rows else Matrix(self.field, [[] for _ in range(self.cols)])

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field == other.field
                and self.rows == other.rows and self.cols == other.cols
                and self.data == other.data)

    def __hash__(self):
        return hash((self.field, tuple(tuple(r) for r in self.data)))

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        f = self.field
        add, mul, zero = f.add, f.mul, f.zero
        out = Matrix.zeros(f, self.rows, other.cols)
        for i, row in enumerate(self.data):
            orow = out.data[i]
            for k, a in enumerate(row):
                if not a:
                    continue
                brow = other.data[k]
                for j, b in enumerate(brow):
                    if b:
                        orow[j] = add(orow[j], mul(a, b))
        return out

    def apply(self, vec: list) -> list:
        """Matrix-vector product."""
        if self.cols != len(vec):
            raise ValueError("shape mismatch in matrix-vector product")
        f = self.field
        add, mul = f.add, f.mul
        out = [f.zero] * self.rows
        for i, row in enumerate(self.data):
            acc = f.zero
            for a, v in zip(row, vec):
                if a and v:
                    acc = add(acc, mul(a, v))
            out[i] = acc
        return out

    def is_zero(self) -> bool:
        return all(not x for row in self.data for x in row)

    def is_identity(self) -> bool:
        one = self.field.one
        return (self.rows == self.cols
                and all(x == (one if i == j else self.field.zero)
                        for i, row in enumerate(self.data)
                        for j, x in enumerate(row)))

    def scalar_multiple_of_identity(self):
        """Return k with self == k*E, or None."""
        if self.rows != self.cols:
            return None
        if self.rows == 0:
            return self.field.one
        k = self.data[0][0]
        for i, row in enumerate(self.data):
            for j, x in enumerate(row):
                if i == j:
                    if x != k:
                        return None
                elif x:
                    return None
        return k

    def __repr__(self):
        fmt = self.field.format
        body = "; ".join(" ".join(fmt(x) for x in row) for row in self.data)
        return f"Matrix[{self.rows}x{self.cols}: {body}]"


def rref(m: Matrix) -> tuple[Matrix, int, list[int]]:
    """Reduced row-echelon form, rank, and pivot columns.

    Deterministic: the pivot of each step is the first nonzero entry, in
    column order, scanning rows top-down from the current pivot row.
    """
    f = m.field
    sub, mul, div = f.sub, f.mul, f.div
    a = [row[:] for row in m.data]
    rows, cols = m.rows, m.cols
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        pr = next((i for i in range(r, rows) if a[i][c]), None)
        if pr is None:
            continue
        if pr != r:
            a[r], a[pr] = a[pr], a[r]
        inv_p = f.inv(a[r][c])
        if a[r][c] != f.one:
            a[r] = [mul(inv_p, x) for x in a[r]]
        for i in range(rows):
            if i == r:
                continue
            factor = a[i][c]
            if not factor:
                continue
            arow, prow = a[i], a[r]
            for j in range(c, cols):
                if prow[j]:
                    arow[j] = sub(arow[j], mul(factor, prow[j]))
        pivots.append(c)
        r += 1
    return Matrix(f, a), r, pivots


def solve(a: Matrix, b: Matrix) -> Matrix:
    """One exact solution x of a*x = b, with free variables set to zero.

    Raises NoSolution when the system is inconsistent.
    """
    if a.rows != b.rows:
        raise ValueError("a and b must have the same number of rows")
    f = a.field
    aug = Matrix(f, [ra + rb for ra, rb in zip(a.data, b.data)])
    red, rank, pivots = rref(aug)
    pivots_in_a = [c for c in pivots if c < a.cols]
    if len(pivots_in_a) != rank:
        raise NoSolution("system has no solution")
    x = Matrix.zeros(f, a.cols, b.cols)
    for r, c in enumerate(pivots_in_a):
        x.data[c] = red.data[r][a.cols:]
    return x


def invert(m: Matrix) -> Matrix:
    """Inverse of a square matrix; raises Singular when rank < size."""
    if m.rows != m.cols:
        raise ValueError("only square matrices are invertible")
    f = m.field
    n = m.rows
    aug = Matrix(f, [row[:] + Matrix.identity(f, n).data[i]
                     for i, row in enumerate(m.data)])
    red, rank, pivots = rref(aug)
    if rank < n or pivots[:n] != list(range(n)):
        raise Singular(f"matrix of size {n} has rank {rank}")
    return Matrix(f, [row[n:] for row in red.data])


def nullspace(m: Matrix) -> list[list]:
    """Basis of {x : m*x = 0}, one vector per free column."""
    f = m.field
    red, rank, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [f.zero] * m.cols
        v[free] = f.one
        for r, c in enumerate(pivots):
            if red.data[r][free]:
                v[c] = f.neg(red.data[r][free])
        basis.append(v)
    return basis


class Subspace:
    """Row space of a matrix in canonical form.

    The basis is the reduced row-echelon form with zero rows removed, so
    equal subspaces have identical bases and equality is literal comparison.
    """

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field: Field, ambient_dim: int, basis: Matrix,
                 pivots: tuple[int, ...]):
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = pivots

    @classmethod
    def from_vectors(cls, field: Field, ambient_dim: int,
                     vectors: list[list]) -> "Subspace":
        if not vectors:
            return cls(field, ambient_dim, Matrix(field, []), ())
        if any(len(v) != ambient_dim for v in vectors):
            raise ValueError("vector length does not match ambient dimension")
        red, rank, pivots = rref(Matrix(field, [v[:] for v in vectors]))
        return cls(field, ambient_dim, Matrix(field, red.data[:rank]),
                   tuple(pivots))

    @classmethod
    def zero(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, Matrix(field, []), ())

    @classmethod
    def full(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, Matrix.identity(field, ambient_dim),
                   tuple(range(ambient_dim)))

    @property
    def dim(self) -> int:
        return self.basis.rows

    def reduce(self, vector: list) -> list:
        """Residual of a vector after eliminating against the basis."""
        f = self.field
        sub, mul = f.sub, f.mul
        v = vector[:]
        for row, c in zip(self.basis.data, self.pivots):
            factor = v[c]
            if factor:
                for j in range(c, self.ambient_dim):
                    if row[j]:
                        v[j] = sub(v[j], mul(factor, row[j]))
        return v

    def contains_vector(self, vector: list) -> bool:
        return all(not x for x in self.reduce(vector))

    def contains(self, other: "Subspace") -> bool:
        self._check_ambient(other)
        return all(self.contains_vector(row) for row in other.basis.data)

    def sum(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        return Subspace.from_vectors(self.field, self.ambient_dim,
                                     self.basis.data + other.basis.data)

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus: echelonize [[A A],[B 0]]; rows with zero left half
        carry an intersection basis in the right half."""
        self._check_ambient(other)
        f = self.field
        n = self.ambient_dim
        z = [f.zero] * n
        block = [row + row for row in self.basis.data]
        block += [row + z for row in other.basis.data]
        if not block:
            return Subspace.zero(f, n)
        red, rank, _ = rref(Matrix(f, block))
        vecs = [row[n:] for row in red.data[:rank]
                if all(not x for x in row[:n])]
        return Subspace.from_vectors(f, n, vecs)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.field == other.field
                and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.field, self.ambient_dim, self.basis))

    def _check_ambient(self, other: "Subspace"):
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")

    def __repr__(self):
        return f"Subspace(dim {self.dim} of {self.ambient_dim})"


def subspace_ops(a: Subspace, b: Subspace, which: str):
    """Dispatch sum / intersect / contains / equals on two subspaces."""
    if which == "sum":
        return a.sum(b)
    if which == "intersect":
        return a.intersect(b)
    if which == "contains":
        a._check_ambient(b)
        return a.contains(b)
    if which == "equals":
        a._check_ambient(b)
        return a == b
    raise ValueError(f"unknown subspace operation {which!r}")
