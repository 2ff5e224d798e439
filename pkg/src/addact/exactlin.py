"""Exact linear algebra over the rationals.

Scalars are :class:`fractions.Fraction`.  Matrices are immutable and dense,
but products skip zero entries since most operators we build are sparse
nilpotent matrices.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple  # tuple of Fraction


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError("floats are not accepted in exact arithmetic")
    return Fraction(x)


def format_rational(x: Fraction) -> str:
    x = as_fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def vec(values: Iterable) -> Vector:
    return tuple(as_fraction(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def unit_vector(n: int, i: int) -> Vector:
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return tuple(v)


def is_zero_vector(v: Sequence) -> bool:
    return all(x == 0 for x in v)


def add_vectors(u: Sequence, v: Sequence) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def scale_vector(c, v: Sequence) -> Vector:
    c = as_fraction(c)
    return tuple(c * x for x in v)


def linear_combination(coeffs: Sequence, vectors: Sequence[Sequence], n: int) -> Vector:
    out = [Fraction(0)] * n
    for c, v in zip(coeffs, vectors):
        if c == 0:
            continue
        for i, x in enumerate(v):
            if x:
                out[i] += c * x
    return tuple(out)


class DimensionMismatch(ValueError):
    pass


class Matrix:
    """Immutable dense matrix of Fractions."""

    __slots__ = ("rows", "cols", "_data", "_hash")

    def __init__(self, data: Sequence[Sequence], cols: int | None = None):
        rows = tuple(vec(r) for r in data)
        if cols is None:
            if not rows:
                raise ValueError("column count required for a matrix with no rows")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise DimensionMismatch("ragged matrix rows")
        self._data = rows
        self.rows = len(rows)
        self.cols = cols
        self._hash = None

    @classmethod
    def _raw(cls, rows: tuple, cols: int) -> "Matrix":
        m = object.__new__(cls)
        m._data = rows
        m.rows = len(rows)
        m.cols = cols
        m._hash = None
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        z = (Fraction(0),) * cols
        return cls._raw((z,) * rows, cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._raw(tuple(unit_vector(n, i) for i in range(n)), n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "Matrix":
        if not columns:
            if rows is None:
                raise ValueError("row count required for a matrix with no columns")
            return cls._raw(((),) * rows, 0)
        return cls(list(zip(*columns)), len(columns))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def entries(self) -> tuple:
        """Row-major flattening."""
        return tuple(x for r in self._data for x in r)

    def row(self, i: int) -> Vector:
        return self._data[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self._data)

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._data]

    def __getitem__(self, idx):
        i, j = idx
        return self._data[i][j]

    def __iter__(self):
        return iter(self._data)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.cols == other.cols and self._data == other._data

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.cols, self._data))
        return self._hash

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_rational(x) for x in r) for r in self._data)
        return f"Matrix([{body}])"

    def transpose(self) -> "Matrix":
        if self.rows == 0:
            return Matrix._raw(((),) * self.cols, 0)
        return Matrix._raw(tuple(zip(*self._data)), self.rows)

    T = property(transpose)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._data for x in r)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        return Matrix._raw(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)),
            self.cols,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} - {other.shape}")
        return Matrix._raw(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)),
            self.cols,
        )

    def __neg__(self) -> "Matrix":
        return Matrix._raw(tuple(tuple(-a for a in r) for r in self._data), self.cols)

    def scale(self, c) -> "Matrix":
        c = as_fraction(c)
        return Matrix._raw(tuple(tuple(c * a for a in r) for r in self._data), self.cols)

    def __rmul__(self, c) -> "Matrix":
        return self.scale(c)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        n = other.cols
        other_rows = [
            [(j, x) for j, x in enumerate(r) if x] for r in other._data
        ]
        out = []
        for r in self._data:
            acc = [Fraction(0)] * n
            for k, a in enumerate(r):
                if not a:
                    continue
                for j, b in other_rows[k]:
                    acc[j] += a * b
            out.append(tuple(acc))
        return Matrix._raw(tuple(out), n)

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise DimensionMismatch("vector length does not match column count")
        nz = [(j, as_fraction(x)) for j, x in enumerate(v) if x]
        return tuple(sum((r[j] * x for j, x in nz), Fraction(0)) for r in self._data)

    def __pow__(self, k: int) -> "Matrix":
        if self.rows != self.cols:
            raise DimensionMismatch("power of a non-square matrix")
        if k < 0:
            raise ValueError("negative matrix power")
        result = Matrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    def commutes_with(self, other: "Matrix") -> bool:
        return self @ other == other @ self

    def is_nilpotent(self) -> bool:
        if self.rows != self.cols:
            return False
        return (self ** self.rows).is_zero()

    def trace(self) -> Fraction:
        return sum((self._data[i][i] for i in range(min(self.rows, self.cols))), Fraction(0))


class Echelon:
    """Incrementally maintained reduced row-echelon basis.

    Rows are stored sparsely as ``{column: value}`` with value 1 at the pivot
    and zeros in every other row's pivot column.
    """

    def __init__(self, ambient_dim: int):
        self.ambient_dim = ambient_dim
        self._rows: dict[int, dict[int, Fraction]] = {}

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> list[int]:
        return sorted(self._rows)

    def _reduce(self, v: Sequence) -> dict[int, Fraction]:
        if len(v) != self.ambient_dim:
            raise DimensionMismatch(f"vector of length {len(v)} in ambient dimension {self.ambient_dim}")
        r = {i: as_fraction(x) for i, x in enumerate(v) if x}
        for p, row in self._rows.items():
            c = r.get(p)
            if c:
                for j, x in row.items():
                    y = r.get(j, 0) - c * x
                    if y:
                        r[j] = y
                    else:
                        r.pop(j, None)
        return r

    def contains(self, v: Sequence) -> bool:
        return not self._reduce(v)

    def add(self, v: Sequence) -> bool:
        """Insert ``v``; return True when it enlarged the span."""
        r = self._reduce(v)
        if not r:
            return False
        p = min(r)
        c = r[p]
        if c != 1:
            r = {j: x / c for j, x in r.items()}
        for q, row in self._rows.items():
            d = row.get(p)
            if d:
                for j, x in r.items():
                    y = row.get(j, 0) - d * x
                    if y:
                        row[j] = y
                    else:
                        row.pop(j, None)
        self._rows[p] = r
        return True

    def rows(self) -> list[Vector]:
        out = []
        for p in sorted(self._rows):
            row = [Fraction(0)] * self.ambient_dim
            for j, x in self._rows[p].items():
                row[j] = x
            out.append(tuple(row))
        return out

    def coordinates(self, v: Sequence) -> Vector:
        """Coefficients of ``v`` against :meth:`rows`; ``v`` must be in the span."""
        if self._reduce(v):
            raise ValueError("vector not in span")
        return tuple(as_fraction(v[p]) for p in sorted(self._rows))


def rref(m: Matrix) -> tuple[Matrix, int]:
    """Reduced row-echelon form and rank (first nonzero pivoting)."""
    rows = [list(r) for r in m]
    ncols = m.cols
    piv_r = 0
    for c in range(ncols):
        for i in range(piv_r, len(rows)):
            if rows[i][c] != 0:
                break
        else:
            continue
        rows[piv_r], rows[i] = rows[i], rows[piv_r]
        pr = rows[piv_r]
        p = pr[c]
        if p != 1:
            pr[:] = [x / p for x in pr]
        for k in range(len(rows)):
            if k != piv_r:
                f = rows[k][c]
                if f:
                    rk = rows[k]
                    for j in range(c, ncols):
                        if pr[j]:
                            rk[j] -= f * pr[j]
        piv_r += 1
        if piv_r == len(rows):
            break
    return Matrix._raw(tuple(tuple(r) for r in rows), ncols), piv_r


def rank(m: Matrix) -> int:
    e = Echelon(m.cols)
    for r in m:
        e.add(r)
    return len(e)


def rank_of_vectors(vectors: Iterable[Sequence], ambient_dim: int) -> int:
    e = Echelon(ambient_dim)
    for v in vectors:
        e.add(v)
    return len(e)


class Subspace:
    """A subspace of Q^n stored as the canonical RREF of its span."""

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim: int, basis: Sequence[Sequence] = ()):
        e = Echelon(ambient_dim)
        for v in basis:
            e.add(v)
        self.ambient_dim = ambient_dim
        self.basis = tuple(e.rows())
        self.pivots = tuple(e.pivots)

    @classmethod
    def _from_echelon(cls, e: Echelon) -> "Subspace":
        s = object.__new__(cls)
        s.ambient_dim = e.ambient_dim
        s.basis = tuple(e.rows())
        s.pivots = tuple(e.pivots)
        return s

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, [unit_vector(n, i) for i in range(n)])

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, [])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return len(self.basis)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"

    def _echelon(self) -> Echelon:
        e = Echelon(self.ambient_dim)
        for v in self.basis:
            e.add(v)
        return e

    def contains(self, v: Sequence) -> bool:
        if len(v) != self.ambient_dim:
            raise DimensionMismatch(f"vector of length {len(v)} in ambient dimension {self.ambient_dim}")
        return self._echelon().contains(v)

    __contains__ = contains

    def contains_subspace(self, other: "Subspace") -> bool:
        e = self._echelon()
        return all(e.contains(v) for v in other.basis)

    def coordinates(self, v: Sequence) -> Vector:
        return self._echelon().coordinates(v)

    def join(self, other: "Subspace") -> "Subspace":
        return Subspace(self.ambient_dim, self.basis + other.basis)

    def as_matrix(self) -> Matrix:
        return Matrix._raw(self.basis, self.ambient_dim)


def member(s: Subspace, v: Sequence) -> bool:
    return s.contains(v)


def span(vectors: Iterable[Sequence], ambient_dim: int) -> Subspace:
    e = Echelon(ambient_dim)
    for v in vectors:
        e.add(v)
    return Subspace._from_echelon(e)


def kernel_basis(m: Matrix) -> Subspace:
    """Null space {v : m v = 0} as a canonical subspace."""
    r, rk = rref(m)
    n = m.cols
    pivots = []
    for i in range(rk):
        row = r.row(i)
        pivots.append(next(j for j, x in enumerate(row) if x != 0))
    pivot_set = set(pivots)
    vectors = []
    for f in range(n):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -r[i, f]
        vectors.append(v)
    return span(vectors, n)


def solve(m: Matrix, rhs: Sequence) -> Vector | None:
    """One solution of m x = rhs (free variables set to zero), or None."""
    aug = Matrix([list(r) + [as_fraction(b)] for r, b in zip(m, rhs)], m.cols + 1) if m.rows else None
    if aug is None:
        return zero_vector(m.cols) if all(b == 0 for b in rhs) else None
    r, rk = rref(aug)
    x = [Fraction(0)] * m.cols
    for i in range(rk):
        row = r.row(i)
        p = next(j for j, v in enumerate(row) if v != 0)
        if p == m.cols:
            return None
        x[p] = row[-1]
    return tuple(x)


def inverse(m: Matrix) -> Matrix:
    if m.rows != m.cols:
        raise DimensionMismatch("inverse of a non-square matrix")
    n = m.rows
    aug = Matrix([list(r) + list(unit_vector(n, i)) for i, r in enumerate(m)], 2 * n)
    r, rk = rref(aug)
    left = Matrix([row[:n] for row in r], n)
    if left != Matrix.identity(n):
        raise ZeroDivisionError("matrix is singular")
    return Matrix([row[n:] for row in r], n)


class Coordinates:
    """Expresses vectors in a fixed linearly independent family."""

    def __init__(self, vectors: Sequence[Sequence], ambient_dim: int):
        self.ambient_dim = ambient_dim
        self.size = len(vectors)
        self._echelon = Echelon(ambient_dim + self.size)
        for i, v in enumerate(vectors):
            self._echelon.add(tuple(v) + unit_vector(self.size, i))
        if any(p >= ambient_dim for p in self._echelon.pivots):
            raise ValueError("vectors are linearly dependent")

    def of(self, v: Sequence) -> Vector:
        r = self._echelon._reduce(tuple(v) + (Fraction(0),) * self.size)
        if any(j < self.ambient_dim for j in r):
            raise ValueError("vector not in span")
        return tuple(-r.get(self.ambient_dim + i, Fraction(0)) for i in range(self.size))

    def contains(self, v: Sequence) -> bool:
        r = self._echelon._reduce(tuple(v) + (Fraction(0),) * self.size)
        return not any(j < self.ambient_dim for j in r)
