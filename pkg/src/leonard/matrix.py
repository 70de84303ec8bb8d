"""Dense matrices and subspace helpers over an exact field."""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

from .field import Field, FieldElement, Scalar

Vector = tuple[FieldElement, ...]


class Matrix:
    """Immutable dense matrix; ``rows`` is a tuple of tuples of elements."""

    __slots__ = ("field", "rows")

    def __init__(self, field: Field, rows: Iterable[Iterable[Scalar]]) -> None:
        self.field = field
        self.rows = tuple(tuple(field(x) for x in row) for row in rows)
        if self.rows and len({len(r) for r in self.rows}) != 1:
            raise ValueError("ragged matrix rows")

    @classmethod
    def _raw(cls, field: Field, rows: tuple) -> "Matrix":
        m = cls.__new__(cls)
        m.field = field
        m.rows = rows
        return m

    @classmethod
    def zeros(cls, field: Field, n: int, m: int | None = None) -> "Matrix":
        z = field.zero
        return cls._raw(field, tuple((z,) * (n if m is None else m) for _ in range(n)))

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        z, o = field.zero, field.one
        return cls._raw(field, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)))

    @classmethod
    def diagonal(cls, field: Field, entries: Sequence[Scalar]) -> "Matrix":
        n = len(entries)
        z = field.zero
        return cls._raw(
            field, tuple(tuple(field(entries[i]) if i == j else z for j in range(n)) for i in range(n))
        )

    @classmethod
    def build(cls, field: Field, n: int, entry: Callable[[int, int], Scalar]) -> "Matrix":
        return cls(field, ((entry(i, j) for j in range(n)) for i in range(n)))

    @classmethod
    def from_columns(cls, field: Field, columns: Sequence[Sequence[Scalar]]) -> "Matrix":
        if not columns:
            raise ValueError("no columns")
        return cls(field, zip(*columns))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0]) if self.rows else 0

    @property
    def size(self) -> int:
        n, m = self.shape
        if n != m:
            raise ValueError(f"matrix is not square: {n}x{m}")
        return n

    def __getitem__(self, ij: tuple[int, int]) -> FieldElement:
        i, j = ij
        return self.rows[i][j]

    def columns(self) -> list[Vector]:
        return [tuple(col) for col in zip(*self.rows)]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.rows)

    def transpose(self) -> "Matrix":
        return Matrix._raw(self.field, tuple(zip(*self.rows)))

    def _check(self, other: "Matrix") -> None:
        if self.field != other.field:
            raise TypeError(f"mixed fields {self.field} and {other.field}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix._raw(
            self.field, tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows))
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix._raw(
            self.field, tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows))
        )

    def __neg__(self) -> "Matrix":
        return Matrix._raw(self.field, tuple(tuple(-a for a in r) for r in self.rows))

    def scale(self, c: Scalar) -> "Matrix":
        c = self.field(c)
        return Matrix._raw(self.field, tuple(tuple(c * a for a in r) for r in self.rows))

    def __mul__(self, c: Scalar) -> "Matrix":
        if isinstance(c, Matrix):
            raise TypeError("use @ for matrix products")
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.shape[1] != other.shape[0]:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.rows))
        zero = self.field.zero
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = zero
                for a, b in zip(r, c):
                    if a.value and b.value:
                        acc = acc + a * b
                row.append(acc)
            out.append(tuple(row))
        return Matrix._raw(self.field, tuple(out))

    def apply(self, v: Sequence[FieldElement]) -> Vector:
        zero = self.field.zero
        out = []
        for r in self.rows:
            acc = zero
            for a, b in zip(r, v):
                if a.value and b.value:
                    acc = acc + a * b
            out.append(acc)
        return tuple(out)

    def shift(self, c: Scalar) -> "Matrix":
        """Return ``self - c*I``."""
        c = self.field(c)
        return Matrix._raw(
            self.field,
            tuple(tuple(a - c if i == j else a for j, a in enumerate(r)) for i, r in enumerate(self.rows)),
        )

    def trace(self) -> FieldElement:
        acc = self.field.zero
        for i in range(self.size):
            acc = acc + self.rows[i][i]
        return acc

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def is_zero(self) -> bool:
        return all(not a.value for r in self.rows for a in r)

    # shapes; "bidiagonal" here allows any entries on the relevant off-diagonal

    def _support(self) -> set[int]:
        return {j - i for i, r in enumerate(self.rows) for j, a in enumerate(r) if a.value}

    def is_diagonal(self) -> bool:
        return self._support() <= {0}

    def is_lower_bidiagonal(self) -> bool:
        return self._support() <= {0, -1}

    def is_upper_bidiagonal(self) -> bool:
        return self._support() <= {0, 1}

    def is_tridiagonal(self) -> bool:
        return self._support() <= {-1, 0, 1}

    def is_irreducible_tridiagonal(self) -> bool:
        if not self.is_tridiagonal():
            return False
        n = self.size
        return all(self.rows[i][i - 1].value and self.rows[i - 1][i].value for i in range(1, n))

    def is_lower_triangular(self) -> bool:
        return all(k <= 0 for k in self._support())

    def is_upper_triangular(self) -> bool:
        return all(k >= 0 for k in self._support())

    def rank(self) -> int:
        return len(_echelon(self.field, [list(r) for r in self.rows])[1])

    def inverse(self) -> "Matrix":
        n = self.size
        return self.solve(Matrix.identity(self.field, n))

    def solve(self, rhs: "Matrix") -> "Matrix":
        """Return X with ``self @ X == rhs``; self must be invertible."""
        self._check(rhs)
        n = self.size
        aug = [list(r) + list(s) for r, s in zip(self.rows, rhs.rows)]
        reduced, pivots = _echelon(self.field, aug, ncols=n)
        if len(pivots) != n:
            raise ValueError("matrix is singular")
        return Matrix._raw(self.field, tuple(tuple(reduced[i][n:]) for i in range(n)))

    def nullspace(self) -> list[Vector]:
        field = self.field
        n, m = self.shape
        reduced, pivots = _echelon(field, [list(r) for r in self.rows])
        free = [j for j in range(m) if j not in pivots]
        basis = []
        for f in free:
            v = [field.zero] * m
            v[f] = field.one
            for row, pc in enumerate(pivots):
                v[pc] = -reduced[row][f]
            basis.append(tuple(v))
        return basis

    def determinant(self) -> FieldElement:
        n = self.size
        rows = [list(r) for r in self.rows]
        det = self.field.one
        for c in range(n):
            p = next((r for r in range(c, n) if rows[r][c].value), None)
            if p is None:
                return self.field.zero
            if p != c:
                rows[c], rows[p] = rows[p], rows[c]
                det = -det
            pivot = rows[c][c]
            det = det * pivot
            inv = pivot.inverse()
            for r in range(c + 1, n):
                f = rows[r][c]
                if f.value:
                    f = f * inv
                    rows[r] = [a - f * b for a, b in zip(rows[r], rows[c])]
        return det

    def format(self, pretty: bool = False) -> str:
        cells = [[str(a) for a in r] for r in self.rows]
        if not pretty:
            return "\n".join(" ".join(r) for r in cells)
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join(" ".join(c.rjust(width) for c in r) for r in cells)

    def __repr__(self) -> str:
        return f"Matrix({self.field}, {[[str(a) for a in r] for r in self.rows]})"


def _echelon(field: Field, rows: list[list[FieldElement]], ncols: int | None = None):
    """Reduced row echelon form in place; pivots are searched in the first ``ncols`` columns."""
    if not rows:
        return rows, []
    m = len(rows[0]) if ncols is None else ncols
    pivots: list[int] = []
    r = 0
    for c in range(m):
        p = next((i for i in range(r, len(rows)) if rows[i][c].value), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [a * inv for a in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c].value:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def vector_scale(c: FieldElement, v: Sequence[FieldElement]) -> Vector:
    return tuple(c * x for x in v)


def vector_add(u: Sequence[FieldElement], v: Sequence[FieldElement]) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def span_rank(field: Field, vectors: Sequence[Sequence[FieldElement]]) -> int:
    if not vectors:
        return 0
    return Matrix(field, vectors).rank()


def span_basis(field: Field, vectors: Sequence[Sequence[FieldElement]]) -> list[Vector]:
    """A basis (as row-reduced vectors) for the span of ``vectors``."""
    if not vectors:
        return []
    reduced, pivots = _echelon(field, [list(v) for v in vectors])
    return [tuple(reduced[i]) for i in range(len(pivots))]


def in_span(field: Field, vectors: Sequence[Sequence[FieldElement]], v: Sequence[FieldElement]) -> bool:
    if all(not x.value for x in v):
        return True
    return span_rank(field, list(vectors) + [v]) == span_rank(field, vectors)


def intersect(field: Field, first: Sequence[Vector], second: Sequence[Vector]) -> list[Vector]:
    """Basis of span(first) ∩ span(second)."""
    first = span_basis(field, first)
    second = span_basis(field, second)
    if not first or not second:
        return []
    n = len(first[0])
    # solve sum a_k f_k - sum b_l g_l = 0
    columns = list(first) + [tuple(-x for x in g) for g in second]
    system = Matrix(field, [[c[i] for c in columns] for i in range(n)])
    out = []
    for kernel in system.nullspace():
        coeffs = kernel[: len(first)]
        vec = [field.zero] * n
        for a, f in zip(coeffs, first):
            if a.value:
                vec = [x + a * y for x, y in zip(vec, f)]
        out.append(tuple(vec))
    return span_basis(field, out)


def same_span(field: Field, first: Sequence[Vector], second: Sequence[Vector]) -> bool:
    r1, r2 = span_rank(field, first), span_rank(field, second)
    return r1 == r2 and span_rank(field, list(first) + list(second)) == r1
