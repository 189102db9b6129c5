"""Exact dense matrices over any of the workbench's field types.

Entries only need +, -, *, / and a zero test; Scalars are the usual case,
parameter-polynomial fractions appear in the structure-constant fit.
"""

from __future__ import annotations

from .errors import DegenerateSpectrum, Inconsistent, NotTriangular, Singular
from .scalars import Scalar


def _is_zero(x) -> bool:
    z = getattr(x, "is_zero", None)
    if z is not None:
        return z() if callable(z) else z
    return x == 0


class ExactMatrix:
    """Rectangular grid of exact field elements."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        entries = [list(row) for row in entries]
        if not entries:
            raise ValueError("empty matrix")
        cols = len(entries[0])
        if any(len(row) != cols for row in entries):
            raise ValueError("ragged rows")
        object.__setattr__(self, "rows", len(entries))
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    @staticmethod
    def identity(n: int, one=None, zero=None):
        one = Scalar(1) if one is None else one
        zero = Scalar(0) if zero is None else zero
        return ExactMatrix(
            [[one if i == j else zero for j in range(n)] for i in range(n)]
        )

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        return all(
            _is_zero(a - b)
            for ra, rb in zip(self.entries, other.entries)
            for a, b in zip(ra, rb)
        )

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = self.entries[i][0] * other.entries[0][j]
                for k in range(1, self.cols):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return ExactMatrix(out)

    def column(self, j):
        return [self.entries[i][j] for i in range(self.rows)]

    def is_upper_triangular(self) -> bool:
        return all(
            _is_zero(self.entries[i][j])
            for i in range(self.rows)
            for j in range(min(i, self.cols))
        )

    def __str__(self):
        return "\n".join(
            "[" + ", ".join(str(e) for e in row) + "]" for row in self.entries
        )


def mat_eig_triangular(m: ExactMatrix):
    """Exact eigendecomposition of an upper-triangular matrix.

    Returns (diag, p) with p invertible, upper-triangular with unit diagonal
    and p^-1 m p = diag(m).  Requires pairwise distinct diagonal entries.
    """
    if m.rows != m.cols:
        raise NotTriangular("matrix not square")
    if not m.is_upper_triangular():
        raise NotTriangular("matrix not upper triangular")
    n = m.rows
    diag = [m[i, i] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if _is_zero(diag[i] - diag[j]):
                raise DegenerateSpectrum(f"repeated eigenvalue at {i}, {j}")
    cols = []
    zero = m[0, 0] - m[0, 0]
    unit = None
    for j in range(n):
        v = [zero for _ in range(n)]
        # unit diagonal entry: derive "one" from the field via division
        if unit is None:
            unit = (
                diag[j] / diag[j]
                if not _is_zero(diag[j])
                else (m[0, 1] / m[0, 1] if n > 1 and not _is_zero(m[0, 1]) else Scalar(1))
            )
        v[j] = unit
        for i in range(j - 1, -1, -1):
            acc = zero
            for k in range(i + 1, j + 1):
                acc = acc + m[i, k] * v[k]
            v[i] = acc / (diag[j] - diag[i])
        cols.append(v)
    p = ExactMatrix([[cols[j][i] for j in range(n)] for i in range(n)])
    return diag, p


def back_substitute_unit_upper(p: ExactMatrix, b):
    """Solve p y = b for p upper-triangular with unit diagonal."""
    n = p.rows
    y = list(b)
    for i in range(n - 1, -1, -1):
        acc = y[i]
        for k in range(i + 1, n):
            acc = acc - p[i, k] * y[k]
        y[i] = acc
    return y


def mat_solve_linear(a: ExactMatrix, b):
    """Exact solution of a x = b; a square or overdetermined consistent.

    Raises Singular if the columns are dependent and Inconsistent if an
    overdetermined system has no solution.
    """
    if len(b) != a.rows:
        raise ValueError("rhs length mismatch")
    rows = [list(r) + [bv] for r, bv in zip(a.entries, b)]
    ncols = a.cols
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if not _is_zero(rows[i][c])), None)
        if pivot is None:
            raise Singular(f"no pivot in column {c}")
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pr = rows[r]
        inv = pr[c]
        rows[r] = pr = [e / inv for e in pr]
        for i in range(len(rows)):
            if i != r and not _is_zero(rows[i][c]):
                f = rows[i][c]
                rows[i] = [e - f * pe for e, pe in zip(rows[i], pr)]
        pivots.append(c)
        r += 1
    for i in range(r, len(rows)):
        if not _is_zero(rows[i][-1]):
            raise Inconsistent("overdetermined system has no solution")
    return [rows[i][-1] for i in range(ncols)]
