"""Exact linear algebra kernels: no floats anywhere.

Matrices are tuples of tuples (entries int or Fraction). Determinants use
fraction-free Bareiss elimination; homogeneous systems are reduced
incrementally into an integer row-echelon structure whose rows are kept
content-free to control entry growth.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm

Matrix = tuple[tuple, ...]


def identity_matrix(n: int, one=Fraction(1)) -> Matrix:
    zero = one - one
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    cols = range(len(b[0]))
    return tuple(
        tuple(sum(row[k] * b[k][j] for k in range(len(b)) if row[k]) for j in cols)
        for row in a
    )


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(a: Matrix, s) -> Matrix:
    return tuple(tuple(s * x for x in row) for row in a)


def mat_transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def is_zero_matrix(a: Matrix) -> bool:
    return all(not x for row in a for x in row)


def bareiss_determinant(rows) -> int:
    """Determinant of a square integer matrix, fraction-free.

    Every interior division in the Bareiss recurrence is exact.
    """
    m = [list(map(int, row)) for row in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def rational_determinant(a: Matrix) -> Fraction:
    """Determinant of a matrix with Fraction (or int) entries, exactly."""
    scale = 1
    int_rows = []
    for row in a:
        row = [Fraction(x) for x in row]
        den = reduce(lcm, (x.denominator for x in row), 1)
        scale *= den
        int_rows.append([int(x * den) for x in row])
    return Fraction(bareiss_determinant(int_rows), scale)


class IntegerKernelSolver:
    """Incremental row echelon over the integers for homogeneous systems.

    Equations arrive as sparse {column: coefficient} dicts; each is reduced
    against the current pivot rows by cross-multiplication and stored
    content-free. Afterwards the kernel can be read off when the corank
    is exactly one.
    """

    def __init__(self, num_vars: int):
        self.num_vars = num_vars
        self.rows: dict[int, dict[int, int]] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def corank(self) -> int:
        return self.num_vars - self.rank

    @staticmethod
    def _normalize(row: dict[int, int]) -> dict[int, int]:
        g = reduce(gcd, row.values())
        p = min(row)
        if row[p] < 0:
            g = -g
        return {c: v // g for c, v in row.items()}

    def add_equation(self, row: dict[int, int]) -> bool:
        """Insert one equation; returns True when it increased the rank."""
        row = {c: v for c, v in row.items() if v}
        while row:
            p = min(row)
            pivot = self.rows.get(p)
            if pivot is None:
                self.rows[p] = self._normalize(row)
                return True
            a, b = row[p], pivot[p]
            merged = {c: b * v for c, v in row.items()}
            for c, v in pivot.items():
                merged[c] = merged.get(c, 0) - a * v
            row = {c: v for c, v in merged.items() if v}
            if row:
                row = self._normalize(row)
        return False

    def kernel_vector(self) -> list[int]:
        """The one-dimensional kernel as a primitive integer vector.

        Requires corank exactly 1. Deterministic sign: the first nonzero
        entry is positive.
        """
        free = [c for c in range(self.num_vars) if c not in self.rows]
        if len(free) != 1:
            raise ValueError(f"kernel dimension is {len(free)}, expected 1")
        x = [Fraction(0)] * self.num_vars
        x[free[0]] = Fraction(1)
        for p in sorted(self.rows, reverse=True):
            row = self.rows[p]
            total = sum(v * x[c] for c, v in row.items() if c != p)
            x[p] = Fraction(-total, row[p])
        den = reduce(lcm, (f.denominator for f in x), 1)
        ints = [int(f * den) for f in x]
        g = reduce(gcd, ints)
        ints = [v // g for v in ints]
        first = next(v for v in ints if v)
        if first < 0:
            ints = [-v for v in ints]
        return ints
