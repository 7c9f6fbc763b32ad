"""Square matrices over the exact rationals.

Entries are ``fractions.Fraction`` values, which already enforce the scalar
invariants (reduced form, positive denominator, zero as 0/1).  Matrices are
immutable; every operation returns a new value.  Addressing is 1-based to
match the one-line permutation convention in :mod:`dihedrant.perm`.

Floats are rejected at construction: every identity this package checks is
exact, and a silently binary-rounded entry would poison all of them.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .perm import Permutation

Scalar = Fraction


def as_scalar(value) -> Fraction:
    """Coerce an int, Fraction, or 'p/q' string to an exact scalar."""
    if isinstance(value, bool) or isinstance(value, float):
        raise ValueError(f"entries must be exact (int, Fraction, or 'p/q'), got {value!r}")
    return Fraction(value)


class ExactMatrix:
    """An immutable n x n matrix of exact rationals."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable]) -> None:
        grid = tuple(tuple(as_scalar(e) for e in row) for row in rows)
        n = len(grid)
        if n < 1:
            raise ValueError("matrix must have at least one row")
        for i, row in enumerate(grid, start=1):
            if len(row) != n:
                raise ValueError(f"row {i} has {len(row)} entries, expected {n} (matrix must be square)")
        object.__setattr__(self, "_rows", grid)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, n: int) -> "ExactMatrix":
        return cls([[0] * n for _ in range(n)])

    @property
    def n(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def entry(self, i: int, j: int) -> Fraction:
        """Entry in row i, column j, 1-based."""
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise ValueError(f"position ({i},{j}) outside 1..{self.n}")
        return self._rows[i - 1][j - 1]

    def row(self, i: int) -> tuple[Fraction, ...]:
        if not 1 <= i <= self.n:
            raise ValueError(f"row {i} outside 1..{self.n}")
        return self._rows[i - 1]

    def column(self, j: int) -> tuple[Fraction, ...]:
        if not 1 <= j <= self.n:
            raise ValueError(f"column {j} outside 1..{self.n}")
        return tuple(row[j - 1] for row in self._rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(e) for e in row) + "]" for row in self._rows)
        return f"ExactMatrix([{body}])"

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(zip(*self._rows))

    def permute_columns(self, sigma: Permutation) -> "ExactMatrix":
        """New matrix whose j-th column is this matrix's sigma(j)-th column."""
        self._check_perm(sigma)
        return ExactMatrix(
            tuple(row[j - 1] for j in sigma.images) for row in self._rows
        )

    def permute_rows(self, sigma: Permutation) -> "ExactMatrix":
        """New matrix whose i-th row is this matrix's sigma(i)-th row."""
        self._check_perm(sigma)
        return ExactMatrix(self._rows[i - 1] for i in sigma.images)

    def linear_combination_row(self, j: int, alpha, beta, b: Sequence) -> "ExactMatrix":
        """Replace row j by alpha*(row j) + beta*b, other rows unchanged."""
        if not 1 <= j <= self.n:
            raise ValueError(f"row {j} outside 1..{self.n}")
        vec = tuple(as_scalar(e) for e in b)
        if len(vec) != self.n:
            raise ValueError(f"replacement row has {len(vec)} entries, expected {self.n}")
        a, c = as_scalar(alpha), as_scalar(beta)
        new_row = tuple(a * x + c * y for x, y in zip(self._rows[j - 1], vec))
        return ExactMatrix(
            new_row if i == j - 1 else row for i, row in enumerate(self._rows)
        )

    def rank(self) -> int:
        """Exact rank over the rationals.

        Denominators are cleared row by row (rank is invariant under row
        scaling), then fraction-free elimination runs on integers: each
        update divides by the previous pivot, which Sylvester's identity
        makes an exact integer division.
        """
        m = [_cleared_int_row(row) for row in self._rows]
        n = self.n
        prev = 1
        pivot_row = 0
        for col in range(n):
            pivot = next((r for r in range(pivot_row, n) if m[r][col] != 0), None)
            if pivot is None:
                continue
            m[pivot_row], m[pivot] = m[pivot], m[pivot_row]
            lead = m[pivot_row][col]
            for r in range(pivot_row + 1, n):
                factor = m[r][col]
                for c in range(col + 1, n):
                    m[r][c] = _exact_div(m[r][c] * lead - factor * m[pivot_row][c], prev)
                m[r][col] = 0
            prev = lead
            pivot_row += 1
            if pivot_row == n:
                break
        return pivot_row

    def _check_perm(self, sigma: Permutation) -> None:
        if sigma.n != self.n:
            raise ValueError(f"permutation of order {sigma.n} on a {self.n}x{self.n} matrix")


def _cleared_int_row(row: tuple[Fraction, ...]) -> list[int]:
    scale = math.lcm(*(e.denominator for e in row))
    return [int(e * scale) for e in row]


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError("fraction-free elimination produced a non-integer quotient")
    return q
