"""The three scalar functionals on exact matrices.

* ``dihedrant``: the signed sum over the dihedral group,
  dih(A) = sum over sigma in D_n of sig(sigma) * prod_i a[i, sigma(i)].
  This is exactly what the false Sarrus rule (repeat the first n-1 columns,
  add the falling diagonals, subtract the rising ones) computes.
* ``leibniz_det``: the full n!-term expansion
  det(A) = sum over sigma in S_n of sgn(sigma) * prod_i a[i, sigma(i)].
  Kept deliberately naive; it is the independent oracle the tests trust.
* ``elimination_det``: fraction-free (Bareiss) elimination, the scalable
  reference for orders beyond the oracle cap.

All three share ``group_functional``, the signed-permutation-sum kernel.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable

from .matrix import ExactMatrix
from .perm import (
    DEFAULT_SYMMETRIC_CAP,
    Permutation,
    dihedral_group,
    sgn,
    sig,
    symmetric_group,
)


def group_functional(A: ExactMatrix, terms: Iterable[tuple[Permutation, int]]) -> Fraction:
    """Sum of sign * prod_i A(i, sigma(i)) over the given (sigma, sign) pairs.

    The sum is exact, hence independent of term order.  When every entry is
    an integer the products run on plain ints and are wrapped at the end.
    """
    n = A.n
    grid = A.rows
    if all(e.denominator == 1 for row in grid for e in row):
        ints = [[e.numerator for e in row] for row in grid]
        total = 0
        for perm, sign in terms:
            if perm.n != n:
                raise ValueError(f"permutation of order {perm.n} on a {n}x{n} matrix")
            product = 1
            for i, j in enumerate(perm.images):
                product *= ints[i][j - 1]
            total += product if sign > 0 else -product
        return Fraction(total)
    total = Fraction(0)
    for perm, sign in terms:
        if perm.n != n:
            raise ValueError(f"permutation of order {perm.n} on a {n}x{n} matrix")
        product = Fraction(1)
        for i, j in enumerate(perm.images):
            product *= grid[i][j - 1]
        total += product if sign > 0 else -product
    return total


def dihedrant(A: ExactMatrix) -> Fraction:
    """The false Sarrus functional: rotations count +, reflections count -.

    Identically zero for n <= 2 (each reflection repeats a rotation's
    product) and equal to the determinant for n = 3, where D_3 = S_3.
    """
    return group_functional(A, ((e.perm, sig(e)) for e in dihedral_group(A.n)))


def leibniz_det(A: ExactMatrix, cap: int = DEFAULT_SYMMETRIC_CAP) -> Fraction:
    """Determinant by brute-force expansion over all of S_n.

    Raises ResourceLimitError above the symmetric-group cap.
    """
    return group_functional(A, ((p, sgn(p)) for p in symmetric_group(A.n, cap=cap)))


def elimination_det(A: ExactMatrix) -> Fraction:
    """Determinant by fraction-free elimination; agrees with leibniz_det.

    Row denominators are cleared first (tracked as an overall factor), then
    Bareiss updates keep every intermediate an integer: the division by the
    previous pivot is exact by Sylvester's identity.
    """
    n = A.n
    denominator_factor = 1
    m: list[list[int]] = []
    for row in A.rows:
        scale = math.lcm(*(e.denominator for e in row))
        denominator_factor *= scale
        m.append([int(e * scale) for e in row])

    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if pivot is None:
                return Fraction(0)
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return Fraction(sign * m[n - 1][n - 1], denominator_factor)
