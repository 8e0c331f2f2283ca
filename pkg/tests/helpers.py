"""Shared oracles for the test suite, kept independent of the library paths
they check: dense fraction-free elimination for ranks, and golden matrices."""

import math
from fractions import Fraction

from gmpy2 import mpq

from gkf2.exactlin import SparseMatrix


def _to_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    return Fraction(int(v.numerator), int(v.denominator))


def dense_bareiss_rank(rows: list[list]) -> int:
    """Textbook dense fraction-free (Bareiss) elimination rank."""
    m = [[_to_fraction(v) for v in row] for row in rows]
    if not m or not m[0]:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    im = []
    for row in m:
        den = 1
        for v in row:
            den = den * v.denominator // math.gcd(den, v.denominator)
        im.append([int(v * den) for v in row])
    rank = 0
    prev = 1
    r = 0
    for c in range(n_cols):
        piv = None
        for i in range(r, n_rows):
            if im[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        im[r], im[piv] = im[piv], im[r]
        for i in range(n_rows):
            if i == r:
                continue
            for j in range(n_cols):
                if j == c:
                    continue
                im[i][j] = (im[r][c] * im[i][j] - im[i][c] * im[r][j]) // prev
            im[i][c] = 0
        prev = im[r][c]
        r += 1
        rank += 1
        if r == n_rows:
            break
    return rank


def dense_rank_of(m: SparseMatrix) -> int:
    return dense_bareiss_rank(m.to_dense())


# Golden coboundary matrices for weight 8 in one published basis
# normalization (degree 3 -> 4 and degree 4 -> 5).  Whatever bases are
# chosen, rank A = 4, rank B = 1 and BA = 0 must hold.
GOLDEN_A_W8 = [
    [-6, -12, mpq(9, 4), 0],
    [0, -27, 0, 1],
    [0, 59, 0, 3],
    [5, 4, mpq(3, 4), 22],
    [mpq(7, 2), 14, mpq(21, 8), 35],
]

GOLDEN_B_W8 = [[-4, -3, -3, -9, 6]]
