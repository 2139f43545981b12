"""Exact integer/rational linear algebra helpers for cone arithmetic.

Everything here works with plain Python ints (arbitrary precision) and
fractions.Fraction; no floats enter the core geometry.
"""

from fractions import Fraction
from itertools import combinations
from math import gcd


def primitive(vec):
    """Divide an integer vector by the gcd of its entries.

    The zero vector is rejected: it never occurs as a ray.
    """
    g = 0
    for x in vec:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive representative")
    return tuple(x // g for x in vec)


def det(matrix):
    """Determinant of a square integer matrix (fraction-free Bareiss)."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [list(row) for row in matrix]
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
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def matrix_rank(rows):
    """Rank of an integer matrix over Q (Gaussian elimination on Fractions)."""
    m = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    row = 0
    for col in range(cols):
        pivot = None
        for i in range(row, len(m)):
            if m[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        pv = m[row][col]
        m[row] = [x / pv for x in m[row]]
        for i in range(len(m)):
            if i != row and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[row])]
        row += 1
        rank += 1
        if row == len(m):
            break
    return rank


def minors_gcd(rows):
    """gcd of all maximal (k x k) minors of a k x n integer matrix.

    Equals 1 exactly when the rows extend to a basis of Z^n.
    """
    k = len(rows)
    n = len(rows[0])
    g = 0
    for cols in combinations(range(n), k):
        sub = [[row[c] for c in cols] for row in rows]
        g = gcd(g, abs(det(sub)))
        if g == 1:
            return 1
    return g


def solve_nonnegative(columns, point):
    """Solve sum_i x_i * columns[i] = point over Q; return coefficients.

    Returns the tuple of Fractions if a solution with all x_i >= 0 exists,
    otherwise None. The columns are assumed linearly independent, so the
    solution (when the system is consistent) is unique.
    """
    k = len(columns)
    n = len(point)
    # augmented n x (k+1) system
    aug = [[Fraction(columns[j][i]) for j in range(k)] + [Fraction(point[i])]
           for i in range(n)]
    pivots = []
    row = 0
    for col in range(k):
        pivot = None
        for i in range(row, n):
            if aug[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        aug[row], aug[pivot] = aug[pivot], aug[row]
        pv = aug[row][col]
        aug[row] = [x / pv for x in aug[row]]
        for i in range(n):
            if i != row and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[row])]
        pivots.append(col)
        row += 1
    # consistency: zero rows must have zero rhs
    for i in range(row, n):
        if aug[i][k] != 0:
            return None
    xs = [Fraction(0)] * k
    for r, col in enumerate(pivots):
        xs[col] = aug[r][k]
    if len(pivots) < k:
        # dependent columns are excluded upstream; free variables stay 0,
        # which is fine because the solution we report must still verify
        check = [sum(columns[j][i] * xs[j] for j in range(k)) for i in range(n)]
        if any(c != p for c, p in zip(check, point)):
            return None
    if any(x < 0 for x in xs):
        return None
    return tuple(xs)


def mat_mul_vec(matrix, vec):
    """Integer matrix times integer vector."""
    return tuple(sum(r * v for r, v in zip(row, vec)) for row in matrix)


def mat_mul(a, b):
    """Product of two integer matrices given as row tuples."""
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols)
                 for row in a)
