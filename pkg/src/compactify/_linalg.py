"""Exact rational linear algebra: elimination, LP feasibility, double description.

Everything here works on lists of ``Fraction``/``int`` and never touches floats.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Vector = Sequence[Fraction]


def to_fractions(rows):
    return [[Fraction(x) for x in row] for row in rows]


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def mat_vec(M, v):
    return [dot(row, v) for row in M]


def transpose(M):
    return [list(col) for col in zip(*M)]


def identity(n: int):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def _row_reduce(M):
    """Reduced row echelon form; returns (rref, pivot_columns)."""
    A = to_fractions(M)
    if not A:
        return A, []
    nrows, ncols = len(A), len(A[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(nrows):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    return A, pivots


def rank(M) -> int:
    if not M:
        return 0
    return len(_row_reduce(M)[1])


def det(M) -> Fraction:
    A = to_fractions(M)
    n = len(A)
    result = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if A[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            A[c], A[p] = A[p], A[c]
            result = -result
        result *= A[c][c]
        for i in range(c + 1, n):
            if A[i][c] != 0:
                f = A[i][c] / A[c][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[c])]
    return result


def inverse(M):
    n = len(M)
    aug = [list(row) + e for row, e in zip(to_fractions(M), identity(n))]
    R, pivots = _row_reduce(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in R]


def solve(M, b):
    """Unique solution of M x = b for square invertible M."""
    return mat_vec(inverse(M), b)


def primitive(v):
    """Scale a nonzero rational vector to the primitive integer vector on its ray."""
    v = [Fraction(x) for x in v]
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive representative")
    return tuple(x // g for x in ints)


def nonneg_solution(A, b):
    """Find ``x >= 0`` with ``A x = b`` by phase-one simplex (Bland's rule).

    Returns the solution as a list of Fractions, or ``None`` if infeasible.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    if m == 0:
        return []
    # tableau columns: n structural, m artificial, rhs
    T = []
    for i in range(m):
        s = -1 if b[i] < 0 else 1
        row = [Fraction(s * a) for a in A[i]]
        row += [Fraction(int(j == i)) for j in range(m)]
        row.append(Fraction(s * b[i]))
        T.append(row)
    basis = [n + i for i in range(m)]
    width = n + m
    obj = [Fraction(0)] * (width + 1)
    for row in T:
        for j in range(n):
            obj[j] -= row[j]
        obj[width] -= row[width]

    while True:
        enter = next((j for j in range(width) if obj[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][width] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            # phase-one objective is bounded below by zero
            raise AssertionError("unbounded phase-one objective")
        piv = T[leave][enter]
        T[leave] = [x / piv for x in T[leave]]
        for i in range(m):
            if i != leave and T[i][enter] != 0:
                f = T[i][enter]
                T[i] = [a - f * c for a, c in zip(T[i], T[leave])]
        if obj[enter] != 0:
            f = obj[enter]
            obj = [a - f * c for a, c in zip(obj, T[leave])]
        basis[leave] = enter

    if obj[width] != 0:
        return None
    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        if j < n:
            x[j] = T[i][width]
    return x


def in_cone(generators, v) -> bool:
    """Exact test: is ``v`` a nonnegative combination of ``generators``?"""
    if all(x == 0 for x in v):
        return True
    if not generators:
        return False
    A = transpose(generators)
    return nonneg_solution(A, list(v)) is not None


def extreme_rays(rows, dim: int):
    """Extreme rays of the pointed cone ``{x : a.x >= 0 for a in rows}``.

    Plain double description with the combinatorial adjacency test. The rows
    must have rank ``dim``; rays come back as primitive integer tuples.
    """
    rows = [list(map(Fraction, a)) for a in rows]
    if dim == 0:
        return []
    R, pivots = _row_reduce(transpose(rows))
    # pivot columns of the transposed matrix index independent rows
    if len(pivots) < dim:
        raise ValueError("constraint rows do not span; cone is not pointed")
    init = pivots[:dim]
    rest = [k for k in range(len(rows)) if k not in init]
    B = inverse([rows[k] for k in init])
    rays = []
    for j in range(dim):
        col = [B[i][j] for i in range(dim)]
        tight = frozenset(init[i] for i in range(dim) if i != j)
        rays.append((primitive(col), tight))

    for k in rest:
        a = rows[k]
        pos, zero, neg = [], [], []
        for r, z in rays:
            s = dot(a, r)
            if s > 0:
                pos.append((r, z, s))
            elif s < 0:
                neg.append((r, z, s))
            else:
                zero.append((r, z))
        new = [(r, z) for r, z, _ in pos] + [(r, z | {k}) for r, z in zero]
        if pos and neg:
            all_z = [z for _, z in rays]
            for rp, zp, sp in pos:
                for rn, zn, sn in neg:
                    common = zp & zn
                    if len(common) < dim - 2:
                        continue
                    # adjacent iff no third ray is tight on all of ``common``
                    if sum(1 for z in all_z if common <= z) > 2:
                        continue
                    comb = [sp * y - sn * x for x, y in zip(rp, rn)]
                    new.append((primitive(comb), common | {k}))
        rays = new
    seen = {}
    for r, _ in rays:
        seen.setdefault(r, None)
    return sorted(seen)
