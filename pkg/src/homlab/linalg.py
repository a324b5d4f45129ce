"""Exact rational linear algebra on small dense matrices.

Matrices are plain lists of row lists with Fraction or int entries; nothing
here ever touches floating point.  Solutions are certified by substitution
before they are returned.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd, lcm
from typing import Sequence

Vector = Sequence
Matrix = Sequence[Sequence]


def _frac_rows(rows: Matrix) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows: Matrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and the pivot column indices."""
    m = _frac_rows(rows)
    nr = len(m)
    nc = len(m[0]) if nr else 0
    pivots: list[int] = []
    r = 0
    for c in range(nc):
        pr = next((i for i in range(r, nr) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(nr):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return m, pivots


def rank(rows: Matrix) -> int:
    return len(rref(rows)[1])


def dot(a: Vector, b: Vector):
    return sum(x * y for x, y in zip(a, b))


def mat_vec(rows: Matrix, v: Vector) -> list:
    return [dot(row, v) for row in rows]


def solve_combination(vectors: Sequence[Vector], target: Vector) -> list[Fraction] | None:
    """Coefficients a with sum a_i * vectors[i] == target, or None.

    The particular solution sets free coordinates to zero and is verified
    by substitution before returning.
    """
    d = len(target)
    k = len(vectors)
    for v in vectors:
        if len(v) != d:
            raise ValueError("dimension mismatch between vectors and target")
    rows = [
        [Fraction(vectors[j][i]) for j in range(k)] + [Fraction(target[i])]
        for i in range(d)
    ]
    rr, pivots = rref(rows)
    if k in pivots:
        return None
    alpha = [Fraction(0)] * k
    for r, c in enumerate(pivots):
        alpha[c] = rr[r][k]
    for i in range(d):
        if sum(alpha[j] * vectors[j][i] for j in range(k)) != target[i]:
            raise AssertionError("solve_combination failed its substitution check")
    return alpha


def nullspace(rows: Matrix) -> list[list[Fraction]]:
    """Basis of the right kernel {x : rows @ x = 0}."""
    if not rows:
        return []
    nc = len(rows[0])
    rr, pivots = rref(rows)
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * nc
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -rr[r][fc]
        basis.append(vec)
    return basis


def orthogonal_complement(vectors: Sequence[Vector], dim: int) -> list[list[Fraction]]:
    """Basis of {z : <z, v> = 0 for every v}, inside Q^dim."""
    if not vectors:
        return [[Fraction(1) if i == j else Fraction(0) for j in range(dim)] for i in range(dim)]
    return nullspace(vectors)


def solve_square(a: Matrix, b: Vector) -> list[Fraction]:
    """Unique solution of a @ x = b; raises ValueError when a is singular."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(b[i])] for i, row in enumerate(a)]
    for c in range(n):
        pr = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pr is None:
            raise ValueError("matrix is singular")
        m[c], m[pr] = m[pr], m[c]
        pv = m[c][c]
        m[c] = [x / pv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    x = [m[i][n] for i in range(n)]
    for i in range(n):
        if dot(a[i], x) != b[i]:
            raise AssertionError("solve_square failed its substitution check")
    return x


def det_int(rows: Matrix) -> int:
    """Determinant of an integer matrix by fraction-free (Bareiss) elimination."""
    a = [[int(x) for x in row] for row in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pr = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pr is None:
                return 0
            a[k], a[pr] = a[pr], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def integer_kernel_basis(rows: Matrix, ncols: int) -> list[list[int]]:
    """Basis of the saturated lattice {x in Z^ncols : rows @ x = 0}.

    Row-reduces [M^T | I] over Z; rows whose M^T part cancels out carry a
    lattice basis of the kernel in their identity part.
    """
    m = len(rows)
    b = [
        [int(rows[j][i]) for j in range(m)] + [1 if t == i else 0 for t in range(ncols)]
        for i in range(ncols)
    ]
    r = 0
    for c in range(m):
        while True:
            nz = [i for i in range(r, ncols) if b[i][c] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(b[i][c]))
            b[r], b[i0] = b[i0], b[r]
            done = True
            for i in range(r + 1, ncols):
                if b[i][c] != 0:
                    q = b[i][c] // b[r][c]
                    b[i] = [x - q * y for x, y in zip(b[i], b[r])]
                    if b[i][c] != 0:
                        done = False
            if done:
                r += 1
                break
    return [row[m:] for row in b[r:]]


def clear_denominators(vec: Sequence[Fraction]) -> list[int]:
    """Scale a rational vector to a primitive integer vector (same direction)."""
    fracs = [Fraction(x) for x in vec]
    scale = lcm(*(f.denominator for f in fracs)) if fracs else 1
    ints = [int(f * scale) for f in fracs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return ints


def lcm_denominators(fracs) -> int:
    out = 1
    for f in fracs:
        out = lcm(out, Fraction(f).denominator)
    return out


def cone_extreme_rays(constraints: Matrix, dim: int) -> list[list[int]]:
    """Extreme rays of the pointed cone {y in R^dim : constraints @ y >= 0}.

    Assumes the constraint matrix has full column rank (pointedness); every
    extreme ray is a kernel direction of some dim-1 constraints, so all are
    found by subset enumeration.  Rays come back as primitive integer vectors.
    """
    if dim == 0:
        return []
    rays: dict[tuple[int, ...], list[int]] = {}

    def consider(y: Sequence[Fraction]) -> None:
        for cand in (list(y), [-v for v in y]):
            if all(dot(row, cand) >= 0 for row in constraints):
                prim = clear_denominators(cand)
                rays[tuple(prim)] = prim

    if dim == 1:
        consider([Fraction(1)])
        return list(rays.values())
    for subset in combinations(range(len(constraints)), dim - 1):
        ns = nullspace([constraints[i] for i in subset])
        if len(ns) == 1:
            consider(ns[0])
    return list(rays.values())
