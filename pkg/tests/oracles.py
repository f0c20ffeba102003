"""Independent reference computations used by the tests.

Nothing here calls into the package except to build ``LaurentPoly1`` values
for comparison.  Determinants of Laurent matrices are obtained by exact
evaluation at integer points and Lagrange interpolation, so they share no
code with the Fox-calculus pipeline.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd
from typing import List, Sequence

from plugtwist.laurent import LaurentPoly1


# -- exact linear algebra -------------------------------------------------------

def det_fraction(a: Sequence[Sequence[Fraction]]) -> Fraction:
    m = [[Fraction(x) for x in row] for row in a]
    n = len(m)
    d = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if m[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            d = -d
        d *= m[k][k]
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            for j in range(k, n):
                m[i][j] -= f * m[k][j]
    return d


def interpolate(points: Sequence[int], values: Sequence[Fraction]) -> List[Fraction]:
    """Dense coefficients (low to high) of the interpolating polynomial."""
    n = len(points)
    coeffs = [Fraction(0)] * n
    for i, (xi, yi) in enumerate(zip(points, values)):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(points):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xj * basis[k + 1]
            denom *= xi - xj
        for k in range(n):
            coeffs[k] += yi * basis[k] / denom
    return coeffs


def seifert_alexander(v: Sequence[Sequence[int]]) -> LaurentPoly1:
    """det(V - t V^T), normalized up to units."""
    n = len(v)
    if n == 0:
        return LaurentPoly1.constant(1)
    pts = list(range(2, n + 3))
    vals = []
    for t in pts:
        vals.append(det_fraction([[v[i][j] - t * v[j][i] for j in range(n)] for i in range(n)]))
    coeffs = interpolate(pts, vals)
    assert all(c.denominator == 1 for c in coeffs)
    return LaurentPoly1.from_coeffs([int(c) for c in coeffs]).normalized()


# -- Seifert matrices ------------------------------------------------------------

TREFOIL_V = ((-1, 1), (0, -1))
FIGURE_EIGHT_V = ((-1, 1), (0, 1))
HOPF_V = ((-1,),)


def torus_2n_seifert(n: int):
    """Seifert matrix of the closure of sigma_1^n (torus knot or link T(2, n))."""
    size = n - 1
    return tuple(
        tuple(-1 if i == j else (1 if j == i + 1 else 0) for j in range(size)) for i in range(size)
    )


def even_continued_fraction(p: int, q: int) -> List[int]:
    """p/q = c1 + 1/(c2 + 1/(...)) with every c_i even; needs p odd, q even."""
    x = Fraction(p, q)
    out = []
    while True:
        c = 2 * round(x / 2)
        out.append(c)
        r = x - c
        if r == 0:
            return out
        if abs(r) >= 1:
            raise ValueError("no even expansion")
        x = 1 / r


def two_bridge_knot_seifert(p: int, q: int):
    """Tridiagonal Seifert matrix of K(p/q) for odd p, from the even expansion."""
    if p % 2 == 0:
        raise ValueError("knots only")
    qq = q % p
    if qq % 2:
        qq -= p
    cs = even_continued_fraction(p, qq)
    a = [c // 2 for c in cs]
    size = len(a)
    v = [[0] * size for _ in range(size)]
    for i, ai in enumerate(a):
        v[i][i] = -ai if i % 2 == 0 else ai
        if i + 1 < size:
            v[i][i + 1] = 1
    return tuple(tuple(r) for r in v)


# -- 2x2 continued-fraction matrices ----------------------------------------------

def cf_value(coeffs: Sequence[int]):
    """(p, q) from the matrix product prod [[b, -1], [1, 0]], unreduced."""
    a, b, c, d = 1, 0, 0, 1
    for x in coeffs:
        a, b, c, d = a * x + b, -a, c * x + d, -c
    return a, c


def coprime_pairs(pmax: int, pmin: int = 2):
    for p in range(pmin, pmax + 1):
        for q in range(1, p):
            if gcd(p, q) == 1:
                yield p, q


# -- isometries by brute force ----------------------------------------------------

def brute_isometries(gram: Sequence[Sequence[int]], bound: int):
    """Every matrix in [-bound, bound]^(n x n) with M^T Q M = Q and |det| = 1."""
    n = len(gram)
    rng = range(-bound, bound + 1)
    out = []
    for flat in itertools.product(rng, repeat=n * n):
        m = [flat[i * n:(i + 1) * n] for i in range(n)]
        ok = True
        for i in range(n):
            for j in range(i, n):
                s = 0
                for k in range(n):
                    if m[k][i]:
                        for l in range(n):
                            s += m[k][i] * gram[k][l] * m[l][j]
                if s != gram[i][j]:
                    ok = False
                    break
            if not ok:
                break
        if ok and abs(det_fraction(m)) == 1:
            out.append(tuple(tuple(r) for r in m))
    out.sort(key=lambda mm: tuple(x for r in mm for x in r))
    return out


def numpy_isometries(gram, bound: int):
    """Vectorized brute force over the whole cube (rank 3)."""
    import numpy as np

    n = len(gram)
    vals = np.arange(-bound, bound + 1, dtype=np.int64)
    grid = np.stack(np.meshgrid(*([vals] * (n * n)), indexing="ij"), axis=-1).reshape(-1, n, n)
    q = np.array(gram, dtype=np.int64)
    pulled = np.einsum("kji,jl,klm->kim", grid, q, grid)
    keep = np.all(pulled == q, axis=(1, 2))
    cand = grid[keep]
    dets = np.rint(np.linalg.det(cand.astype(float))).astype(np.int64)
    cand = cand[np.abs(dets) == 1]
    out = [tuple(tuple(int(x) for x in r) for r in mm) for mm in cand]
    out.sort(key=lambda mm: tuple(x for r in mm for x in r))
    return out


# -- obstruction arithmetic by hand ---------------------------------------------------

def matrix_mul(a, b):
    return tuple(
        tuple(sum(Fraction(a[i][k]) * b[k][j] for k in range(len(b))) for j in range(len(b[0])))
        for i in range(len(a))
    )


def written_even_isometry(m: int, n: int, e1: int, e2: int, e3: int, a: int, b: int):
    """The three-factor product written out with fractions, even case."""
    M = Fraction(m * m) + Fraction(m, 2)
    N = Fraction(n * n) + Fraction(n, 2)
    left = ((1, 0, 0), (0, -N, N + 1), (0, -1, 1))
    mid = ((e1, a, b), (0, e2, 0), (0, 0, e3))
    right = ((1, 0, 0), (0, 1, -M - 1), (0, 1, -M))
    return matrix_mul(matrix_mul(left, mid), right)


def written_odd_isometry(m: int, n: int, e1: int, e2: int, a: int, b: int, swap: bool):
    M = Fraction(m * m) + Fraction(m + 1, 2)
    N = Fraction(n * n) + Fraction(n + 1, 2)
    left = ((1, 0, 0), (0, 1, N), (0, 0, 1))
    mid = ((e1, a, b), (0, 0, e2), (0, e2, 0)) if swap else ((e1, a, b), (0, e2, 0), (0, 0, e2))
    right = ((1, 0, 0), (0, 1, -M), (0, 0, 1))
    return matrix_mul(matrix_mul(left, mid), right)
