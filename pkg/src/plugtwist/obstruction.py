"""Adjunction-inequality obstruction for the Y_n family.

For ``0 <= m < n`` of equal parity a diffeomorphism ``Y_m -> Y_n`` would
induce a form isomorphism ``Q_{Y_m} -> Q_{Y_n}``.  Every such isomorphism is
``B_n^{-1} L B_m`` with ``B`` from ``qforms.y_isomorphism`` and ``L`` an
automorphism of the reference form, so the image of ``[S_m]`` has explicit
coefficients in ``T1', T2', S_n``.  When the adjunction defect is negative a
new basic class appears, which forces the ``S_n`` coefficient to vanish; a
nonzero coefficient is the contradiction.  This module enumerates the sign
cases and records the arithmetic of each one.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from .errors import DomainError, NonIntegerCoefficient, ParityError, ParityMismatch
from .invariants import basic_classes, torus_knot_genus
from .qforms import GramForm, Matrix, Parity, mat_mul, y_gram, y_isomorphism

SIGNS = (1, -1)


class Variant(str, enum.Enum):
    DIAGONAL = "Diagonal"
    SWAP = "Swap"


class Conclusion(str, enum.Enum):
    CERTIFIED = "Certified"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class SurfaceData:
    m: int
    genus: int
    self_int: int
    gram: Matrix

    @property
    def euler_characteristic(self) -> int:
        return 2 - 2 * self.genus

    def as_dict(self):
        return {
            "m": self.m,
            "genus": self.genus,
            "self_int": self.self_int,
            "gram": [list(r) for r in self.gram],
            "basis": ["T1", "T2", f"S{self.m}"],
        }


def surface_data(m: int) -> SurfaceData:
    """Genus m(m-1) and square -2m^2-m-1 of the surface S_m in Y_m."""
    if m < 0:
        raise DomainError(f"m must be nonnegative, got {m}")
    genus = m * (m - 1)
    if m >= 1:
        # S_m caps a slice surface of the (m, 2m+1)-torus knot
        assert genus == torus_knot_genus(m, 2 * m + 1)
    return SurfaceData(m, genus, -2 * m * m - m - 1, y_gram(m))


@dataclass(frozen=True)
class CoeffVector:
    """Coefficients of the image of [S_m] in the basis T1', T2', S_n."""

    c_T1: int
    c_T2: int
    c_Sn: int

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.c_T1, self.c_T2, self.c_Sn)

    def as_dict(self):
        return {"c_T1": self.c_T1, "c_T2": self.c_T2, "c_Sn": self.c_Sn}


def _integral(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise NonIntegerCoefficient(f"{what} = {x} is not an integer")
    return int(x)


def _check_signs(*eps):
    for e in eps:
        if e not in SIGNS:
            raise ValueError(f"signs must be +1 or -1, got {e}")


def _even_m(m: int) -> Fraction:
    return Fraction(m * m) + Fraction(m, 2)


def _odd_m(m: int) -> Fraction:
    return Fraction(m * m) + Fraction(m + 1, 2)


def sm_coeffs_even(m: int, n: int, e2: int, e3: int, a: int = 0, b: int = 0) -> CoeffVector:
    if m % 2 or n % 2 or m < 0 or n < 0:
        raise ParityError(f"even case needs m, n even and nonnegative, got ({m}, {n})")
    _check_signs(e2, e3)
    M, N = _even_m(m), _even_m(n)
    c1 = -(a + b) * M - a
    c2 = (e2 - e3) * M * N + N * e2 - M * e3
    c3 = (e2 - e3) * M + e2
    return CoeffVector(_integral(c1, "c_T1"), _integral(c2, "c_T2"), _integral(c3, "c_Sn"))


def sm_coeffs_odd(m: int, n: int, variant, e2: int, a: int = 0, b: int = 0) -> CoeffVector:
    if m % 2 == 0 or n % 2 == 0 or m < 0 or n < 0:
        raise ParityError(f"odd case needs m, n odd, got ({m}, {n})")
    variant = Variant(variant)
    _check_signs(e2)
    M, N = _odd_m(m), _odd_m(n)
    c1 = b - a * M
    if variant is Variant.DIAGONAL:
        c2 = -e2 * (m - n) * (m + n + Fraction(1, 2))
        c3 = Fraction(e2)
    else:
        c2 = e2 * (1 - M * N)
        c3 = -e2 * M
    return CoeffVector(_integral(c1, "c_T1"), _integral(c2, "c_T2"), _integral(c3, "c_Sn"))


def _inverse_unimodular3(b: Matrix) -> Matrix:
    # adjugate; valid because det = +-1
    d = (
        b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1])
        - b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0])
        + b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0])
    )
    if abs(d) != 1:
        raise ValueError("matrix is not unimodular")
    cof = [[0] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            r = [k for k in range(3) if k != i]
            c = [k for k in range(3) if k != j]
            minor = b[r[0]][c[0]] * b[r[1]][c[1]] - b[r[0]][c[1]] * b[r[1]][c[0]]
            cof[i][j] = (-1) ** (i + j) * minor
    return tuple(tuple(cof[j][i] * d for j in range(3)) for i in range(3))


def middle_automorphism(e1: int, e2: int, e3: Optional[int], a: int, b: int, variant=None) -> Matrix:
    """The reference-form automorphism in one of the two (or three) shapes."""
    if variant is None:
        return ((e1, a, b), (0, e2, 0), (0, 0, e3))
    if Variant(variant) is Variant.DIAGONAL:
        return ((e1, a, b), (0, e2, 0), (0, 0, e2))
    return ((e1, a, b), (0, 0, e2), (0, e2, 0))


def composed_isometry(m: int, n: int, e1: int, e2: int, e3: Optional[int] = None,
                      a: int = 0, b: int = 0, variant=None) -> Matrix:
    """``B_n^{-1} L B_m``, an isomorphism ``Q_{Y_m} -> Q_{Y_n}``.

    Its third column is the image of [S_m]; this is the independent check on
    ``sm_coeffs_even`` / ``sm_coeffs_odd``.
    """
    bm, _ = y_isomorphism(m)
    bn, _ = y_isomorphism(n)
    mid = middle_automorphism(e1, e2, e3, a, b, variant)
    return mat_mul(mat_mul(_inverse_unimodular3(bn), mid), bm)


def k_value(n: int, coeffs: CoeffVector, k_sign: int) -> int:
    """k([S_m]) for k = PD(k_sign (n-1) (T1' + T2')).

    In Y_n the class T1' + T2' pairs to zero with T1', T2' and to one with
    S_n, so ``[S_m] . (T1' + T2') = c_Sn``.
    """
    return k_sign * (n - 1) * coeffs.c_Sn


def defect_from_surface(m: int, k: int) -> int:
    """chi(S_m) - [S_m]^2 - k([S_m])."""
    sd = surface_data(m)
    return sd.euler_characteristic - sd.self_int - k


def adjunction_defect(m: int, n: int, case) -> int:
    """Closed-form defect.

    ``case`` is ``eta`` in {0, 1} when m, n are even (eta = (1 - e2 e3)/2) and
    a ``Variant`` (or its name) when they are odd.
    """
    if m % 2 != n % 2:
        raise ParityError(f"m = {m} and n = {n} have different parity")
    if m % 2 == 0:
        if case not in (0, 1) or isinstance(case, (str, Variant)):
            raise ParityError("even case expects eta in {0, 1}")
        return 3 * m - n + 4 - (n - 1) * (2 * m * m + m) * case
    try:
        variant = Variant(case)
    except ValueError:
        raise ParityError("odd case expects Diagonal or Swap") from None
    if variant is Variant.DIAGONAL:
        return 3 * m + 4 - n
    return 3 * m + 3 - (n - 1) * (m * m + (m + 1) // 2)


def basic_class_pairing_check(n: int) -> bool:
    """All pairwise differences of basic classes have square zero in Y_n.

    A basic class i (t1 + t2) is Poincare dual to i (T1' + T2'); the check
    squares each difference against the Gram matrix of Y_n.
    """
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    form = GramForm(y_gram(n))
    coeffs = basic_classes(n).coefficients
    for i, j in itertools.combinations(coeffs, 2):
        d = i - j
        if form.square((d, d, 0)) != 0:
            return False
    return True


@dataclass(frozen=True)
class CaseRow:
    signs: Tuple[Tuple[str, int], ...]
    variant: Optional[Variant]
    eta: Optional[int]
    coeffs: CoeffVector
    k_sign: int
    k: int
    defect: int
    closed_form_defect: int
    matrix_check: bool

    @property
    def k_positive(self) -> bool:
        return self.k > 0

    @property
    def defect_even(self) -> bool:
        return self.defect % 2 == 0

    @property
    def defect_negative(self) -> bool:
        return self.defect < 0

    def as_dict(self):
        return {
            "signs": dict(self.signs),
            "variant": self.variant.value if self.variant else None,
            "eta": self.eta,
            "coeffs": self.coeffs.as_dict(),
            "c_Sn": self.coeffs.c_Sn,
            "k_sign": self.k_sign,
            "k": self.k,
            "k_positive": self.k_positive,
            "defect": self.defect,
            "defect_even": self.defect_even,
            "defect_negative": self.defect_negative,
            "closed_form_defect": self.closed_form_defect,
            "matrix_check": self.matrix_check,
        }


@dataclass(frozen=True)
class ObstructionCertificate:
    m: int
    n: int
    parity: Parity
    cases: Tuple[CaseRow, ...]
    conclusion: Conclusion
    reason: str
    pairing_check: bool = True
    ab_range: Tuple[int, int] = field(default=(-1, 1))

    @property
    def certified(self) -> bool:
        return self.conclusion is Conclusion.CERTIFIED

    def as_dict(self):
        return {
            "m": self.m,
            "n": self.n,
            "parity": self.parity.value,
            "criterion": {"3m+4": 3 * self.m + 4, "n": self.n, "holds": 3 * self.m + 4 < self.n},
            "cases": [c.as_dict() for c in self.cases],
            "conclusion": self.conclusion.value,
            "reason": self.reason,
            "pairing_check": self.pairing_check,
            "ab_range": list(self.ab_range),
        }


def _matrix_agrees(m, n, e1, e2, e3, variant, coeffs_fn, ab) -> bool:
    """Composed isometry preserves the forms and reproduces the coefficients."""
    qm, qn = GramForm(y_gram(m)), GramForm(y_gram(n))
    for a, b in itertools.product(range(ab[0], ab[1] + 1), repeat=2):
        f = composed_isometry(m, n, e1, e2, e3, a, b, variant)
        if qn.pullback(f) != qm.entries:
            return False
        col = tuple(f[i][2] for i in range(3))
        if col != coeffs_fn(a, b).as_tuple():
            return False
        if qn.square(col) != surface_data(m).self_int:
            return False
    return True


def _rows(m: int, n: int, ab) -> List[CaseRow]:
    rows = []
    if m % 2 == 0:
        for e1, e2, e3 in itertools.product(SIGNS, repeat=3):
            eta = (1 - e2 * e3) // 2
            fn = lambda a, b, e2=e2, e3=e3: sm_coeffs_even(m, n, e2, e3, a, b)
            cv = fn(0, 0)
            k = k_value(n, cv, e2)
            rows.append(CaseRow(
                (("e1", e1), ("e2", e2), ("e3", e3)), None, eta, cv, e2, k,
                defect_from_surface(m, k), adjunction_defect(m, n, eta),
                _matrix_agrees(m, n, e1, e2, e3, None, fn, ab),
            ))
    else:
        for variant in Variant:
            for e1, e2 in itertools.product(SIGNS, repeat=2):
                fn = lambda a, b, e2=e2, v=variant: sm_coeffs_odd(m, n, v, e2, a, b)
                cv = fn(0, 0)
                k_sign = e2 if variant is Variant.DIAGONAL else -e2
                k = k_value(n, cv, k_sign)
                rows.append(CaseRow(
                    (("e1", e1), ("e2", e2)), variant, None, cv, k_sign, k,
                    defect_from_surface(m, k), adjunction_defect(m, n, variant),
                    _matrix_agrees(m, n, e1, e2, None, variant, fn, ab),
                ))
    return rows


def nondiffeo_certificate(m: int, n: int, ab_range: Tuple[int, int] = (-1, 1)) -> ObstructionCertificate:
    """Case table for ``Y_m`` versus ``Y_n`` and whether it rules out a diffeomorphism.

    Certified requires ``3m + 4 < n`` and, in every row: a negative even
    defect, a nonzero S_n coefficient (odd when m is even), agreement of the
    closed forms with the composed matrices, and the basic-class pairing
    check.  Anything else is Inconclusive, which says nothing about whether
    the two manifolds are diffeomorphic.
    """
    if m % 2 != n % 2:
        raise ParityMismatch(f"m = {m} and n = {n} lie in different homeomorphism types")
    if not 0 <= m < n:
        raise DomainError(f"need 0 <= m < n, got ({m}, {n})")
    parity = Parity.EVEN if m % 2 == 0 else Parity.ODD
    rows = tuple(_rows(m, n, ab_range))
    pairing = basic_class_pairing_check(n)
    problems = []
    if not 3 * m + 4 < n:
        problems.append(f"3m+4 = {3 * m + 4} >= n = {n}")
    for i, r in enumerate(rows):
        if r.defect != r.closed_form_defect:
            problems.append(f"row {i}: defect {r.defect} != closed form {r.closed_form_defect}")
        if not r.matrix_check:
            problems.append(f"row {i}: composed isometry disagrees with coefficients")
        if not (r.defect_negative and r.defect_even):
            problems.append(f"row {i}: defect {r.defect} is not negative and even")
        if r.coeffs.c_Sn == 0 or (parity is Parity.EVEN and r.coeffs.c_Sn % 2 == 0):
            problems.append(f"row {i}: S_n coefficient {r.coeffs.c_Sn} gives no contradiction")
    if not pairing:
        problems.append("basic-class pairing check failed")
    if problems:
        return ObstructionCertificate(m, n, parity, rows, Conclusion.INCONCLUSIVE, "; ".join(problems), pairing, tuple(ab_range))
    reason = (
        f"3m+4 = {3 * m + 4} < n = {n}; every case has a negative even defect "
        f"and a nonzero S_n coefficient"
    )
    return ObstructionCertificate(m, n, parity, rows, Conclusion.CERTIFIED, reason, pairing, tuple(ab_range))
