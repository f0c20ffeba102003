"""Closed-form link invariants used by the twist calculus.

* the Seiberg-Witten polynomial of the (2, 2n)-torus-link surgery on E(1)
  and its basic classes;
* one-variable Alexander polynomials of 2-bridge knots and links, computed
  from a 3-braid B_{p,q} built from a normal-form continued fraction;
* torus knot genus.

Alexander polynomials are returned in normalized form (see
``LaurentPoly1.normalized``).  For links the one-variable polynomial is the
one obtained from the Fox calculus with every oriented meridian sent to t, so
it vanishes at t = 1; e.g. the Hopf link gives ``t - 1``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from math import gcd
from typing import Tuple

from .braids import BraidWord, burau
from .errors import DegenerateClosure, DomainError, NotCoprime
from .freegroup import coloured_jacobian
from .laurent import LaurentPoly1, LaurentPoly2, mat_det
from .rationals import NormalForm, Rational, cf_normalize, normal_form_of


# -- Seiberg-Witten closed forms --------------------------------------------

def torus_link_alexander(n: int) -> LaurentPoly2:
    """(t1 t2)^(n-1) + (t1 t2)^(n-3) + ... + (t1 t2)^(1-n)."""
    if n <= 0:
        raise DomainError(f"n must be positive, got {n}")
    return LaurentPoly2({(k, k): 1 for k in range(1 - n, n, 2)})


@dataclass(frozen=True)
class BasicClassSet:
    """Multiples i*(t1 + t2) with nonzero SW invariant; stores the i."""

    n: int
    coefficients: Tuple[int, ...]

    def __len__(self):
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def as_dict(self):
        return {"n": self.n, "coefficients": list(self.coefficients)}


def basic_classes(n: int) -> BasicClassSet:
    """Exponents of the SW polynomial: -n+1, -n+3, ..., n-1."""
    sw = torus_link_alexander(n)
    return BasicClassSet(n, tuple(sorted(i for (i, _) in sw.terms)))


# -- 2-bridge braids and their Alexander polynomials -------------------------

def braid_Bpq(nf) -> BraidWord:
    """sigma1^b1 sigma2^b2 sigma1^b3 ... for coefficients b1..bN.

    Odd positions twist strands 1-2, even positions strands 2-3.  The braid
    is closed as a 4-plat with an extra straight strand on the left: caps
    join that strand with strand 1, and strand 2 with strand 3, at both ends.
    """
    coeffs = nf.coeffs if isinstance(nf, NormalForm) else tuple(nf)
    return BraidWord(tuple((1 if i % 2 == 0 else 2, b) for i, b in enumerate(coeffs)))


_T = LaurentPoly1.t()
_ONE = LaurentPoly1.constant(1)


def _plat_alexander(w: BraidWord) -> LaurentPoly1:
    if w.max_generator > 2:
        raise ValueError("plat closure expects a 3-braid (generators s1, s2)")
    letters = w.expanded()
    # top colouring: strand 0 down (t), strand 1 up, strands 2/3 chosen so the
    # bottom caps join opposite orientations; prefer strands 1, 2 parallel
    for s in (-1, 1):
        top = (1, -1, s, -s)
        jac, bottom = coloured_jacobian(letters, 4, top, offset=1)
        if bottom[0] == -bottom[1] and bottom[2] == -bottom[3]:
            break
    else:  # pragma: no cover - a plat always admits an orientation
        raise AssertionError("no consistent orientation")
    t0 = LaurentPoly1.monomial(top[0])
    t2 = LaurentPoly1.monomial(top[2])
    zero = LaurentPoly1()
    y0 = LaurentPoly1.monomial(bottom[0])
    rows = (
        (_ONE, t0, zero, zero),                                   # x0 x1
        (zero, zero, _ONE, t2),                                   # x2 x3
        tuple(jac[0][k] + y0 * jac[1][k] for k in range(4)),      # y0 y1
    )
    # generator x0 maps to t, so the minor without column 0 is the polynomial
    minor = tuple(tuple(row[k] for k in (1, 2, 3)) for row in rows)
    return mat_det(minor)


def _standard_alexander(w: BraidWord) -> LaurentPoly1:
    if w.max_generator > 2:
        raise ValueError("standard closure uses the 3-strand reduced Burau matrices")
    m = burau(w)
    diff = ((_ONE - m[0][0], -m[0][1]), (-m[1][0], _ONE - m[1][1]))
    d = diff[0][0] * diff[1][1] - diff[0][1] * diff[1][0]
    # det(I - B) = Delta * (1 + t + t^2)
    return d.divmod_exact(LaurentPoly1.from_coeffs([1, 1, 1]))


def alexander_closure(w: BraidWord, closure: str = "plat") -> LaurentPoly1:
    """Normalized one-variable Alexander polynomial of a closed 3-braid.

    ``closure="plat"`` is the 2-bridge closure described in ``braid_Bpq``;
    ``closure="standard"`` is the usual braid closure, computed as
    ``det(I - Burau(w)) / (1 + t + t^2)``.  A split closure gives the zero
    polynomial and a ``DegenerateClosure`` warning.
    """
    if closure == "plat":
        poly = _plat_alexander(w)
    elif closure == "standard":
        poly = _standard_alexander(w)
    else:
        raise ValueError(f"unknown closure {closure!r}")
    if poly.is_zero():
        warnings.warn(DegenerateClosure(f"closure of {w} is split; Alexander polynomial is 0"), stacklevel=2)
    return poly.normalized()


def alexander_two_bridge(r: Rational, policy: str = "toward_zero") -> LaurentPoly1:
    """Alexander polynomial of the 2-bridge knot or link K(p/q)."""
    return alexander_closure(braid_Bpq(cf_normalize(r, policy)))


def alexander_of_coeffs(coeffs) -> LaurentPoly1:
    """Same, for an arbitrary coefficient list (no normalization, no guard)."""
    return alexander_closure(braid_Bpq(tuple(coeffs)))


def torus_knot_genus(a: int, b: int) -> int:
    if a <= 0 or b <= 0:
        raise DomainError("torus knot parameters must be positive")
    if gcd(a, b) != 1:
        raise NotCoprime(f"gcd({a}, {b}) != 1")
    return (a - 1) * (b - 1) // 2
