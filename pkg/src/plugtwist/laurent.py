"""Sparse integer Laurent polynomials in one and two variables.

Terms are kept in a dict mapping exponent -> nonzero int coefficient.  The
one-variable class uses int exponents (variable ``t``), the two-variable
class uses ``(i, j)`` pairs (variables ``t1``, ``t2``).  Values are immutable
and hashable.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple


class _Sparse:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[e] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, cls):
            return other
        if isinstance(other, int):
            return cls.constant(other)
        return NotImplemented

    @property
    def terms(self) -> Dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    def __neg__(self):
        return self._raw({e: -c for e, c in self._terms.items()})

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return self._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: Dict = {}
        add = self._add_exp
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = add(e1, e2)
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    del out[e]
        return self._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) != 1 or abs(next(iter(self._terms.values()))) != 1:
                raise ValueError("only units ±t^k can be inverted")
            return self.unit_inverse() ** (-k)
        result = self.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result


class LaurentPoly1(_Sparse):
    """Integer Laurent polynomial in ``t``."""

    __slots__ = ()

    @staticmethod
    def _add_exp(a, b):
        return a + b

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly1":
        return cls({0: c})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly1":
        return cls({exp: coeff})

    @classmethod
    def t(cls) -> "LaurentPoly1":
        return cls({1: 1})

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], low: int = 0) -> "LaurentPoly1":
        """Build from a dense list starting at exponent ``low``."""
        return cls({low + i: c for i, c in enumerate(coeffs)})

    def unit_inverse(self) -> "LaurentPoly1":
        (e, c), = self._terms.items()
        return LaurentPoly1._raw({-e: c})

    def is_unit(self) -> bool:
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    @property
    def min_exp(self) -> int:
        return min(self._terms)

    @property
    def max_exp(self) -> int:
        return max(self._terms)

    def span(self) -> int:
        return self.max_exp - self.min_exp if self._terms else -1

    def coeff(self, e: int) -> int:
        return self._terms.get(e, 0)

    def shift(self, k: int) -> "LaurentPoly1":
        return LaurentPoly1._raw({e + k: c for e, c in self._terms.items()})

    def invert_variable(self) -> "LaurentPoly1":
        """Substitute t -> 1/t."""
        return LaurentPoly1._raw({-e: c for e, c in self._terms.items()})

    def __call__(self, x):
        if isinstance(x, int):
            x = Fraction(x)
        total = 0
        for e, c in self._terms.items():
            total += c * (x ** e)
        return total

    def dense(self):
        if not self._terms:
            return 0, []
        lo, hi = self.min_exp, self.max_exp
        return lo, [self._terms.get(e, 0) for e in range(lo, hi + 1)]

    def divmod_exact(self, other: "LaurentPoly1") -> "LaurentPoly1":
        """Exact division; raises ``ArithmeticError`` if ``other`` does not divide."""
        if not other._terms:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self._terms:
            return LaurentPoly1()
        rem = dict(self._terms)
        dhi = other.max_exp
        dlead = other._terms[dhi]
        dlo = other.min_exp
        quot = {}
        while rem:
            hi = max(rem)
            if hi - dhi < min(rem) - dlo:
                raise ArithmeticError("inexact Laurent division")
            c, r = divmod(rem[hi], dlead)
            if r:
                raise ArithmeticError("inexact Laurent division")
            shift = hi - dhi
            quot[shift] = c
            for e, dc in other._terms.items():
                k = e + shift
                v = rem.get(k, 0) - c * dc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentPoly1(quot)

    def normalized(self) -> "LaurentPoly1":
        """Canonical representative modulo units ±t^k.

        Exponents are shifted so that the lowest one is ``-(span // 2)`` (the
        symmetric range when the span is even) and the sign is fixed so that
        the top coefficient is positive.  The zero polynomial is its own
        representative.
        """
        if not self._terms:
            return self
        lo, hi = self.min_exp, self.max_exp
        shifted = self.shift(-((hi - lo) // 2) - lo)
        if shifted._terms[shifted.max_exp] < 0:
            shifted = -shifted
        return shifted

    def equal_up_to_units(self, other: "LaurentPoly1") -> bool:
        return self.normalized() == other.normalized()

    def is_symmetric(self) -> bool:
        """True if p(1/t) = ±t^k p(t)."""
        return self.invert_variable().normalized() == self.normalized()

    def __repr__(self):
        return f"LaurentPoly1({self.format()!r})"

    def format(self, var: str = "t") -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            mag = abs(c)
            if e == 0:
                mono = str(mag)
            else:
                pw = var if e == 1 else f"{var}^{e}"
                mono = pw if mag == 1 else f"{mag}*{pw}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, mono))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, mono in parts[1:]:
            out += f" {sign} {mono}"
        return out

    __str__ = format


class LaurentPoly2(_Sparse):
    """Integer Laurent polynomial in ``t1, t2``; exponents are ``(i, j)``."""

    __slots__ = ()

    @staticmethod
    def _add_exp(a, b):
        return (a[0] + b[0], a[1] + b[1])

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly2":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, exp: Tuple[int, int], coeff: int = 1) -> "LaurentPoly2":
        return cls({tuple(exp): coeff})

    def unit_inverse(self) -> "LaurentPoly2":
        ((i, j), c), = self._terms.items()
        return LaurentPoly2._raw({(-i, -j): c})

    def coeff(self, e: Tuple[int, int]) -> int:
        return self._terms.get(tuple(e), 0)

    def invert_variables(self) -> "LaurentPoly2":
        return LaurentPoly2._raw({(-i, -j): c for (i, j), c in self._terms.items()})

    def swap_variables(self) -> "LaurentPoly2":
        return LaurentPoly2._raw({(j, i): c for (i, j), c in self._terms.items()})

    def __call__(self, x1, x2):
        if isinstance(x1, int):
            x1 = Fraction(x1)
        if isinstance(x2, int):
            x2 = Fraction(x2)
        total = 0
        for (i, j), c in self._terms.items():
            total += c * (x1 ** i) * (x2 ** j)
        return total

    def diagonal(self) -> LaurentPoly1:
        """Restrict along t1 = t2 = t."""
        out: Dict[int, int] = {}
        for (i, j), c in self._terms.items():
            out[i + j] = out.get(i + j, 0) + c
        return LaurentPoly1(out)

    def in_product(self) -> LaurentPoly1 | None:
        """Rewrite as a polynomial in s = t1*t2 when every monomial is a power of t1*t2."""
        out = {}
        for (i, j), c in self._terms.items():
            if i != j:
                return None
            out[i] = c
        return LaurentPoly1(out)

    def __repr__(self):
        return f"LaurentPoly2({self.format()!r})"

    def format(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self._terms.items(), reverse=True):
            mag = abs(c)
            fac = []
            for var, e in (("t1", i), ("t2", j)):
                if e == 1:
                    fac.append(var)
                elif e:
                    fac.append(f"{var}^{e}")
            mono = "*".join(fac) if fac else "1"
            if mag != 1:
                mono = f"{mag}*{mono}" if fac else str(mag)
            parts.append(("-" if c < 0 else "+", mono))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, mono in parts[1:]:
            out += f" {sign} {mono}"
        return out

    __str__ = format


# 2x2 and small square matrices over LaurentPoly1, stored as tuples of rows.

def mat_identity(n: int):
    one, zero = LaurentPoly1.constant(1), LaurentPoly1()
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def mat_mul(a, b):
    n, m, k = len(a), len(b), len(b[0])
    zero = LaurentPoly1()
    out = []
    for i in range(n):
        row = []
        for j in range(k):
            acc = zero
            for l in range(m):
                x, y = a[i][l], b[l][j]
                if x and y:
                    acc = acc + x * y
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_det(a) -> LaurentPoly1:
    """Determinant by cofactor expansion; fine for the n <= 4 used here."""
    n = len(a)
    if n == 0:
        return LaurentPoly1.constant(1)
    if n == 1:
        return a[0][0]
    if n == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    total = LaurentPoly1()
    for j in range(n):
        if not a[0][j]:
            continue
        minor = tuple(tuple(row[k] for k in range(n) if k != j) for row in a[1:])
        term = a[0][j] * mat_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def mat_format(a) -> list:
    return [[str(x) for x in row] for row in a]
