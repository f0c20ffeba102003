"""Negative continued fractions and the odd-length, even-tail normal form.

A coefficient list ``[b1, ..., bN]`` denotes ``b1 - 1/(b2 - 1/(... - 1/bN))``.
Its value is read off the product of the matrices ``[[b, -1], [1, 0]]``:
the (1,1) entry is the numerator and the (2,1) entry the denominator.

Three families of moves rewrite a list without changing the 2-bridge link it
describes (indices below are 0-based):

``insert`` at site ``i``
    ``(.., a_i, a_{i+1}, ..) -> (.., a_i+e, e, a_{i+1}+e, ..)``, ``e = ±1``.
``append``
    ``(.., a_n) -> (.., a_n+e, e)``.
``prepend``
    ``(a_1, ..) -> (e, a_1+e, ..)``.

``insert`` and ``append`` (and their inverses ``contract``/``unappend``)
keep the value exactly.  ``prepend`` multiplies the matrix product on the
left, so it keeps the numerator and moves the denominator by ``±p``: the
link is unchanged but the fraction becomes ``p/(q ± p)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, List, Sequence, Tuple

from .errors import IllegalSite, WrongKind, ZeroInput


@dataclass(frozen=True, order=True)
class Rational:
    """Reduced fraction ``p/q`` with ``q >= 1``; ``1/0`` stands for infinity."""

    p: int
    q: int

    def __post_init__(self):
        if self.q < 0 or gcd(self.p, self.q) != 1:
            raise ValueError(f"non-canonical rational {self.p}/{self.q}")

    @classmethod
    def of(cls, p: int, q: int = 1) -> "Rational":
        if q == 0:
            if p == 0:
                raise ZeroDivisionError("0/0")
            return cls(1, 0)
        g = gcd(p, q)
        if q < 0:
            g = -g
        return cls(p // g, q // g)

    @classmethod
    def parse(cls, text: str) -> "Rational":
        text = text.strip()
        if "/" in text:
            num, den = text.split("/", 1)
            if den.strip().startswith(("-", "+")):
                raise ValueError("sign is only allowed on the numerator")
            return cls.of(int(num), int(den))
        return cls.of(int(text), 1)

    @property
    def is_infinite(self) -> bool:
        return self.q == 0

    def as_fraction(self) -> Fraction:
        return Fraction(self.p, self.q)

    def __str__(self):
        return f"{self.p}/{self.q}"


class Kind(str, enum.Enum):
    KNOT = "KnotForm"
    LINK = "LinkForm"


@dataclass(frozen=True)
class Move:
    """One rewriting step; ``site`` is a 0-based index into the list it acts on."""

    variant: str
    site: int
    sign: int

    def as_dict(self):
        return {"variant": self.variant, "site": self.site, "sign": self.sign}


@dataclass(frozen=True)
class ContinuedFraction:
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(b) for b in self.coeffs))
        if not self.coeffs:
            raise ValueError("a continued fraction needs at least one coefficient")

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def value(self) -> Rational:
        return cf_evaluate(self.coeffs)


@dataclass(frozen=True)
class NormalForm:
    """Odd-length list whose entries at positions 3, 5, ..., N are even.

    ``source`` is the rational that was normalized; ``value`` is what the
    coefficients evaluate to.  The two differ only when a ``prepend`` move was
    needed (odd numerator, even denominator), and then ``exact`` is False.
    """

    coeffs: Tuple[int, ...]
    kind: Kind
    source: Rational
    value: Rational
    witness: Tuple[Move, ...] = field(default=(), compare=False)

    @property
    def exact(self) -> bool:
        return self.value == self.source

    @property
    def length(self) -> int:
        return len(self.coeffs)

    def odd_index_sum(self) -> int:
        """b1 + b3 + ... + bN (1-based odd positions)."""
        return sum(self.coeffs[0::2])

    def as_dict(self):
        return {
            "coeffs": list(self.coeffs),
            "kind": self.kind.value,
            "source": str(self.source),
            "value": str(self.value),
            "exact": self.exact,
            "witness": [m.as_dict() for m in self.witness],
        }


def _coeff_tuple(coeffs) -> Tuple[int, ...]:
    if isinstance(coeffs, (ContinuedFraction, NormalForm)):
        return tuple(coeffs.coeffs)
    out = tuple(int(b) for b in coeffs)
    if not out:
        raise ValueError("empty coefficient list")
    return out


def cf_matrix(coeffs) -> Tuple[int, int, int, int]:
    """Product of ``[[b, -1], [1, 0]]`` over the list, as ``(a, b, c, d)`` row-major."""
    a, b, c, d = 1, 0, 0, 1
    for x in _coeff_tuple(coeffs):
        a, b, c, d = a * x + b, -a, c * x + d, -c
    return a, b, c, d


def cf_evaluate(coeffs) -> Rational:
    """Value of the continued fraction; total, returns ``1/0`` for infinity."""
    a, _, c, _ = cf_matrix(coeffs)
    return Rational.of(a, c)


def cf_expand(r: Rational) -> ContinuedFraction:
    """Canonical expansion by ceiling division.

    The first coefficient is ``ceil(p/q)``; every later one is at least 2.
    Zero expands to ``[0]``.
    """
    if r.is_infinite:
        raise ZeroInput("infinity has no finite expansion")
    p, q = r.p, r.q
    out: List[int] = []
    while q:
        b = -((-p) // q)
        out.append(b)
        p, q = q, b * q - p
    return ContinuedFraction(tuple(out))


def cf_apply_move(coeffs, site: int, variant: str, sign: int | None = None) -> ContinuedFraction:
    """Apply one move; see the module docstring for the variants.

    ``insert``, ``append`` and ``prepend`` need ``sign`` in ``{+1, -1}``.  The
    inverse variants ``contract``, ``unappend`` and ``unprepend`` read the sign
    from the ``±1`` entry they remove (a given ``sign`` must agree with it).
    """
    w = list(_coeff_tuple(coeffs))
    n = len(w)
    if variant in ("insert", "append", "prepend") and sign not in (1, -1):
        raise IllegalSite(f"{variant} needs sign +1 or -1, got {sign!r}")

    def _check_unit(k):
        e = w[k]
        if e not in (1, -1) or (sign is not None and sign != e):
            raise IllegalSite(f"{variant} needs a ±1 entry at {k}, found {e}")
        return e

    if variant == "insert":
        if not 0 <= site < n - 1:
            raise IllegalSite(f"insert site {site} out of range for length {n}")
        w[site:site + 2] = [w[site] + sign, sign, w[site + 1] + sign]
    elif variant == "contract":
        if not 0 < site < n - 1:
            raise IllegalSite(f"contract site {site} must be an interior index")
        e = _check_unit(site)
        w[site - 1:site + 2] = [w[site - 1] - e, w[site + 1] - e]
    elif variant == "append":
        if site != n - 1:
            raise IllegalSite(f"append acts on the last index {n - 1}, got {site}")
        w[-1:] = [w[-1] + sign, sign]
    elif variant == "unappend":
        if n < 2 or site != n - 1:
            raise IllegalSite("unappend needs a list of length >= 2 and the last index")
        e = _check_unit(site)
        w[-2:] = [w[-2] - e]
    elif variant == "prepend":
        if site != 0:
            raise IllegalSite(f"prepend acts on index 0, got {site}")
        w[0:1] = [sign, w[0] + sign]
    elif variant == "unprepend":
        if n < 2 or site != 0:
            raise IllegalSite("unprepend needs a list of length >= 2 and index 0")
        e = _check_unit(0)
        w[0:2] = [w[1] - e]
    else:
        raise IllegalSite(f"unknown move variant {variant!r}")
    return ContinuedFraction(tuple(w))


def apply_moves(coeffs, moves: Iterable[Move]) -> ContinuedFraction:
    cf = ContinuedFraction(_coeff_tuple(coeffs))
    for m in moves:
        cf = cf_apply_move(cf, m.site, m.variant, m.sign)
    return cf


def is_normal(coeffs) -> bool:
    w = _coeff_tuple(coeffs)
    return len(w) % 2 == 1 and all(b % 2 == 0 for b in w[2::2])


def kind_of(coeffs) -> Kind:
    w = _coeff_tuple(coeffs)
    if not is_normal(w):
        raise WrongKind(f"{list(w)} is not in normal form")
    return Kind.LINK if w[0] % 2 == 0 else Kind.KNOT


def normal_form_of(coeffs) -> NormalForm:
    """Wrap an already-normal list (no rewriting)."""
    w = _coeff_tuple(coeffs)
    v = cf_evaluate(w)
    return NormalForm(w, kind_of(w), v, v, ())


_POLICIES = ("toward_zero", "plus", "minus")


def _pick_sign(x: int, policy: str) -> int:
    if policy == "plus":
        return 1
    if policy == "minus":
        return -1
    return -1 if x > 0 else 1


def _sweep(w: List[int], moves: List[Move], policy: str) -> List[int]:
    # make every entry at 1-based odd position >= 3 even, left to right
    j = 2
    while j < len(w):
        if w[j] % 2:
            e = _pick_sign(w[j], policy)
            if j == len(w) - 1:
                m = Move("append", j, e)
            else:
                m = Move("insert", j, e)
            w = list(cf_apply_move(w, m.site, m.variant, m.sign))
            moves.append(m)
        j += 2
    return w


def cf_normalize(r: Rational, policy: str = "toward_zero") -> NormalForm:
    """Rewrite ``cf_expand(r)`` into normal form, recording every move.

    ``policy`` chooses the sign of inserted ``±1`` entries; different policies
    give (generally) different normal forms of the same fraction.

    When ``p`` is odd and ``q`` even no exact normal form exists (the
    denominator of any normal-form list is odd), so one ``prepend`` move is
    applied first and the result evaluates to ``p/(q ± p)``.
    """
    if policy not in _POLICIES:
        raise ValueError(f"policy must be one of {_POLICIES}")
    if r.is_infinite:
        raise ZeroInput("infinity has no normal form")
    if r.p == 0:
        raise ZeroInput("p = 0 has no normal form")
    start = list(cf_expand(r).coeffs)
    moves: List[Move] = []
    if r.p % 2 and r.q % 2 == 0:
        m = Move("prepend", 0, _pick_sign(start[0], policy))
        start = list(cf_apply_move(start, 0, m.variant, m.sign))
        moves.append(m)

    trial: List[Move] = []
    out = _sweep(start, trial, policy)
    if len(out) % 2 == 0:
        first = Move("insert", 0, _pick_sign(start[0], policy))
        trial = [first]
        out = _sweep(list(cf_apply_move(start, 0, first.variant, first.sign)), trial, policy)
    if not is_normal(out):
        raise ArithmeticError(f"normalization failed for {r}")  # pragma: no cover
    moves.extend(trial)
    w = tuple(out)
    return NormalForm(w, kind_of(w), r, cf_evaluate(w), tuple(moves))


def mod4_signed_odd_sum(nf) -> int:
    """``(-1)^((N-1)/2) * (b1 + b3 + ... + bN) mod 4`` for a link-type normal form."""
    if not isinstance(nf, NormalForm):
        nf = normal_form_of(nf)
    if nf.kind is not Kind.LINK:
        raise WrongKind("the residue is defined for LinkForm (all odd-position entries even)")
    sign = -1 if ((nf.length - 1) // 2) % 2 else 1
    return (sign * nf.odd_index_sum()) % 4


def same_two_bridge_class(r: Rational, s: Rational) -> bool:
    """Whether ``r`` and ``s`` give the same unoriented 2-bridge link up to mirror."""
    if abs(r.p) != abs(s.p):
        return False
    p = abs(r.p)
    if p == 0:
        return True
    if p == 1:
        return True
    q1 = (r.q * (1 if r.p > 0 else -1)) % p
    q2 = (s.q * (1 if s.p > 0 else -1)) % p
    return any(
        (q1 - x) % p == 0 or (q1 * x - 1) % p == 0 for x in (q2, -q2 % p)
    )
