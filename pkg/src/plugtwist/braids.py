"""Twist words in {psi, phi}, 3-braid words, and the Burau word problem.

The boundary maps are modelled only through the homomorphism that sends
``sigma1 -> psi`` and ``sigma2^2 -> phi``; a twist word is therefore read as
an element of the subgroup of B3 generated by ``sigma1`` and ``sigma2^2``.
Triviality is decided with the reduced Burau representation, which is
faithful on three strands.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from .errors import OddP, ZeroInput
from .laurent import LaurentPoly1, mat_identity, mat_mul
from .rationals import Kind, NormalForm, Rational, cf_expand, cf_normalize, is_normal, kind_of, normal_form_of


class Gen(str, enum.Enum):
    PSI = "psi"
    PHI = "phi"


Syllable = Tuple[object, int]


def _reduce(letters: Iterable[Syllable]) -> Tuple[Syllable, ...]:
    out: List[List] = []
    for g, e in letters:
        e = int(e)
        if e == 0:
            continue
        if out and out[-1][0] == g:
            out[-1][1] += e
            if out[-1][1] == 0:
                out.pop()
        else:
            out.append([g, e])
    return tuple((g, e) for g, e in out)


@dataclass(frozen=True)
class TwistWord:
    """Run-length word over psi and phi, written left to right as a composition."""

    letters: Tuple[Tuple[Gen, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", _reduce((Gen(g), e) for g, e in self.letters))

    def __mul__(self, other: "TwistWord") -> "TwistWord":
        return TwistWord(self.letters + other.letters)

    def inverse(self) -> "TwistWord":
        return TwistWord(tuple((g, -e) for g, e in reversed(self.letters)))

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        if not self.letters:
            return "id"
        return " ".join(f"{g.value}^{e}" if e != 1 else g.value for g, e in self.letters)

    def as_list(self):
        return [[g.value, e] for g, e in self.letters]


@dataclass(frozen=True)
class BraidWord:
    """Run-length braid word; generator ``i`` is sigma_i (1-based)."""

    letters: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        letters = tuple((int(g), e) for g, e in self.letters)
        for g, _ in letters:
            if g < 1:
                raise ValueError(f"generator index must be >= 1, got {g}")
        object.__setattr__(self, "letters", _reduce(letters))

    _TOKEN = re.compile(r"^s(?:igma)?(\d+)(?:\^\(?([+-]?\d+)\)?)?$")

    @classmethod
    def parse(cls, text: str) -> "BraidWord":
        """Parse ``"s1 s2^-1 s1^3"`` (whitespace or comma separated)."""
        letters = []
        for tok in re.split(r"[\s,]+", text.strip()):
            if not tok:
                continue
            m = cls._TOKEN.match(tok)
            if not m:
                raise ValueError(f"cannot parse braid letter {tok!r}")
            letters.append((int(m.group(1)), int(m.group(2) or 1)))
        return cls(tuple(letters))

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return BraidWord(self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(tuple((g, -e) for g, e in reversed(self.letters)))

    def expanded(self) -> List[int]:
        """Letter-by-letter form: +i for sigma_i, -i for its inverse."""
        out = []
        for g, e in self.letters:
            out.extend([g if e > 0 else -g] * abs(e))
        return out

    @property
    def max_generator(self) -> int:
        return max((g for g, _ in self.letters), default=0)

    def exponent_sum(self) -> int:
        return sum(e for _, e in self.letters)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        if not self.letters:
            return "id"
        return " ".join(f"s{g}^{e}" if e != 1 else f"s{g}" for g, e in self.letters)

    def as_list(self):
        return [[g, e] for g, e in self.letters]


# -- Burau ---------------------------------------------------------------

_T = LaurentPoly1.t()
_TI = LaurentPoly1.monomial(-1)
_ONE = LaurentPoly1.constant(1)
_ZERO = LaurentPoly1()

BURAU_GENERATORS = {
    1: ((-_T, _ONE), (_ZERO, _ONE)),
    -1: ((-_TI, _TI), (_ZERO, _ONE)),
    2: ((_ONE, _ZERO), (_T, -_T)),
    -2: ((_ONE, _ZERO), (_ONE, -_TI)),
}


def _mat_pow(m, k: int):
    result = mat_identity(2)
    while k:
        if k & 1:
            result = mat_mul(result, m)
        m = mat_mul(m, m)
        k >>= 1
    return result


def burau(w: BraidWord):
    """Reduced Burau matrix of a 3-braid, multiplied left to right."""
    if w.max_generator > 2:
        raise ValueError("the reduced Burau matrices here are for 3 strands only")
    acc = mat_identity(2)
    for g, e in w.letters:
        base = BURAU_GENERATORS[g if e > 0 else -g]
        acc = mat_mul(acc, _mat_pow(base, abs(e)))
    return acc


def burau_det(m) -> LaurentPoly1:
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def is_identity(m) -> bool:
    return m == mat_identity(len(m))


def is_trivial(w: BraidWord) -> bool:
    return is_identity(burau(w))


# -- twist words -----------------------------------------------------------

def to_braid(w: TwistWord) -> BraidWord:
    """psi -> sigma1, phi -> sigma2^2."""
    return BraidWord(tuple((1, e) if g is Gen.PSI else (2, 2 * e) for g, e in w.letters))


def twist_word_from_form(coeffs) -> TwistWord:
    """phi^(bN/2) psi^(b_{N-1}) ... psi^(b2) phi^(b1/2) for a link-type list.

    No guard on the value, so lists evaluating to 0 are accepted.
    """
    nf = coeffs if isinstance(coeffs, NormalForm) else normal_form_of(coeffs)
    if nf.kind is not Kind.LINK:
        raise OddP("twist words need every odd-position coefficient even")
    b = nf.coeffs
    letters = []
    for i in range(len(b) - 1, -1, -1):
        if i % 2 == 0:
            letters.append((Gen.PHI, b[i] // 2))
        else:
            letters.append((Gen.PSI, b[i]))
    return TwistWord(tuple(letters))


def twist_word(r: Rational, policy: str = "toward_zero") -> TwistWord:
    """The twist word of ``p/q`` for even nonzero ``p``."""
    if r.p == 0:
        raise ZeroInput("p = 0")
    if r.p % 2:
        raise OddP(f"p = {r.p} is odd")
    return twist_word_from_form(cf_normalize(r, policy))


def f2_exponent(w: TwistWord) -> int:
    """Image under the map forgetting the third strand: psi -> 1, phi -> 0."""
    return sum(e for g, e in w.letters if g is Gen.PSI)


@dataclass(frozen=True)
class Report:
    rational: Rational
    coeffs: Tuple[int, ...]
    word: TwistWord
    braid: BraidWord
    f2: int
    burau: tuple
    trivial: bool
    evidence: str

    def as_dict(self):
        return {
            "rational": str(self.rational),
            "coeffs": list(self.coeffs),
            "word": self.word.as_list(),
            "word_text": str(self.word),
            "braid": str(self.braid),
            "f2_exponent": self.f2,
            "burau": [[str(x) for x in row] for row in self.burau],
            "trivial": self.trivial,
            "evidence": self.evidence,
        }


def word_nontriviality_report(r: Rational, policy: str = "toward_zero") -> Report:
    """Evidence that the twist word of ``p/q`` is (or is not) the identity.

    For ``p = 0`` the ZeroInput guard is bypassed: the expansion of zero is
    already a link-type list and its word is reported as computed.
    """
    if r.p % 2:
        raise OddP(f"p = {r.p} is odd")
    if r.p == 0:
        coeffs = tuple(cf_expand(r).coeffs)
        w = twist_word_from_form(coeffs)
    else:
        nf = cf_normalize(r, policy)
        coeffs = nf.coeffs
        w = twist_word_from_form(nf)
    return _report(r, coeffs, w)


def report_for_form(coeffs) -> Report:
    w = twist_word_from_form(coeffs)
    return _report(normal_form_of(coeffs).value, tuple(coeffs), w)


def _report(r, coeffs, w) -> Report:
    b = to_braid(w)
    m = burau(b)
    f2 = f2_exponent(w)
    trivial = is_identity(m)
    if f2:
        evidence = f"f2 exponent {f2} != 0"
    elif not trivial:
        evidence = "Burau matrix is not the identity"
    else:
        evidence = "word reduces to the identity"
    return Report(r, tuple(coeffs), w, b, f2, m, trivial, evidence)
