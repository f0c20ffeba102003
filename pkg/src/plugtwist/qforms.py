"""Small integral symmetric bilinear forms (rank <= 4).

Covers the named forms that appear as intersection forms of the Y_n / Z_n
families, brute-force isometry enumeration, the two automorphism shapes for
``<0> + <-1> + <1>`` and ``<0> + H``, and the plug / g-cork classification of
a twist ``phi_{p,q}`` by the parity of its twisted-double form.

Convention: a matrix ``M`` acts on column vectors, so its columns are the
images of the basis vectors and ``M`` preserves ``Q`` when ``M^T Q M = Q``.
"""

from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import BadName, BoundTooLarge, DimensionMismatch, OddP, ZeroInput
from .rationals import NormalForm, Rational, cf_normalize

Matrix = Tuple[Tuple[int, ...], ...]

MAX_RANK = 4
MAX_BOUND = 6


def _as_matrix(rows) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


def mat_mul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0])))
        for i in range(len(a))
    )


def transpose(a: Sequence[Sequence[int]]) -> Matrix:
    return tuple(zip(*a))


def det(a: Sequence[Sequence]) -> int:
    """Exact determinant by fraction-free elimination (Bareiss)."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def block_sum(*blocks: Sequence[Sequence[int]]) -> Matrix:
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[off + i][off + j] = int(x)
        off += len(b)
    return _as_matrix(out)


class Parity(str, enum.Enum):
    EVEN = "Even"
    ODD = "Odd"


@dataclass(frozen=True)
class GramForm:
    entries: Matrix
    basis_labels: Tuple[str, ...] = ()
    name: str = ""

    def __post_init__(self):
        entries = _as_matrix(self.entries)
        n = len(entries)
        if any(len(row) != n for row in entries):
            raise DimensionMismatch("Gram matrix must be square")
        if entries != transpose(entries):
            raise ValueError("Gram matrix must be symmetric")
        labels = tuple(self.basis_labels) or tuple(f"e{i + 1}" for i in range(n))
        if len(labels) != n:
            raise DimensionMismatch("one basis label per row is required")
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "basis_labels", labels)

    @property
    def n(self) -> int:
        return len(self.entries)

    def pair(self, u: Sequence[int], v: Sequence[int]) -> int:
        q = self.entries
        return sum(u[i] * q[i][j] * v[j] for i in range(self.n) for j in range(self.n) if u[i] and v[j])

    def square(self, u: Sequence[int]) -> int:
        return self.pair(u, u)

    def determinant(self) -> int:
        return det(self.entries)

    def signature(self) -> Tuple[int, int, int]:
        """(positive, negative, zero) counts via symmetric Gaussian elimination."""
        return _inertia(self.entries)

    def pullback(self, m: Sequence[Sequence[int]]) -> Matrix:
        """``M^T Q M``."""
        return mat_mul(mat_mul(transpose(m), self.entries), m)

    def as_dict(self):
        return {"name": self.name, "entries": [list(r) for r in self.entries], "basis": list(self.basis_labels)}


def _inertia(q: Sequence[Sequence[int]]) -> Tuple[int, int, int]:
    a = [[Fraction(x) for x in row] for row in q]
    n = len(a)
    pos = neg = 0
    active = list(range(n))
    while active:
        piv = next((i for i in active if a[i][i] != 0), None)
        if piv is None:
            # zero diagonal: if some off-diagonal pairing survives, replace e_i by e_i + e_j
            pair = next(((i, j) for i in active for j in active if i < j and a[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            continue
        d = a[piv][piv]
        if d > 0:
            pos += 1
        else:
            neg += 1
        active.remove(piv)
        for i in active:
            f = a[i][piv] / d
            if f:
                for k in range(n):
                    a[i][k] -= f * a[piv][k]
                for k in range(n):
                    a[k][i] -= f * a[k][piv]
    return pos, neg, n - pos - neg


# -- named forms ----------------------------------------------------------

_H = ((0, 1), (1, 0))


def y_gram(m: int) -> Matrix:
    """Gram matrix of H_2(Y_m) in the basis T1, T2, S_m."""
    return ((0, 0, 0), (0, 0, 1), (0, 1, -2 * m * m - m - 1))


def double_form_entries(p: int, n_len: int) -> Matrix:
    if p % 2:
        raise OddP(f"the twisted double form needs p even, got {p}")
    if n_len % 2 == 0 or n_len < 1:
        raise ValueError("N must be a positive odd length")
    sign = -1 if ((n_len + 1) // 2) % 2 else 1
    c = sign * (p // 2)
    blk = ((0, 1), (1, c))
    return block_sum(blk, blk)


_STATIC: Dict[str, Tuple[Matrix, Tuple[str, ...]]] = {
    "Zero1": (((0,),), ()),
    "Plus1": (((1,),), ()),
    "Minus1": (((-1,),), ()),
    "H": (_H, ()),
    "Y_even": (block_sum(((0,),), ((1,),), ((-1,),)), ()),
    "Y_odd": (block_sum(((0,),), _H), ()),
    "Z_even": (block_sum(((1,),), ((1,),), ((-1,),), ((-1,),)), ()),
    "Z_odd": (block_sum(_H, _H), ()),
    "L4": (block_sum(((0,),), ((-1,),), ((1,),)), ()),
    "L5": (block_sum(((0,),), _H), ()),
}

_ALIASES = {
    "Diag(+1)": "Plus1",
    "Diag(1)": "Plus1",
    "Diag(-1)": "Minus1",
    "<0>": "Zero1",
    "<1>": "Plus1",
    "<-1>": "Minus1",
}

_DOUBLE = re.compile(r"^DoubleForm\(\s*([+-]?\d+)\s*,\s*(\d+)\s*\)$")
_YN = re.compile(r"^Y\(\s*(\d+)\s*\)$")

FORM_NAMES = tuple(_STATIC) + ("Diag(+1)", "Diag(-1)", "DoubleForm(p,N)", "Y(n)")


def standard_form(name: str) -> GramForm:
    """Look up a named form.

    Static names: Zero1, Plus1 (= Diag(+1)), Minus1 (= Diag(-1)), H, Y_even,
    Y_odd, Z_even, Z_odd, L4 (<0>+<-1>+<1>) and
    L5 (<0>+H).  Parametrized: ``DoubleForm(p,N)`` and ``Y(n)``, the Gram
    matrix of Y_n in the basis T1, T2, S_n.
    """
    key = name.strip()
    key = _ALIASES.get(key, key)
    if key in _STATIC:
        entries, labels = _STATIC[key]
        return GramForm(entries, labels, key)
    m = _DOUBLE.match(key)
    if m:
        p, n_len = int(m.group(1)), int(m.group(2))
        return GramForm(double_form_entries(p, n_len), ("x1", "y1", "x2", "y2"), f"DoubleForm({p},{n_len})")
    m = _YN.match(key)
    if m:
        k = int(m.group(1))
        return GramForm(y_gram(k), ("T1", "T2", f"S{k}"), f"Y({k})")
    raise BadName(f"unknown form {name!r}; known: {', '.join(FORM_NAMES)}")


# -- isometries -------------------------------------------------------------

@dataclass(frozen=True)
class FormIsometry:
    matrix: Matrix
    form: GramForm = field(compare=False)

    def __post_init__(self):
        object.__setattr__(self, "matrix", _as_matrix(self.matrix))

    def as_list(self):
        return [list(r) for r in self.matrix]


def preserves_form(m: Sequence[Sequence[int]], q: GramForm) -> bool:
    """True iff ``M^T Q M = Q`` and ``|det M| = 1``."""
    mm = _as_matrix(m)
    if len(mm) != q.n or any(len(r) != q.n for r in mm):
        raise DimensionMismatch(f"{len(mm)}x{len(mm[0]) if mm else 0} matrix against rank-{q.n} form")
    return q.pullback(mm) == q.entries and abs(det(mm)) == 1


def _column_candidates(q: GramForm, bound: int, j: int) -> List[Tuple[int, ...]]:
    # off-diagonal entries in [-bound, bound]; the diagonal entry may always be +-1
    off = range(-bound, bound + 1)
    diag = range(-max(bound, 1), max(bound, 1) + 1)
    ranges = [diag if i == j else off for i in range(q.n)]
    want = q.entries[j][j]
    return [v for v in itertools.product(*ranges) if q.square(v) == want]


def enumerate_isometries(q: GramForm, bound: int = 3) -> List[FormIsometry]:
    """Every integer matrix with entries in ``[-bound, bound]`` preserving ``q``.

    Diagonal entries are additionally allowed to be ``±1`` so that bound 0
    returns the diagonal sign matrices; for ``bound >= 1`` this changes
    nothing.  Columns are filled one at a time; each candidate column must
    already have the right square and the right pairings with the earlier
    columns, so the search is exhaustive over the cube without visiting all
    of it.  Output is sorted by the row-major entry tuple.
    """
    if q.n > MAX_RANK:
        raise DimensionMismatch(f"rank {q.n} exceeds {MAX_RANK}")
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    if bound > MAX_BOUND:
        raise BoundTooLarge(f"bound {bound} exceeds {MAX_BOUND}")
    n = q.n
    cands = [_column_candidates(q, bound, j) for j in range(n)]
    g = q.entries
    found = []
    cols: List[Tuple[int, ...]] = []

    def extend(j: int):
        if j == n:
            m = transpose(cols)
            if abs(det(m)) == 1:
                found.append(m)
            return
        for v in cands[j]:
            if all(q.pair(cols[i], v) == g[i][j] for i in range(j)):
                cols.append(v)
                extend(j + 1)
                cols.pop()

    extend(0)
    found.sort(key=lambda m: tuple(x for row in m for x in row))
    return [FormIsometry(m, q) for m in found]


def matches_lemma_shape(m: Sequence[Sequence[int]], which: str) -> bool:
    """Whether a 3x3 matrix has one of the automorphism shapes.

    ``Lemma4``: ``[[e1, a, b], [0, e2, 0], [0, 0, e3]]``.
    ``Lemma5``: ``[[e1, a, b], [0, e2, 0], [0, 0, e2]]`` or
    ``[[e1, a, b], [0, 0, e2], [0, e2, 0]]``.  Every ``e`` is ``±1``.
    """
    mm = _as_matrix(m)
    if len(mm) != 3 or any(len(r) != 3 for r in mm):
        return False
    if abs(mm[0][0]) != 1 or mm[1][0] or mm[2][0]:
        return False
    lower = (mm[1][1], mm[1][2], mm[2][1], mm[2][2])
    d1, o1, o2, d2 = lower
    diagonal = o1 == 0 and o2 == 0 and abs(d1) == 1 and abs(d2) == 1
    if which == "Lemma4":
        return diagonal
    if which == "Lemma5":
        swap = d1 == 0 and d2 == 0 and abs(o1) == 1 and o1 == o2
        return (diagonal and d1 == d2) or swap
    raise BadName(f"unknown lemma shape {which!r}")


def lemma_pattern_matrices(which: str, bound: int) -> List[Matrix]:
    """All shape matrices with ``a, b`` in ``[-bound, bound]``, sorted like ``enumerate_isometries``."""
    signs = (-1, 1)
    ab = range(-bound, bound + 1)
    out = []
    for e1, a, b in itertools.product(signs, ab, ab):
        if which == "Lemma4":
            for e2, e3 in itertools.product(signs, signs):
                out.append(((e1, a, b), (0, e2, 0), (0, 0, e3)))
        elif which == "Lemma5":
            for e2 in signs:
                out.append(((e1, a, b), (0, e2, 0), (0, 0, e2)))
                out.append(((e1, a, b), (0, 0, e2), (0, e2, 0)))
        else:
            raise BadName(f"unknown lemma shape {which!r}")
    # same box as enumerate_isometries: off-diagonal entries bounded, diagonal free
    out = [m for m in out if all(abs(m[i][j]) <= bound for i in range(3) for j in range(3) if i != j)]
    out.sort(key=lambda m: tuple(x for row in m for x in row))
    return out


def form_parity(q: GramForm) -> Parity:
    """Even iff every diagonal entry is even (then every square is even)."""
    return Parity.EVEN if all(q.entries[i][i] % 2 == 0 for i in range(q.n)) else Parity.ODD


# -- isomorphism testing -----------------------------------------------------

@dataclass(frozen=True)
class Invariants:
    rank: int
    determinant: int
    signature: Tuple[int, int, int]
    parity: Parity

    def as_dict(self):
        return {
            "rank": self.rank,
            "determinant": self.determinant,
            "signature": list(self.signature),
            "parity": self.parity.value,
        }


def invariants(q: GramForm) -> Invariants:
    return Invariants(q.n, q.determinant(), q.signature(), form_parity(q))


def find_isomorphism(src: GramForm, dst: GramForm, bound: int = 2) -> Optional[Matrix]:
    """A matrix ``P`` with ``P^T dst P = src`` and ``|det P| = 1``, or None.

    Bounded search over column vectors with entries in ``[-bound, bound]``.
    """
    if src.n != dst.n:
        return None
    if bound > MAX_BOUND:
        raise BoundTooLarge(f"bound {bound} exceeds {MAX_BOUND}")
    n = src.n
    rng = range(-bound, bound + 1)
    by_square: Dict[int, List[Tuple[int, ...]]] = {}
    wanted = {src.entries[i][i] for i in range(n)}
    for v in itertools.product(rng, repeat=n):
        s = dst.square(v)
        if s in wanted:
            by_square.setdefault(s, []).append(v)
    cols: List[Tuple[int, ...]] = []

    def extend(j: int):
        if j == n:
            m = transpose(cols)
            return m if abs(det(m)) == 1 else None
        for v in by_square.get(src.entries[j][j], ()):
            if all(dst.pair(cols[i], v) == src.entries[i][j] for i in range(j)):
                cols.append(v)
                hit = extend(j + 1)
                if hit is not None:
                    return hit
                cols.pop()
        return None

    return extend(0)


def is_isomorphic(a: GramForm, b: GramForm, bound: int = 2) -> bool:
    """Invariant screen, then a bounded change-of-basis search.

    A False after the invariants agree only means no isomorphism exists with
    entries inside ``bound``; ``Y(n)`` needs entries of size about n^2, which is
    why ``y_isomorphism`` gives those maps explicitly.
    """
    if invariants(a) != invariants(b):
        return False
    return find_isomorphism(a, b, bound) is not None


def y_isomorphism(n: int) -> Tuple[Matrix, GramForm]:
    """Explicit ``B`` and reference form ``L`` with ``B^T L B = Y(n)``.

    Even ``n``: ``L = <0> + <-1> + <1>`` and, with ``M = n^2 + n/2``,
    ``S_n -> (0, -M-1, -M)``, ``T2 -> (0, 1, 1)``.  Odd ``n``: ``L = <0> + H``
    and, with ``M = n^2 + (n+1)/2``, ``S_n -> (0, -M, 1)``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n % 2 == 0:
        m = n * n + n // 2
        return ((1, 0, 0), (0, 1, -m - 1), (0, 1, -m)), standard_form("L4")
    m = n * n + (n + 1) // 2
    return ((1, 0, 0), (0, 1, -m), (0, 0, 1)), standard_form("L5")


# -- twisted doubles ----------------------------------------------------------

class TwistKind(str, enum.Enum):
    PLUG = "Plug"
    GCORK = "GCork"


def _block_isomorphism(c: int) -> Tuple[Matrix, Matrix]:
    """Change of basis ``P`` and target ``T`` with ``P^T [[0,1],[1,c]] P = T``.

    ``c = 2k`` gives ``H`` via (e1, e2 - k e1).  ``c = 2k + 1`` gives
    ``<1> + <-1>`` via (e2 - k e1, e2 - (k + 1) e1).
    """
    k = c // 2
    if c % 2 == 0:
        return ((1, -k), (0, 1)), _H
    return ((-k, -k - 1), (1, 1)), ((1, 0), (0, -1))


@dataclass(frozen=True)
class TwistClassification:
    rational: Rational
    kind: TwistKind
    p_mod4: int
    normal_form: NormalForm
    double_form: GramForm
    parity: Parity
    standard: GramForm
    isomorphism: Matrix
    diagram_form: GramForm

    def as_dict(self):
        return {
            "rational": str(self.rational),
            "kind": self.kind.value,
            "p_mod4": self.p_mod4,
            "normal_form": list(self.normal_form.coeffs),
            "N": self.normal_form.length,
            "double_form": [list(r) for r in self.double_form.entries],
            "parity": self.parity.value,
            "standard_form": self.standard.name,
            "isomorphism": [list(r) for r in self.isomorphism],
            "diagram_form": [list(r) for r in self.diagram_form.entries],
        }


def classify_form(nf: NormalForm) -> Tuple[GramForm, Matrix, GramForm]:
    """Double form, explicit isomorphism and the standard form it is carried to."""
    p = nf.value.p
    dbl = standard_form(f"DoubleForm({p},{nf.length})")
    c = dbl.entries[1][1]
    blk, target = _block_isomorphism(c)
    iso = block_sum(blk, blk)
    std = standard_form("Z_odd") if c % 2 == 0 else GramForm(block_sum(target, target), (), "2<1>+2<-1>")
    return dbl, iso, std


def classify_twist(r: Rational, policy: str = "toward_zero") -> TwistClassification:
    """Plug when the twisted double form is odd, g-cork when it is even."""
    if r.is_infinite or r.p == 0:
        raise ZeroInput("p must be nonzero")
    if r.p % 2:
        raise OddP(f"p = {r.p} is odd")
    nf = cf_normalize(r, policy)
    dbl, iso, std = classify_form(nf)
    if dbl.pullback(iso) != std.entries or abs(det(iso)) != 1:
        raise ArithmeticError("explicit isomorphism failed")  # pragma: no cover
    parity = form_parity(dbl)
    kind = TwistKind.PLUG if parity is Parity.ODD else TwistKind.GCORK
    # the handle diagram's framing is -(b1 + b3 + ... + bN)/2; same parity as p/2
    blk = ((0, 1), (1, -(nf.odd_index_sum() // 2)))
    diagram = GramForm(block_sum(blk, blk), (), "diagram")
    return TwistClassification(r, kind, r.p % 4, nf, dbl, parity, std, iso, diagram)
