"""Free-group words, the Artin action of braids, and Fox derivatives.

Generators are numbered 0..n-1; a word is a tuple of nonzero ints where
``k+1`` stands for ``x_k`` and ``-(k+1)`` for its inverse.

A *colouring* assigns each generator the exponent (+1 or -1) of ``t`` that it
maps to under abelianization.  With the all-(+1) colouring the Fox Jacobian
of a braid automorphism is the unreduced Burau matrix; mixed colourings are
what plat closures need, since capped strands run in opposite directions.
"""

from __future__ import annotations

from typing import Dict, List, Sequence, Tuple

from .laurent import LaurentPoly1, mat_identity, mat_mul

Word = Tuple[int, ...]


def reduce_word(w: Sequence[int]) -> Word:
    out: List[int] = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def inverse_word(w: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(w))


def gen(k: int) -> Word:
    return (k + 1,)


def artin_generator(i: int, sign: int, n: int) -> List[Word]:
    """Images of x_0..x_{n-1} under sigma_i^{sign} (strands i, i+1, 0-based)."""
    images = [gen(k) for k in range(n)]
    a, b = i + 1, i + 2
    if sign > 0:
        images[i] = (a, b, -a)
        images[i + 1] = (a,)
    else:
        images[i] = (b,)
        images[i + 1] = (-b, a, b)
    return images


def substitute(w: Sequence[int], images: Sequence[Word]) -> Word:
    out: List[int] = []
    for x in w:
        img = images[abs(x) - 1]
        out.extend(img if x > 0 else inverse_word(img))
    return reduce_word(out)


def artin_images(letters: Sequence[int], n: int, offset: int = 0) -> List[Word]:
    """Words y_k = (A_{s1} o A_{s2} o ... o A_{sL})(x_k) for a letter list.

    ``letters`` uses +i / -i for sigma_i^{±1} (1-based); ``offset`` shifts
    every generator onto strands further to the right.  Word length can grow
    exponentially, so this is meant for short braids and as a test oracle.
    """
    images = [gen(k) for k in range(n)]
    for s in letters:
        i = abs(s) - 1 + offset
        step = artin_generator(i, 1 if s > 0 else -1, n)
        # images currently express A_{s1..s_{k-1}}(x); composing on the right
        images = [substitute(step_img, images) for step_img in step]
    return images


def abelianize(w: Sequence[int], colours: Sequence[int]) -> int:
    return sum(colours[abs(x) - 1] * (1 if x > 0 else -1) for x in w)


def fox_derivative(w: Sequence[int], j: int, colours: Sequence[int]) -> LaurentPoly1:
    """Abelianized Fox derivative d w / d x_j."""
    terms: Dict[int, int] = {}
    prefix = 0
    target = j + 1
    for x in w:
        c = colours[abs(x) - 1]
        if x == target:
            terms[prefix] = terms.get(prefix, 0) + 1
            prefix += c
        elif x == -target:
            prefix -= c
            terms[prefix] = terms.get(prefix, 0) - 1
        else:
            prefix += c if x > 0 else -c
    return LaurentPoly1(terms)


def fox_jacobian(words: Sequence[Sequence[int]], n: int, colours: Sequence[int]):
    return tuple(tuple(fox_derivative(w, j, colours) for j in range(n)) for w in words)


def _t(e: int) -> LaurentPoly1:
    return LaurentPoly1.monomial(e)


def coloured_jacobian(letters: Sequence[int], n: int, colours: Sequence[int], offset: int = 0):
    """Fox Jacobian of the braid automorphism via the chain rule.

    Returns ``(J, bottom_colours)`` where ``J[k][l]`` is the abelianized
    derivative of y_k with respect to x_l and ``bottom_colours[k]`` is the
    abelianization exponent of y_k.  Agrees with ``fox_jacobian`` applied to
    ``artin_images`` but never expands words.
    """
    one, zero = LaurentPoly1.constant(1), LaurentPoly1()
    cur = list(colours)
    total = mat_identity(n)
    for s in letters:
        i = abs(s) - 1 + offset
        ci, cj = _t(cur[i]), _t(cur[i + 1])
        step = [list(row) for row in mat_identity(n)]
        if s > 0:
            step[i][i], step[i][i + 1] = one - cj, ci
            step[i + 1][i], step[i + 1][i + 1] = one, zero
        else:
            inv = _t(-cur[i + 1])
            step[i][i], step[i][i + 1] = zero, one
            step[i + 1][i], step[i + 1][i + 1] = inv, inv * (ci - one)
        total = mat_mul(tuple(tuple(r) for r in step), total)
        cur[i], cur[i + 1] = cur[i + 1], cur[i]
    return total, tuple(cur)
