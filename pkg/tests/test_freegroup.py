from hypothesis import given
from hypothesis import strategies as st

from plugtwist.freegroup import (
    abelianize,
    artin_images,
    coloured_jacobian,
    fox_derivative,
    fox_jacobian,
    inverse_word,
    reduce_word,
    substitute,
)
from plugtwist.laurent import LaurentPoly1

N = 4
braid_letters = st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), max_size=6)
colourings = st.lists(st.sampled_from([1, -1]), min_size=N, max_size=N)
free_words = st.lists(st.sampled_from([1, -1, 2, -2, 3, -3, 4, -4]), max_size=10)


def test_reduce_and_inverse():
    assert reduce_word((1, 2, -2, -1, 3)) == (3,)
    assert reduce_word(inverse_word((1, 2, 3)) + (1, 2)) == (-3,)


def test_artin_action_fixes_product():
    # sigma_i fixes x_0 x_1 ... x_{n-1}
    prod = tuple(range(1, N + 1))
    for s in (1, -1, 2, -2, 3, -3):
        images = artin_images([s], N)
        assert substitute(prod, images) == prod


@given(braid_letters)
def test_braid_relation_in_aut_free_group(ls):
    a = artin_images(ls + [1, 2, 1], N)
    b = artin_images(ls + [2, 1, 2], N)
    assert a == b


@given(free_words, colourings)
def test_fundamental_formula(w, colours):
    # abelianized: t^{ab(w)} - 1 = sum_j (d w / d x_j) (t^{c_j} - 1)
    lhs = LaurentPoly1.monomial(abelianize(w, colours)) - 1
    rhs = LaurentPoly1()
    for j in range(N):
        rhs = rhs + fox_derivative(w, j, colours) * (LaurentPoly1.monomial(colours[j]) - 1)
    assert lhs == rhs


@given(braid_letters, colourings)
def test_chain_rule_matches_explicit_words(ls, colours):
    jac, bottom = coloured_jacobian(ls, N, colours)
    images = artin_images(ls, N)
    assert jac == fox_jacobian(images, N, colours)
    assert tuple(abelianize(y, colours) for y in images) == bottom


def test_all_positive_colouring_is_burau():
    t = LaurentPoly1.t()
    jac, _ = coloured_jacobian([1], 2, (1, 1))
    assert jac == ((1 - t, t), (LaurentPoly1.constant(1), LaurentPoly1()))
