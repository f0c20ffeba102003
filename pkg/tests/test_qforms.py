import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_isometries, coprime_pairs, numpy_isometries
from plugtwist.errors import BadName, BoundTooLarge, DimensionMismatch, OddP, ZeroInput
from plugtwist.qforms import (
    GramForm,
    Parity,
    TwistKind,
    classify_twist,
    det,
    double_form_entries,
    enumerate_isometries,
    find_isomorphism,
    form_parity,
    identity,
    invariants,
    is_isomorphic,
    lemma_pattern_matrices,
    matches_lemma_shape,
    preserves_form,
    standard_form,
    y_gram,
    y_isomorphism,
)
from plugtwist.rationals import Rational

L4 = standard_form("L4")
L5 = standard_form("L5")


def test_named_forms():
    assert standard_form("Y_odd").entries == ((0, 0, 0), (0, 0, 1), (0, 1, 0))
    assert standard_form("Y_even").entries == ((0, 0, 0), (0, 1, 0), (0, 0, -1))
    assert standard_form("Z_even").entries == ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, -1, 0), (0, 0, 0, -1))
    assert standard_form("Z_odd").entries == ((0, 1, 0, 0), (1, 0, 0, 0), (0, 0, 0, 1), (0, 0, 1, 0))
    assert standard_form("Diag(+1)").entries == ((1,),)
    assert standard_form("Diag(-1)").entries == ((-1,),)
    assert standard_form("Zero1").entries == ((0,),)
    assert standard_form("Y(3)").entries == y_gram(3) == ((0, 0, 0), (0, 0, 1), (0, 1, -22))
    with pytest.raises(BadName):
        standard_form("E8")


def test_double_form_sign_follows_length():
    # (-1)^((N+1)/2) p/2
    assert standard_form("DoubleForm(2,1)").entries[1][1] == -1
    assert standard_form("DoubleForm(2,3)").entries[1][1] == 1
    assert standard_form("DoubleForm(4,5)").entries[1][1] == -2
    assert form_parity(standard_form("DoubleForm(2,1)")) is Parity.ODD
    with pytest.raises(OddP):
        standard_form("DoubleForm(3,1)")


def test_gram_form_validation():
    with pytest.raises(ValueError):
        GramForm(((0, 1), (2, 0)))
    with pytest.raises(DimensionMismatch):
        GramForm(((0, 1), (1, 0)), ("a",))


def test_preserves_form_examples():
    assert preserves_form(identity(3), L4)
    assert preserves_form(((1, 1, 0), (0, 1, 0), (0, 0, 1)), L4)
    assert preserves_form(((1, 0, 0), (0, 0, 1), (0, 1, 0)), L5)
    assert not preserves_form(((1, 0, 0), (0, 0, 1), (0, 1, 0)), L4)
    # preserves the form but is singular
    assert not preserves_form(((0, 0, 0), (0, 1, 0), (0, 0, 1)), L4)
    with pytest.raises(DimensionMismatch):
        preserves_form(identity(2), L4)


def test_lemma_shapes():
    assert matches_lemma_shape(identity(3), "Lemma4")
    assert matches_lemma_shape(identity(3), "Lemma5")
    swap = ((1, 0, 0), (0, 0, 1), (0, 1, 0))
    assert matches_lemma_shape(swap, "Lemma5") and not matches_lemma_shape(swap, "Lemma4")
    assert not matches_lemma_shape(((1, 0, 0), (1, 1, 0), (0, 0, 1)), "Lemma4")
    assert not matches_lemma_shape(((1, 0, 0), (1, 1, 0), (0, 0, 1)), "Lemma5")
    assert not matches_lemma_shape(((1, 0, 0), (0, 1, 0), (0, 0, -1)), "Lemma5")
    assert matches_lemma_shape(((1, 0, 0), (0, 1, 0), (0, 0, -1)), "Lemma4")


@pytest.mark.parametrize("form,shape", [(L4, "Lemma4"), (L5, "Lemma5")])
def test_isometries_match_brute_force_bound_1(form, shape):
    found = [m.matrix for m in enumerate_isometries(form, 1)]
    assert found == brute_isometries(form.entries, 1)
    assert found == lemma_pattern_matrices(shape, 1)
    assert len(found) == 72


@pytest.mark.parametrize("form", [L4, L5])
def test_isometries_match_numpy_bound_2(form):
    assert [m.matrix for m in enumerate_isometries(form, 2)] == numpy_isometries(form.entries, 2)


def test_isometry_counts():
    # two choices for e1, four automorphisms of the lower block, (2b+1)^2 for a, b
    for b in range(1, 4):
        assert len(enumerate_isometries(L4, b)) == 8 * (2 * b + 1) ** 2
        assert len(enumerate_isometries(L5, b)) == 8 * (2 * b + 1) ** 2


def test_bound_zero_gives_sign_matrices():
    for name in ("L4", "L5", "Y_even", "Z_even", "Z_odd", "H"):
        q = standard_form(name)
        expected = []
        for diag in itertools.product((-1, 1), repeat=q.n):
            m = tuple(tuple(diag[i] if i == j else 0 for j in range(q.n)) for i in range(q.n))
            if preserves_form(m, q):
                expected.append(m)
        expected.sort(key=lambda mm: tuple(x for r in mm for x in r))
        assert [m.matrix for m in enumerate_isometries(q, 0)] == expected
    assert len(enumerate_isometries(L4, 0)) == 8
    assert len(enumerate_isometries(standard_form("H"), 0)) == 2


def test_bound_guard():
    with pytest.raises(BoundTooLarge):
        enumerate_isometries(L4, 7)


def test_rank_four_isometries_are_isometries():
    q = standard_form("Z_odd")
    isos = enumerate_isometries(q, 1)
    assert isos and all(preserves_form(m.matrix, q) for m in isos)


def test_parity():
    assert form_parity(standard_form("Z_odd")) is Parity.EVEN
    assert form_parity(standard_form("Y_even")) is Parity.ODD
    for n in range(0, 30):
        assert form_parity(standard_form(f"Y({n})")) is (Parity.ODD if n % 2 == 0 else Parity.EVEN)


def test_y_family_isomorphisms():
    for n in range(0, 40):
        b, ref = y_isomorphism(n)
        assert ref.pullback(b) == y_gram(n) and abs(det(b)) == 1
        target = standard_form("Y_even" if n % 2 == 0 else "Y_odd")
        assert invariants(standard_form(f"Y({n})")) == invariants(target)
        assert is_isomorphic(ref, target)


def test_invariants_and_isomorphism():
    assert invariants(standard_form("Z_even")).signature == (2, 2, 0)
    assert is_isomorphic(standard_form("Z_even"), standard_form("DoubleForm(2,1)"))
    assert is_isomorphic(standard_form("Z_odd"), standard_form("DoubleForm(4,1)"))
    assert not is_isomorphic(standard_form("Z_odd"), standard_form("Z_even"))
    p = find_isomorphism(standard_form("Y_even"), L4)
    assert p is not None and L4.pullback(p) == standard_form("Y_even").entries


def test_classify_examples():
    assert classify_twist(Rational(2, 1)).kind is TwistKind.PLUG
    assert classify_twist(Rational(4, 1)).kind is TwistKind.GCORK
    assert classify_twist(Rational(6, 1)).kind is TwistKind.PLUG
    with pytest.raises(OddP):
        classify_twist(Rational(3, 1))
    with pytest.raises(ZeroInput):
        classify_twist(Rational(0, 1))


def test_classification_evidence():
    for p, q in coprime_pairs(30):
        if p % 2:
            continue
        c = classify_twist(Rational(p, q))
        assert c.double_form.pullback(c.isomorphism) == c.standard.entries
        assert abs(det(c.isomorphism)) == 1
        assert form_parity(c.diagram_form) is form_parity(c.double_form)


@given(st.integers(-50, 50).filter(lambda x: x != 0), st.sampled_from([1, 3, 5, 7, 9]))
def test_double_form_parity(half, n_len):
    p = 2 * half
    q = standard_form(f"DoubleForm({p},{n_len})")
    assert (form_parity(q) is Parity.ODD) == (p % 4 == 2)
    assert q.entries == double_form_entries(p, n_len)


@pytest.mark.parametrize("name,shape", [("L4", "Lemma4"), ("L5", "Lemma5")])
@pytest.mark.parametrize("bound", [0, 1, 2])
def test_pattern_set_equals_enumeration_at_small_bounds(name, shape, bound):
    found = [m.matrix for m in enumerate_isometries(standard_form(name), bound)]
    assert found == lemma_pattern_matrices(shape, bound)
