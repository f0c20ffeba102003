import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import written_even_isometry, written_odd_isometry
from plugtwist.errors import DomainError, ParityError, ParityMismatch
from plugtwist.obstruction import (
    Conclusion,
    Variant,
    adjunction_defect,
    basic_class_pairing_check,
    composed_isometry,
    nondiffeo_certificate,
    sm_coeffs_even,
    sm_coeffs_odd,
    surface_data,
)
from plugtwist.qforms import GramForm, y_gram

signs = st.sampled_from([1, -1])
small = st.integers(-3, 3)


def test_surface_data():
    assert (surface_data(0).genus, surface_data(0).self_int) == (0, -1)
    assert (surface_data(3).genus, surface_data(3).self_int) == (6, -22)
    assert (surface_data(1).genus, surface_data(1).self_int) == (0, -4)
    assert surface_data(5).gram == y_gram(5)
    with pytest.raises(DomainError):
        surface_data(-1)


def test_even_coefficients_examples():
    assert sm_coeffs_even(4, 8, 1, 1, 0, 0).c_Sn == 1
    assert sm_coeffs_even(2, 4, 1, -1, 0, 0).c_Sn == 11
    c = sm_coeffs_even(0, 6, -1, 1, 0, 0)
    assert c.c_T1 == 0 and c.c_Sn == -1
    with pytest.raises(ParityError):
        sm_coeffs_even(1, 4, 1, 1)


def test_odd_coefficients_examples():
    for e2 in (1, -1):
        assert sm_coeffs_odd(3, 7, "Diagonal", e2, 2, -1).c_Sn == e2
        assert sm_coeffs_odd(1, 5, "Swap", e2).c_Sn == -2 * e2
    with pytest.raises(ParityError):
        sm_coeffs_odd(2, 4, "Swap", 1)


@given(st.integers(0, 10).map(lambda k: 2 * k), st.integers(0, 20).map(lambda k: 2 * k), signs, signs, small, small)
def test_even_s_coefficient_is_odd(m, n, e2, e3, a, b):
    assert sm_coeffs_even(m, n, e2, e3, a, b).c_Sn % 2 == 1


def test_odd_swap_never_zero():
    for m in range(1, 12, 2):
        assert 2 * m * m + m + 1 != 0
        for e2 in (1, -1):
            assert sm_coeffs_odd(m, m + 2, "Swap", e2).c_Sn != 0
            assert sm_coeffs_odd(m, m + 2, "Diagonal", e2).c_Sn in (-1, 1)


def test_coefficients_match_written_out_matrix_product():
    for m, n in [(0, 2), (2, 6), (4, 20), (6, 8)]:
        for e1, e2, e3, a, b in itertools.product((1, -1), (1, -1), (1, -1), (-2, 0, 1), (-1, 3)):
            f = written_even_isometry(m, n, e1, e2, e3, a, b)
            col = tuple(f[i][2] for i in range(3))
            assert col == sm_coeffs_even(m, n, e2, e3, a, b).as_tuple()
            assert f == composed_isometry(m, n, e1, e2, e3, a, b)
    for m, n in [(1, 3), (3, 15), (5, 7)]:
        for e1, e2, a, b, swap in itertools.product((1, -1), (1, -1), (-2, 0, 1), (-1, 3), (False, True)):
            f = written_odd_isometry(m, n, e1, e2, a, b, swap)
            col = tuple(f[i][2] for i in range(3))
            assert col == sm_coeffs_odd(m, n, "Swap" if swap else "Diagonal", e2, a, b).as_tuple()


@given(st.integers(0, 12), st.integers(0, 12), signs, signs, signs, small, small, st.sampled_from(list(Variant)))
def test_image_square_is_preserved(m0, dn, e1, e2, e3, a, b, variant):
    # [S_m]^2 computed in Y_n equals -2m^2-m-1 for every sign choice and every a, b
    m = m0
    n = m + 2 * dn
    qn = GramForm(y_gram(n))
    cv = sm_coeffs_even(m, n, e2, e3, a, b) if m % 2 == 0 else sm_coeffs_odd(m, n, variant, e2, a, b)
    assert qn.square(cv.as_tuple()) == -2 * m * m - m - 1
    f = composed_isometry(m, n, e1, e2, e3 if m % 2 == 0 else None, a, b, None if m % 2 == 0 else variant)
    assert qn.pullback(f) == y_gram(m)


def test_defect_examples():
    assert adjunction_defect(2, 12, 0) == -2
    assert adjunction_defect(2, 10, 0) == 0
    assert adjunction_defect(1, 9, "Diagonal") == -2
    assert adjunction_defect(1, 9, Variant.SWAP) == 3 + 3 - 8 * 2
    with pytest.raises(ParityError):
        adjunction_defect(1, 4, 0)
    with pytest.raises(ParityError):
        adjunction_defect(2, 4, "Swap")
    with pytest.raises(ParityError):
        adjunction_defect(1, 3, 0)


def test_pairing_check():
    assert all(basic_class_pairing_check(n) for n in range(1, 51))
    with pytest.raises(DomainError):
        basic_class_pairing_check(0)


def test_certificate_examples():
    assert nondiffeo_certificate(0, 6).conclusion is Conclusion.CERTIFIED
    assert nondiffeo_certificate(2, 6).conclusion is Conclusion.INCONCLUSIVE
    c = nondiffeo_certificate(1, 9)
    assert c.certified and len(c.cases) == 8
    assert {r.variant for r in c.cases} == {Variant.DIAGONAL, Variant.SWAP}
    with pytest.raises(ParityMismatch):
        nondiffeo_certificate(1, 4)
    with pytest.raises(DomainError):
        nondiffeo_certificate(6, 2)


def test_k_positive_in_every_row():
    # the sign of k([S_m]) is recorded per row; it comes out positive throughout
    for m in range(0, 8):
        for n in range(m + 2, 40, 2):
            for r in nondiffeo_certificate(m, n).cases:
                assert r.k_positive
                assert r.defect == r.closed_form_defect


def test_boundary_is_inconclusive():
    for m in range(0, 10):
        n = 3 * m + 4
        assert nondiffeo_certificate(m, n).conclusion is Conclusion.INCONCLUSIVE
