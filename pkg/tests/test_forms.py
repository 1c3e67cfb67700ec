from fractions import Fraction

import pytest

from oracles import naive_sigma
from qcong.forms import (
    cm_coefficient,
    eisenstein,
    eisenstein_int,
    form_F,
    form_f,
    form_f1,
    form_f2,
    form_g,
    form_h,
    resolve_form,
    sigma,
    theta0,
    two_squares,
)
from qcong.ring import QuadInt, primes_up_to


def test_sigma_examples_and_oracle():
    assert sigma(1, 1) == 1
    assert sigma(3, 2) == 9
    assert sigma(1, 9) == 13
    for n in range(1, 200):
        assert sigma(3, n) == naive_sigma(3, n)
    with pytest.raises(ValueError):
        sigma(1, 0)


def test_eisenstein_e4():
    e4 = eisenstein(4, 4)
    assert e4.coeffs == [1, 240, 2160, 6720]
    as_int = eisenstein_int(4, 4)
    assert as_int.coeffs == [1, 240, 2160, 6720]
    dil = as_int.dilate(2)
    assert dil.coeffs[:3] == [1, 0, 240]


def test_eisenstein_rejects_bad_weight():
    for k in (2, 3, 5):
        with pytest.raises(ValueError):
            eisenstein(k, 4)


def test_eisenstein_e6_is_rational_exact():
    e6 = eisenstein(6, 3)
    assert e6.coeffs == [1, -504, -504 * naive_sigma(5, 2)]
    assert all(isinstance(c, Fraction) for c in e6.coeffs)


def test_theta0():
    assert theta0(11).coeffs == [1, 2, 0, 0, 2, 0, 0, 0, 0, 2, 0]
    assert theta0(11).coeff(2) == 0
    t2 = theta0(5).dilate(2)
    assert t2.coeffs[:9] == [1, 0, 2, 0, 0, 0, 0, 0, 2]


def test_form_F_is_odd_sigma_series():
    F = form_F(64)
    for n in range(64):
        want = naive_sigma(1, n) if n % 2 == 1 else 0
        assert F.coeffs[n] == want, n
    assert F.coeffs[:10] == [0, 1, 0, 4, 0, 6, 0, 8, 0, 13]


def test_form_h_leading_values():
    h = form_h(18)
    assert h.coeffs[1] == 1 and h.coeffs[5] == -6 and h.coeffs[9] == 9
    assert h.coeffs[2] == 0
    assert h.coeffs[13] == 10  # 2*3^2 - 2*2^2 for 13 = 9 + 4


def test_two_squares_and_cm_examples():
    ts = two_squares(5)
    assert (ts.x, ts.y) == (1, 2)
    assert cm_coefficient(5) == -6
    assert cm_coefficient(3) == 0
    assert cm_coefficient(2) == 0
    assert cm_coefficient(13) == 10
    with pytest.raises(ValueError):
        cm_coefficient(15)
    with pytest.raises(ValueError):
        two_squares(7)


def test_cm_formula_matches_expansion_small():
    h = form_h(1000)
    for p in primes_up_to(999):
        assert h.coeffs[p] == cm_coefficient(p), p


def test_f1_leading_and_support():
    f1 = form_f1(40)
    assert f1.coeffs[1] == 1  # bracket constant term 4 - 1 + 4 - 6 = 1
    assert f1.coeffs[2] == 0
    assert f1.coeffs[5] == 258
    assert all(f1.coeffs[n] == 0 for n in range(0, 40, 2))


def test_f2_leading_support_and_238():
    f2 = form_f2(40)
    assert f2.coeffs[3] == 1
    assert f2.coeffs[7] == 238
    assert all(f2.coeffs[n] == 0 for n in range(40) if n % 4 != 3)


def test_f2_vanishes_at_primes_1_mod_4():
    f2 = form_f2(10000)
    for p in primes_up_to(9999):
        if p % 4 == 1:
            assert f2.coeffs[p] == 0, p


def test_form_f_quad_coefficients():
    f = form_f(8)
    assert f.coeffs[1] == QuadInt(1, 0)
    assert f.coeffs[3] == QuadInt(0, 8)
    conj = f.conjugate()
    assert conj.coeffs[3] == QuadInt(0, -8)


def test_form_g_values_and_even_vanishing():
    g = form_g(30)
    assert g.coeffs[1] == 1 and g.coeffs[3] == -8 and g.coeffs[5] == 258
    assert all(g.coeffs[n] == 0 for n in range(0, 30, 2))


def test_g_odd_part_is_c_series():
    from qcong.diamond import c_series

    g = form_g(101)
    c = c_series(50)
    assert g.extract_progression(2, 1).coeffs == c.coeffs


def test_registry_resolves_all_names():
    assert resolve_form("h", 10).coeffs == form_h(10).coeffs
    assert resolve_form("E4", 3).coeffs == [1, 240, 2160]
    assert resolve_form("delta_k:3", 6).coeffs == [1, 3, 8, 19, 41, 83]
    assert resolve_form("c", 3).coeffs == [1, -8, 258]
    assert resolve_form("g", 6, modulus=7).coeffs == [0, 1, 0, 6, 0, 6]
    with pytest.raises(ValueError, match="unknown form"):
        resolve_form("nope", 5)
    with pytest.raises(ValueError):
        resolve_form("f", 5, modulus=7)
