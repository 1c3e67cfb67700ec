import pytest

from oracles import naive_c, naive_delta
from qcong.diamond import (
    SuiteConfig,
    c_series,
    delta_series,
    eq_1_2_lhs,
    run_suite,
    verify_eq_1_2,
    verify_eq_1_4,
    verify_g_combination,
    verify_remark,
    verify_section_2_chain,
    verify_theorem_1_1,
    verify_theorem_1_2,
    verify_theorem_3_1,
)
from qcong.forms import form_f1, form_f2
from conftest import mutate


def test_delta_series_frozen_values():
    assert delta_series(1, 11).coeffs == [1, 3, 8, 18, 38, 75, 142, 258, 455, 780, 1308]
    assert delta_series(3, 12).coeffs == [1, 3, 8, 19, 41, 83, 161, 298, 535, 934, 1591, 2653]


def test_delta_constant_term_and_offset_cancellation():
    for k in range(1, 11):
        d = delta_series(k, 3)
        assert d.offset24 == 0
        assert d.coeffs[0] == 1


def test_delta_matches_naive_oracle():
    for k in (1, 2, 3, 5):
        T = 120
        assert delta_series(k, T).coeffs == naive_delta(k, T), k


def test_delta3_mod7_value_at_5():
    assert delta_series(3, 6, modulus=7).coeffs[5] == 6


def test_c_series_values_and_oracle():
    c = c_series(60)
    assert c.coeffs[:3] == [1, -8, 258]
    assert c.coeffs == naive_c(60)


def test_c_series_mod_matches_reduction():
    assert c_series(80, modulus=11) == c_series(80).reduce_mod(11)


def test_eq_1_2_passes_and_bound_recorded():
    rep = verify_eq_1_2(300)
    assert rep.passed and rep.modulus == 7 and rep.bound == 299


def test_eq_1_2_rejects_tiny_T():
    with pytest.raises(ValueError):
        verify_eq_1_2(5)


def test_eq_1_2_mutation_flips_to_fail():
    T = 120
    lhs = eq_1_2_lhs(T)
    delta3 = delta_series(3, 7 * (T - 1) + 6, modulus=7)
    assert verify_eq_1_2(T, lhs=lhs, delta3=delta3).passed
    for idx in (0, 57, T - 1):
        rep = verify_eq_1_2(T, lhs=mutate(lhs, idx), delta3=delta3)
        assert not rep.passed and rep.first_failure == idx


def test_eq_1_2_rejects_short_injection():
    with pytest.raises(ValueError, match="coefficients"):
        verify_eq_1_2(100, lhs=eq_1_2_lhs(50))


def test_theorem_1_1_small_depth():
    rep = verify_theorem_1_1(4)
    assert rep.passed and rep.modulus == 7


def test_section_2_chain_reduced_depth():
    reports = verify_section_2_chain(300)
    assert [r.claim for r in reports] == [
        "sec-2-chain:a", "sec-2-chain:b", "sec-2-chain:c", "sec-2-chain:d",
    ]
    assert all(r.passed for r in reports)
    # partial-depth scan is recorded as such, not as the full Sturm bound
    assert reports[2].bound == 301 - 1


def test_section_2_chain_uses_cache(tmp_path):
    from qcong.store import Cache

    cache = Cache(tmp_path)
    first = verify_section_2_chain(150, cache=cache)
    assert any(tmp_path.glob("*.qs"))
    second = verify_section_2_chain(150, cache=cache)
    assert [r.to_dict() for r in first] == [r.to_dict() for r in second]


def test_eq_1_4_passes():
    rep = verify_eq_1_4(150)
    assert rep.passed and rep.modulus == 11


def test_eq_1_4_mutation_flips_to_fail():
    T = 80
    delta5 = delta_series(5, 11 * (T - 1) + 7, modulus=11)
    c_mod = c_series(T, modulus=11)
    assert verify_eq_1_4(T, c_mod=c_mod, delta5=delta5).passed
    for idx in (0, 33, T - 1):
        rep = verify_eq_1_4(T, c_mod=mutate(c_mod, idx), delta5=delta5)
        assert not rep.passed and rep.first_failure == idx


def test_theorem_1_2_y_values():
    y5, rep5 = verify_theorem_1_2(5, 60)
    assert y5 == 258 and rep5.passed
    y13, rep13 = verify_theorem_1_2(13, 40)
    assert rep13.passed and y13 == c_series(7).coeffs[6]


def test_theorem_1_2_y_matches_f1_coefficient():
    for p in (5, 13, 17):
        y, rep = verify_theorem_1_2(p, 30)
        assert rep.passed
        assert y == form_f1(p + 1).coeffs[p]


def test_theorem_1_2_rejects_bad_prime():
    for p in (3, 4, 9):
        with pytest.raises(ValueError):
            verify_theorem_1_2(p, 10)


def test_g_combination_and_mutations():
    T = 200
    g = None
    from qcong.forms import form_g

    g = form_g(T)
    f1 = form_f1(T)
    f2 = form_f2(T)
    assert verify_g_combination(T, g=g, f1=f1, f2=f2).passed
    for idx in (1, 77, T - 1):
        rep = verify_g_combination(T, g=mutate(g, idx), f1=f1, f2=f2)
        assert not rep.passed and rep.first_failure == idx


def test_theorem_3_1_reduced():
    reports = verify_theorem_3_1(250, 13)
    assert all(r.passed for r in reports), [r.claim for r in reports if not r.passed]
    names = {r.claim for r in reports}
    assert "thm-3.1:t5-eigenvalue-258" in names
    assert "thm-3.1:t7-distinct-eigenvalues" in names


def test_theorem_3_1_insufficient_truncation():
    with pytest.raises(ValueError, match="need T >="):
        verify_theorem_3_1(100, 13)


def test_remark_small():
    assert verify_remark(5, 25).passed
    assert verify_remark(13, 8).passed
    with pytest.raises(ValueError):
        verify_remark(3, 10)


def test_run_suite_quick_ordering_and_pass(tmp_path):
    from qcong.store import Cache

    config = SuiteConfig(
        eq_1_2_T=60,
        thm_1_1_n_max=2,
        chain_T_final=60,
        eq_1_4_T=30,
        thm_1_2_primes=(5,),
        thm_1_2_T=20,
        thm_3_1_T=250,
        thm_3_1_prime_max=13,
        remark_cases=((5, 10),),
    )
    reports = run_suite(config, cache=Cache(tmp_path))
    claims = [r.claim for r in reports]
    assert claims == sorted(claims)
    assert all(r.passed for r in reports)
    assert "eq-1.2" in claims and "sec-2-chain:c" in claims


def test_delta5_at_6_mod_11():
    # n=0 case of the mod-11 identity: 8 * delta_5(6) = 8 * 7 = 56 = 1 = c(0)
    assert delta_series(5, 7, modulus=11).coeffs[6] == 7


def test_theorem_1_1_residues_come_from_b_progressions():
    # 343n + {82, 229, 278, 327} = 7*(49n + {11, 32, 39, 46}) + 5 and the
    # b-indices 21m + {5, 14, 17, 20} hit exactly those delta_3 arguments
    assert {49 * j + 33 for j in (1, 4, 5, 6)} == {82, 229, 278, 327}
    for r in (5, 14, 17, 20):
        assert r % 3 == 2  # b(3m+2) is the only populated progression
        j = (r - 2) // 3
        assert j in (1, 4, 5, 6)
