import math

import orlicz


def test_evaluation_and_constants():
    f = orlicz.OrliczFunction.power(2.0)
    assert f(3.0) == 9.0
    cc = f.critical_constants()
    assert cc["d"] == 0.0
    assert cc["b"] == orlicz.inf
    assert f.n_function_class() == (True, True)


def test_growth_conditions():
    assert orlicz.OrliczFunction.power(2.0).check_delta2("delta2")["holds"]
    v = orlicz.OrliczFunction.exp_minus_one().check_delta2("delta2")
    assert not v["holds"]
    assert orlicz.OrliczFunction.exp_minus_one().check_delta2("delta2_0")["holds"]


def test_norms_counting():
    f = orlicz.OrliczFunction.power(2.0)
    m = orlicz.Measure.counting()
    lux = orlicz.luxemburg_norm(f, m, values=[3.0, 4.0])
    assert abs(lux - 5.0) < 1e-9
    value, k_opt, not_attained = orlicz.amemiya_norm(f, m, values=[3.0, 4.0])
    assert abs(value - 10.0) < 1e-6
    assert not not_attained
    dual = orlicz.orlicz_norm_dual(f, m, values=[3.0, 4.0])
    assert abs(dual - value) < 1e-4


def test_norms_non_atomic():
    f = orlicz.OrliczFunction.power(2.0)
    m = orlicz.Measure.non_atomic(orlicz.inf)
    # indicator of mass 4: ||chi_E|| = 1/phi^{-1}(1/4) = 2
    lux = orlicz.luxemburg_norm(f, m, levels=[(1.0, 4.0)])
    assert abs(lux - 2.0) < 1e-9
    assert abs(orlicz.fundamental_function(f, 4.0) - 2.0) < 1e-12


def test_conjugation():
    conj, mode = orlicz.conjugate(orlicz.OrliczFunction.power(3.0))
    assert mode == "closed_form"
    assert conj.critical_constants()["b"] == orlicz.inf
    # Holder-dual exponent: v^{3/2} scaling
    assert abs(conj(4.0) / conj(1.0) - 4.0 ** 1.5) < 1e-9
    assert abs(orlicz.young_gap(orlicz.OrliczFunction.power(2.0, 0.5), 3.0, 3.0)) < 1e-9


def test_witness_and_sigma():
    f = orlicz.OrliczFunction.power(2.0)
    w = orlicz.construct_witness(f, orlicz.Measure.non_atomic(orlicz.inf))
    assert w["applicable"]
    assert abs(w["a"] - 1.0) < 1e-12
    assert abs(w["mass"] - 1.0) < 1e-12
    assert abs(orlicz.sigma_bound(f, 1.0, 5.0) - 0.5) < 1e-12


def test_classify():
    rep = orlicz.classify(orlicz.OrliczFunction.exp_minus_one(),
                          orlicz.Measure.non_atomic(orlicz.inf), "luxemburg")
    assert rep["rnp"][0] == "fails"
    assert rep["sd2p"][0] == "holds"
    rep2 = orlicz.classify(orlicz.OrliczFunction.power(2.0),
                           orlicz.Measure.non_atomic(orlicz.inf), "luxemburg")
    assert rep2["rnp"][0] == "holds"
    assert rep2["sd2p"][0] == "fails"


def test_slice_sampler_deterministic():
    f = orlicz.OrliczFunction.linear(1.0)
    kwargs = dict(dimension=4, functional=[1.0, 0.0, 0.0, 0.0], epsilon=0.05,
                  side="weak_star_slice", budget=3000, seed=7)
    a = orlicz.slice_diameter_lower_bound(f, **kwargs)
    b = orlicz.slice_diameter_lower_bound(f, **kwargs)
    assert not a["empty_slice"]
    assert a["lower_bound"] >= 1.99
    assert a["lower_bound"] == b["lower_bound"]
    assert a["best_a"] == b["best_a"]


def test_l2_slice_within_cap():
    f = orlicz.OrliczFunction.power(2.0)
    eps = 0.02
    est = orlicz.slice_diameter_lower_bound(
        f, dimension=4, functional=[1.0, 0.0, 0.0, 0.0], epsilon=eps,
        side="slice_of_ball", budget=3000, seed=7)
    cap = 2.0 * math.sqrt(2.0 * eps - eps * eps)
    assert 0.3 <= est["lower_bound"] <= cap + 1e-6
