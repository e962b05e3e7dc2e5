import cmath
import math

import pytest

import holoform


def test_power_weight_conditions():
    w = holoform.WeightFun.power(0.3)
    rep = holoform.check_conditions(w, 0.5)
    assert rep.holds_11 and rep.holds_12
    assert rep.value_11 == pytest.approx(1 / 0.3, rel=1e-6)
    assert rep.value_12 == pytest.approx(1 / 0.2, rel=1e-6)
    assert holoform.eval_phi_K(w, 0.5) == pytest.approx(0.5**0.3)


def test_disc_quadrature_area():
    nodes, weights = holoform.disc_quadrature(6, 64)
    assert sum(weights) == pytest.approx(1.0, rel=1e-12)
    second = sum(w * (1 - abs(z) ** 2) for z, w in zip(nodes, weights))
    assert second == pytest.approx(0.5, rel=1e-10)


def test_mobius_involution():
    a, z = 0.3 + 0.2j, -0.4 + 0.1j
    assert holoform.mobius(a, holoform.mobius(a, z)) == pytest.approx(z)
    assert holoform.mobius_defect(a, z) == pytest.approx(1 - abs(holoform.mobius(a, z)) ** 2)


def test_series_and_fracderiv():
    f = holoform.make_function("mono:n=3", 8)
    assert f(0.5) == pytest.approx(0.125)
    d = holoform.frac_deriv_coeff(f, 1.0, 2.5)
    # integer order reproduces the ordinary derivative 3 z^2
    assert d(0.5) == pytest.approx(0.75, rel=1e-12)


def test_besov_norm_of_z():
    f = holoform.make_function("mono:n=1", 4)
    val = holoform.besov_norm(f, "p=2,s=0.5,sigma=0.4,K=power:q=0.3")
    # default rule J = 8 resolves the (1-|z|^2)^0.5 weight to about 1e-8
    assert val == pytest.approx(math.sqrt(1 / 1.5), rel=1e-6)


def test_exponential_solution():
    one = holoform.TruncSeries([-1.0])
    zero = holoform.TruncSeries([0.0])
    f = holoform.solve_ode_series([one], zero, [1.0], 20)
    assert f(0.5) == pytest.approx(cmath.exp(0.5), rel=1e-13)


def test_run_experiment_lemma25():
    ok, csv = holoform.run_experiment("verify", theorem="25", space="p=2,s=0.5,sigma=0.5,K=power:q=0.3")
    assert ok
    assert csv.splitlines()[0] == "label,params,value,refinement_delta,pass,error"
    assert len(csv.splitlines()) == 1001


def test_parse_errors_raise():
    with pytest.raises(ValueError):
        holoform.make_function("gap:beta=x")
