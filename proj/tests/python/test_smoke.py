"""Smoke tests for the python surface of the laboratory."""

import math

import numpy as np
import pytest

import gnlab


def test_grid_and_sampling():
    g = gnlab.build_grid(1, 16.0, 128)
    assert g.spacing == pytest.approx(0.125)
    f = gnlab.sample(gnlab.TestFunction.gaussian([0.0], 1.0), g)
    v = f.values
    assert v.shape == (128,)
    mid = np.argmax(np.abs(v))
    assert g.point(int(mid))[0] == pytest.approx(0.0)


def test_gaussian_l2norm_closed_form():
    g = gnlab.build_grid(1, 16.0, 128)
    f = gnlab.sample(gnlab.TestFunction.gaussian([0.0], 1.0), g)
    assert gnlab.lp_norm(f, 2.0) == pytest.approx(2.0 ** -0.25, rel=1e-6)


def test_laplacian_identity():
    g = gnlab.build_grid(1, 16.0, 256)
    f = gnlab.sample(gnlab.TestFunction.gaussian([0.0], 1.0), g)
    out = gnlab.apply_multiplier(f, "riesz", 2.0)
    x = np.array([g.point(i)[0] for i in range(g.size)])
    expected = (1.0 / (2 * math.pi) - x**2) * np.exp(-math.pi * x**2)
    err = np.linalg.norm(out.values - expected) / np.linalg.norm(expected)
    assert err < 1e-6


def test_riesz_constant_values():
    assert gnlab.riesz_constant(0.5, 1) == pytest.approx(1.0)
    assert gnlab.riesz_constant(2.0, 3).real == pytest.approx(math.pi, rel=1e-12)


def test_riesz_potential_matches_multiplier():
    g = gnlab.build_grid(1, 16.0, 256)
    tf = gnlab.corpus_functions("zero-moment", 1, 16.0)[0]
    f = gnlab.sample(tf, g)
    mult = gnlab.apply_multiplier(f, "riesz", -0.5)
    direct = gnlab.riesz_potential_direct(f, 0.5)
    c = gnlab.riesz_constant(0.5, 1)
    err = np.linalg.norm(c * direct.values - mult.values) / np.linalg.norm(mult.values)
    assert err < 0.01


def test_weights_and_checks():
    in_class = gnlab.power_apq_check(0.5, 0.5, 2, 2, 0.0, 1)
    assert in_class["in_class"]
    out_class = gnlab.power_apq_check(1.5, 1.5, 2, 2, 0.0, 1)
    assert not out_class["in_class"]
    lo, hi = gnlab.ap_range("power", 2.0, 1)
    assert (lo, hi) == (-1.0, 1.0)

    w = gnlab.Weight.power_law(0.5, 1)
    est = gnlab.estimate_apq_constant(w, w, 2, 2, 0.0)
    assert not est["diverging"]


def test_admissibility_and_verification():
    adm = gnlab.check_homogeneous(d=3, p=2, q=2, r=2, s=1, t=0, theta=1, gamma=-1)
    assert adm["admissible"]
    bad = gnlab.check_homogeneous(d=3, p=2, q=2, r=2, s=1, t=0, theta=1, gamma=1)
    assert not bad["admissible"]
    assert gnlab.scaling_exponent_gap(d=3, p=2, q=2, r=2, s=1, t=0, theta=1, gamma=-1) == \
        pytest.approx(0.0, abs=1e-12)

    rep = gnlab.verify_inequality(d=1, p=2, q=2, r=4, s=1, t=0, theta=0.25,
                                  corpus="smoke", L=16.0, N=64)
    assert rep["max_ratio"] > 0
    assert math.isfinite(rep["max_ratio"])


def test_special_functions():
    assert gnlab.gamma_modulus_sq("pure_imaginary", 1.0) == \
        pytest.approx(math.pi / math.sinh(math.pi), rel=1e-12)
    alpha, beta, bound = gnlab.multiplier_constants(2.0, 2)
    assert abs(alpha) <= bound
    z = 2j * math.pi / math.log(4.0)
    assert abs(gnlab.mellin_difference(z)) < 1e-10
    value, err = gnlab.bessel_kernel(2.0, 0.5, 1)
    assert value.real == pytest.approx(math.pi * math.exp(-2 * math.pi * 0.5), rel=1e-6)
