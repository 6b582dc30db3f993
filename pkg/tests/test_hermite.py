import math

import numpy as np
import pytest

from gausskern.hermite import (
    HermiteRule,
    hermite_eval,
    hermite_function,
    hermite_rule,
    read_rule_cache,
    write_rule_cache,
)

# [DERIVED] numpy.polynomial.hermite.hermgauss(5), frozen
HERMGAUSS5_X = np.array([
    -2.0201828704560856, -0.95857246461381851, 0.0,
    0.95857246461381851, 2.0201828704560856,
])
HERMGAUSS5_W = np.array([
    0.019953242059045917, 0.39361932315224107, 0.94530872048294179,
    0.39361932315224107, 0.019953242059045917,
])


def test_rule_matches_hermgauss_oracle():
    rule = hermite_rule(5)
    # package convention is descending zeros, hermgauss is ascending
    assert np.allclose(rule.zeros[::-1], HERMGAUSS5_X, rtol=0, atol=1e-14)
    assert np.allclose(rule.weights[::-1], HERMGAUSS5_W, rtol=1e-14, atol=0)


def test_hermite_eval_recurrence_values():
    # [TRIVIAL] H_0 = 1, H_1 = 2t, H_2 = 4t^2 - 2, H_3 = 8t^3 - 12t
    t = 0.7
    assert hermite_eval(0, t) == 1.0
    assert hermite_eval(1, t) == 2 * t
    assert hermite_eval(2, t) == pytest.approx(4 * t * t - 2, rel=1e-15)
    assert hermite_eval(3, t) == pytest.approx(8 * t ** 3 - 12 * t, rel=1e-15)


def test_hermite_function_normalization():
    # int psi_n^2 = 1, checked with the rule itself at higher degree
    rule = hermite_rule(40)
    for n in (0, 3, 10):
        vals = np.array([hermite_function(n, t) for t in rule.zeros])
        # psi_n^2 e^{t^2} integrated against w e^{t^2} = scaled weights
        total = np.sum(rule.scaled_weights * vals ** 2)
        assert total == pytest.approx(1.0, rel=1e-12)


def test_weight_sum_is_sqrt_pi():
    for N in (1, 2, 7, 16, 30):
        rule = hermite_rule(N)
        assert math.fsum(rule.weights) == pytest.approx(
            math.sqrt(math.pi), rel=1e-13)


def test_zero_symmetry_exact():
    for N in (4, 9, 20):
        rule = hermite_rule(N)
        assert np.all(rule.zeros == -rule.zeros[::-1])
        assert np.all(rule.weights == rule.weights[::-1])


def test_zero_sum_identity():
    # sum over positive zeros of t_k^2 equals N(N-1)/4
    for N in (5, 12, 25):
        rule = hermite_rule(N)
        total = math.fsum(rule.zeros ** 2) / 2.0
        assert total == pytest.approx(N * (N - 1) / 4.0, rel=1e-12)


def test_scaled_weights_consistency():
    rule = hermite_rule(12)
    assert np.allclose(rule.scaled_weights,
                       rule.weights * np.exp(rule.zeros ** 2), rtol=1e-12)


def test_quadrature_exactness_gaussian():
    # int e^{-2t^2} dt = sqrt(pi/2); integrand e^{-t^2} against weight
    rule = hermite_rule(25)
    got = np.sum(rule.weights * np.exp(-rule.zeros ** 2))
    assert got == pytest.approx(math.sqrt(math.pi / 2), rel=1e-10)


def test_rule_cache_roundtrip(tmp_path):
    path = tmp_path / "rules.txt"
    rules = [hermite_rule(N) for N in (3, 8)]
    write_rule_cache(str(path), rules)
    back = read_rule_cache(str(path))
    assert sorted(back) == [3, 8]
    for N in (3, 8):
        orig, re = rules[0] if N == 3 else rules[1], back[N]
        assert isinstance(re, HermiteRule)
        assert np.allclose(re.zeros, orig.zeros, rtol=0, atol=1e-15)
        assert np.allclose(re.weights, orig.weights, rtol=1e-14, atol=0)


def test_degree_validation():
    with pytest.raises(ValueError):
        hermite_rule(0)
    with pytest.raises(ValueError):
        hermite_rule(-3)
