import math

import numpy as np
import pytest

from fockideal.quadrature import QuadratureError, converge, gauss_hermite, gauss_legendre, radial_tensor_sum


def test_rules_integrate_polynomials_exactly():
    x, w = gauss_legendre(5)
    assert np.isclose(np.sum(w * x**8), 2 / 9)
    x, w = gauss_hermite(6)
    assert np.isclose(np.sum(w * x**4), 0.75 * math.sqrt(math.pi))


@pytest.mark.parametrize("d", [1, 2, 4])
def test_radial_tensor_sum_matches_direct_tensor_rule(d):
    rng = np.random.default_rng(d)
    coeffs = rng.uniform(0, 1, 4)
    x, w = gauss_legendre(4)
    grids = np.meshgrid(*([x] * d), indexing="ij")
    weights = np.prod(np.meshgrid(*([w] * d), indexing="ij"), axis=0)
    s = sum(g**2 for g in grids)
    direct = np.sum(weights * np.polynomial.polynomial.polyval(s, coeffs))
    moments = np.array([[np.sum(w * x ** (2 * j)) for j in range(4)]] * d)
    assert np.isclose(radial_tensor_sum(moments, coeffs), direct, rtol=1e-13)


def test_converge_returns_on_agreement():
    val, err = converge(lambda m: np.array([1.0 + 2.0**-m]), 4, rtol=1e-6)
    assert abs(val[0] - 1) < 1e-6 and err[0] < 1e-6


def test_converge_raises_when_order_exhausted():
    with pytest.raises(QuadratureError):
        converge(lambda m: np.array([float(m)]), 2, max_order=64)
