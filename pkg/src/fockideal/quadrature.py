"""Gauss rules and the order-doubling driver used for density symbols."""

from __future__ import annotations

from functools import lru_cache
import math

import numpy as np

__all__ = [
    "QuadratureError",
    "converge",
    "gauss_hermite",
    "gauss_legendre",
    "radial_tensor_sum",
]


class QuadratureError(RuntimeError):
    """Raised when order doubling fails to reach the requested agreement."""


@lru_cache(maxsize=None)
def gauss_legendre(m: int):
    x, w = np.polynomial.legendre.leggauss(m)
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


@lru_cache(maxsize=None)
def gauss_hermite(m: int):
    x, w = np.polynomial.hermite.hermgauss(m)
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


def radial_tensor_sum(moments: np.ndarray, coeffs) -> np.ndarray:
    """Tensor-rule value of ``sum_k c_k (x_1^2 + ... + x_d^2)^k`` from 1-D moments.

    ``moments[..., i, j]`` is the 1-D rule applied to ``x_i^(2j)`` (times whatever
    weight the rule carries) for coordinate ``i``. The multinomial expansion of
    ``(sum x_i^2)^k`` turns the d-dimensional tensor rule into a product of
    exponential generating functions, ``k! [t^k] prod_i sum_j m_ij t^j / j!``.
    """
    coeffs = np.asarray(coeffs, dtype=float)
    kmax = coeffs.size - 1
    fact = np.array([math.factorial(j) for j in range(kmax + 1)], dtype=float)
    egf = moments[..., : kmax + 1] / fact
    prod = egf[..., 0, :]
    for i in range(1, egf.shape[-2]):
        nxt = egf[..., i, :]
        out = np.zeros_like(prod)
        for a in range(kmax + 1):
            out[..., a:] += prod[..., a : a + 1] * nxt[..., : kmax + 1 - a]
        prod = out
    return (prod * fact * coeffs).sum(axis=-1)


def converge(rule, order: int, rtol: float = 1e-9, max_order: int = 4096, atol: float = 0.0):
    """Double ``order`` until ``rule(order)`` and ``rule(2*order)`` agree.

    ``rule`` maps an order to an array of values. Returns ``(values, error)``
    where ``error`` is the last observed absolute change, entrywise.

    Raises
    ------
    QuadratureError
        When ``max_order`` is reached without agreement.
    """
    order = max(int(order), 1)
    prev = np.asarray(rule(order), dtype=float)
    while 2 * order <= max_order:
        order *= 2
        cur = np.asarray(rule(order), dtype=float)
        delta = np.abs(cur - prev)
        if np.all(delta <= rtol * np.abs(cur) + atol):
            return cur, delta
        prev = cur
    raise QuadratureError(f"quadrature did not converge to rtol={rtol} by order {max_order}")
