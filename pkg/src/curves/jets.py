"""
Truncated Taylor-jet arithmetic.

Derivatives of products, compositions and exponentials are obtained by
multiplying and composing truncated Taylor polynomials instead of spelling
out Leibniz and Faa di Bruno formulas.
"""
from math import factorial

import numpy as np
from numpy.polynomial import polynomial as P
from scipy.special import comb


def _factorials(m: int) -> np.ndarray:
    return np.array([float(factorial(j)) for j in range(m + 1)])


def compose_derivatives(outer: np.ndarray, inner: np.ndarray) -> np.ndarray:
    """
    Derivatives of f(g(t)) at one time t.

    Args:
        outer: (m+1, d) array with f^(k)(g(t)) for k = 0..m
        inner: (m+1,) array with g^(j)(t) for j = 0..m (scalar g)

    Returns:
        np.ndarray: (m+1, d) array with (f o g)^(k)(t)
    """
    outer = np.atleast_2d(np.asarray(outer, dtype=float))
    inner = np.asarray(inner, dtype=float)
    m = inner.size - 1
    fact = _factorials(m)
    shift = inner / fact
    shift[0] = 0.0

    result = np.zeros((m + 1, outer.shape[1]))
    power = np.zeros(m + 1)
    power[0] = 1.0
    for k in range(m + 1):
        result += (outer[k] / fact[k])[None, :] * power[:, None]
        power = P.polymul(power, shift)[: m + 1]
        if power.size < m + 1:
            power = np.pad(power, (0, m + 1 - power.size))
    return result * fact[:, None]


def product_derivatives(scalar: np.ndarray, vector: np.ndarray) -> np.ndarray:
    """
    Leibniz rule for a(t) * b(t) with scalar a and vector b.

    Args:
        scalar: (m+1,) derivatives of a
        vector: (m+1, d) derivatives of b

    Returns:
        np.ndarray: (m+1, d) derivatives of the product
    """
    scalar = np.asarray(scalar, dtype=float)
    vector = np.atleast_2d(np.asarray(vector, dtype=float))
    m = scalar.size - 1
    result = np.zeros_like(vector)
    for n in range(m + 1):
        for k in range(n + 1):
            result[n] += comb(n, k, exact=True) * scalar[k] * vector[n - k]
    return result


def exp_derivatives(f_derivs: np.ndarray) -> np.ndarray:
    """
    Derivatives of exp(f) from derivatives of f, vectorized over times.

    Uses g' = f' g, hence g^(m+1) = sum_j C(m, j) f^(j+1) g^(m-j).

    Args:
        f_derivs: (m+1, n) array with f^(j) at n times

    Returns:
        np.ndarray: (m+1, n) array with (exp f)^(j)
    """
    f_derivs = np.asarray(f_derivs, dtype=float)
    m = f_derivs.shape[0] - 1
    g = np.zeros_like(f_derivs)
    with np.errstate(over="ignore", invalid="ignore", under="ignore"):
        g[0] = np.exp(f_derivs[0])
        for order in range(m):
            acc = np.zeros_like(g[0])
            for j in range(order + 1):
                term = comb(order, j, exact=True) * f_derivs[j + 1] * g[order - j]
                acc += np.where(g[order - j] == 0.0, 0.0, term)
            g[order + 1] = acc
    return np.nan_to_num(g, nan=0.0, posinf=0.0, neginf=0.0)
