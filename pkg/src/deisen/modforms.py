"""Eisenstein series, the discriminant form and the dimension-one eigenforms."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import List, Tuple

from .exact import ZetaPoly, divisor_sigma, zeta_symbol, zeta_tilde_even
from .qseries import QSeries

__all__ = [
    "SUPPORTED_WEIGHTS",
    "UnsupportedWeight",
    "check_weight",
    "eisenstein",
    "delta",
    "delta_coefficients",
    "eigenform",
    "eigenform_coefficients",
    "hecke_tp",
]

# even k >= 12 with dim S_k = 1
SUPPORTED_WEIGHTS = (12, 16, 18, 20, 22, 26)


class UnsupportedWeight(ValueError):
    def __init__(self, k):
        super().__init__(
            f"weight {k} is not supported; cusp space must be one-dimensional, "
            f"supported weights are {list(SUPPORTED_WEIGHTS)}"
        )
        self.weight = k


def check_weight(k: int) -> int:
    if k not in SUPPORTED_WEIGHTS:
        raise UnsupportedWeight(k)
    return k


def eisenstein(k: int, N: int) -> QSeries:
    """``G_k = zeta~(k) + (-1)^k/(k-1)! sum sigma_{k-1}(n) q^n``."""
    if k < 1:
        raise ValueError(f"eisenstein: k must be >= 1, got {k}")
    if N < 1:
        raise ValueError("eisenstein: order must be >= 1")
    c = Fraction((-1) ** k, factorial(k - 1))
    coeffs = [zeta_symbol(k)]
    coeffs += [ZetaPoly.const(c * divisor_sigma(k - 1, n)) for n in range(1, N + 1)]
    return QSeries(coeffs, N)


def _int_mul(a: List[int], b: List[int], N: int) -> List[int]:
    out = [0] * (N + 1)
    for i, x in enumerate(a[: N + 1]):
        if x:
            for j in range(N + 1 - i):
                out[i + j] += x * b[j]
    return out


@lru_cache(maxsize=None)
def delta_coefficients(N: int) -> Tuple[int, ...]:
    """``tau(0..N)`` from ``q prod (1 - q^n)^24``."""
    euler = [0] * (N + 1)
    euler[0] = 1
    for n in range(1, N + 1):
        # multiply by (1 - q^n) in place, high to low
        for i in range(N, n - 1, -1):
            euler[i] -= euler[i - n]
    e2 = _int_mul(euler, euler, N)
    e3 = _int_mul(e2, euler, N)
    e6 = _int_mul(e3, e3, N)
    e12 = _int_mul(e6, e6, N)
    e24 = _int_mul(e12, e12, N)
    return tuple([0] + e24[:N])


def delta(N: int) -> QSeries:
    if N < 1:
        raise ValueError("delta: order must be >= 1")
    return QSeries(list(delta_coefficients(N)), N)


def _normalized_eisenstein_ints(m: int, N: int) -> List[int]:
    if m == 0:
        return [1] + [0] * N
    beta = zeta_tilde_even(m)
    c = Fraction((-1) ** m, factorial(m - 1)) / beta
    out = [1]
    for n in range(1, N + 1):
        v = c * divisor_sigma(m - 1, n)
        if v.denominator != 1:
            raise ArithmeticError(f"E_{m} has non-integral coefficient {v} at q^{n}")
        out.append(int(v))
    return out


@lru_cache(maxsize=None)
def eigenform_coefficients(k: int, N: int) -> Tuple[int, ...]:
    """Integer coefficients ``a_f(0..N)`` of the normalized eigenform ``Delta * E_{k-12}``."""
    check_weight(k)
    d = list(delta_coefficients(N))
    e = _normalized_eisenstein_ints(k - 12, N)
    return tuple(_int_mul(d, e, N))


def eigenform(k: int, N: int) -> QSeries:
    return QSeries(list(eigenform_coefficients(k, N)), N)


def hecke_tp(f: QSeries, p: int, k: int, N: int) -> QSeries:
    """Hecke operator ``T_p`` on a cusp form: ``b(n) = a(pn) + p^{k-1} a(n/p)``.

    The result has order ``min(N, f.order) // p``.
    """
    if f[0]:
        raise ValueError("hecke_tp: input must be cuspidal (zero constant term)")
    M = min(N, f.order) // p
    pk = p ** (k - 1)
    out = []
    for n in range(M + 1):
        c = f[p * n]
        if n % p == 0:
            c = c + f[n // p].scale(pk)
        out.append(c)
    return QSeries(out, M)
