"""High-precision single and double zeta values.

Values are :mod:`mpmath` numbers (``mpf`` for real quantities, ``mpc`` for the
``(2 pi i)``-normalized ones).  ``prec`` is always in decimal digits; every
function works internally with a fixed guard on top of it.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import mpmath
from mpmath import mp, mpc, mpf

from .exact import ZetaPoly, bernoulli

__all__ = [
    "OddWeightSymbol",
    "hp_zeta",
    "hp_hurwitz",
    "hp_dzeta",
    "hp_zeta_tilde",
    "hp_dzeta_tilde",
    "eval_zeta_poly",
]

GUARD = 15


class OddWeightSymbol(ValueError):
    pass


def _to_mpf(a) -> mpf:
    if isinstance(a, Fraction):
        return mpf(a.numerator) / a.denominator
    return mpf(a)


def _em_coefficients(s: int):
    """Yield ``B_{2j}/(2j)! * s(s+1)...(s+2j-2)`` for j = 1, 2, ... as exact rationals."""
    j = 1
    rising = Fraction(s)  # (s)_{1}
    while True:
        yield bernoulli(2 * j) / math.factorial(2 * j) * rising
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        j += 1


def _shift_point(prec: int, s: int) -> int:
    # Euler-Maclaurin terms bottom out near exp(-2 pi x) once x >> s; this x
    # clears 10^-(prec+GUARD) with room for the rising factorial in s.
    return int((prec + GUARD) * math.log(10) / (2 * math.pi)) + 10 + s


def _hurwitz_em(s: int, x: mpf, eps: mpf) -> mpf:
    """Euler-Maclaurin tail ``sum_{j>=0} (x+j)^-s`` for large ``x``."""
    total = x ** (1 - s) / (s - 1) + x ** (-s) / 2
    x2inv = 1 / (x * x)
    xpow = x ** (-s - 1)
    prev = None
    for c in _em_coefficients(s):
        term = _to_mpf(c) * xpow
        total += term
        if abs(term) < eps * abs(total):
            return total
        if prev is not None and abs(term) > abs(prev):
            raise ArithmeticError("Euler-Maclaurin series diverged before reaching precision")
        prev = term
        xpow *= x2inv


def hp_hurwitz(s: int, a, prec: int) -> mpf:
    """Hurwitz zeta ``sum_{j>=0} (a+j)^-s`` for integer ``s >= 2`` and real ``a > 0``."""
    if s < 2:
        raise ValueError(f"hp_hurwitz: s must be >= 2, got {s}")
    with mp.workdps(prec + GUARD):
        a = _to_mpf(a)
        if a <= 0:
            raise ValueError("hp_hurwitz: a must be positive")
        X = _shift_point(prec, s)
        M = max(0, int(math.ceil(X - float(a))))
        head = mpmath.fsum((a + j) ** (-s) for j in range(M))
        eps = mpf(10) ** (-(prec + GUARD))
        return head + _hurwitz_em(s, a + M, eps)


@lru_cache(maxsize=None)
def hp_zeta(s: int, prec: int) -> mpf:
    if s < 2:
        raise ValueError(f"hp_zeta: s must be >= 2, got {s}")
    return hp_hurwitz(s, 1, prec)


@lru_cache(maxsize=None)
def hp_dzeta(r: int, s: int, prec: int) -> mpf:
    """``zeta(r, s) = sum_{0<n<m} n^-r m^-s`` for ``r >= 1``, ``s >= 2``.

    Direct outer sum up to ``N`` with inner tails ``zeta(s) - H_n^(s)``; the
    outer tail ``sum_{n>N} n^-r zeta(s, n+1)`` is expanded with the
    Euler-Maclaurin series of ``zeta(s, n+1)`` in powers of ``1/n`` and summed
    term by term as Hurwitz values at ``N + 1``.
    """
    if r < 1 or s < 2:
        raise ValueError(f"hp_dzeta: need r >= 1 and s >= 2, got ({r}, {s})")
    w = r + s
    N = _shift_point(prec, s)
    with mp.workdps(prec + GUARD):
        eps = mpf(10) ** (-(prec + GUARD))
        zs = hp_zeta(s, prec + GUARD)
        head = mpf(0)
        partial = mpf(0)
        for n in range(1, N + 1):
            nn = mpf(n)
            partial += nn ** (-s)
            head += nn ** (-r) * (zs - partial)
        a = N + 1
        tail = hp_hurwitz(w - 1, a, prec) / (s - 1) - hp_hurwitz(w, a, prec) / 2
        prev = None
        for j, c in enumerate(_em_coefficients(s), start=1):
            term = _to_mpf(c) * hp_hurwitz(w + 2 * j - 1, a, prec)
            tail += term
            if abs(term) < eps * abs(head):
                break
            if prev is not None and abs(term) > abs(prev):
                raise ArithmeticError("hp_dzeta: tail expansion diverged")
            prev = term
        return head + tail


def _two_pi_i_power(w: int) -> mpc:
    return (2 * mp.pi * mpc(0, 1)) ** w


@lru_cache(maxsize=None)
def hp_zeta_tilde(k: int, prec: int) -> mpc:
    """``zeta(k) / (2 pi i)^k``, with ``zeta~(1) = 0``."""
    if k < 1:
        raise ValueError(f"hp_zeta_tilde: k must be >= 1, got {k}")
    with mp.workdps(prec + GUARD):
        if k == 1:
            return mpc(0)
        return hp_zeta(k, prec) / _two_pi_i_power(k)


@lru_cache(maxsize=None)
def hp_dzeta_tilde(r: int, s: int, prec: int) -> mpc:
    """``zeta(r, s) / (2 pi i)^(r+s)``, regularized for ``s = 1`` like the exact symbols."""
    if r < 1 or s < 1:
        raise ValueError(f"hp_dzeta_tilde: need r, s >= 1, got ({r}, {s})")
    with mp.workdps(prec + GUARD):
        if s >= 2:
            return hp_dzeta(r, s, prec) / _two_pi_i_power(r + s)
        if r == 1:
            return -hp_zeta_tilde(2, prec) / 2
        return -hp_dzeta_tilde(1, r, prec) - hp_zeta_tilde(r + 1, prec)


def _generator_value(gen, prec: int) -> mpc:
    if gen[0] == "z":
        return hp_zeta_tilde(gen[1], prec)
    r, s = gen[1], gen[2]
    if (r + s) % 2:
        raise OddWeightSymbol(f"D{{{r},{s}}} has odd weight; no evaluation convention is fixed")
    return hp_dzeta_tilde(r, s, prec)


def eval_zeta_poly(x, prec: int) -> mpc:
    """Substitute numeric values for every ``z_p`` and ``D_{r,s}`` in ``x``."""
    x = ZetaPoly.coerce(x)
    with mp.workdps(prec + GUARD):
        total = mpc(0)
        for mono, c in x.items():
            v = mpc(_to_mpf(c))
            for gen in mono:
                v *= _generator_value(gen, prec)
            total += v
    return total
