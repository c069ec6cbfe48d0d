"""Double Eisenstein series as q-series over the zeta-symbol ring.

Building blocks, for integers ``h, r, s >= 1`` and ``m >= 0``::

    g_h     = (-1)^h/(h-1)!           sum_{c,d>0}              c^(h-1)             q^(cd)
    g*_m    = (-1)^m/m!               sum_{c,d>0}              d c^m               q^(dc)
    g_{r,s} = (-1)^(r+s)/(r-1)!(s-1)! sum_{0<d1<d2, c1,c2>0}   c1^(r-1) c2^(s-1)   q^(c1 d1 + c2 d2)

and the double Eisenstein series

    G_{r,s} = zeta~(r,s) + sum_{h+p=r+s} C^p_{r,s} g_h zeta~(p) + g_{r,s} + eps/2.
"""
from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, List, Tuple

from .exact import ZetaPoly, binom, divisors, dzeta_symbol, zeta_symbol
from .modforms import eisenstein
from .qseries import QSeries, linear_combination

__all__ = [
    "ccoef",
    "g",
    "gstar",
    "gdouble",
    "epsilon",
    "double_eisenstein",
    "double_eisenstein_parts",
    "g_half",
    "p_series",
]


def ccoef(r: int, s: int, p: int) -> int:
    """``C^p_{r,s} = delta_{r,p} + (-1)^r C(p-1, r-1) + (-1)^(p-s) C(p-1, s-1)``."""
    return (
        (1 if r == p else 0)
        + (-1) ** r * binom(p - 1, r - 1)
        + (-1) ** ((p - s) % 2) * binom(p - 1, s - 1)
    )


def _rational_series(values: List[Fraction], N: int) -> QSeries:
    return QSeries([ZetaPoly.const(v) for v in values], N)


@lru_cache(maxsize=None)
def g(h: int, N: int) -> QSeries:
    if h < 1:
        raise ValueError(f"g: h must be >= 1, got {h}")
    c = Fraction((-1) ** h, factorial(h - 1))
    vals = [Fraction(0)] + [c * sum(d ** (h - 1) for d in divisors(n)) for n in range(1, N + 1)]
    return _rational_series(vals, N)


@lru_cache(maxsize=None)
def gstar(m: int, N: int) -> QSeries:
    if m < 0:
        raise ValueError(f"gstar: m must be >= 0, got {m}")
    c = Fraction((-1) ** m, factorial(m))
    vals = [Fraction(0)]
    for n in range(1, N + 1):
        vals.append(c * sum((n // cc) * cc ** m for cc in divisors(n)))
    return _rational_series(vals, N)


@lru_cache(maxsize=None)
def _gdouble_tuples(N: int) -> Dict[int, List[Tuple[int, int]]]:
    """``n -> [(c1, c2), ...]`` over all ``0<d1<d2``, ``c1, c2 > 0`` with ``c1 d1 + c2 d2 = n``."""
    table: Dict[int, List[Tuple[int, int]]] = defaultdict(list)
    for n in range(3, N + 1):
        d1 = 1
        while d1 * 1 + (d1 + 1) <= n:
            c1 = 1
            while c1 * d1 < n:
                m = n - c1 * d1
                for d2 in divisors(m):
                    if d2 > d1:
                        table[n].append((c1, m // d2))
                c1 += 1
            d1 += 1
    return dict(table)


@lru_cache(maxsize=None)
def gdouble(r: int, s: int, N: int) -> QSeries:
    if r < 1 or s < 1:
        raise ValueError(f"gdouble: need r, s >= 1, got ({r}, {s})")
    c = Fraction((-1) ** (r + s), factorial(r - 1) * factorial(s - 1))
    tuples = _gdouble_tuples(N)
    vals = [Fraction(0)] * (N + 1)
    for n, pairs in tuples.items():
        vals[n] = c * sum(c1 ** (r - 1) * c2 ** (s - 1) for c1, c2 in pairs)
    return _rational_series(vals, N)


@lru_cache(maxsize=None)
def epsilon(r: int, s: int, N: int) -> QSeries:
    """``delta_{s,2} g*_r - delta_{s,1} g*_{r-1} + delta_{r,1}(g*_{s-1} + g_r) + delta_{r,1} delta_{s,1} g_2``.

    The indices are read in the order written above.  :func:`double_eisenstein`
    adjusts the ``delta_{r,1}`` summand before using it.
    """
    if r < 1 or s < 1:
        raise ValueError(f"epsilon: need r, s >= 1, got ({r}, {s})")
    terms = []
    if s == 2:
        terms.append((1, gstar(r, N)))
    if s == 1:
        terms.append((-1, gstar(r - 1, N)))
    if r == 1:
        terms.append((1, gstar(s - 1, N)))
        terms.append((1, g(r, N)))
    if r == 1 and s == 1:
        terms.append((1, g(2, N)))
    return linear_combination(terms, N)


def _eps_for(r: int, s: int, N: int) -> QSeries:
    # The correction entering G_{r,s}: epsilon(r, s) with its delta_{r,1}
    # summand taken as g*_{s-1} + g_s rather than g*_{s-1} + g_1.  Only this
    # reading makes both double shuffle equalities hold coefficient-wise; the
    # literal one is off by (g_{r+s-1} - g_1)/2 on every G_{1,s}.
    e = epsilon(r, s, N)
    if r == 1:
        e = e + g(s, N) - g(1, N)
    return e


def double_eisenstein_parts(r: int, s: int, N: int) -> Tuple[QSeries, QSeries, QSeries, QSeries]:
    """The four summands of ``G_{r,s}``: constant, single-zeta part, ``g_{r,s}``, ``eps/2``."""
    if r < 1 or s < 1:
        raise ValueError(f"double_eisenstein: need r, s >= 1, got ({r}, {s})")
    k = r + s
    const = QSeries([dzeta_symbol(r, s)], N)
    single = linear_combination(
        ((zeta_symbol(p).scale(ccoef(r, s, p)), g(k - p, N)) for p in range(1, k)), N
    )
    return const, single, gdouble(r, s, N), _eps_for(r, s, N).scale(Fraction(1, 2))


@lru_cache(maxsize=None)
def double_eisenstein(r: int, s: int, N: int) -> QSeries:
    const, single, gd, eps = double_eisenstein_parts(r, s, N)
    return const + single + gd + eps


@lru_cache(maxsize=None)
def g_half(r: int, s: int, N: int) -> QSeries:
    """``G_{r,s} + G_{r+s} / 2``."""
    return double_eisenstein(r, s, N) + eisenstein(r + s, N).scale(Fraction(1, 2))


@lru_cache(maxsize=None)
def p_series(r: int, s: int, N: int) -> QSeries:
    """``G_r G_s + (delta_{r,2} + delta_{s,2}) G'_{r+s-2} / (2(r+s-2))``."""
    if r < 1 or s < 1 or r + s < 3:
        raise ValueError(f"p_series: need r, s >= 1 and r + s >= 3, got ({r}, {s})")
    out = eisenstein(r, N) * eisenstein(s, N)
    n_two = (r == 2) + (s == 2)
    if n_two:
        k2 = r + s - 2
        out = out + eisenstein(k2, N).qderiv().scale(Fraction(n_two, 2 * k2))
    return out
