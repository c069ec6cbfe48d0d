"""Critical values of completed L-functions and the period coefficients q_{i,j}.

All coefficient data is kept in units of ``L*_f(k-1)``, so once the ratio
table is reconstructed everything downstream is exact rational arithmetic.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Dict, Optional, Tuple

from mpmath import mp, mpf

from .exact import binom, format_rat, parse_rat, zeta_tilde_even
from .modforms import check_weight, eigenform_coefficients

__all__ = [
    "ReconstructionFailed",
    "RatioTable",
    "CoeffVector",
    "lstar",
    "lstar_dirichlet",
    "ratio_table",
    "qcoef",
    "coeff_vector",
    "kz_check",
    "theorem_scalar",
    "DEFAULT_PREC",
    "DENOMINATOR_BOUND",
]

DEFAULT_PREC = 60
DENOMINATOR_BOUND = 10 ** 12
GUARD = 15
CACHE_ENV = "DEISEN_CACHE"


class ReconstructionFailed(ArithmeticError):
    """A ratio could not be pinned to a rational at the working precision."""


def _terms_needed(k: int, prec: int) -> int:
    # a(n) <= n^k is only a stopping heuristic
    target = -(prec + GUARD + 10) * math.log(10)
    log_fact = math.lgamma(k)
    n = 1
    while k * math.log(n) + log_fact + math.log(2 * k) - 2 * math.pi * n > target:
        n += 1
    return n


def _upper_gamma_over_power(m: int, x: mpf) -> mpf:
    """``Gamma(m, x) / x^m`` for integer ``m >= 1``, from the finite exponential sum."""
    term = mpf(1)
    acc = mpf(1)
    for j in range(1, m):
        term = term * x / j
        acc += term
    return math.factorial(m - 1) * mp.exp(-x) * acc / x ** m


def lstar(k: int, s: int, prec: int = DEFAULT_PREC) -> mpf:
    """``L*_f(s) = int_0^oo f(it) t^(s-1) dt`` for the weight-k eigenform.

    Splitting the integral at ``t = 1`` and using ``f(i/t) = (it)^k f(it)``::

        L*(s) = sum_n a(n) [Gamma(s, 2 pi n)/(2 pi n)^s + (-1)^(k/2) Gamma(k-s, 2 pi n)/(2 pi n)^(k-s)]
    """
    check_weight(k)
    if not 1 <= s <= k - 1:
        raise ValueError(f"lstar: s must lie in [1, {k - 1}], got {s}")
    if prec < 30:
        raise ValueError("lstar: prec must be >= 30 digits")
    n_max = _terms_needed(k, prec)
    a = eigenform_coefficients(k, n_max)
    sign = (-1) ** (k // 2)
    with mp.workdps(prec + GUARD):
        two_pi = 2 * mp.pi
        total = mpf(0)
        for n in range(1, n_max + 1):
            if not a[n]:
                continue
            x = two_pi * n
            total += a[n] * (
                _upper_gamma_over_power(s, x) + sign * _upper_gamma_over_power(k - s, x)
            )
        return total


def lstar_dirichlet(k: int, s: int, terms: int, prec: int = 30) -> mpf:
    """``(s-1)! (2 pi)^-s sum_{n<=terms} a(n) n^-s``: the plain Dirichlet series, slowly convergent.

    Only meaningful as an independent check at the right edge of the
    critical strip (``s = k - 1``).
    """
    a = eigenform_coefficients(k, terms)
    with mp.workdps(prec + GUARD):
        acc = mp.fsum(mpf(a[n]) / mpf(n) ** s for n in range(1, terms + 1))
        return math.factorial(s - 1) * acc / (2 * mp.pi) ** s


@dataclass(frozen=True)
class RatioTable:
    """``L*_f(s) / L*_f(k-1)`` for odd ``s``, reconstructed as exact rationals."""

    weight: int
    ratios: Dict[int, Fraction]
    precision_used: int
    residuals: Dict[int, float] = field(default_factory=dict)

    def ratio(self, s: int) -> Fraction:
        return self.ratios[s]

    def validate(self) -> None:
        k = self.weight
        if self.ratios.get(k - 1) != 1:
            raise ReconstructionFailed(f"weight {k}: ratio at s = {k - 1} is {self.ratios.get(k - 1)}, not 1")
        sign = (-1) ** (k // 2)
        for s, v in self.ratios.items():
            if v != sign * self.ratios[k - s]:
                raise ReconstructionFailed(
                    f"weight {k}: functional equation broken at s = {s}: {v} vs {self.ratios[k - s]}"
                )
        bound = 10.0 ** (-(self.precision_used / 2))
        for s, res in self.residuals.items():
            if res >= bound:
                raise ReconstructionFailed(f"weight {k}: residual {res:.3e} at s = {s} exceeds {bound:.1e}")

    def to_text(self) -> str:
        lines = [f"weight\t{self.weight}", f"prec\t{self.precision_used}"]
        for s in sorted(self.ratios):
            lines.append(f"{s}\t{format_rat(self.ratios[s])}\t{self.residuals.get(s, 0.0):.6e}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "RatioTable":
        rows = [ln.split("\t") for ln in text.strip().splitlines()]
        weight = int(rows[0][1])
        prec = int(rows[1][1])
        ratios, residuals = {}, {}
        for s, r, res in rows[2:]:
            ratios[int(s)] = parse_rat(r)
            residuals[int(s)] = float(res)
        return cls(weight, ratios, prec, residuals)


def _reconstruct(x: mpf, threshold: mpf) -> Tuple[Fraction, float]:
    exact = Fraction(0)
    if x:
        exact = Fraction(int(x.man)) * Fraction(2) ** int(x.exp)
        if x < 0:
            exact = -exact
    r = exact.limit_denominator(DENOMINATOR_BOUND)
    resid = abs(x - mpf(r.numerator) / r.denominator)
    if resid > threshold:
        raise ReconstructionFailed(
            f"no rational with denominator <= {DENOMINATOR_BOUND} within {mp.nstr(threshold, 3)} "
            f"of {mp.nstr(x, 20)} (closest {r}, residual {mp.nstr(resid, 3)})"
        )
    # rounded so cached and recomputed tables serialize identically
    return r, float(f"{float(resid):.6e}")


def _cache_path(k: int, prec: int, cache_dir) -> Optional[Path]:
    if cache_dir is None:
        cache_dir = os.environ.get(CACHE_ENV)
    if not cache_dir:
        return None
    return Path(cache_dir) / f"ratios_k{k}_p{prec}.txt"


def ratio_table(k: int, prec: int = DEFAULT_PREC, cache_dir=None) -> RatioTable:
    """Reconstruct ``L*(s)/L*(k-1)`` for all odd ``s`` in ``[1, k-1]``.

    ``cache_dir`` (or the ``DEISEN_CACHE`` environment variable) enables a
    text cache keyed by weight and precision.
    """
    check_weight(k)
    if prec < 40:
        raise ValueError("ratio_table: prec must be >= 40 digits")
    path = _cache_path(k, prec, cache_dir)
    if path is not None and path.exists():
        table = RatioTable.from_text(path.read_text())
        table.validate()
        return table
    table = _compute_ratio_table(k, prec)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(table.to_text())
    return table


@lru_cache(maxsize=None)
def _compute_ratio_table(k: int, prec: int) -> RatioTable:
    threshold_digits = max(30, prec // 2)
    ratios, residuals = {}, {}
    with mp.workdps(prec + GUARD):
        top = lstar(k, k - 1, prec)
        threshold = mpf(10) ** (-threshold_digits)
        for s in range(1, k, 2):
            ratios[s], residuals[s] = _reconstruct(lstar(k, s, prec) / top, threshold)
    table = RatioTable(k, ratios, prec, residuals)
    table.validate()
    return table


def qcoef(i: int, j: int, table: RatioTable) -> Fraction:
    """``q_{i,j}(f) / L*_f(k-1) = sum_{s odd} (-1)^((s-1)/2) ratio(s) C(i-1, s-1)``."""
    k = table.weight
    if i < 1 or j < 1 or i + j != k:
        raise ValueError(f"qcoef: need i, j >= 1 with i + j = {k}, got ({i}, {j})")
    total = Fraction(0)
    for s in range(1, k, 2):
        b = binom(i - 1, s - 1)
        if b:
            total += (-1) ** ((s - 1) // 2) * table.ratio(s) * b
    return total


@dataclass(frozen=True)
class CoeffVector:
    weight: int
    entries: Dict[Tuple[int, int], Fraction]
    integer_scale: int
    scaled_entries: Dict[Tuple[int, int], int]

    def pairs(self):
        return sorted(self.entries)


def odd_pairs(k: int):
    return [(r, k - r) for r in range(1, k, 2)]


def even_pairs(k: int):
    return [(r, k - r) for r in range(2, k - 1, 2)]


def coeff_vector(k: int, table: RatioTable) -> CoeffVector:
    if table.weight != k:
        raise ValueError(f"coeff_vector: table is for weight {table.weight}, not {k}")
    entries = {(r, s): qcoef(r, s, table) for r, s in odd_pairs(k)}
    scale = 1
    for v in entries.values():
        scale = scale * v.denominator // math.gcd(scale, v.denominator)
    scaled = {p: int(v * scale) for p, v in entries.items()}
    return CoeffVector(k, entries, scale, scaled)


def kz_check(k: int, table: RatioTable) -> Fraction:
    """Left-hand side of the Kohnen-Zagier relation in units of ``L*(k-1)``; zero for a valid table."""
    bk = zeta_tilde_even(k)
    total = Fraction(0)
    for r, s in even_pairs(k):
        total += qcoef(r, s, table) * (zeta_tilde_even(r) * zeta_tilde_even(s) / bk + 1)
    for r, s in odd_pairs(k):
        total += qcoef(r, s, table)
    return total


def theorem_scalar(k: int) -> Fraction:
    """``(-1)^(k/2) / (4 (k-2)!)``: the eigenform's multiplier in units of ``L*(k-1)``."""
    check_weight(k)
    return Fraction((-1) ** (k // 2), 4 * math.factorial(k - 2))
