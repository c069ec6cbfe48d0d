"""End-to-end checks of the eigenform decomposition and the identities around it.

Every ``verify_*`` function returns a :class:`VerifyReport`.  Non-constant
q-coefficients are compared exactly in the zeta-symbol ring; constant terms
involve double zeta symbols, which satisfy relations the free ring does not
know about, so they are evaluated numerically.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from mpmath import mp, mpf

from .deisenstein import double_eisenstein, g_half, p_series
from .exact import ZetaPoly, bernoulli, binom, format_rat, prime_factors, zeta_tilde_even
from .lfunc import (
    DEFAULT_PREC,
    RatioTable,
    coeff_vector,
    even_pairs,
    kz_check,
    odd_pairs,
    qcoef,
    ratio_table,
    theorem_scalar,
)
from .modforms import SUPPORTED_WEIGHTS, check_weight, eigenform, eisenstein
from .mzv import eval_zeta_poly, hp_dzeta_tilde, hp_zeta_tilde
from .qseries import QSeries, linear_combination

__all__ = [
    "VerifyReport",
    "ConfigurationError",
    "DEFAULT_ORDER",
    "DEFAULT_TOLERANCE",
    "verify_theorem_main",
    "verify_double_shuffle",
    "verify_gkz_theorem3",
    "verify_popa",
    "verify_kz",
    "verify_corollary",
    "verify_congruence",
    "verify_independence",
    "verify_all",
    "decompose",
    "Decomposition",
    "qualifying_primes",
]

DEFAULT_ORDER = 40
DEFAULT_TOLERANCE = 1e-25
MAX_DETAILS = 8


class ConfigurationError(ValueError):
    """The requested tolerance is finer than the working precision can resolve."""


@dataclass
class VerifyReport:
    check_name: str
    weight: int
    order: Optional[int]
    prec: Optional[int]
    symbolic_ok: bool = True
    numeric_residuals: List[Tuple[str, float]] = field(default_factory=list)
    tolerance: float = DEFAULT_TOLERANCE
    details: List[str] = field(default_factory=list)
    info: Dict[str, object] = field(default_factory=dict)
    skipped: bool = False

    @property
    def verdict(self) -> str:
        if self.skipped:
            return "SKIP"
        if self.symbolic_ok and all(m < self.tolerance for _, m in self.numeric_residuals):
            return "PASS"
        return "FAIL"

    @property
    def passed(self) -> bool:
        return self.verdict == "PASS"

    def to_json(self) -> str:
        rec = {
            "check": self.check_name,
            "weight": self.weight,
            "order": self.order,
            "prec": self.prec,
            "verdict": self.verdict,
            "residuals": [{"label": lab, "magnitude": mag} for lab, mag in self.numeric_residuals],
            "details": list(self.details),
        }
        if self.info:
            rec["info"] = self.info
        return json.dumps(rec, sort_keys=False)

    def to_text(self) -> str:
        head = f"[{self.verdict}] {self.check_name} k={self.weight}"
        if self.order is not None:
            head += f" N={self.order}"
        if self.prec is not None:
            head += f" prec={self.prec}"
        lines = [head]
        if self.numeric_residuals:
            worst = max(self.numeric_residuals, key=lambda x: x[1])
            lines.append(
                f"  {len(self.numeric_residuals)} numeric residuals, max {worst[1]:.3e} ({worst[0]}),"
                f" tolerance {self.tolerance:.0e}"
            )
        for key, val in self.info.items():
            lines.append(f"  {key}: {val}")
        for d in self.details:
            lines.append(f"  ! {d}")
        return "\n".join(lines)


def _check_tolerance(prec: int, tolerance: float) -> None:
    floor = 10.0 ** (-(prec - 10))
    if tolerance < floor:
        raise ConfigurationError(
            f"tolerance {tolerance:.1e} is below the resolvable floor {floor:.1e} at prec={prec}"
        )


def _numeric_zero(label: str, x: ZetaPoly, prec: int) -> List[Tuple[str, float]]:
    """Absolute and relative residuals of a constant that should vanish.

    The relative residual divides by the summed magnitude of the individual
    terms, which matters because normalized zeta values are tiny at high
    weight.
    """
    val = eval_zeta_poly(x, prec)
    with mp.workdps(prec):
        scale = mpf(0)
        for mono, c in x.items():
            scale += abs(eval_zeta_poly(ZetaPoly({mono: c}), prec))
        rel = abs(val) / scale if scale else abs(val)
    return [
        (f"{label}.re", float(abs(val.real))),
        (f"{label}.im", float(abs(val.imag))),
        (f"{label}.rel", float(rel)),
    ]


def _exact_mismatches(label: str, lhs: QSeries, rhs: QSeries, N: int) -> List[str]:
    out = []
    for n in range(1, N + 1):
        d = lhs[n] - rhs[n]
        if d:
            sym = d.symbolic_part()
            if sym:
                out.append(f"{label} q^{n}: symbolic residue {sym}")
            else:
                out.append(
                    f"{label} q^{n}: rational part {format_rat(lhs[n].constant())} "
                    f"!= {format_rat(rhs[n].constant())}"
                )
    return out


def _absorb(report: VerifyReport, label: str, lhs: QSeries, rhs: QSeries, N: int, prec: int) -> None:
    bad = _exact_mismatches(label, lhs, rhs, N)
    if bad:
        report.symbolic_ok = False
        room = MAX_DETAILS - len(report.details)
        if room > 0:
            report.details.extend(bad[:room])
    report.numeric_residuals.extend(_numeric_zero(f"{label}:const", lhs[0] - rhs[0], prec))


def _finish(report: VerifyReport) -> VerifyReport:
    if report.verdict == "FAIL" and not report.details:
        worst = max(report.numeric_residuals, key=lambda x: x[1])
        report.details.append(f"numeric residual {worst[0]} = {worst[1]:.3e} exceeds {report.tolerance:.0e}")
    return report


def _table(k: int, prec: int, table: Optional[RatioTable], cache_dir=None) -> RatioTable:
    if table is not None:
        if table.weight != k:
            raise ValueError(f"ratio table is for weight {table.weight}, not {k}")
        return table
    return ratio_table(k, prec, cache_dir=cache_dir)


def _all_qcoefs(k: int, table: RatioTable) -> Dict[Tuple[int, int], Fraction]:
    return {(r, k - r): qcoef(r, k - r, table) for r in range(1, k)}


# -- the main identity -----------------------------------------------------

def verify_theorem_main(
    k: int,
    N: int = DEFAULT_ORDER,
    prec: int = DEFAULT_PREC,
    tolerance: float = DEFAULT_TOLERANCE,
    table: Optional[RatioTable] = None,
    cache_dir=None,
) -> VerifyReport:
    """``sum_{odd} q_{r,s} G^{1/2}_{r,s} == (-1)^(k/2) L*(k-1) / (4 (k-2)!) * f``."""
    check_weight(k)
    _check_tolerance(prec, tolerance)
    cv = coeff_vector(k, _table(k, prec, table, cache_dir))
    lhs = linear_combination(((v, g_half(r, s, N)) for (r, s), v in cv.entries.items()), N)
    rhs = eigenform(k, N).scale(theorem_scalar(k))
    rep = VerifyReport("theorem", k, N, prec, tolerance=tolerance)
    rep.info["scalar"] = format_rat(theorem_scalar(k))
    _absorb(rep, "theorem", lhs, rhs, N, prec)
    return _finish(rep)


# -- double shuffle ----------------------------------------------------------

def verify_double_shuffle(
    k: int, N: int = DEFAULT_ORDER, prec: int = DEFAULT_PREC, tolerance: float = DEFAULT_TOLERANCE
) -> VerifyReport:
    """Both expressions for ``P_{r,s}`` over every ``r + s = k``."""
    if k % 2 or not 4 <= k <= 26:
        raise ValueError(f"verify_double_shuffle: k must be even in [4, 26], got {k}")
    _check_tolerance(prec, tolerance)
    rep = VerifyReport("doubleshuffle", k, N, prec, tolerance=tolerance)
    Gk = eisenstein(k, N)
    for r in range(1, k):
        s = k - r
        P = p_series(r, s, N)
        stuffle = double_eisenstein(r, s, N) + double_eisenstein(s, r, N) + Gk
        shuffle = linear_combination(
            ((binom(j - 1, r - 1) + binom(j - 1, s - 1), double_eisenstein(k - j, j, N)) for j in range(1, k)),
            N,
        )
        _absorb(rep, f"stuffle({r},{s})", P, stuffle, N, prec)
        _absorb(rep, f"shuffle({r},{s})", P, shuffle, N, prec)
    rep.info["pairs"] = k - 1
    return _finish(rep)


# -- GKZ Theorem 3 consequences and Popa's identity --------------------------

def verify_gkz_theorem3(
    k: int,
    N: int = DEFAULT_ORDER,
    prec: int = DEFAULT_PREC,
    tolerance: float = DEFAULT_TOLERANCE,
    table: Optional[RatioTable] = None,
    cache_dir=None,
) -> VerifyReport:
    """The even/odd split identity for ``sum q_{r,s} G_{r,s}`` and its P-series form."""
    check_weight(k)
    _check_tolerance(prec, tolerance)
    q = _all_qcoefs(k, _table(k, prec, table, cache_dir))
    Gk = eisenstein(k, N)
    alt = sum((-1) ** (r - 1) * v for (r, _), v in q.items())
    evens = even_pairs(k)
    odds = odd_pairs(k)

    lhs = linear_combination(((q[p], double_eisenstein(*p, N)) for p in evens), N)
    rhs = linear_combination(
        [(3 * q[p], double_eisenstein(*p, N)) for p in odds] + [(alt, Gk)], N
    )
    rep = VerifyReport("gkz3", k, N, prec, tolerance=tolerance)
    _absorb(rep, "split", lhs, rhs, N, prec)

    lhs4 = linear_combination(
        [(q[p], p_series(*p, N)) for p in evens] + [(-sum(q[p] for p in evens), Gk)], N
    )
    rhs4 = linear_combination(
        [(6 * q[p], double_eisenstein(*p, N)) for p in odds] + [(2 * alt, Gk)], N
    )
    _absorb(rep, "pseries", lhs4, rhs4, N, prec)
    return _finish(rep)


def verify_popa(
    k: int,
    N: int = DEFAULT_ORDER,
    prec: int = DEFAULT_PREC,
    tolerance: float = DEFAULT_TOLERANCE,
    table: Optional[RatioTable] = None,
    cache_dir=None,
) -> VerifyReport:
    """``sum_{even} q_{r,s} (P_{r,s} - b_r b_s / b_k G_k) == 3/2 (-1)^(k/2) L*(k-1)/(k-2)! f``."""
    check_weight(k)
    _check_tolerance(prec, tolerance)
    tab = _table(k, prec, table, cache_dir)
    bk = zeta_tilde_even(k)
    terms = []
    for r, s in even_pairs(k):
        v = qcoef(r, s, tab)
        terms.append((v, p_series(r, s, N)))
        terms.append((-v * zeta_tilde_even(r) * zeta_tilde_even(s) / bk, eisenstein(k, N)))
    lhs = linear_combination(terms, N)
    scalar = Fraction(3 * (-1) ** (k // 2), 2 * math.factorial(k - 2))
    rhs = eigenform(k, N).scale(scalar)
    rep = VerifyReport("popa", k, N, prec, tolerance=tolerance)
    rep.info["scalar"] = format_rat(scalar)
    _absorb(rep, "popa", lhs, rhs, N, prec)
    return _finish(rep)


# -- relations among L-values ------------------------------------------------

def verify_kz(k: int, prec: int = DEFAULT_PREC, table: Optional[RatioTable] = None, cache_dir=None) -> VerifyReport:
    check_weight(k)
    value = kz_check(k, _table(k, prec, table, cache_dir))
    rep = VerifyReport("kz", k, None, prec, symbolic_ok=value == 0)
    rep.info["value"] = format_rat(value)
    if value:
        rep.details.append(f"Kohnen-Zagier sum is {format_rat(value)}, expected 0")
    return rep


def verify_corollary(
    k: int,
    prec: int = DEFAULT_PREC,
    tolerance: float = DEFAULT_TOLERANCE,
    table: Optional[RatioTable] = None,
    cache_dir=None,
) -> VerifyReport:
    """``sum_{odd} q_{r,s} (zeta~(r,s) + zeta~(k)/2) == 0`` numerically."""
    check_weight(k)
    _check_tolerance(prec, tolerance)
    cv = coeff_vector(k, _table(k, prec, table, cache_dir))
    with mp.workdps(prec + 10):
        half = hp_zeta_tilde(k, prec) / 2
        total = 0
        scale = mpf(0)
        for (r, s), v in cv.entries.items():
            term = (mpf(v.numerator) / v.denominator) * (hp_dzeta_tilde(r, s, prec) + half)
            total += term
            scale += abs(term)
        rel = abs(total) / scale
    rep = VerifyReport("corollary", k, None, prec, tolerance=tolerance)
    rep.numeric_residuals = [
        ("corollary.abs", float(abs(total))),
        ("corollary.rel", float(rel)),
    ]
    return _finish(rep)


# -- congruences ---------------------------------------------------------------

def qualifying_primes(k: int) -> List[int]:
    """Primes ``p > k`` dividing the numerator of ``B_k``."""
    return [p for p in prime_factors(bernoulli(k).numerator) if p > k]


def verify_congruence(k: int, prec: int = DEFAULT_PREC, table: Optional[RatioTable] = None, cache_dir=None) -> VerifyReport:
    """All nonzero normalized coefficients agree, and are nonzero, modulo each qualifying prime."""
    check_weight(k)
    rep = VerifyReport("congruence", k, None, prec)
    primes = qualifying_primes(k)
    if not primes:
        rep.skipped = True
        rep.info["reason"] = f"numerator of B_{k} has no prime factor > {k}"
        return rep
    cv = coeff_vector(k, _table(k, prec, table, cache_dir))
    pairs = [p for p in cv.pairs() if p != (k - 1, 1)]
    per_prime = {}
    for p in primes:
        problems = []
        residues = {}
        for pair in pairs:
            v = cv.entries[pair]
            if v.denominator % p == 0:
                problems.append(f"p={p}: {pair} has denominator divisible by {p}")
                continue
            residues[pair] = v.numerator * pow(v.denominator, -1, p) % p
        distinct = set(residues.values())
        if len(distinct) > 1:
            problems.append(f"p={p}: residues differ: " + ", ".join(f"{a}:{b}" for a, b in residues.items()))
        if 0 in distinct:
            problems.append(f"p={p}: coefficients vanish mod {p}")
        scaled = {cv.scaled_entries[pair] % p for pair in pairs}
        per_prime[p] = {
            "verdict": "FAIL" if problems else "PASS",
            "residue": sorted(distinct)[0] if len(distinct) == 1 else sorted(distinct),
            "scaled_residue": sorted(scaled)[0] if len(scaled) == 1 else sorted(scaled),
        }
        rep.details.extend(problems)
    rep.symbolic_ok = not rep.details
    rep.info["primes"] = per_prime
    return rep


# -- independence ---------------------------------------------------------------

def _rank(rows: List[List[Fraction]]) -> int:
    m = [list(r) for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pv = m[rank][col]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                f = m[i][col] / pv
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def verify_independence(k: int, N: int = DEFAULT_ORDER) -> VerifyReport:
    """Rank of the rational parts of ``q^1..q^N`` of the odd ``G^{1/2}_{r,s}``."""
    check_weight(k)
    if N < k // 2:
        raise ValueError(f"verify_independence: need N >= {k // 2} to reach rank {k // 2}, got {N}")
    rows = [g_half(r, s, N).rational_parts()[1:] for r, s in odd_pairs(k)]
    rank = _rank(rows)
    rep = VerifyReport("independence", k, N, None, symbolic_ok=rank == k // 2)
    rep.info["rank"] = rank
    if rank != k // 2:
        rep.details.append(f"rank {rank} < {k // 2}")
    return rep


# -- decomposition report -------------------------------------------------------

@dataclass
class Decomposition:
    weight: int
    prec: int
    table: RatioTable
    entries: Dict[Tuple[int, int], Fraction]
    integer_scale: int
    scaled_entries: Dict[Tuple[int, int], int]
    scalar: Fraction
    multiplier: Fraction
    residues: Dict[int, object]

    def notes(self) -> List[str]:
        out = []
        if self.weight == 12:
            out.append(
                "C = 22680/(4*10!) = 1/640; the multiplier 1/680 that is sometimes printed for "
                "this expansion of Delta is inconsistent with these coefficients"
            )
        return out

    def to_text(self) -> str:
        k = self.weight
        lines = [f"weight {k}, prec {self.prec}", "L*(s)/L*(k-1):"]
        for s in sorted(self.table.ratios):
            lines.append(f"  s={s:<3d} {format_rat(self.table.ratios[s])}")
        lines.append("q_{r,s}/L*(k-1):")
        for pair in sorted(self.entries):
            lines.append(
                f"  ({pair[0]},{pair[1]})  {format_rat(self.entries[pair]):>24}  scaled {self.scaled_entries[pair]}"
            )
        lines.append(f"integer scale: {self.integer_scale}")
        lines.append(f"theorem scalar: {format_rat(self.scalar)}")
        terms = " ".join(
            f"{'+' if c >= 0 else '-'} {abs(c)}*G1/2[{r},{s}]"
            for (r, s), c in sorted(self.scaled_entries.items(), reverse=True)
            if c
        )
        lines.append(f"identity: {terms.lstrip('+ ')} = {format_rat(self.multiplier)} * f")
        for p, res in self.residues.items():
            lines.append(f"mod {p}: {res}")
        lines.extend(f"note: {n}" for n in self.notes())
        return "\n".join(lines)

    def json_records(self) -> List[str]:
        out = []
        for (r, s) in sorted(self.entries):
            out.append(
                json.dumps(
                    {
                        "weight": self.weight,
                        "r": r,
                        "s": s,
                        "q": format_rat(self.entries[(r, s)]),
                        "scaled": self.scaled_entries[(r, s)],
                        "integer_scale": self.integer_scale,
                        "multiplier": format_rat(self.multiplier),
                    }
                )
            )
        return out


def decompose(k: int, prec: int = DEFAULT_PREC, cache_dir=None) -> Decomposition:
    check_weight(k)
    table = ratio_table(k, prec, cache_dir=cache_dir)
    cv = coeff_vector(k, table)
    scalar = theorem_scalar(k)
    residues = {}
    for p in qualifying_primes(k):
        vals = {cv.scaled_entries[pr] % p for pr in cv.pairs() if pr != (k - 1, 1)}
        residues[p] = vals.pop() if len(vals) == 1 else sorted(vals)
    return Decomposition(
        weight=k,
        prec=prec,
        table=table,
        entries=cv.entries,
        integer_scale=cv.integer_scale,
        scaled_entries=cv.scaled_entries,
        scalar=scalar,
        multiplier=cv.integer_scale * scalar,
        residues=residues,
    )


def verify_all(
    N: int = DEFAULT_ORDER, prec: int = DEFAULT_PREC, tolerance: float = DEFAULT_TOLERANCE, cache_dir=None
) -> List[VerifyReport]:
    reports = []
    for k in range(4, 27, 2):
        reports.append(verify_double_shuffle(k, N, prec, tolerance))
    for k in SUPPORTED_WEIGHTS:
        reports.append(verify_theorem_main(k, N, prec, tolerance, cache_dir=cache_dir))
        reports.append(verify_gkz_theorem3(k, N, prec, tolerance, cache_dir=cache_dir))
        reports.append(verify_popa(k, N, prec, tolerance, cache_dir=cache_dir))
        reports.append(verify_kz(k, prec, cache_dir=cache_dir))
        reports.append(verify_corollary(k, prec, tolerance, cache_dir=cache_dir))
        reports.append(verify_congruence(k, prec, cache_dir=cache_dir))
        reports.append(verify_independence(k, N))
    return reports
