"""Exact rationals, combinatorial numbers and the formal zeta-symbol ring.

Scalars are :class:`fractions.Fraction`.  Coefficients of every q-series in
the package live in :class:`ZetaPoly`, a sparse polynomial ring over the
rationals in two families of generators:

* ``z_p`` for odd ``p >= 3`` -- the normalized single zeta value
  ``zeta(p) / (2 pi i)^p``;
* ``D_{r,s}`` for ``s >= 2`` -- the normalized double zeta value
  ``zeta(r, s) / (2 pi i)^(r+s)`` with ``zeta(r,s) = sum_{0<n<m} n^-r m^-s``.

Even single zetas, ``zeta~(1)`` and the divergent double zetas ``D_{r,1}``
are reduced away when a symbol is built, so equal values have equal
representations.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

__all__ = [
    "Rat",
    "Generator",
    "Monomial",
    "ZetaPoly",
    "bernoulli",
    "zeta_tilde_even",
    "zeta_symbol",
    "dzeta_symbol",
    "zp_add",
    "zp_mul",
    "zp_scale",
    "binom",
    "divisor_sigma",
    "format_rat",
    "parse_rat",
]

Rat = Fraction

# ("z", p) or ("D", r, s)
Generator = Tuple
Monomial = Tuple[Generator, ...]

_KIND_RANK = {"z": 0, "D": 1}


def _gen_key(g: Generator):
    return (_KIND_RANK[g[0]],) + tuple(g[1:])


def _mono_key(m: Monomial):
    return (len(m), tuple(_gen_key(g) for g in m))


def _canonical_monomial(gens: Iterable[Generator]) -> Monomial:
    return tuple(sorted(gens, key=_gen_key))


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def format_rat(x: Fraction) -> str:
    """Serialize a rational as ``"p/q"``, or ``"p"`` when ``q == 1``."""
    x = _as_fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rat(text: str) -> Fraction:
    return Fraction(text.strip())


class ZetaPoly:
    """Immutable sparse polynomial over Q in the generators ``z_p`` and ``D_{r,s}``.

    Terms are kept in a dict ``{monomial: coefficient}`` with no zero
    coefficients; a monomial is a sorted tuple of generators (repeats encode
    powers), which makes ``==`` structural.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[Monomial, Fraction], None] = None):
        clean: Dict[Monomial, Fraction] = {}
        if terms:
            for mono, c in terms.items():
                c = _as_fraction(c)
                if c:
                    mono = _canonical_monomial(mono)
                    c = clean.get(mono, 0) + c
                    if c:
                        clean[mono] = c
                    else:
                        clean.pop(mono, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Fraction]) -> "ZetaPoly":
        # caller guarantees canonical monomials and nonzero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c) -> "ZetaPoly":
        c = _as_fraction(c)
        return cls._raw({(): c} if c else {})

    @classmethod
    def gen(cls, g: Generator) -> "ZetaPoly":
        return cls._raw({(g,): Fraction(1)})

    @classmethod
    def coerce(cls, x) -> "ZetaPoly":
        if isinstance(x, ZetaPoly):
            return x
        return cls.const(x)

    # -- inspection -----------------------------------------------------
    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(sorted(self._terms.items(), key=lambda kv: _mono_key(kv[0])))

    def is_zero(self) -> bool:
        return not self._terms

    def is_rational(self) -> bool:
        return all(m == () for m in self._terms)

    def constant(self) -> Fraction:
        """The rational (symbol-free) part."""
        return self._terms.get((), Fraction(0))

    def symbolic_part(self) -> "ZetaPoly":
        return ZetaPoly._raw({m: c for m, c in self._terms.items() if m != ()})

    def degree(self) -> int:
        return max((len(m) for m in self._terms), default=0)

    def generators(self) -> set:
        return {g for m in self._terms for g in m}

    # -- ring operations --------------------------------------------------
    def __add__(self, other) -> "ZetaPoly":
        if not isinstance(other, ZetaPoly):
            if isinstance(other, (int, Fraction)):
                other = ZetaPoly.const(other)
            else:
                return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v += c
                if v:
                    out[m] = v
                else:
                    del out[m]
        return ZetaPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "ZetaPoly":
        return ZetaPoly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "ZetaPoly":
        if not isinstance(other, (ZetaPoly, int, Fraction)):
            return NotImplemented
        return self + (-ZetaPoly.coerce(other))

    def __rsub__(self, other) -> "ZetaPoly":
        return ZetaPoly.coerce(other) - self

    def __mul__(self, other) -> "ZetaPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, ZetaPoly):
            return NotImplemented
        if not self._terms or not other._terms:
            return ZetaPoly._raw({})
        out: Dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                if not m1:
                    m = m2
                elif not m2:
                    m = m1
                else:
                    m = _canonical_monomial(m1 + m2)
                out[m] = out.get(m, 0) + c1 * c2
        return ZetaPoly._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def scale(self, c) -> "ZetaPoly":
        c = _as_fraction(c)
        if not c:
            return ZetaPoly._raw({})
        if c == 1:
            return self
        return ZetaPoly._raw({m: v * c for m, v in self._terms.items()})

    # -- comparison ------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = ZetaPoly.const(other)
        if not isinstance(other, ZetaPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- text form -------------------------------------------------------
    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, c in self.items():
            if not mono:
                parts.append(format_rat(c))
            else:
                parts.append(format_rat(c) + "*" + _format_monomial(mono))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"ZetaPoly({str(self)!r})"


def _format_generator(g: Generator) -> str:
    if g[0] == "z":
        return f"z{g[1]}"
    return f"D{{{g[1]},{g[2]}}}"


def _format_monomial(mono: Monomial) -> str:
    out = []
    i = 0
    while i < len(mono):
        j = i
        while j < len(mono) and mono[j] == mono[i]:
            j += 1
        name = _format_generator(mono[i])
        out.append(name if j - i == 1 else f"{name}^{j - i}")
        i = j
    return "*".join(out)


def zp_add(a, b) -> ZetaPoly:
    return ZetaPoly.coerce(a) + ZetaPoly.coerce(b)


def zp_mul(a, b) -> ZetaPoly:
    return ZetaPoly.coerce(a) * ZetaPoly.coerce(b)


def zp_scale(a, c) -> ZetaPoly:
    return ZetaPoly.coerce(a).scale(c)


# -- numbers ---------------------------------------------------------------

@lru_cache(maxsize=None)
def _bernoulli_table(n: int) -> Tuple[Fraction, ...]:
    B = [Fraction(1)]
    for m in range(1, n + 1):
        s = sum(comb(m + 1, j) * B[j] for j in range(m))
        B.append(-s / (m + 1))
    return tuple(B)


def bernoulli(n: int) -> Fraction:
    """Bernoulli number ``B_n`` with ``B_1 = -1/2``."""
    if n < 0:
        raise ValueError("bernoulli: n must be >= 0")
    if n >= 3 and n % 2:
        return Fraction(0)
    return _bernoulli_table(n)[n]


def zeta_tilde_even(k: int) -> Fraction:
    """``beta_k = zeta(k) / (2 pi i)^k = -B_k / (2 k!)`` for even ``k >= 2``."""
    if k < 2 or k % 2:
        raise ValueError(f"zeta_tilde_even: k must be even and >= 2, got {k}")
    return -bernoulli(k) / (2 * factorial(k))


def zeta_symbol(k: int) -> ZetaPoly:
    if k < 1:
        raise ValueError(f"zeta_symbol: k must be >= 1, got {k}")
    if k == 1:
        return ZetaPoly()
    if k % 2 == 0:
        return ZetaPoly.const(zeta_tilde_even(k))
    return ZetaPoly.gen(("z", k))


def dzeta_symbol(r: int, s: int) -> ZetaPoly:
    """Normalized double zeta ``zeta~(r, s)`` with the regularization of the s = 1 cases."""
    if r < 1 or s < 1:
        raise ValueError(f"dzeta_symbol: need r, s >= 1, got ({r}, {s})")
    if s >= 2:
        return ZetaPoly.gen(("D", r, s))
    if r == 1:
        return ZetaPoly.const(-zeta_tilde_even(2) / 2)
    return -ZetaPoly.gen(("D", 1, r)) - zeta_symbol(r + 1)


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero outside ``0 <= k <= n``."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


@lru_cache(maxsize=None)
def _divisors(n: int) -> Tuple[int, ...]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return tuple(small + large[::-1])


def divisors(n: int) -> Tuple[int, ...]:
    if n < 1:
        raise ValueError(f"divisors: n must be >= 1, got {n}")
    return _divisors(n)


def divisor_sigma(m: int, n: int) -> int:
    """``sum_{d | n} d^m``."""
    if n < 1:
        raise ValueError(f"divisor_sigma: n must be >= 1, got {n}")
    return sum(d ** m for d in _divisors(n))


def prime_factors(n: int) -> list:
    """Distinct prime factors of ``|n|`` by trial division (inputs here are < 10^8)."""
    n = abs(n)
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.append(n)
    return out
