"""Truncated q-expansions with :class:`~deisen.exact.ZetaPoly` coefficients."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List, Sequence, Union

from .exact import ZetaPoly

__all__ = ["QSeries", "qs_add", "qs_mul", "qs_qderiv", "qs_scale"]

Scalar = Union[int, Fraction, ZetaPoly]


class QSeries:
    """``sum_{n=0}^{order} coeffs[n] q^n``.

    Binary operations between series of different orders truncate to the
    smaller order.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence, order: int | None = None):
        coeffs = [ZetaPoly.coerce(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("QSeries: order must be >= 0")
        if len(coeffs) < order + 1:
            coeffs += [ZetaPoly()] * (order + 1 - len(coeffs))
        self.order = order
        self.coeffs: tuple = tuple(coeffs[: order + 1])

    @classmethod
    def zero(cls, order: int) -> "QSeries":
        return cls([], order)

    @classmethod
    def from_function(cls, fn, order: int) -> "QSeries":
        return cls([fn(n) for n in range(order + 1)], order)

    def __getitem__(self, n: int) -> ZetaPoly:
        return self.coeffs[n]

    def __len__(self) -> int:
        return self.order + 1

    def truncate(self, order: int) -> "QSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return QSeries(self.coeffs[: order + 1], order)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self.coeffs)

    def rational_parts(self) -> List[Fraction]:
        return [c.constant() for c in self.coeffs]

    def __add__(self, other: "QSeries") -> "QSeries":
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return QSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], n)

    def __neg__(self) -> "QSeries":
        return QSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other: "QSeries") -> "QSeries":
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return QSeries([self.coeffs[i] - other.coeffs[i] for i in range(n + 1)], n)

    def __mul__(self, other) -> "QSeries":
        if isinstance(other, QSeries):
            return _cauchy(self, other)
        if isinstance(other, (int, Fraction, ZetaPoly)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other) -> "QSeries":
        if isinstance(other, (int, Fraction, ZetaPoly)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: Scalar) -> "QSeries":
        if isinstance(c, ZetaPoly):
            return QSeries([x * c for x in self.coeffs], self.order)
        return QSeries([x.scale(c) for x in self.coeffs], self.order)

    def qderiv(self) -> "QSeries":
        """``q d/dq``."""
        return QSeries([c.scale(n) for n, c in enumerate(self.coeffs)], self.order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    __hash__ = None

    def dump(self) -> str:
        """One line per coefficient: ``n<TAB><ZetaPoly text>``."""
        return "".join(f"{n}\t{c}\n" for n, c in enumerate(self.coeffs))

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:4])
        return f"QSeries(order={self.order}, [{head}{', ...' if self.order > 3 else ''}])"


def _cauchy(a: QSeries, b: QSeries) -> QSeries:
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    nz_a = [i for i in range(n + 1) if ac[i]]
    nz_b = [j for j in range(n + 1) if bc[j]]
    out = [ZetaPoly() for _ in range(n + 1)]
    for i in nz_a:
        x = ac[i]
        for j in nz_b:
            if i + j > n:
                break
            out[i + j] = out[i + j] + x * bc[j]
    return QSeries(out, n)


def qs_add(a: QSeries, b: QSeries) -> QSeries:
    return a + b


def qs_mul(a: QSeries, b: QSeries) -> QSeries:
    return _cauchy(a, b)


def qs_qderiv(a: QSeries) -> QSeries:
    return a.qderiv()


def qs_scale(a: QSeries, c: Scalar) -> QSeries:
    return a.scale(c)


def linear_combination(terms: Iterable, order: int) -> QSeries:
    """``sum c_i * S_i`` over ``(c_i, S_i)`` pairs, truncated at ``order``."""
    out = [ZetaPoly() for _ in range(order + 1)]
    for c, s in terms:
        if s.order < order:
            raise ValueError(f"series of order {s.order} cannot supply order {order}")
        if not c:
            continue
        for n in range(order + 1):
            if s.coeffs[n]:
                out[n] = out[n] + s.coeffs[n] * c
    return QSeries(out, order)
