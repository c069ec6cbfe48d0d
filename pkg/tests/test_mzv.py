from fractions import Fraction

import mpmath
import pytest
from mpmath import mp, mpf

from deisen.exact import ZetaPoly, dzeta_symbol, zeta_symbol, zeta_tilde_even
from deisen.mzv import (
    OddWeightSymbol,
    eval_zeta_poly,
    hp_dzeta,
    hp_dzeta_tilde,
    hp_hurwitz,
    hp_zeta,
    hp_zeta_tilde,
)

PREC = 60
TOL = mpf(10) ** -(PREC - 10)


def close(a, b, tol=TOL):
    with mp.workdps(PREC + 20):
        return abs(a - b) <= tol * max(1, abs(b))


@pytest.mark.parametrize("s", [2, 3, 4, 5, 11, 12, 25, 40])
def test_zeta_against_mpmath(s):
    with mp.workdps(PREC + 20):
        assert close(hp_zeta(s, PREC), mpmath.zeta(s))


@pytest.mark.parametrize("s,a", [(2, Fraction(1, 2)), (3, Fraction(1, 3)), (7, 5), (13, Fraction(7, 4))])
def test_hurwitz_against_mpmath(s, a):
    with mp.workdps(PREC + 20):
        ref = mpmath.zeta(s, mpf(a.numerator) / a.denominator if isinstance(a, Fraction) else a)
        assert close(hp_hurwitz(s, a, PREC), ref)


def test_hurwitz_half():
    with mp.workdps(PREC + 20):
        assert close(hp_hurwitz(2, Fraction(1, 2), PREC), mp.pi ** 2 / 2)


def test_domain_errors():
    with pytest.raises(ValueError):
        hp_zeta(1, PREC)
    with pytest.raises(ValueError):
        hp_dzeta(1, 1, PREC)
    with pytest.raises(ValueError):
        hp_hurwitz(2, 0, PREC)


def test_euler_sum():
    with mp.workdps(PREC + 20):
        assert close(hp_dzeta(1, 2, PREC), hp_zeta(3, PREC))


def test_dzeta_against_nsum():
    # zeta(3, 5) = sum_m H_{m-1}^(3) / m^5 with H_{m-1}^(3) = zeta(3) - zeta(3, m)
    with mp.workdps(40):
        ref = mpmath.nsum(lambda m: (mpmath.zeta(3) - mpmath.zeta(3, m)) / m ** 5, [2, mpmath.inf])
        assert abs(hp_dzeta(3, 5, PREC) - ref) < mpf(10) ** -30


@pytest.mark.parametrize("r,s", [(2, 2), (3, 9), (5, 7), (2, 10), (4, 4), (11, 15), (13, 13)])
def test_stuffle(r, s):
    with mp.workdps(PREC + 20):
        lhs = hp_dzeta(r, s, PREC) + hp_dzeta(s, r, PREC) + hp_zeta(r + s, PREC)
        assert close(lhs, hp_zeta(r, PREC) * hp_zeta(s, PREC))


@pytest.mark.parametrize("k", range(2, 27, 2))
def test_zeta_tilde_even_rational(k):
    with mp.workdps(PREC + 20):
        v = hp_zeta_tilde(k, PREC)
        b = zeta_tilde_even(k)
        assert close(v.real, mpf(b.numerator) / b.denominator)
        assert abs(v.imag) < TOL


def test_zeta_tilde_one():
    assert hp_zeta_tilde(1, PREC) == 0


@pytest.mark.parametrize("r,s", [(3, 9), (5, 7), (1, 11), (11, 1), (2, 2), (7, 19)])
def test_even_weight_dzeta_tilde_real(r, s):
    v = hp_dzeta_tilde(r, s, PREC)
    assert abs(v.imag) <= TOL * abs(v.real)


def test_regularization_consistent_with_symbols():
    for r in (3, 5, 11):
        x = dzeta_symbol(r, 1) + dzeta_symbol(1, r) + zeta_symbol(r + 1)
        assert x.is_zero()
        with mp.workdps(PREC + 20):
            v = hp_dzeta_tilde(r, 1, PREC) + hp_dzeta_tilde(1, r, PREC) + hp_zeta_tilde(r + 1, PREC)
            assert abs(v) < TOL * abs(hp_zeta_tilde(r + 1, PREC))
    with mp.workdps(PREC + 20):
        assert close(hp_dzeta_tilde(1, 1, PREC).real, mpf(1) / 48)


def test_eval_constant():
    with mp.workdps(PREC + 20):
        v = eval_zeta_poly(Fraction(691, 2730), PREC)
        assert close(v.real, mpf(691) / 2730)


@pytest.mark.parametrize("r,s", [(3, 9), (5, 7), (1, 11)])
def test_eval_stuffle_symbolic(r, s):
    x = dzeta_symbol(r, s) + dzeta_symbol(s, r) + zeta_symbol(r + s) - zeta_symbol(r) * zeta_symbol(s)
    v = eval_zeta_poly(x, PREC)
    scale = abs(hp_zeta_tilde(r + s, PREC))
    assert abs(v) < TOL * scale


def test_odd_weight_symbol_rejected():
    with pytest.raises(OddWeightSymbol):
        eval_zeta_poly(ZetaPoly.gen(("D", 2, 3)), PREC)


def test_precision_doubling():
    lo = hp_dzeta(5, 7, 40)
    hi = hp_dzeta(5, 7, 80)
    with mp.workdps(90):
        assert abs(lo - hi) < mpf(10) ** -38


def test_result_precision_independent_of_caller_context():
    # first call at the default 15-digit context fills the cache
    with mp.workdps(15):
        hp_dzeta(4, 6, PREC)
        hp_hurwitz(9, Fraction(1, 3), PREC)
    with mp.workdps(PREC + 20):
        assert close(hp_dzeta(4, 6, PREC) + hp_dzeta(6, 4, PREC) + hp_zeta(10, PREC), hp_zeta(4, PREC) * hp_zeta(6, PREC))
        assert close(hp_hurwitz(9, Fraction(1, 3), PREC), mpmath.zeta(9, mpf(1) / 3))
