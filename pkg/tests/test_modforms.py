from fractions import Fraction
from math import factorial

import pytest

from deisen.deisenstein import g
from deisen.exact import ZetaPoly, divisor_sigma
from deisen.modforms import (
    SUPPORTED_WEIGHTS,
    UnsupportedWeight,
    delta,
    delta_coefficients,
    eigenform,
    eisenstein,
    hecke_tp,
)
from deisen.qseries import QSeries


def naive_delta(N):
    """q * prod (1-q^n)^24, one factor at a time."""
    poly = [1] + [0] * N
    for n in range(1, N + 1):
        for _ in range(24):
            new = poly[:]
            for i in range(n, N + 1):
                new[i] -= poly[i - n]
            poly = new
    return [0] + poly[:N]


def test_eisenstein_examples():
    G4 = eisenstein(4, 5)
    assert G4[0] == Fraction(1, 1440)
    assert G4[1] == Fraction(1, 6)
    assert G4[1].constant() / G4[0].constant() == 240
    G1 = eisenstein(1, 5)
    assert G1[0].is_zero() and G1[1] == -1
    G3 = eisenstein(3, 5)
    assert G3[0] == ZetaPoly.gen(("z", 3)) and G3[1] == Fraction(-1, 2)
    with pytest.raises(ValueError):
        eisenstein(0, 5)


def test_eisenstein_coefficients_match_formula():
    G = eisenstein(7, 12)
    for n in range(1, 13):
        assert G[n] == Fraction(-divisor_sigma(6, n), factorial(6))


@pytest.mark.parametrize("h", range(1, 27))
def test_eisenstein_minus_constant_is_g(h):
    N = 25
    G = eisenstein(h, N)
    assert G - QSeries([G[0]], N) == g(h, N)


def test_delta():
    d = delta(30)
    assert d[0] == 0 and d[1] == 1 and d[2] == -24
    assert list(delta_coefficients(30)) == naive_delta(30)
    assert d.is_rational()


@pytest.mark.parametrize("k", SUPPORTED_WEIGHTS)
def test_eigenform_integral_and_normalized(k):
    f = eigenform(k, 30)
    assert f[0] == 0 and f[1] == 1
    assert all(c.constant().denominator == 1 and c.is_rational() for c in f.coeffs)


def test_eigenform_weight12_is_delta():
    assert eigenform(12, 30) == delta(30)


@pytest.mark.parametrize("k", [10, 13, 14, 24, 28])
def test_unsupported(k):
    with pytest.raises(UnsupportedWeight) as e:
        eigenform(k, 10)
    assert "12" in str(e.value) and "26" in str(e.value)


@pytest.mark.parametrize("k", SUPPORTED_WEIGHTS)
@pytest.mark.parametrize("p", [2, 3])
def test_hecke_eigen(k, p):
    N = 40
    f = eigenform(k, N)
    Tf = hecke_tp(f, p, k, N)
    assert Tf.order == N // p
    assert Tf == f.scale(f[p].constant())


def test_hecke_examples():
    d = delta(40)
    assert hecke_tp(d, 2, 12, 40) == d.scale(-24)
    assert hecke_tp(QSeries.zero(10), 2, 12, 10).is_zero()
    assert hecke_tp(d, 3, 12, 40)[1] == d[3]
    with pytest.raises(ValueError):
        hecke_tp(eisenstein(4, 10), 2, 4, 10)
