import json
from fractions import Fraction

import pytest

from deisen.lfunc import RatioTable, ratio_table
from deisen.modforms import SUPPORTED_WEIGHTS, UnsupportedWeight
from deisen.verify import (
    ConfigurationError,
    VerifyReport,
    decompose,
    qualifying_primes,
    verify_congruence,
    verify_corollary,
    verify_double_shuffle,
    verify_gkz_theorem3,
    verify_independence,
    verify_kz,
    verify_popa,
    verify_theorem_main,
)

N = 20


def perturbed(k, s, delta=Fraction(1, 10 ** 6)):
    t = ratio_table(k)
    bad = dict(t.ratios)
    sign = (-1) ** (k // 2)
    bad[s] += delta
    bad[k - s] = sign * bad[s]
    return RatioTable(k, bad, t.precision_used, t.residuals)


def test_theorem_pass():
    rep = verify_theorem_main(12, N)
    assert rep.verdict == "PASS", rep.to_text()
    assert rep.info["scalar"] == "1/14515200"
    assert all(m < 1e-25 for _, m in rep.numeric_residuals)


def test_theorem_negative_control():
    rep = verify_theorem_main(12, N, table=perturbed(12, 3))
    assert rep.verdict == "FAIL"
    assert rep.details and "q^" in rep.details[0]


def test_double_shuffle_pass_and_labels():
    rep = verify_double_shuffle(8, N)
    assert rep.passed
    labels = {lab.split(":")[0] for lab, _ in rep.numeric_residuals}
    assert "stuffle(3,5)" in labels and "shuffle(1,7)" in labels
    assert any(lab.endswith(".im") for lab, _ in rep.numeric_residuals)


@pytest.mark.parametrize("k", [3, 28, 2])
def test_double_shuffle_domain(k):
    with pytest.raises(ValueError):
        verify_double_shuffle(k, N)


def test_gkz3_and_popa():
    assert verify_gkz_theorem3(16, N).passed
    assert verify_popa(16, N).passed
    assert verify_gkz_theorem3(12, N, table=perturbed(12, 5)).verdict == "FAIL"
    assert verify_popa(12, N, table=perturbed(12, 5)).verdict == "FAIL"


def test_kz():
    assert verify_kz(20).passed
    bad = verify_kz(12, table=perturbed(12, 3))
    assert bad.verdict == "FAIL" and "expected 0" in bad.details[0]


def test_corollary():
    rep = verify_corollary(12)
    assert rep.passed
    labels = [lab for lab, _ in rep.numeric_residuals]
    assert labels == ["corollary.abs", "corollary.rel"]
    bad = verify_corollary(12, table=perturbed(12, 3, Fraction(1, 100)))
    assert bad.verdict == "FAIL"


def test_qualifying_primes():
    assert qualifying_primes(12) == [691]
    assert qualifying_primes(16) == [3617]
    assert qualifying_primes(20) == [283, 617]


def test_congruence_delta():
    rep = verify_congruence(12)
    assert rep.passed
    info = rep.info["primes"][691]
    assert info["scaled_residue"] == 568
    assert info["residue"] == 1
    assert 568 * pow(22680, -1, 691) % 691 == 1


@pytest.mark.parametrize("k", SUPPORTED_WEIGHTS)
def test_congruence_all(k):
    rep = verify_congruence(k)
    assert rep.verdict == "PASS"
    assert set(rep.info["primes"]) == set(qualifying_primes(k))


def test_congruence_negative_control():
    assert verify_congruence(12, table=perturbed(12, 3, Fraction(1, 1620))).verdict == "FAIL"


def test_independence():
    rep = verify_independence(12, N)
    assert rep.passed and rep.info["rank"] == 6
    with pytest.raises(ValueError):
        verify_independence(26, 5)


def test_configuration_error():
    with pytest.raises(ConfigurationError):
        verify_theorem_main(12, N, prec=60, tolerance=1e-60)


def test_unsupported_weight():
    with pytest.raises(UnsupportedWeight):
        verify_theorem_main(14, N)


def test_json_schema():
    rec = json.loads(verify_theorem_main(12, 10).to_json())
    assert list(rec)[:7] == ["check", "weight", "order", "prec", "verdict", "residuals", "details"]
    assert rec["verdict"] == "PASS"
    assert {"label", "magnitude"} == set(rec["residuals"][0])


def test_verdicts():
    assert VerifyReport("x", 12, None, None, skipped=True).verdict == "SKIP"
    assert VerifyReport("x", 12, None, None, numeric_residuals=[("a", 1.0)]).verdict == "FAIL"


def test_deterministic():
    a = verify_gkz_theorem3(18, 10).to_json()
    b = verify_gkz_theorem3(18, 10).to_json()
    assert a == b


def test_decompose_delta():
    d = decompose(12)
    assert d.multiplier == Fraction(1, 640)
    text = d.to_text()
    assert "= 1/640 * f" in text
    assert "mod 691: 568" in text
    assert "1/680" in text
    assert "22680*G1/2[9,3] - 35364*G1/2[7,5] - 29145*G1/2[5,7] + 13006*G1/2[3,9] + 22680*G1/2[1,11]" in text
    recs = [json.loads(x) for x in d.json_records()]
    assert {(r["r"], r["s"]): r["scaled"] for r in recs}[(7, 5)] == -35364
