from fractions import Fraction

import pytest

import symcone


def test_constants():
    z = [Fraction(-1, 2), Fraction(-1, 3), 1]
    w = Fraction(9, 10)
    assert symcone.pF(z, w)[0] == Fraction(2838188587, 147622500)
    assert symcone.delta(1, z, w) == Fraction(722, 135)
    assert symcone.xi(z, w) == Fraction(461719, 911250)


def test_identity_catalog():
    ids = symcone.identity_ids()
    assert len(ids) >= 30
    assert "prop3.8-3-sign-DL" in ids
    assert symcone.check_identity("thm2.2-det", t=5, u=3)["holds"]


def test_sweep():
    (r,) = symcone.sweep_identities("thm4.25-1-product", samples=5, seed=3)
    assert r["ok"] and r["passed"] == 5


def test_psd_refutation_has_witness():
    v = symcone.psd_check("g_tu", t=3, u=2)
    assert v["result"] == "NOT_PSD"
    point = [Fraction(x) for x in v["witness"]]
    assert symcone.evaluate("g_tu", point, t=3, u=2) < 0


def test_certificate():
    c = symcone.certify("thm4.4-2", t=3)
    assert c["kernel_dim"] == 1 and c["certified"]


def test_errors():
    with pytest.raises(ValueError):
        symcone.psd_check("g_tu", t=3, u=1)
    with pytest.raises(symcone.HypothesisError):
        symcone.certify("thm2.2", t=1, u=2)
    with pytest.raises(symcone.DomainError):
        symcone.discriminant("Cb", [1, -2, 1, 4, 0])


def test_discriminant_and_section():
    assert symcone.discriminant("C0", [1, 0, 0, 0, 0]) == 5
    cs = symcone.cross_section(10, 2)
    assert cs["regime"] == 4
    names = [v["member"].split("(")[0] for v in cs["vertices"]]
    assert names == ["eD_t", "eE_t"]
