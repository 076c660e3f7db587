from fractions import Fraction

import pytest

import ppdacert


FIG1 = ppdacert.gen("fig1")


def test_parse_reports_hash_and_shape():
    info = ppdacert.parse(FIG1, strict=True)
    assert info["states"] == ["p", "q"]
    assert info["alphabet"] == ["Z"]
    assert len(info["hash"]) == 64
    assert info["deadlocked"] == []


def test_bounds_bracket_sqrt2():
    out = ppdacert.bounds(FIG1, epsilon="1e-9")
    lo, hi = out["bounds"]["p Z q"]
    assert lo <= hi
    assert (lo + 1) ** 2 < 2 < (hi + 1) ** 2
    assert out["gap"] <= Fraction(1, 10**9)
    assert out["zero"] == ["q Z p"]


def test_certify_and_verify_round_trip():
    for kind in ("upper", "lower", "past", "cpast"):
        cert = ppdacert.certify(FIG1, kind, epsilon="1e-6")
        verdict = ppdacert.verify(FIG1, cert)
        assert verdict["accepted"], verdict
        assert verdict["kind"] == kind


def test_verify_rejects_and_reports():
    text = ppdacert.certify(FIG1, "past")
    lines = [ln for ln in text.splitlines() if not ln.startswith("r p Z")]
    bad = "\n".join(lines + ["r p Z 3/2"]) + "\n"
    verdict = ppdacert.verify(FIG1, bad)
    assert not verdict["accepted"]
    assert "p Z" in verdict["violations"][0]


def test_errors_map_to_value_error():
    other = ppdacert.certify(ppdacert.gen("delta_a", "3/4"), "upper", epsilon="1e-3")
    with pytest.raises(ppdacert.ModelMismatch):
        ppdacert.verify(FIG1, other)
    with pytest.raises(ValueError):
        ppdacert.verify(FIG1, "nonsense")
    with pytest.raises(ppdacert.ModelError):
        ppdacert.parse("states: p\nalphabet: Z\ntrans p Y 1 p -\n")


def test_decide_outcomes():
    assert ppdacert.decide(FIG1)["outcome"] == "PAST"
    third = ppdacert.decide(ppdacert.gen("delta_a", "1/3"))
    assert third["outcome"] == "non-AST"
    assert third["witness_sum"] < 1
    assert ppdacert.decide(ppdacert.gen("delta_a", "1/2"), max_iter=20)["outcome"] == "unknown"


def test_pbpa_runtime_is_exact():
    out = ppdacert.pbpa(ppdacert.gen("delta_a", "3/5"))
    assert out["past"]
    assert out["runtimes"] == {"Z": Fraction(5)}


def test_explore_and_simulate():
    e = ppdacert.explore(FIG1, "p:Z", 40, 20)
    assert 0 < e["probability"]["q"] < Fraction(1, 2)
    a = ppdacert.simulate(FIG1, "p:Z", runs=2000, cap=500, seed=3)
    b = ppdacert.simulate(FIG1, "p:Z", runs=2000, cap=500, seed=3)
    assert a == b
    assert sum(a["hits"].values()) + a["capped"] + a["deadlocked"] == 2000
