from __future__ import annotations

import json

import pytest

from binmat import classify as classify_mod
from binmat.canonical import canonical_key
from binmat.catalog import SpikeSpec, named
from binmat.classify import (ClassLabel, ExhaustivenessViolation, classify, clause_matches,
                             is_spike_family, is_starfish, refine_regular, starfish_specs_for,
                             verify_certificate, y16_family_member)
from binmat.compose import StarfishSpec, build_starfish, direct_sum
from binmat.connectivity import Separation
from binmat.minors import MinorWitness


def test_examples():
    lab = classify(named("Z5"))
    assert (lab.kind, lab.certificate) == ("Spike", SpikeSpec(5, "Z"))
    lab = classify(named("P9*"))
    assert (lab.kind, lab.certificate) == ("Starfish", StarfishSpec(2, 2, 1))
    assert classify(named("R10")).kind == "Regular"
    assert classify(named("P9")).kind == "HasP9Minor"
    assert classify(named("Z5*")).certificate == SpikeSpec(5, "Z_dual")
    lab = classify(named("Y16"))
    assert (lab.kind, lab.certificate) == ("Y16Family", "Y16")
    assert classify(direct_sum(named("F7"), named("F7"))).kind == "NotThreeConnected"


def test_certificates_verify():
    for name in ("Z5", "Z4\\t", "P9*", "R10", "P9", "Y16", "F7", "X12'", "starfish(0,3,2)"):
        M = named(name)
        lab = classify(M)
        assert verify_certificate(M, lab), name
    M = direct_sum(named("F7"), named("M(K4)"))
    assert verify_certificate(M, classify(M))


def test_tampered_certificates_rejected():
    Z = named("Z5")
    lab = classify(Z)
    assert not verify_certificate(Z, ClassLabel("Spike", SpikeSpec(5, "Z_minus_t"), lab.detail))
    # x1 and t play different roles, so swapping their images breaks the map
    bad_iso = dict(lab.detail["iso"])
    bad_iso["x1"], bad_iso["t"] = bad_iso["t"], bad_iso["x1"]
    assert not verify_certificate(Z, ClassLabel("Spike", lab.certificate, {"iso": bad_iso}))
    assert verify_certificate(Z, lab)
    P = named("P9")
    assert not verify_certificate(P, ClassLabel("HasP9Minor", MinorWitness(frozenset(), frozenset(P.elements[:1]))))
    assert not verify_certificate(P, ClassLabel("Regular"))
    F = named("F7")
    fake = Separation(frozenset(F.elements[:3]), frozenset(F.elements[3:]), 2, 2)
    assert not verify_certificate(F, ClassLabel("NotThreeConnected", fake))
    assert not verify_certificate(F, ClassLabel("Y16Family", "F7"))


def test_exhaustiveness_violation_surfaces(monkeypatch):
    monkeypatch.setattr(classify_mod, "clause_matches", lambda M: [])
    with pytest.raises(ExhaustivenessViolation):
        classify(named("R10"))
    monkeypatch.setattr(classify_mod, "clause_matches",
                        lambda M: [ClassLabel("Regular"), ClassLabel("Spike", SpikeSpec(4))])
    with pytest.raises(ExhaustivenessViolation, match="Regular, Spike"):
        classify(named("R10"))


def test_recognizers():
    assert is_spike_family(named("AG(3,2)"))[0] == SpikeSpec(4, "Z_minus_t")
    assert is_spike_family(named("S8"))[0] == SpikeSpec(4, "Z_minus_y")
    assert is_spike_family(named("F7")) is None  # Z3 is excluded from the clause
    assert is_starfish(named("Z5")) is None
    S = build_starfish(StarfishSpec(0, 3, 2))
    assert is_starfish(S)[0] == StarfishSpec(0, 3, 2)
    assert y16_family_member(named("X13"))[0] == "X13"
    assert y16_family_member(named("R10")) is None


def test_starfish_spec_candidates():
    specs = starfish_specs_for(9, 5)
    assert specs == [StarfishSpec(2, 2, 1)]
    for spec in (StarfishSpec(1, 3, 2), StarfishSpec(3, 4, 4)):
        assert spec in starfish_specs_for(spec.size, spec.rank)


def test_refine_regular():
    assert refine_regular(named("R10")) == "R10"
    assert refine_regular(named("M(K3,3)")) == "graphic"
    assert refine_regular(named("M*(K3,3)")) == "cographic"
    assert refine_regular(named("W4")) == "graphic+cographic"
    lab = classify(named("M*(K3,3)"), refine_regular_clause=True)
    assert lab.detail == {"refined": "cographic"}


def test_label_json():
    lab = classify(named("Z5"))
    doc = json.loads(json.dumps(lab.to_json()))
    assert doc["label"] == "Spike" and doc["certificate"] == {"r": 5, "variant": "Z"}
    assert set(doc["isomorphism"]) == set(named("Z5").elements)
    doc = classify(named("P9")).to_json()
    assert set(doc["certificate"]) == {"contract", "delete"}


def test_clause_disjointness_on_catalog():
    for name in ("F7", "F7*", "Y16", "X10", "Z4", "Z4*", "S8", "R10", "M*(K5)", "P9*"):
        M = named(name)
        if classify(M).kind in ("HasP9Minor", "NotThreeConnected"):
            continue
        assert len(clause_matches(M)) == 1, name
    assert canonical_key(named("Z4\\t")) == canonical_key(named("AG(3,2)"))
