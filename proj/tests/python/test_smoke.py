import itertools
import math

import pytest

import hydrak


def test_field_names():
    assert hydrak.field_names() == ["H2", "H3", "H4", "H5"]


def test_spec_text_and_fingerprint():
    text = hydrak.spec_text("H3")
    assert text.startswith("name H3\n")
    assert "prime 1299709" in text
    assert len(hydrak.spec_fingerprint("H3")) == 16


@pytest.mark.parametrize("field,count", [("H2", 11), ("H3", 26), ("H4", 56)])
def test_fundamental_counts(field, count):
    funs = hydrak.fundamentals(field)
    assert len(funs) == count
    images = [tuple(img) for _, img in funs]
    assert len(set(images)) == count


def test_h2_table():
    funs = dict(hydrak.fundamentals("H2"))
    assert funs["(1-i)/2"] == [2, 4]
    assert funs["i"] == [2, 3]
    assert funs["2"] == [2, 2]


def test_membership_and_images():
    assert hydrak.is_fundamental("H3", "1 - alpha")
    assert not hydrak.is_fundamental("H3", "alpha + 1")
    assert hydrak.gf5_image("H3", "alpha") == [2, 3, 4]
    assert hydrak.gf5_image("H3", "alpha + 1") is None
    assert hydrak.gf5_image("H4", "beta/(beta - 1)") == [2, 4, 3, 4]


def _domain_brute(m):
    out = {tuple([0] * m), tuple([1] * m)}
    for t in itertools.product((2, 3, 4), repeat=m):
        if all(t.count(v) < 3 for v in (2, 3, 4)):
            out.add(t)
    return out


@pytest.mark.parametrize("width", [1, 2, 3, 4, 5])
def test_domain_matches_brute_force(width):
    assert {tuple(t) for t in hydrak.domain(width)} == _domain_brute(width)
    assert hydrak.u25_tuple_count(width) == math.perm(6, width)


def test_report_selected_stages():
    rep = hydrak.report("H3", stages=["fundamentals", "automorphisms"])
    names = [s["name"] for s in rep["stages"]]
    assert names == ["fundamentals", "automorphisms"]
    assert rep["verdict"] == "PASS"
    assert rep["counts"]["automorphisms"] == 6
    assert rep["counts"]["u25_pairs"] is None
    assert set(hydrak.report_stage_names()) >= set(names)


def test_full_report_h3():
    rep = hydrak.report("H3")
    assert rep["verdict"] == "PASS"
    assert rep["counts"] == {"fundamentals": 26, "automorphisms": 6, "u25_pairs": 120, "domain": 26}
    assert rep["violations"] == []


def test_genesis():
    g = hydrak.genesis()
    assert g["verdict"] == "PASS"
    assert g["relation_residuals"] == ["0", "0", "0"]
    assert g["s223_reading"] == 0


def test_run_commands():
    code, doc = hydrak.run("auts", "H2")
    assert code == 0
    assert doc["reports"][0]["counts"]["automorphisms"] == 2
    code, doc = hydrak.run("u25", "H4")
    assert code == 0
    assert doc["reports"][0]["counts"]["u25_pairs"] == 360


def test_errors():
    with pytest.raises(ValueError):
        hydrak.fundamentals("H6")
    with pytest.raises(ValueError):
        hydrak.is_fundamental("H3", "alpha +")
    with pytest.raises(ValueError):
        hydrak.run("auts", "H6")
