import json

import pytest

import cohomotopy as ch


def test_smith_normal_form():
    u, d, v = ch.smith_normal_form([[2, 4], [6, 8]])
    assert d == [[2, 0], [0, 4]]


def test_catalog_roundtrip():
    names = ch.catalog_names()
    assert "t4" in names and "example3" in names
    t4 = ch.catalog_get("t4")
    assert t4.h2.free_rank == 6
    assert t4.validate() == []
    again = ch.manifold(ch.manifold_to_json(t4))
    assert ch.report(again, bound=1) == ch.report(t4, bound=1)
    with pytest.raises(KeyError):
        ch.catalog_get("nope")


def test_report_s4():
    r = ch.report(ch.catalog_get("s4"), bound=3, radius=3)
    assert r["parity"] == "even" and r["spin"] is True
    assert r["pi3"] == {"free_rank": 0, "torsion": [2]}
    assert r["pi4"] == {"free_rank": 1, "torsion": []}
    assert len(r["pi2"]) == 1
    assert r["pi2"][0]["fiber"]["torsion"] == [2]


def test_lens_fiber():
    x = ch.catalog_get("lens:4,1")
    fiber = ch.fiber_group(x, [1])
    assert fiber.torsion == [2, 2] and fiber.free_rank == 1
    assert not ch.is_twisted_2class(x, [1])


def test_twisted_example():
    x = ch.surgered_example()
    assert ch.manifold_type(x, radius=1) == "III1"
    assert ch.is_twisted_2class(x, [0, 1, 0])
    assert ch.fiber_group(x, [0, 1, 0]).torsion == [2]
    assert ch.fiber_group(x, [0, 0, 1]).torsion == [4]
    with pytest.raises(ValueError):
        ch.fiber_group(x, [0, 1, 1])  # self-intersection 1


def test_f1_and_extensions():
    assert ch.f1_group(ch.e_nk(2, 1)).torsion == [4]
    b = ch.FinAbGroup(torsion=[2, 4], free_rank=0)
    assert ch.classify_extension(b, [1, 1]) == ch.extension_oracle(b, [1, 1])
    assert ch.extension_check(16) > 0


def test_document_errors():
    with pytest.raises(ValueError):
        ch.manifold("{}")
    doc = json.loads(ch.manifold_to_json(ch.catalog_get("e_2_1")))
    doc["w"] = [1, 0]
    with pytest.raises(ValueError):
        ch.manifold(doc)
