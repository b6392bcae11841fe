import json
from dataclasses import replace
from pathlib import Path

import pytest

from cubicwalls.catalog import (CatalogError, load, model_from_json,
                                model_to_json, self_check, serialize)
from cubicwalls.builtin import builtin_catalog

DATA = Path(__file__).resolve().parents[1] / "src" / "cubicwalls" / "data" / "catalog.json"


def test_shipped_catalog_matches_builtin(catalog):
    assert DATA.exists()
    text = DATA.read_text()
    assert serialize(catalog) == text


def test_load_serialize_round_trip(catalog):
    text = serialize(catalog)
    again = load(text)
    assert serialize(again) == text
    # regions survive exactly, not just syntactically
    e1 = catalog.entry("E2A1", "two-nodes")
    e2 = again.entry("E2A1", "two-nodes")
    for d1, d2 in zip(e1.declared_chambers, e2.declared_chambers):
        assert d1.label == d2.label
        assert d1.region.equals(d2.region)


def test_model_round_trip(catalog):
    seed = catalog.entry("E2A1", "two-nodes").seed
    doc = model_to_json(seed)
    back = model_from_json(json.loads(json.dumps(doc)))
    assert model_to_json(back) == doc


def test_conductor_weight_rejected(catalog):
    doc = json.loads(serialize(catalog))
    comp = doc["types"][0]["seedModel"]["components"][0]
    comp["conductors"][0]["weight"] = {"q0": "0", "qb": "2", "qc": "0"}
    with pytest.raises(CatalogError, match="implicit weight 1"):
        load(json.dumps(doc))


def test_bad_boundary_weight_rejected(catalog):
    doc = json.loads(serialize(catalog))
    comp = doc["types"][0]["seedModel"]["components"][0]
    comp["boundary"][0]["weight"] = {"q0": "1/2", "qb": "0", "qc": "1"}
    with pytest.raises(CatalogError, match="weight"):
        load(json.dumps(doc))


def test_schema_version_checked(catalog):
    doc = json.loads(serialize(catalog))
    doc["schemaVersion"] = 99
    with pytest.raises(CatalogError, match="schemaVersion"):
        load(json.dumps(doc))


def test_self_check_passes(catalog):
    rep = self_check(catalog)
    assert rep.ok(), rep.findings
    assert any("volume identity" in c for c in rep.checked)


def test_self_check_flags_wrong_count(catalog):
    entry = catalog.entry("E2A1", "two-nodes")
    wrong = replace(entry, expected_chamber_count=12)
    cat2 = replace(catalog, types=(wrong,))
    rep = self_check(cat2)
    assert not rep.ok()
    assert any("12" in f and "11" in f for f in rep.findings)


def test_self_check_flags_eckardt_excess(catalog):
    entry = catalog.entry("E2A1", "two-nodes")
    seed = entry.seed
    comp = seed.component("S")
    # declare two triple points of boundary lines on the two-node resolution
    bad_comp = replace(comp, eckardt=((0, 1, 2), (3, 4, 5)))
    bad_seed = seed.replace_component(bad_comp)
    cat2 = replace(catalog, types=(replace(entry, seed=bad_seed),))
    rep = self_check(cat2)
    assert any("triple points" in f and "S" in f for f in rep.findings)


def test_empty_catalog_report():
    from cubicwalls.catalog import CatalogFile
    rep = self_check(CatalogFile((), (), ()))
    assert rep.ok()
    assert rep.checked == []


def test_not_json():
    with pytest.raises(CatalogError, match="JSON"):
        load("{nope")
