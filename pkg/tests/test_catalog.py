import json

import pytest

from sgpoly.catalog import OMEGAS, TABLE1, CatalogEntry, CatalogError, dumps, load, names, save


def test_names_list_omegas_first():
    n = names()
    assert n[:10] == list(OMEGAS)
    for extra in ("theta-planar", "theta-tilde", "unknot", "trefoil", "figure-eight", "hopf", "omega1-kink"):
        assert extra in n


def test_entries_carry_provenance_and_parse():
    for name in names():
        e = load(name)
        assert e.provenance
        for key in e.expected:
            if key.startswith("jaeger"):
                e.expected_fraction(key)
            else:
                e.expected_polynomial(key)


def test_stored_table_matches_constant():
    for name in OMEGAS:
        assert load(name).expected["yamada"] == TABLE1[name]


def test_save_and_load_by_path(tmp_path):
    e = load("theta-tilde")
    p = tmp_path / "t.json"
    save(e, str(p))
    back = load(str(p))
    assert back.to_dict() == e.to_dict()
    assert dumps(back) == p.read_text()


def test_missing_entry():
    with pytest.raises(CatalogError):
        load("no-such-diagram")


def test_error_names_file_and_line(tmp_path):
    data = json.loads(dumps(load("omega7")))
    data["arcs"][3][1] = ["x999", 0]
    p = tmp_path / "bad.json"
    p.write_text(dumps(CatalogEntry("bad", load("omega7").diagram)).replace(
        json.dumps(load("omega7").to_dict()["arcs"][3]), json.dumps(data["arcs"][3]), 1))
    with pytest.raises(CatalogError) as err:
        load(str(p))
    msg = str(err.value)
    assert "bad.json" in msg and "line" in msg
