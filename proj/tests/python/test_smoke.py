import pytest

import phtype


def test_catalog_algebras_pass_axioms():
    ids = phtype.catalog_ids()
    assert (3, 2) in ids and (4, 4) in ids
    for r, s in ids:
        ok, witness = phtype.verify_axioms(phtype.base_algebra(r, s))
        assert ok, witness


def test_construct_and_extend():
    a = phtype.construct(9, 8)
    assert a.signature == (9, 8)
    assert a.dim_v == 512
    b = phtype.extend(phtype.base_algebra(1, 0), "8,0")
    assert b.signature == (9, 0)
    assert phtype.verify_axioms(b)[0]
    with pytest.raises(ValueError):
        phtype.construct(3, 0)


def test_bracket_and_json_round_trip():
    a = phtype.base_algebra(8, 0)
    d = phtype.to_dict(a)
    assert len(d["structure"]) == 128
    b = phtype.from_dict(d)
    assert b.checksum() == a.checksum()
    k, sign = a.bracket(1, 9)
    assert 1 <= k <= 8 and sign in (1, -1)
    assert a.bracket(1, 1) is None
    assert a.bracket(1, 2) is None


def test_tables():
    csv = phtype.render_table(phtype.base_algebra(0, 8), "csv")
    assert csv.startswith("row\\col")
    assert "Z8~" in csv
    assert phtype.render_table(phtype.base_algebra(3, 2), "md").startswith("###")


def test_check_certificates():
    cert, code = phtype.check(3, 2, 2, 3)
    assert cert["kind"] == "NOT_ISO_PARITY" and code == 1
    cert, code = phtype.check(4, 0, 0, 4)
    assert cert["kind"] == "ISO" and code == 0
    assert phtype.check(3, 0, 0, 3)[0]["kind"] == "NOT_ISO_DIM"
    assert phtype.check(2, 0, 1, 1)[0]["kind"] == "NOT_ISO_SIGNATURE"


def test_gram_and_sbg():
    a = phtype.base_algebra(3, 2)
    x = [1, 0, 0, 0, 1, 0, 0, 0]
    assert phtype.gram_det(a, x) == 0
    assert phtype.adjoint_rank(a, x) < 5
    assert phtype.sbg(phtype.base_algebra(1, 1))["kind"] == "SBG_NO"
    assert phtype.sbg(phtype.base_algebra(2, 0))["kind"] == "SBG_YES"
    s = phtype.build_sum(phtype.base_algebra(2, 3), 2, 1)
    assert phtype.sbg(s)["kind"] == "SBG_NO"


def test_canonical_iso():
    f = phtype.canonical_iso(phtype.base_algebra(4, 0))
    assert f is not None
    assert phtype.canonical_iso(phtype.base_algebra(3, 2)) is None


def test_quick_acceptance():
    results = phtype.run_acceptance(quick=True)
    assert [r["criterion"] for r in results] == list(range(1, 9))
    assert all(r["pass"] for r in results), [r["line"] for r in results if not r["pass"]]
