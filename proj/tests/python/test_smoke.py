import math

import pytest

import ckbound


def test_icosahedron_spectrum():
    s = ckbound.spectrum("icosahedron")
    assert s["n"] == 12
    assert s["exact"]
    assert [(e["value"], e["mult"]) for e in s["spectrum"]] == [
        ("5", 1), ("sqrt(5)", 3), ("-1", 5), ("-sqrt(5)", 3)]
    numeric = ckbound.spectrum("icosahedron", numeric=True)
    assert not numeric["exact"]
    assert max(e["value"] for e in numeric["spectrum"]) == pytest.approx(5)


def test_certificate_and_recheck():
    c = ckbound.certify("icosahedron", 4)
    assert c["ratio"]["exact"] == "1/12+1/12*sqrt(5)"
    assert c["ratio"]["float"] == pytest.approx((1 + math.sqrt(5)) / 12)
    assert c["verification"] == "verified"
    ckbound.recheck(c)
    c["ratio"]["exact"] = "3/10"
    with pytest.raises(ckbound.ConsistencyError):
        ckbound.recheck(c)


def test_table():
    rows = ckbound.table()
    assert len(rows) == 21
    assert all(r["match"] for r in rows)
    assert rows[-1]["expected"] == "7/69"
    for r in rows:
        assert r["ratio"]["float"] <= ckbound.nikiforov_upper(r["k"]) + 1e-12


def test_graph6():
    assert ckbound.graph6_encode(3, [(0, 1), (0, 2), (1, 2)]) == "Bw"
    assert ckbound.graph6_decode("B?") == (3, [])
    n, edges = ckbound.graph6_decode("C~")
    assert n == 4 and len(edges) == 6
    with pytest.raises(ckbound.ParseError):
        ckbound.graph6_decode("B ")
    assert sorted(ckbound.eigenvalues("Bw")) == pytest.approx([-1, -1, 2])


def test_search():
    r = ckbound.exhaustive(2, 4)
    assert r["best_ratio"] == pytest.approx(0.5)
    a = ckbound.search(4, 10, seed=3, budget=2000)
    b = ckbound.search(4, 10, seed=3, budget=2000)
    assert a == b
    assert a["best_ratio"] <= ckbound.nikiforov_upper(4)
    with pytest.raises(ValueError):
        ckbound.search(4, 10, method="tabu")


def test_errors():
    with pytest.raises(ckbound.ParseError):
        ckbound.spectrum("johnson:x")
    with pytest.raises(ckbound.InfeasibleParameters):
        ckbound.spectrum("srg:10,3,1,1")
    with pytest.raises(ValueError):
        ckbound.certify("icosahedron", 13)


def test_verify():
    assert all(c["passed"] for c in ckbound.verify())
