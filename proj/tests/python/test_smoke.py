import os
import pathlib

import pytest

import invsg

DATA = pathlib.Path(os.environ.get("INVSG_DATA_DIR", pathlib.Path(__file__).parents[2] / "data"))


def test_validate_and_query():
    s = invsg.Carrier.validate([[0, 1], [1, 1]])
    assert len(s) == 2
    assert s.identity == 0
    assert s.le(1, 0) and not s.le(0, 1)
    assert s.idempotents() == [0, 1]
    assert s.sup([0, 1]) == 0


def test_validation_error_is_a_value_error():
    with pytest.raises(invsg.ValidationError):
        invsg.Carrier.validate([[0, 0], [1, 1]])
    with pytest.raises(ValueError):
        invsg.Carrier.validate([])


def test_json_round_trip():
    s = invsg.read_subject_file(str(DATA / "brandt2.json"))
    assert invsg.Carrier.from_json(s.to_json()) == s


def test_symmetric_inverse_monoid_sizes():
    assert [len(invsg.symmetric_inverse_monoid(n)) for n in (1, 2, 3)] == [2, 7, 34]


def test_enumeration_and_isomorphism():
    subs = invsg.enumerate_inverse_subsemigroups(2, 10)
    assert len(subs) == 10
    for i, a in enumerate(subs):
        for b in subs[i + 1:]:
            assert not invsg.isomorphic(a, b)


def test_coset_monoid():
    assert len(invsg.coset_monoid("C2")) == 3
    assert "Q8" in invsg.small_group_names()


def test_bicyclic_arithmetic():
    f = invsg.family("bicyclic-nat")
    assert f.op(["2", "1"], ["3", "4"]) == ["4", "4"]
    assert f.inv(["2", "1"]) == ["1", "2"]
    assert f.is_idempotent(f.sigma(["2", "1"]))


def test_rotation_product_is_exact():
    f = invsg.family("rotation")
    x = f.op(["1/2", "1/3"], ["1", "1/2"])
    assert x == ["1/2", "5/6"]


def test_cex_fails_mirror():
    (r,) = invsg.check("mirror", "family:cex", budget=500)
    assert r["verdict"] == "fail"
    assert r["counterexample"]["chain"] == "1-2^-k"


def test_finite_carrier_passes_everything():
    reports = invsg.check("all", str(DATA / "clifford3.json"))
    assert [r["suite"] for r in reports] == invsg.suite_names()
    assert all(r["verdict"] != "fail" for r in reports)


def test_classify_rotation():
    c = invsg.classify("family:rotation", budget=500)
    assert c["mirror"] and c["continuous"] and not c["algebraic"]


def test_bad_subject():
    with pytest.raises(ValueError):
        invsg.check("mirror", "family:nope")
