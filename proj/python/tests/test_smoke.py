"""Smoke tests for the commhom_py extension module."""

import commhom_py as ch


def test_facts():
    facts = ch.facts("A3")
    assert facts["group"] == "SU(4)"
    assert facts["rank"] == 3
    assert facts["dim"] == 15
    assert facts["weyl_order"] == 24
    assert facts["degrees"] == [2, 3, 4]


def test_subcomplex_fixture():
    sub = ch.subcomplex("A2", 2, 0)
    assert sub["faces"] == ["1", "2", "3", "12", "13", "23"]
    assert sub["f_vector"] == [3, 3]
    assert sub["euler"] == 0


def test_detect():
    hit = ch.detect("G2", 3)
    assert hit["detected"] is True
    assert hit["witness_k"] == 0
    assert hit["equivalence_ok"] is True
    miss = ch.detect("D5", 3)
    assert miss["detected"] is False
    assert miss["equivalence_ok"] is True


def test_homology_circle():
    groups = ch.homology("A2", 2, 0)
    by_degree = {entry["degree"]: entry["group"] for entry in groups}
    assert by_degree[1] == "Z"
    assert by_degree[0] == "0"


def test_weighted_homology_su2():
    levels = ch.weighted_homology("A1", 2)
    assert levels[0]["group"] == "Z+Z/2"
    assert levels[0]["degree"] == 3
    assert levels[1]["group"] == "0"


def test_poincare_series():
    assert ch.poincare_series("A1", 1, 3) == [1, 0, 0, 1]
    assert ch.poincare_series("A1", 2, 4) == [1, 0, 1, 2, 0]


def test_cone_apex():
    assert ch.cone_apex("B3", 3, 0) is not None
    assert ch.cone_apex("A2", 2, 0) is None


def test_run_check():
    result = ch.run_check("delta-fixtures")
    assert result["pass"] is True
    assert "delta-fixtures" in ch.check_names()


def test_errors():
    try:
        ch.facts("Q9")
    except ch.CommhomError:
        pass
    else:
        raise AssertionError("expected CommhomError")


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            fn()
            print(f"{name} ok")
