"""Smoke test for the pypreproj extension module."""

import pypreproj


def main():
    a = pypreproj.Algebra.preprojective("A3")
    assert (a.name, a.dim, a.vertex_count) == ("A3", 10, 3), a
    assert a.is_self_injective()
    assert pypreproj.Algebra.nakayama(3, 3).bigraded_dim(1, 1) == 1

    g = pypreproj.WeylGroup("A3")
    assert len(g.elements()) == 24
    assert g.sigma4_label("3,2,3") == "(13)"

    c = pypreproj.Classifier("A3")
    assert len(c.modules()) == 12
    assert c.dims("M") == [1, 1, 1]
    assert c.ext_dim("S2", "S2", 1) == 0 and c.ext_dim("S2", "S2", 2) > 0
    records = c.classify()
    assert len(records) == 24
    row = next(r for r in records if r["label"] == "(13)")
    assert row["wide"] == ["P1"] and row["tag"] == "K" and row["homological"]
    assert c.is_homological(["P3"]) and not c.is_homological(["S2"])
    assert c.to_tsv().startswith("#label\tword")

    ok, text = pypreproj.verify("theoremB", ty="A3")
    assert ok, text
    ok, text = pypreproj.verify("nakayama")
    assert ok, text
    try:
        pypreproj.verify("nosuch")
    except ValueError:
        pass
    else:
        raise AssertionError("unknown suite accepted")
    print("smoke test passed")


if __name__ == "__main__":
    main()
