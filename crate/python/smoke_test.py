"""Smoke test for the inertia_py extension module.

Build and install with `pip install --no-build-isolation ./crates/python`
(needs maturin), then run `python python/smoke_test.py`.
"""

import pathlib

import inertia_py

ROOT = pathlib.Path(__file__).resolve().parent.parent


def entry(table, i, j):
    return table["entries"][i][j]


def main():
    st = inertia_py.Stack.weighted_projective([1, 3, 3])
    sectors = st.sectors()["sectors"]
    assert [s["age"] for s in sectors] == ["0", "1/3", "2/3"], sectors

    orb = st.table("orbifold")
    assert entry(orb, 1, 1)["sector"] == 2
    assert entry(orb, 1, 1)["text"] == "1"
    assert entry(orb, 2, 2)["text"] == "1 - 2*chi^2 + chi^5"

    chow = st.table("vplus:T*", theory="chow")
    assert [entry(chow, i, j)["text"] for i, j in [(1, 1), (1, 2), (2, 2)]] == ["-t", "-t^2", "t"]

    report = st.check()
    assert all(r["passed"] for r in report), report

    p12 = inertia_py.Stack.from_file(str(ROOT / "configs" / "p12.json"))
    assert entry(p12.table("localized"), 1, 1)["text"] == "-1/4 - 1/2*chi + 3/4*chi^2"
    assert "supports:" in p12.localize(text=True)

    bmu3 = inertia_py.Stack.classifying(3)
    assert len(bmu3.sectors()["sectors"]) == 3

    try:
        inertia_py.Stack.weighted_projective([1, 0])
    except ValueError as e:
        assert "stabilizer" in str(e), e
    else:
        raise AssertionError("zero weight accepted")

    print("python smoke test: ok")


if __name__ == "__main__":
    main()
