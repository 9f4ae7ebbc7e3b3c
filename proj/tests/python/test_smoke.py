"""Smoke tests for the python bindings."""

import _cubestrata as cs


CUBE = [[[x, y, z] for x in (0, 1) for y in (0, 1) for z in (0, 1)]]


def test_enumeration_counts():
    assert cs.count_triangulations() == 74
    all_subdivisions = cs.enumerate_subdivisions()
    assert len(all_subdivisions) > 74
    orbits = cs.enumerate_subdivisions(up_to_symmetry=True)
    assert len(orbits) < len(all_subdivisions)


def test_from_heights_and_bullet():
    heights = {format(v, "03b"): "0" for v in range(8)}
    heights["000"] = "1"
    sub = cs.from_heights(heights)
    assert len(sub["cells"]) == 2

    out = cs.bullet_heights(heights)
    assert out["drops"] == [{"apex": "000", "q": "1"}]
    assert all(value == "0" for value in out["heights"].values())

    bullet = cs.bullet(sub["cells"])
    assert len(bullet["cells"]) == 1


def test_regularity_and_dimension():
    reg = cs.is_regular(CUBE)
    assert reg["regular"]
    assert cs.stratum_dimension(CUBE) == 4
    assert cs.h1_trivial(CUBE)


def test_classification():
    coeffs = {format(v, "03b"): "1" for v in range(8)}
    rep = cs.classify(CUBE, coeffs)
    assert rep["case"] == "III"
    assert rep["cusp"] == "odd2"
    assert rep["components"] == 3
    assert cs.hyperdeterminant(coeffs) == "0"


def test_vinberg_and_atlas():
    run = cs.vinberg("even", max_height=10)
    assert run["terminated"]
    assert len(run["accepted"]) == 6

    odd1 = cs.odd1_subdiagram_classes(window=5)
    assert odd1["total_classes"] == 3

    assert cs.maximal_components() == [3, 3, 1]
