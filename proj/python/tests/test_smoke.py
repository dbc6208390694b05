import math

import pytest

import polylab


def test_petersen_polygraph_is_27_6_regular():
    g = polylab.polygraph(polylab.petersen(), [1, 1, 0])
    assert g.num_vertices == 1000
    assert g.degree == 27
    assert polylab.common_neighbor_count(g) == 6


def test_counts_are_python_ints():
    assert polylab.a_S([2, 4, 6], 3) == 82944
    assert polylab.b_S([1, 2, 3], 3) == 40
    assert polylab.catalan_census(5, 2, 3) == 20


def test_formula_spectrum_matches_dense():
    base = polylab.petersen()
    dense = polylab.spectrum(polylab.polygraph(base, [1, 1]))
    formula = polylab.spectrum_by_formula(base, [1, 1])
    assert dense["lambda2"] == pytest.approx(formula["lambda2"])
    assert [m for _, m in dense["eigenvalues"]] == [m for _, m in formula["eigenvalues"]]


def test_link_spectrum():
    link = polylab.link([1, 1, 0], 3)
    assert link["connected"]
    groups = [(round(v), m) for v, m in link["spectrum"]["eigenvalues"]]
    assert groups == [(6, 1), (3, 6), (0, 12), (-3, 8)]


def test_bounds():
    assert polylab.abtb(5, 2) == pytest.approx(2 + 2 * math.sqrt(2))
    alpha, value = polylab.entropy_argmax(10, 3)
    c = math.sqrt(6)
    assert alpha == pytest.approx(c / (3 + 2 * c), abs=1e-9)
    assert value == pytest.approx(math.log2(3 + 2 * c), abs=1e-9)
    assert polylab.tradeoff_table()[0][0] == pytest.approx(0.062, abs=1e-3)
    assert polylab.overlap_fraction() > 0


def test_errors_surface_as_exceptions():
    with pytest.raises(polylab.PolylabError, match="GirthTooSmall"):
        polylab.polygraph(polylab.petersen(), [1, 2])
    with pytest.raises(ValueError):
        polylab.RegularGraph(3, [(0, 1), (1, 2)])
