"""Smoke tests for the python bindings."""

import math

import pytest

import graphtherm as gt


def test_build_and_inspect_graph():
    g = gt.build_graph("complete:5")
    assert g.order == 5
    assert g.edge_count == 10
    assert g.family == "complete:5"
    assert all(g.degree(v) == 4 for v in range(5))
    assert gt.is_connected(g)
    assert gt.is_circulant_labeled(g)


def test_bad_descriptor_raises():
    with pytest.raises(ValueError):
        gt.build_graph("badname:3")


def test_spectrum_levels():
    s = gt.make_spectrum(gt.build_graph("complete:5"))
    assert s.source == "analytic"
    assert [(lv.energy, lv.degeneracy) for lv in s.levels] == [(0.0, 1), (5.0, 4)]
    e1, g1 = gt.algebraic_connectivity(s)
    assert e1 == pytest.approx(5.0)
    assert g1 == 4


def test_numeric_matches_analytic():
    g = gt.build_graph("path:6")
    analytic = gt.analytic_spectrum(g)
    numeric = gt.numeric_spectrum(g)
    for a, b in zip(analytic.levels, numeric.levels):
        assert a.energy == pytest.approx(b.energy, abs=1e-9)
        assert a.degeneracy == b.degeneracy


def test_qfi_against_closed_form():
    g = gt.build_graph("complete:8")
    model = gt.ThermalModel(gt.make_spectrum(g), 1.0)
    assert gt.qfi(model) == pytest.approx(gt.qfi_exact_complete(8, 1.0), rel=1e-12)


def test_circulant_position_fi_is_null():
    model = gt.ThermalModel(gt.make_spectrum(gt.build_graph("cycle:8")), 1.0)
    assert abs(gt.fi_position(model)) < 1e-10
    probs = gt.position_probabilities(model)
    assert all(p == pytest.approx(1 / 8) for p in probs)


def test_fisher_additivity_under_products():
    g1 = gt.build_graph("path:3")
    g2 = gt.build_graph("cycle:4")
    prod = gt.cartesian_product(g1, g2)
    t = 2.0
    q1 = gt.qfi(gt.ThermalModel(gt.make_spectrum(g1), t))
    q2 = gt.qfi(gt.ThermalModel(gt.make_spectrum(g2), t))
    qp = gt.qfi(gt.ThermalModel(gt.make_spectrum(prod), t))
    assert qp == pytest.approx(q1 + q2, rel=1e-9)


def test_peak_location_routes_agree():
    result = gt.sweep_default(gt.build_graph("complete:10"), 300)
    assert result.peak_temperature == pytest.approx(
        10.0 / gt.solve_xmax(9), rel=1e-4
    )
    assert result.peak_qfi >= max(r.qfi for r in result.reports)


def test_fisher_report_fields():
    g = gt.build_graph("star:8")
    report = gt.fisher_report(g, gt.make_spectrum(g), 1.5)
    assert report.fi_position <= report.qfi + 1e-10
    # the star saturates the upper degree-square bound, so allow roundoff
    assert report.qfi_high_lower <= report.qfi_high <= report.qfi_high_upper + 1e-12
    assert 0.0 <= report.coherence <= 1.0
    assert "star" not in report.to_csv_row()  # plain numbers only


def test_crb_experiment_is_deterministic():
    g = gt.build_graph("complete:8")
    a = gt.crb_experiment(g, 1.0, gt.MeasurementKind.ENERGY, 2000, 100, 7)
    b = gt.crb_experiment(g, 1.0, gt.MeasurementKind.ENERGY, 2000, 100, 7)
    assert a.variance == b.variance
    assert a.excluded_trials == 0
    assert 0.5 < a.var_mf_ratio < 1.6
    assert a.rng_name == "mt19937_64/splitmix64"


def test_table_rows():
    rows = gt.table1_report(16, 5, 11)
    assert [r.label for r in rows] == [
        "complete", "cycle", "bipartite", "star", "path", "grid", "torus",
    ]
    complete = rows[0]
    assert complete.qfi_high_t4 == pytest.approx(15.0)
    assert complete.qfi_rel_dev < 0.01


def test_site_weights_are_uniform_for_circulant():
    s = gt.make_spectrum(gt.build_graph("cycle:6"))
    w = s.site_weights
    assert w.shape == (6, 6)
    assert abs(w - 1 / 6).max() < 1e-12


def test_coherence_identity():
    lhs, rhs = gt.complete_qfi_coherence_identity(10, 2.0)
    assert math.isclose(lhs, rhs, abs_tol=1e-12)


def test_zero_temperature_limits():
    limit = gt.zero_temperature_limit()
    assert (limit.qfi, limit.fi_position, limit.coherence) == (0.0, 0.0, 1.0)
    rho = gt.ground_state_density(4)
    assert abs(rho - 0.25).max() == 0.0
