import math

import pytest

import softdisc as sd


def test_canonical_energy_closed_form():
    for n in range(1, 200):
        assert sd.canonical_energy(n) == sd.harborth_energy(n)
    assert sd.canonical_energy(7) == -12
    assert sd.canonical_energy(19) == -42


def test_canonical_index():
    assert sd.canonical_index(10) == (1, 1, 1)
    assert sd.canonical_index(19) == (2, 0, 0)


def test_decompose_spiral():
    cfg = sd.canonical_configuration(19)
    b = sd.decompose(cfg)
    assert b["total"] == pytest.approx(-42.0)
    assert abs(b["residual"]) <= 1e-9
    assert b["per_gr"] == 12
    assert b["defect"] == 0
    assert b["simple_closed_boundary"] is True


def test_configuration_round_trip():
    cfg = sd.canonical_configuration(9)
    text = cfg.to_text()
    back = sd.Configuration.from_text(text)
    assert len(back) == 9
    assert back.to_text() == text
    assert back.all_lattice()
    assert back.delta == sd.DEFAULT_DELTA


def test_lattice_minimum():
    rep = sd.lattice_minimum(5)
    assert rep["best_energy"] == -7.0
    assert rep["states_visited"] == 22
    assert rep["method"] == "exhaustive"


def test_animal_counts():
    assert sd.count_lattice_animals(8) == 1448
    with pytest.raises(ValueError):
        sd.count_lattice_animals(13)


def test_zmax():
    assert sd.zmax(1.0 / 24.0) == pytest.approx(0.043819932862702543, abs=1e-15)


def test_infeasible_configuration():
    cfg = sd.Configuration.from_euclid([(0.0, 0.0), (0.5, 0.0)])
    assert sd.total_energy(cfg) == math.inf
    with pytest.raises(sd.InfeasibleError):
        sd.decompose(cfg)


def test_basin_hop_respects_spiral_bound():
    rep = sd.basin_hop(4, seed=7, restarts=6, box_side=2.5)
    assert rep["best_energy"] >= sd.canonical_energy(4) - 1e-9
    assert rep["best_energy"] < 0.0


def test_fan_survey():
    res = sd.fan_survey(500, sd.DEFAULT_DELTA, 99)
    assert res["fans_checked"] == 505
    assert res["min_margin"] >= -1e-12
    assert res["near_equality_count"] >= 5
    assert res["near_equality_all_hexlike"] is True


def test_boundary_growth():
    assert sd.boundary_growth_check(9)["removal_holds"] is False
    assert sd.boundary_growth_check(8)["removal_holds"] is True


def test_render_svg():
    svg = sd.render_svg(sd.canonical_configuration(7))
    assert "<svg" in svg and "</svg>" in svg
