import math

import numpy as np
import pytest

import normvol


def test_cube_values():
    cube = normvol.cube(3)
    assert cube.volume == pytest.approx(8.0)
    assert normvol.volume("new", cube) == pytest.approx(128 / (9 * math.pi), abs=1e-9)
    assert normvol.volume("holmes_thompson", cube) == pytest.approx(8 / math.pi)
    report = normvol.compute(cube)
    assert set(report["values"]) == {"busemann", "holmes_thompson", "mass_star", "ivanov", "new"}
    assert report["new_optimizer"].gap <= 1e-9


def test_planar_bodies_reproduce_pi():
    for m in range(2, 9):
        body = normvol.random_symmetric_polytope(2, m, seed=m)
        assert normvol.volume("new", body) == pytest.approx(math.pi, abs=1e-9)


def test_polygon_from_numpy():
    body = normvol.SymmetricPolytope(2, [np.array([1.0, 1.0]), np.array([1.0, -1.0])])
    assert body.volume == pytest.approx(4.0)
    assert body.support(np.array([1.0, 2.0])) == pytest.approx(3.0)
    assert body.polar().volume == pytest.approx(2.0)
    assert len(body.facets) == 4


def test_optimizer_matches_oracle():
    pts = [np.array([1.0, 0.0, 0.0]), np.array([0.0, 1.0, 0.0]), np.array([0.0, 0.0, 1.0]), np.array([0.6, 0.5, 0.4])]
    r = normvol.maximize(pts)
    o = normvol.exact_oracle(pts, 1 / 100)
    assert r.objective == pytest.approx(o.objective, rel=1e-4)
    assert sum(r.weights) == pytest.approx(1.0)


def test_densities():
    cube = normvol.cube(3)
    plane = [np.array([1.0, 0.0, 0.0]), np.array([0.0, 1.0, 0.0])]
    assert normvol.induced_density("new", cube, plane) == pytest.approx(math.pi / 4)
    assert normvol.mu_tilde(cube, 2, [1.0, 0.0, 0.0]) == pytest.approx(math.pi / 4)
    square = normvol.cube(2)
    assert normvol.isoperimetrix_support(square, np.array([0.3, -0.8])) == pytest.approx(0.8)


def test_zonotopes():
    z = normvol.projection_body(normvol.cube(3))
    assert normvol.zonotope_volume(z) == pytest.approx(512.0)
    assert z.to_polytope().volume == pytest.approx(512.0)


def test_errors_are_value_errors():
    with pytest.raises(normvol.Error, match="degenerate"):
        normvol.SymmetricPolytope(2, [np.array([1.0, 1.0]), np.array([2.0, 2.0])])
    with pytest.raises(ValueError):
        normvol.volume("lebesgue", normvol.cube(2))


def test_experiment_records():
    recs = normvol.run_experiment("petty_projection", 3, 3, seed=1)
    assert len(recs) == 3
    assert all(r["pass"] for r in recs)
    assert "petty_conjecture" in normvol.experiment_names()
    est, se = normvol.mc_volume(normvol.cross_polytope(3), 100000, 3)
    assert abs(est - 4 / 3) <= 4 * se
