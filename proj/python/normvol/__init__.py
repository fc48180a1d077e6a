"""Definitions of volume for polytopal normed spaces."""

from ._core import (
    Error,
    OptOptions,
    OptResult,
    SymmetricPolytope,
    Zonotope,
    compute,
    cross_polytope,
    cube,
    exact_oracle,
    experiment_names,
    induced_density,
    isoperimetrix_support,
    maximize,
    mc_volume,
    mixed_volume_v1,
    mu_tilde,
    objective,
    gradient,
    projection_body,
    random_symmetric_polytope,
    regular_polygon,
    run_experiment,
    volume,
    zonotope_volume,
)

__all__ = [
    "Error",
    "OptOptions",
    "OptResult",
    "SymmetricPolytope",
    "Zonotope",
    "compute",
    "cross_polytope",
    "cube",
    "exact_oracle",
    "experiment_names",
    "gradient",
    "induced_density",
    "isoperimetrix_support",
    "maximize",
    "mc_volume",
    "mixed_volume_v1",
    "mu_tilde",
    "objective",
    "projection_body",
    "random_symmetric_polytope",
    "regular_polygon",
    "run_experiment",
    "volume",
    "zonotope_volume",
]
