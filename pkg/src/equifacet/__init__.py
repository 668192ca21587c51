"""Surface-area maximization for equifacetal polytopes inscribed in the unit sphere.

The library has three layers plus a command-line surface:

* :mod:`equifacet.geom` -- convex hulls, surface areas, facet congruence
  tests and the closed-form reference constructions.
* :mod:`equifacet.combinat` -- polytope-graph catalogs, facet-isosceles
  edge 2-colorings and the pruning rules that eliminate them.
* :mod:`equifacet.realize` -- realization equations for the surviving
  classes, refutations for the collapsing ones, and a seeded stochastic
  maximizer used as an independent cross-check.
* :mod:`equifacet.cli` -- ``equifacet table|prune|verify|optimize``.
"""
from . import cli, combinat, geom, realize
from .combinat import (
    EdgeColoring,
    EliminationVerdict,
    PolytopeGraph,
    builtin_catalog,
    enumerate_colorings,
    load_catalog,
    prune,
    survivors,
)
from .geom import (
    DegenerateInput,
    FacetShape,
    Realization,
    asymptotic_bounds,
    bipyramid_max_area,
    classify_facets,
    congruence_defect,
    convex_hull,
    is_equifacetal_member,
    surface_area,
)
from .realize import (
    ClassRealization,
    OptimizerConfig,
    RefutationReport,
    TheoremReport,
    optimize_sphere,
    verify_theorem,
)

__version__ = "0.1.0"

__all__ = [
    "EdgeColoring",
    "EliminationVerdict",
    "PolytopeGraph",
    "builtin_catalog",
    "enumerate_colorings",
    "load_catalog",
    "prune",
    "survivors",
    "DegenerateInput",
    "FacetShape",
    "Realization",
    "asymptotic_bounds",
    "bipyramid_max_area",
    "classify_facets",
    "congruence_defect",
    "convex_hull",
    "is_equifacetal_member",
    "surface_area",
    "ClassRealization",
    "OptimizerConfig",
    "RefutationReport",
    "TheoremReport",
    "optimize_sphere",
    "verify_theorem",
    "cli",
    "combinat",
    "geom",
    "realize",
]
