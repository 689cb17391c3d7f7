"""Grid coverage protocol simulator and analytic bounds engine."""

from sweepcover._core import (
    BoundsError,
    EngineError,
    IoError,
    RegionError,
    area_lower_bound_step,
    canonicalize_region,
    digamma,
    dynamic_bound,
    feasibility,
    gamma_params,
    generate_region,
    quarter_sphere_count,
    region_from_tiles,
    region_stats,
    region_tiles,
    run,
    spread_region,
    static_bound,
)

__all__ = [
    "BoundsError",
    "EngineError",
    "IoError",
    "RegionError",
    "area_lower_bound_step",
    "canonicalize_region",
    "digamma",
    "dynamic_bound",
    "feasibility",
    "gamma_params",
    "generate_region",
    "quarter_sphere_count",
    "region_from_tiles",
    "region_stats",
    "region_tiles",
    "run",
    "spread_region",
    "static_bound",
]
