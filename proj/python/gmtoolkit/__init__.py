"""Flat norm, mesh regularity and area-invariant reconstruction."""

from ._gmt import (
    Chain,
    CoefficientOverflowError,
    Complex,
    Decomposition,
    DegeneracyError,
    DomainError,
    FourierPolygon,
    GmtError,
    InfeasibleStartError,
    NoSolutionError,
    ParseError,
    RegularityReport,
    SolverIntegrityError,
    StructuralError,
    best_fit_circle,
    beta_constant,
    boundary,
    c_theta,
    circle_intersection_area,
    disk_polygon_area,
    flat_norm,
    grid_rotation,
    is_simple,
    lambda_breakpoints,
    lambda_sweep,
    mads_solve,
    mass,
    monte_carlo_area,
    objective,
    reconstruct,
    regularity_constant,
    sdt_bounds,
    signature,
    strip_complex,
)

__all__ = [name for name in dir() if not name.startswith("_")]
