"""Sharp inequalities between perimeter, area and deficit of triangles."""
from .diagram import (
    DiagramPoint,
    SliceBounds,
    contains,
    contains_points,
    cubic_h,
    cubic_h_prime,
    diagram_coordinates,
    invert,
    map_point,
    phi_minus,
    phi_plus,
    slice,
)
from .errors import ConvergenceError, DomainError, InconsistencyError, NotInDiagramError
from .geometry import (
    RaviParams,
    Triangle,
    area,
    deficit,
    is_acute,
    perimeter,
    ravi_to_sides,
    sides_to_ravi,
)
from .inequalities import (
    InequalityRecord,
    InequalityReport,
    check_acute_refinement,
    check_fh,
    check_optimal_bounds,
    check_perimeter_forms,
    check_reverse_fh,
    check_weitzenbock,
    empirical_sharp_constants,
    full_report,
)
from .sampling import SampleSet, grid_points, sample_grid, sample_random

__version__ = "0.1.0"
