"""Farey graph combinatorics and upper half-plane model geometry."""

from pantsgraph._core import (  # noqa: F401
    CompletedPoint,
    FareyTriangle,
    Geodesic,
    Horoball,
    InducedPantsMap,
    IntMatrix2,
    Slope,
    UHPoint,
    act_on_slope,
    acts_trivially_on_slopes,
    angle_distance,
    apply_isometry,
    apply_to_completed,
    canonical_neighbor,
    chart_equal,
    closure_contains,
    completion_matrix,
    cutting_sequence,
    decompose,
    dense_direction,
    direction_at,
    edge_normalizer,
    equilateral_triangle,
    evaluate_word,
    farey_distance,
    farey_geodesic,
    geodesic_through,
    horoball_contains,
    horoballs_disjoint,
    hyp_distance,
    induced_pants_automorphism,
    intersection_number,
    is_adjacent,
    is_elementary_move,
    isolation_level,
    locate_triangle,
    make_slope,
    mediant,
    model_distance,
    model_metric_scale,
    neighbors_bounded,
    pants_distance,
    parse_slope,
    point_at_parameter,
    render_svg,
    run_verify,
    simplest_slope_between,
    slopes_up_to,
    stratum_of,
    triangle_contains,
    verification_suites,
)

__version__ = "0.1.0"
