"""rescube: resonance graphs of plane bipartite graphs, their daisy-cube and
distributive-lattice codings, and brute-force verification of the
decomposition structure behind them."""

from . import errors
from .benzenoid import (
    benzenoid_from_text,
    build_benzenoid,
    catacondensed_polyhexes,
    hexagon_face_id,
    parse_benzenoid,
)
from .coding import (
    ColorSwapReport,
    ComposedLabelling,
    Labelling,
    color_swap_effect,
    compose_labellings,
    daisy_label_set,
    daisy_labelling,
    fdl_labelling,
    labelling_is_proper,
)
from .cube_kit import (
    ClassSplit,
    DaisyVerdict,
    MetricGraph,
    PartialCubeVerdict,
    ThetaClasses,
    check_median_split,
    expand,
    is_daisy_cube,
    is_median,
    is_partial_cube,
    label_leq,
    operator_o,
    split_class,
    theta_classes,
    theta_related,
)
from .decomposition import (
    FaceSplit,
    RfdSequence,
    auto_rfd,
    find_reducible_faces,
    rfd_from_face_order,
    split_by_face,
    theorem_report,
    verify_reducible_split,
)
from .matchings import (
    MatchingFamily,
    PerfectMatching,
    alternation_kind,
    enumerate_matchings,
    extremal_matchings,
    handle_predicate,
    is_resonant,
    matching_subset,
)
from .plane_graph import (
    Face,
    FacialHandleDecomposition,
    Handle,
    PlaneGraph,
    build_plane_graph,
    edge_subgraph,
    elementary_analysis,
    facial_handle_decomposition,
    from_rotation_system,
    graph_from_json,
    graph_to_json,
    handles,
    is_peripherally_two_colorable,
    swap_colors,
)
from .resonance import (
    ResonanceGraph,
    build_resonance,
    cartesian_compose,
    connectivity_report,
    resonance_to_dot,
    resonance_to_json,
    same_labelled_resonance,
)

__version__ = "0.1.0"
