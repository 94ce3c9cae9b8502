"""Exact distance invariants, witness constructions and exhaustive bound
verification for 2-connected outerplanar graphs."""

from .bounds import (
    BoundValue,
    chordal_radius_interval,
    prox_bound_2conn,
    prox_bound_mop,
    prox_cert_numerator,
    radius_bound,
    remoteness_bound,
)
from .dissect import (
    Dissection,
    QnReport,
    VerificationSummary,
    canonical_form,
    count_dissections,
    count_triangulations,
    enumerate_dissections,
    estimate_qn,
    verify_bounds_over,
)
from .embedding import (
    EmbeddingCheck,
    Face,
    NotBiconnected,
    NotOuterplanar,
    OuterplaneEmbedding,
    WeakDualTree,
    interior_faces,
    max_face_length,
    recognize,
    verify_embedding,
    weak_dual,
)
from .families import (
    GeneratedGraph,
    gen_cycle,
    gen_fan,
    gen_hn3,
    gen_hnq,
    gen_ladder,
    gen_path,
    generate_family,
)
from .graphs import (
    DisconnectedGraph,
    Graph,
    GraphInputError,
    MetricsReport,
    all_distances,
    bfs_distances,
    build_graph,
    check_classical_bounds,
    global_metrics,
    vertex_metrics,
)
from .medians import (
    WeightedCycle,
    WeightedTree,
    ZeroTotalWeight,
    central_face,
    cycle_median,
    cycle_weighted_transmission,
    tree_median,
)
from .witness import (
    FaceTooLong,
    SegmentDecomposition,
    WitnessCertificate,
    boundary_weights,
    f_cap,
    proximity_witness,
    radius_witness,
    segment_decomposition,
)

__version__ = "0.1.0"
