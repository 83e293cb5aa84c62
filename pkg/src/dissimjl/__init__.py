"""Random projection for arbitrary dissimilarity matrices.

Any symmetric hollow matrix embeds exactly, either as signed squared
intervals in a pseudo-Euclidean space of signature (p, q) or as power
distances between Euclidean centers sharing a common radius.  Both
representations survive Gaussian random projection with quantified
distortion; this package implements the embeddings, the projections,
the bound checks, and a relational k-means to measure downstream
effects.
"""

from .core import (
    DEFAULT_TAU_REL,
    DissimilarityError,
    DissimilarityMatrix,
    GramDecomposition,
    NumericalError,
    as_matrix,
    center_gram,
    decompose,
    squared_distances,
    validate_matrix,
)
from .datagen import (
    BallSpec,
    SimplexSpec,
    gen_balls,
    gen_simplex,
    graph_hops,
    parse_edge_list,
)
from .evaluate import (
    ErrorStats,
    KMeansResult,
    PowerResidualCheck,
    PqBoundCheck,
    kmeans_projected,
    relational_cost,
    relational_kmeans,
    relative_error_stats,
    validate_power_residual,
    validate_pq_bound,
)
from .pipeline import METHODS, RunResult, report_dict, run_projection, signed_coords
from .power import (
    GaussianCluster,
    PowerRepresentation,
    euclideanize,
    power_distance,
    power_radius,
    power_representation,
    recover_centers,
    silhouette_gaussian,
    silhouette_normalized,
)
from .projection import (
    DEFAULT_DIM_CONSTANT,
    DEFAULT_EPSILON,
    JLMap,
    ProjectedPQ,
    ProjectedPower,
    ProjectionConfig,
    gaussian_map,
    project_classical,
    project_pq,
    project_power,
    reconstruct,
    target_dim,
)
from .pqspace import (
    PseudoEuclideanEmbedding,
    distortion_factor,
    embed_pq,
    euclid_interval,
    interval_matrices,
    norm_ratio_sample,
    pq_interval,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_DIM_CONSTANT",
    "DEFAULT_EPSILON",
    "DEFAULT_TAU_REL",
    "METHODS",
    "BallSpec",
    "DissimilarityError",
    "DissimilarityMatrix",
    "ErrorStats",
    "GaussianCluster",
    "GramDecomposition",
    "JLMap",
    "KMeansResult",
    "NumericalError",
    "PowerRepresentation",
    "PowerResidualCheck",
    "PqBoundCheck",
    "ProjectedPQ",
    "ProjectedPower",
    "ProjectionConfig",
    "PseudoEuclideanEmbedding",
    "RunResult",
    "SimplexSpec",
    "as_matrix",
    "center_gram",
    "decompose",
    "distortion_factor",
    "embed_pq",
    "euclid_interval",
    "euclideanize",
    "gaussian_map",
    "gen_balls",
    "gen_simplex",
    "graph_hops",
    "interval_matrices",
    "kmeans_projected",
    "norm_ratio_sample",
    "parse_edge_list",
    "power_distance",
    "power_radius",
    "power_representation",
    "pq_interval",
    "project_classical",
    "project_power",
    "project_pq",
    "reconstruct",
    "recover_centers",
    "relational_cost",
    "relational_kmeans",
    "relative_error_stats",
    "report_dict",
    "run_projection",
    "signed_coords",
    "silhouette_gaussian",
    "silhouette_normalized",
    "squared_distances",
    "target_dim",
    "validate_matrix",
    "validate_power_residual",
    "validate_pq_bound",
]
