"""Gaussian random projection with signed and power-shifted variants.

The target dimension follows the usual JL budget
m = ceil(c * log2(n) / eps^2).  Signed embeddings project their
positive and negative parts with independent maps into separate copies
of R^m; power representations project centers only and carry the
radius through unchanged.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import DissimilarityError, squared_distances
from .power import PowerRepresentation
from .pqspace import PseudoEuclideanEmbedding

DEFAULT_EPSILON = 0.5
DEFAULT_DIM_CONSTANT = 2.0


@dataclass(frozen=True)
class ProjectionConfig:
    """Distortion budget and seed for a projection run."""

    epsilon: float = DEFAULT_EPSILON
    dim_constant: float = DEFAULT_DIM_CONSTANT
    seed: int = 0

    def __post_init__(self):
        if not 0.0 < self.epsilon < 1.0:
            raise DissimilarityError(
                f"epsilon must lie in (0, 1), got {self.epsilon}"
            )
        if self.dim_constant <= 0.0:
            raise DissimilarityError(
                f"dim constant must be positive, got {self.dim_constant}"
            )


def target_dim(n: int, config: ProjectionConfig) -> int:
    """ceil(c * log2(n) / eps^2), at least 1.  Needs n >= 2."""
    if n < 2:
        raise DissimilarityError(f"need at least two points, got n = {n}")
    m = math.ceil(config.dim_constant * math.log2(n) / config.epsilon**2)
    return max(1, m)


@dataclass(frozen=True)
class JLMap:
    """Linear map x -> M x given by an (m, d) Gaussian matrix."""

    matrix: np.ndarray
    seed: int

    @property
    def out_dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def in_dim(self) -> int:
        return self.matrix.shape[1]

    def apply(self, X) -> np.ndarray:
        """Map each row of an (n, d) array, returning (n, m).

        A d = 0 map sends everything to the zero vector of R^m.
        """
        X = np.asarray(X, dtype=float)
        if X.shape[-1] != self.in_dim:
            raise DissimilarityError(
                f"expected {self.in_dim} input coordinates, got {X.shape[-1]}"
            )
        return X @ self.matrix.T


def gaussian_map(out_dim: int, in_dim: int, seed: int) -> JLMap:
    """JL map with entries iid N(0, 1/out_dim) from default_rng(seed)."""
    if out_dim < 1:
        raise DissimilarityError(f"output dimension must be >= 1, got {out_dim}")
    if in_dim < 0:
        raise DissimilarityError(f"input dimension must be >= 0, got {in_dim}")
    rng = np.random.default_rng(seed)
    M = rng.normal(0.0, 1.0 / math.sqrt(out_dim), size=(out_dim, in_dim))
    return JLMap(M, seed)


@dataclass(frozen=True)
class ProjectedPQ:
    """Signed embedding after projection; parts may have dimension 0."""

    pos_coords: np.ndarray
    neg_coords: np.ndarray

    @property
    def n(self) -> int:
        return self.pos_coords.shape[0]


@dataclass(frozen=True)
class ProjectedPower:
    """Projected ball centers with the radius carried through."""

    centers: np.ndarray
    radius: float

    @property
    def n(self) -> int:
        return self.centers.shape[0]


def project_classical(coords, config: ProjectionConfig) -> np.ndarray:
    """Project coordinate rows to the target dimension for their count."""
    X = np.asarray(coords, dtype=float)
    m = target_dim(X.shape[0], config)
    return gaussian_map(m, X.shape[1], config.seed).apply(X)


def project_pq(
    emb: PseudoEuclideanEmbedding, config: ProjectionConfig
) -> ProjectedPQ:
    """Project both signature parts with independent maps.

    The positive part uses the configured seed, the negative part
    seed + 1; each lands in its own copy of the target dimension so the
    signed interval form survives.  An empty part stays empty.
    """
    m = target_dim(emb.n, config)
    if emb.p > 0:
        pos = gaussian_map(m, emb.p, config.seed).apply(emb.pos_coords)
    else:
        pos = np.zeros((emb.n, 0))
    if emb.q > 0:
        neg = gaussian_map(m, emb.q, config.seed + 1).apply(emb.neg_coords)
    else:
        neg = np.zeros((emb.n, 0))
    return ProjectedPQ(pos, neg)


def project_power(
    rep: PowerRepresentation, config: ProjectionConfig
) -> ProjectedPower:
    """Project the centers; the common radius is not touched."""
    m = target_dim(rep.n, config)
    centers = gaussian_map(m, rep.dim, config.seed).apply(rep.centers)
    return ProjectedPower(centers, rep.radius)


def reconstruct(projected) -> np.ndarray:
    """Dissimilarity matrix induced by a projected object.

    Accepts a ProjectedPQ (signed squared intervals), a ProjectedPower
    (squared center distances minus 4 r^2 off the diagonal), or a plain
    coordinate array (squared Euclidean distances).  The result is
    symmetric with a zero diagonal; entries may be negative for the
    first two forms.
    """
    if isinstance(projected, ProjectedPQ):
        D = squared_distances(projected.pos_coords) - squared_distances(
            projected.neg_coords
        )
    elif isinstance(projected, ProjectedPower):
        D = squared_distances(projected.centers) - 4.0 * projected.radius**2
    else:
        D = squared_distances(projected)
    np.fill_diagonal(D, 0.0)
    return D
