"""Distortion statistics, bound checks, and relational clustering."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import DissimilarityError, as_matrix, squared_distances
from .pqspace import PseudoEuclideanEmbedding, interval_matrices

DEFAULT_RESTARTS = 10


@dataclass(frozen=True)
class ErrorStats:
    """Relative reconstruction error summary over usable pairs."""

    max_rel: float
    mean_rel: float
    median_rel: float
    excluded_pairs: int


def relative_error_stats(D, Dhat) -> ErrorStats:
    """Relative error |D - Dhat| / |D| over off-diagonal nonzero pairs.

    Pairs with D_ij = 0 carry no relative error; they are excluded and
    counted.  Non-finite reconstructed entries push max and mean to
    infinity rather than being dropped.
    """
    A = as_matrix(D)
    Ah = np.asarray(Dhat, dtype=float)
    iu = np.triu_indices(A.shape[0], 1)
    d = A[iu]
    dh = Ah[iu]
    mask = d != 0.0
    excluded = int(np.sum(~mask))
    if not mask.any():
        return ErrorStats(0.0, 0.0, 0.0, excluded)
    rel = np.abs(dh[mask] - d[mask]) / np.abs(d[mask])
    rel = np.where(np.isfinite(rel), rel, np.inf)
    return ErrorStats(
        float(rel.max()),
        float(rel.mean()),
        float(np.median(rel)),
        excluded,
    )


@dataclass(frozen=True)
class PqBoundCheck:
    """Per-pair band check for the signed projection route.

    Arrays run over the upper triangle (i < j).  The band around each
    D_ij has half-width epsilon * euclid_interval, which equals
    epsilon * C_ij * |D_ij| wherever the factor C_ij is finite.  Pairs
    with an infinite factor are excluded from the rate and counted.
    """

    i: np.ndarray
    j: np.ndarray
    expected: np.ndarray
    observed: np.ndarray
    factor: np.ndarray
    lower: np.ndarray
    upper: np.ndarray
    violated: np.ndarray
    excluded: np.ndarray

    @property
    def excluded_pairs(self) -> int:
        return int(self.excluded.sum())

    @property
    def violation_rate(self) -> float:
        usable = int((~self.excluded).sum())
        if usable == 0:
            return 0.0
        return float(self.violated.sum() / usable)


def validate_pq_bound(
    D, emb: PseudoEuclideanEmbedding, Dhat, epsilon: float
) -> PqBoundCheck:
    """Check a reconstruction against the factor-widened band of D."""
    A = as_matrix(D)
    pq, eu = interval_matrices(emb)
    iu = np.triu_indices(A.shape[0], 1)
    d = A[iu]
    dh = np.asarray(Dhat, dtype=float)[iu]
    pqv = pq[iu]
    euv = eu[iu]
    safe = np.where(pqv != 0.0, pqv, 1.0)
    factor = np.where(
        pqv != 0.0,
        np.abs(euv / safe),
        np.where(euv == 0.0, 1.0, np.inf),
    )
    half = epsilon * euv
    lower = d - half
    upper = d + half
    excluded = ~np.isfinite(factor)
    violated = ((dh < lower) | (dh > upper)) & ~excluded
    return PqBoundCheck(iu[0], iu[1], d, dh, factor, lower, upper, violated, excluded)


@dataclass(frozen=True)
class PowerResidualCheck:
    """Residual beyond the multiplicative band, against the 4 eps r^2 slack.

    residual_ij = max(0, |Dhat_ij - D_ij| - epsilon |D_ij|) over the
    upper triangle; the additive slack bound is shared by all pairs.
    """

    i: np.ndarray
    j: np.ndarray
    expected: np.ndarray
    observed: np.ndarray
    residuals: np.ndarray
    bound: float

    @property
    def max_residual(self) -> float:
        return float(self.residuals.max()) if self.residuals.size else 0.0

    @property
    def fraction_within(self) -> float:
        if self.residuals.size == 0:
            return 1.0
        return float(np.mean(self.residuals <= self.bound))


def validate_power_residual(
    D, radius: float, Dhat, epsilon: float
) -> PowerResidualCheck:
    """Check a power-route reconstruction against the additive slack."""
    A = as_matrix(D)
    iu = np.triu_indices(A.shape[0], 1)
    d = A[iu]
    dh = np.asarray(Dhat, dtype=float)[iu]
    resid = np.maximum(0.0, np.abs(dh - d) - epsilon * np.abs(d))
    return PowerResidualCheck(
        iu[0], iu[1], d, dh, resid, 4.0 * epsilon * radius**2
    )


@dataclass(frozen=True)
class KMeansResult:
    """Clustering outcome scored by the relational cost."""

    assignment: np.ndarray
    cost: float
    iterations: int
    restarts: int
    seed: int

    @property
    def k(self) -> int:
        return int(np.unique(self.assignment).size)


def relational_cost(D, assignment) -> float:
    """Sum over clusters of within-cluster dissimilarity over 2|C|.

    Coincides with the squared-Euclidean k-means objective when D holds
    squared Euclidean distances; meaningful (possibly negative) for any
    symmetric hollow D.
    """
    A = as_matrix(D)
    labels = np.asarray(assignment)
    total = 0.0
    for c in np.unique(labels):
        members = np.flatnonzero(labels == c)
        block = A[np.ix_(members, members)]
        total += block.sum() / (2.0 * members.size)
    return float(total)


def _one_hot(labels, k):
    Z = np.zeros((labels.size, k))
    Z[np.arange(labels.size), labels] = 1.0
    return Z


def _lloyd_relational(A, k, seed, max_iter):
    """One relational Lloyd run; returns (labels, iterations)."""
    rng = np.random.default_rng(seed)
    n = A.shape[0]
    perm = rng.permutation(n)
    labels = np.empty(n, dtype=int)
    labels[perm[:k]] = np.arange(k)
    labels[perm[k:]] = rng.integers(0, k, size=n - k)
    for it in range(1, max_iter + 1):
        Z = _one_hot(labels, k)
        sizes = Z.sum(axis=0)
        S = A @ Z
        within = np.diag(Z.T @ S)
        # d(i, C) = mean_j D_ij - within / (2 |C|^2); reduces to the
        # distance-to-centroid when D is squared Euclidean.
        dist = S / sizes - within / (2.0 * sizes**2)
        new_labels = np.argmin(dist, axis=1)
        for c in range(k):
            if not np.any(new_labels == c):
                # steal the point that fits its current cluster worst
                fit = dist[np.arange(n), new_labels]
                candidates = np.flatnonzero(
                    np.bincount(new_labels, minlength=k)[new_labels] > 1
                )
                mover = candidates[np.argmax(fit[candidates])]
                new_labels[mover] = c
        if np.array_equal(new_labels, labels):
            return labels, it
        labels = new_labels
    return labels, max_iter


def relational_kmeans(
    D,
    k: int,
    seed: int = 0,
    restarts: int = DEFAULT_RESTARTS,
    max_iter: int = 100,
) -> KMeansResult:
    """Lloyd iteration driven by dissimilarities alone.

    Each restart t initializes its assignment from default_rng(seed + t)
    with every cluster seeded nonempty; the restart with the lowest
    final relational cost wins.
    """
    A = as_matrix(D)
    n = A.shape[0]
    if not 1 <= k <= n:
        raise DissimilarityError(f"k must lie in [1, {n}], got {k}")
    if restarts < 1:
        raise DissimilarityError(f"restarts must be >= 1, got {restarts}")
    best = None
    for t in range(restarts):
        labels, iters = _lloyd_relational(A, k, seed + t, max_iter)
        cost = relational_cost(A, labels)
        if best is None or cost < best[1]:
            best = (labels, cost, iters)
    return KMeansResult(best[0], best[1], best[2], restarts, seed)


def _lloyd_euclidean(X, k, seed, max_iter):
    """One standard Lloyd run on coordinate rows; returns (labels, iters)."""
    rng = np.random.default_rng(seed)
    n = X.shape[0]
    centers = X[rng.choice(n, size=k, replace=False)].copy()
    labels = None
    for it in range(1, max_iter + 1):
        d2 = (
            np.einsum("ij,ij->i", X, X)[:, None]
            - 2.0 * X @ centers.T
            + np.einsum("ij,ij->i", centers, centers)[None, :]
        )
        new_labels = np.argmin(d2, axis=1)
        for c in range(k):
            members = new_labels == c
            if not members.any():
                # reseed an empty center at the worst-served point
                far = int(np.argmax(d2[np.arange(n), new_labels]))
                centers[c] = X[far]
                new_labels[far] = c
                members = new_labels == c
            centers[c] = X[members].mean(axis=0)
        if labels is not None and np.array_equal(new_labels, labels):
            return labels, it
        labels = new_labels
    return labels, max_iter


def kmeans_projected(
    D,
    coords,
    k: int,
    seed: int = 0,
    restarts: int = DEFAULT_RESTARTS,
    max_iter: int = 100,
) -> KMeansResult:
    """Standard Lloyd on coordinate rows, scored relationally on D.

    The Euclidean objective drives the iterations; the reported cost
    (and the best-of-restarts selection) uses the relational cost on
    the original matrix, so results are comparable across embeddings.
    """
    A = as_matrix(D)
    X = np.asarray(coords, dtype=float)
    n = A.shape[0]
    if X.shape[0] != n:
        raise DissimilarityError(
            f"coordinate rows ({X.shape[0]}) do not match matrix size ({n})"
        )
    if not 1 <= k <= n:
        raise DissimilarityError(f"k must lie in [1, {n}], got {k}")
    if restarts < 1:
        raise DissimilarityError(f"restarts must be >= 1, got {restarts}")
    best = None
    for t in range(restarts):
        labels, iters = _lloyd_euclidean(X, k, seed + t, max_iter)
        cost = relational_cost(A, labels)
        if best is None or cost < best[1]:
            best = (labels, cost, iters)
    return KMeansResult(best[0], best[1], best[2], restarts, seed)
