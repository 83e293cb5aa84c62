"""Power-distance representation: Euclidean centers sharing a common radius.

Any symmetric hollow D becomes Euclidean after shifting every
off-diagonal entry by 4r^2 with 2r^2 >= |e_n| (e_n the most negative
Gram eigenvalue).  Points are then balls (center, r) and D is
reproduced by the generalized power distance.  The same bilinear form
doubles as a closed-form silhouette gap for isotropic Gaussian
clusters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import (
    DEFAULT_TAU_REL,
    DissimilarityError,
    DissimilarityMatrix,
    GramDecomposition,
    as_matrix,
    center_gram,
    decompose,
    validate_matrix,
)


@dataclass(frozen=True)
class PowerRepresentation:
    """Ball centers (rows) with one shared nonnegative radius."""

    centers: np.ndarray
    radius: float

    def __post_init__(self):
        if self.radius < 0.0:
            raise DissimilarityError(f"radius must be nonnegative, got {self.radius}")

    @property
    def n(self) -> int:
        return self.centers.shape[0]

    @property
    def dim(self) -> int:
        return self.centers.shape[1]


@dataclass(frozen=True)
class GaussianCluster:
    """Isotropic Gaussian cluster summarized by its mean and sigma."""

    mean: np.ndarray
    sigma: float

    def __post_init__(self):
        if self.sigma < 0.0:
            raise DissimilarityError(f"sigma must be nonnegative, got {self.sigma}")


def power_distance(center1, radius1: float, center2, radius2: float) -> float:
    """Generalized power distance ||c1 - c2||^2 - (r1 + r2)^2.

    For disjoint balls this is the squared internal-tangent length; for
    overlapping balls it goes negative.  Radii must be nonnegative and
    the centers must share a dimension.
    """
    c1 = np.asarray(center1, dtype=float)
    c2 = np.asarray(center2, dtype=float)
    if c1.shape != c2.shape:
        raise DissimilarityError(
            f"center dimensions differ: {c1.shape} vs {c2.shape}"
        )
    if radius1 < 0.0 or radius2 < 0.0:
        raise DissimilarityError(
            f"radii must be nonnegative, got ({radius1}, {radius2})"
        )
    d = c1 - c2
    return float(d @ d - (radius1 + radius2) ** 2)


def power_radius(dec: GramDecomposition) -> float:
    """Smallest common radius making the matrix behind dec Euclidean.

    r = sqrt(max(0, -e_n) / 2) where e_n is the smallest Gram
    eigenvalue; input already Euclidean within tau gives r = 0.
    """
    e_n = float(dec.eigenvalues[-1])
    if e_n >= -dec.tau:
        return 0.0
    return math.sqrt(-e_n / 2.0)


def euclideanize(D, radius: float) -> np.ndarray:
    """Shift every off-diagonal entry by 4 radius^2, keeping a zero diagonal.

    E = D + 4 r^2 (J - I).  With radius >= power_radius the result is a
    Euclidean squared-distance matrix.
    """
    if radius < 0.0:
        raise DissimilarityError(f"radius must be nonnegative, got {radius}")
    E = as_matrix(D) + 4.0 * radius**2
    np.fill_diagonal(E, 0.0)
    return E


def recover_centers(E, tau_rel: float = DEFAULT_TAU_REL) -> np.ndarray:
    """Classical scaling coordinates for a Euclidean squared-distance matrix.

    Parameters
    ----------
    E : array_like
        Symmetric hollow matrix whose centered Gram matrix is PSD
        within tau (negative eigenvalues above -tau are treated as
        zero).
    tau_rel : float
        Relative eigenvalue threshold, as in :func:`decompose`.

    Returns
    -------
    ndarray
        (n, d) coordinates whose squared distances reproduce E, with d
        the count of eigenvalues above tau.

    Raises
    ------
    DissimilarityError
        If the centered Gram matrix has an eigenvalue below -10 tau,
        i.e. E is not Euclidean.
    """
    dec = decompose(center_gram(E), tau_rel)
    lam = dec.eigenvalues
    if lam[-1] < -10.0 * dec.tau:
        raise DissimilarityError(
            f"matrix is not Euclidean: Gram eigenvalue {lam[-1]:.6g} "
            f"below {-10.0 * dec.tau:.6g}"
        )
    keep = lam > dec.tau
    return dec.eigenvectors[:, keep] * np.sqrt(lam[keep])


def power_representation(
    D, dec: GramDecomposition | None = None, radius: float | None = None
) -> PowerRepresentation:
    """Centers plus common radius reproducing D as power distances.

    The radius defaults to :func:`power_radius` of D's Gram spectrum; an
    explicit smaller value makes the shifted matrix non-Euclidean and
    fails in :func:`recover_centers`, a larger one works and changes
    only the split between center geometry and radius.
    """
    Dm = D if isinstance(D, DissimilarityMatrix) else validate_matrix(D)
    if radius is None:
        if dec is None:
            dec = decompose(center_gram(Dm))
        radius = power_radius(dec)
    centers = recover_centers(euclideanize(Dm, radius))
    return PowerRepresentation(centers, float(radius))


def silhouette_gaussian(a: GaussianCluster, b: GaussianCluster) -> float:
    """Closed-form silhouette gap between two isotropic Gaussian clusters.

    Equals power_distance((mean_a, sigma_a), (mean_b, sigma_b)); the
    shared code path keeps the identity exact, bit for bit.
    """
    return power_distance(a.mean, a.sigma, b.mean, b.sigma)


def silhouette_normalized(a: GaussianCluster, b: GaussianCluster) -> float:
    """Normalized silhouette gap in [-1, 1].

    (sep - spread) / (sep + spread) with sep = ||mean_a - mean_b||^2 and
    spread = (sigma_a + sigma_b)^2; defined as -1 when both vanish
    (identical point clusters).
    """
    dmu = np.asarray(a.mean, dtype=float) - np.asarray(b.mean, dtype=float)
    sep = float(dmu @ dmu)
    spread = (a.sigma + b.sigma) ** 2
    denom = sep + spread
    if denom == 0.0:
        return -1.0
    return (sep - spread) / denom
