"""Dissimilarity matrix validation, Gram centering, and signature recovery.

The objects here treat a dissimilarity matrix as pure data: symmetric,
zero diagonal, otherwise arbitrary.  Negative entries and triangle
violations are allowed by design; everything downstream is built on the
eigenstructure of the doubly centered Gram matrix B = -CDC/2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

DEFAULT_TAU_REL = 1e-9


class DissimilarityError(ValueError):
    """Input data breaks a structural contract (shape, symmetry, range)."""


class NumericalError(RuntimeError):
    """A numerical routine failed to converge."""


@dataclass(frozen=True)
class DissimilarityMatrix:
    """Symmetric hollow matrix of pairwise dissimilarities.

    Entries may be negative and need not satisfy the triangle
    inequality.  Construct through :func:`validate_matrix`, which
    canonicalizes raw input; instances are treated as immutable.
    """

    entries: np.ndarray

    @property
    def n(self) -> int:
        return self.entries.shape[0]


def as_matrix(D) -> np.ndarray:
    """Entries of a DissimilarityMatrix, or the input as a float array."""
    if isinstance(D, DissimilarityMatrix):
        return D.entries
    return np.asarray(D, dtype=float)


def validate_matrix(raw) -> DissimilarityMatrix:
    """Check and canonicalize a raw square matrix.

    Parameters
    ----------
    raw : array_like
        Square matrix of finite values, symmetric with zero diagonal up
        to a tolerance of ``1e-9 * max(1, |raw|_max)``.

    Returns
    -------
    DissimilarityMatrix
        Exactly symmetrized copy with the diagonal forced to zero.

    Raises
    ------
    DissimilarityError
        On wrong shape, non-finite entries, asymmetry, or a nonzero
        diagonal, naming the first offending index.
    """
    A = np.asarray(raw, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise DissimilarityError(f"expected a square matrix, got shape {A.shape}")
    if A.size == 0:
        raise DissimilarityError("matrix is empty")
    if not np.all(np.isfinite(A)):
        i, j = np.argwhere(~np.isfinite(A))[0]
        raise DissimilarityError(f"non-finite entry at ({i}, {j}): {A[i, j]!r}")
    tol = 1e-9 * max(1.0, float(np.abs(A).max()))
    gap = np.abs(A - A.T)
    if gap.max() > tol:
        i, j = np.unravel_index(int(np.argmax(gap)), gap.shape)
        raise DissimilarityError(
            f"asymmetric at ({i}, {j}): {A[i, j]!r} vs {A[j, i]!r}"
        )
    diag = np.abs(np.diag(A))
    if diag.max() > tol:
        i = int(np.argmax(diag))
        raise DissimilarityError(f"nonzero diagonal at ({i}, {i}): {A[i, i]!r}")
    sym = 0.5 * (A + A.T)
    np.fill_diagonal(sym, 0.0)
    return DissimilarityMatrix(sym)


def center_gram(D) -> np.ndarray:
    """Doubly centered Gram matrix B = -C D C / 2 with C = I - (1/n)11'.

    Computed through row, column, and grand means, so the centering
    matrix is never formed.  For symmetric input the result is exactly
    symmetric and satisfies B 1 = 0 up to rounding.
    """
    A = as_matrix(D)
    row = A.mean(axis=1)
    grand = row.mean()
    # one symmetric mean term, so both triangles round identically
    return -0.5 * (A - (row[:, None] + row[None, :]) + grand)


@dataclass(frozen=True)
class GramDecomposition:
    """Full eigendecomposition of a centered Gram matrix.

    Eigenvalues are in descending order with matching eigenvector
    columns.  The counts (p, q, zero_rank) partition n by comparing
    each eigenvalue against the threshold tau: above +tau, below -tau,
    or numerically zero.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    p: int
    q: int
    zero_rank: int
    tau: float

    @property
    def n(self) -> int:
        return self.eigenvalues.shape[0]


def decompose(B, tau_rel: float = DEFAULT_TAU_REL) -> GramDecomposition:
    """Eigendecompose a symmetric matrix and bucket its spectrum.

    Parameters
    ----------
    B : array_like
        Symmetric matrix (checked within ``1e-8 * max(1, |B|_max)``),
        typically the output of :func:`center_gram`.
    tau_rel : float
        Relative threshold; ``tau = tau_rel * max(1, |lambda|_max)``.

    Returns
    -------
    GramDecomposition

    Raises
    ------
    DissimilarityError
        If B is not square or not symmetric.
    NumericalError
        If the eigensolver does not converge.
    """
    B = np.asarray(B, dtype=float)
    if B.ndim != 2 or B.shape[0] != B.shape[1]:
        raise DissimilarityError(f"expected a square matrix, got shape {B.shape}")
    if B.size == 0:
        raise DissimilarityError("matrix is empty")
    if np.abs(B - B.T).max() > 1e-8 * max(1.0, float(np.abs(B).max())):
        raise DissimilarityError("matrix is not symmetric")
    try:
        lam, U = np.linalg.eigh(B)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"eigendecomposition failed: {exc}") from exc
    order = np.argsort(-lam, kind="stable")
    lam = lam[order]
    U = U[:, order]
    tau = tau_rel * max(1.0, float(np.abs(lam).max()))
    p = int(np.sum(lam > tau))
    q = int(np.sum(lam < -tau))
    return GramDecomposition(lam, U, p, q, B.shape[0] - p - q, tau)


def squared_distances(X) -> np.ndarray:
    """Pairwise squared Euclidean distances between the rows of X.

    Returns a symmetric hollow matrix; tiny negative values from
    cancellation are clamped to zero.  A zero-column input (no
    coordinates) gives the all-zero matrix.
    """
    X = np.asarray(X, dtype=float)
    sq = np.einsum("ij,ij->i", X, X)
    D = sq[:, None] + sq[None, :] - 2.0 * (X @ X.T)
    np.maximum(D, 0.0, out=D)
    D = 0.5 * (D + D.T)
    np.fill_diagonal(D, 0.0)
    return D
